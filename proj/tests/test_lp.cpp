#include <chit/error.hpp>
#include <chit/lp.hpp>

#include <doctest.h>

#include <sstream>

using namespace chit;

TEST_CASE("simplex examples")
{
    LPProblem a(1);
    a.sense = Sense::maximize;
    a.objective = {1.0};
    a.add({1.0}, Relation::le, 3.0);
    const auto sa = solve_lp(a);
    REQUIRE(sa.status == LPStatus::optimal);
    CHECK(sa.values[0] == doctest::Approx(3.0));

    LPProblem b(1);
    b.sense = Sense::maximize;
    b.objective = {1.0};
    b.add({1.0}, Relation::ge, 3.0);
    CHECK(solve_lp(b).status == LPStatus::unbounded);

    LPProblem c(2);
    c.objective = {1.0, 1.0};
    c.add({1.0, 1.0}, Relation::ge, 2.0);
    const auto sc = solve_lp(c);
    REQUIRE(sc.status == LPStatus::optimal);
    CHECK(sc.objective_value == doctest::Approx(2.0));
}

TEST_CASE("infeasible and equality systems")
{
    LPProblem p(2);
    p.objective = {1.0, 0.0};
    p.add({1.0, 1.0}, Relation::le, 1.0);
    p.add({1.0, 1.0}, Relation::ge, 2.0);
    CHECK(solve_lp(p).status == LPStatus::infeasible);

    // redundant equalities leave an artificial basic at zero
    LPProblem q(3);
    q.objective = {1.0, 2.0, 3.0};
    q.add({1.0, 1.0, 1.0}, Relation::eq, 1.0);
    q.add({2.0, 2.0, 2.0}, Relation::eq, 2.0);
    q.add({0.0, 1.0, 1.0}, Relation::ge, 0.5);
    const auto s = solve_lp(q);
    REQUIRE(s.status == LPStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(1.5));
    CHECK(max_violation(q, s.values) < 1e-9);
}

TEST_CASE("free and bounded variables")
{
    // min x + y with x free, y in [1, 4], x - y >= -10
    LPProblem p(2);
    p.objective = {1.0, 1.0};
    p.set_free(0);
    p.lower[1] = 1.0;
    p.upper[1] = 4.0;
    p.add({1.0, -1.0}, Relation::ge, -10.0);
    const auto s = solve_lp(p);
    REQUIRE(s.status == LPStatus::optimal);
    CHECK(s.values[0] == doctest::Approx(-9.0));
    CHECK(s.values[1] == doctest::Approx(1.0));
    CHECK(s.objective_value == doctest::Approx(-8.0));

    LPProblem crossed(1);
    crossed.lower[0] = 2.0;
    crossed.upper[0] = 1.0;
    CHECK_THROWS_AS(solve_lp(crossed), InvalidParameter);

    LPProblem ragged(2);
    ragged.add({1.0}, Relation::le, 1.0);
    CHECK_THROWS_AS(solve_lp(ragged), InvalidParameter);
}

TEST_CASE("degenerate program terminates")
{
    // classic cycling example under Dantzig pricing
    LPProblem p(4);
    p.sense = Sense::maximize;
    p.objective = {10.0, -57.0, -9.0, -24.0};
    p.add({0.5, -5.5, -2.5, 9.0}, Relation::le, 0.0);
    p.add({0.5, -1.5, -0.5, 1.0}, Relation::le, 0.0);
    p.add({1.0, 0.0, 0.0, 0.0}, Relation::le, 1.0);
    const auto s = solve_lp(p);
    REQUIRE(s.status == LPStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(1.0));
}

TEST_CASE("deterministic output and LP text")
{
    LPProblem p(2);
    p.sense = Sense::maximize;
    p.objective = {3.0, 2.0};
    p.names = {"x", "y"};
    p.add({1.0, 1.0}, Relation::le, 4.0);
    p.add({1.0, 3.0}, Relation::le, 6.0);
    p.set_free(1);
    p.add({0.0, 1.0}, Relation::ge, -1.0);

    const auto a = solve_lp(p), b = solve_lp(p);
    CHECK(a.values == b.values);
    CHECK(a.iterations == b.iterations);
    CHECK(a.objective_value == doctest::Approx(13.0));

    std::ostringstream out;
    write_lp(out, p);
    const auto text = out.str();
    CHECK(text.find("Maximize") != std::string::npos);
    CHECK(text.find("Subject To") != std::string::npos);
    CHECK(text.find("y free") != std::string::npos);
    CHECK(text.find("End") != std::string::npos);
    std::ostringstream again;
    write_lp(again, p);
    CHECK(again.str() == text);
}
