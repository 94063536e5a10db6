#include <chit/error.hpp>
#include <chit/graph.hpp>
#include <chit/leecodes.hpp>
#include <chit/oracle.hpp>
#include <chit/spectrum.hpp>

#include <doctest.h>

#include <sstream>

using namespace chit;

TEST_CASE("factorize")
{
    CHECK(factorize(12).factors == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(factorize(7).factors == std::vector<PrimePower>{{7, 1}});
    CHECK(factorize(2 * 3 + 1).factors == std::vector<PrimePower>{{7, 1}});
    CHECK(factorize(360).radical() == 30);
    for (std::int64_t m = 2; m < 2000; ++m)
        CHECK(factorize(m).value() == m);
    CHECK_THROWS_AS(factorize(1), InvalidParameter);
}

TEST_CASE("-1 eigenvalue membership")
{
    CHECK(w_prime_membership(3, 7));
    CHECK_FALSE(w_prime_membership(2, 7));
    for (int a = 1; a <= 5; ++a)
        for (int n = 1; n <= 40; ++n)
            CHECK_FALSE(w_prime_membership(n, 1 << a));
    CHECK(minus_one_is_eigenvalue(1, 6));
    CHECK(minus_one_is_eigenvalue(1, 9));
    CHECK_FALSE(minus_one_is_eigenvalue(3, 4));
}

TEST_CASE("membership agrees with the Lee spectrum")
{
    std::size_t mismatches = 0;
    for (int n = 1; n <= 4; ++n)
        for (int q = 3; q <= 10; ++q)
            mismatches += w_prime_membership(n, q) != lee_spectrum({n, q}).contains(-1.0, 1e-6);
    CHECK(mismatches == 0);
}

TEST_CASE("membership threshold")
{
    CHECK(minus_one_threshold(6, factorize(6)) == 2);
    CHECK(minus_one_threshold(15, factorize(15)) == 3);
    CHECK(minus_one_threshold(12, factorize(12)) == 2);
    for (int q : {6, 10, 12, 14, 15, 18, 20, 21, 30, 33, 35}) {
        const auto th = minus_one_threshold(q, factorize(q));
        for (std::int64_t n = std::max<std::int64_t>(th + 1, 1); n <= th + 60; ++n)
            CHECK(w_prime_membership(int(n), q));
    }
    CHECK_THROWS_AS(minus_one_threshold(8, factorize(8)), BoundInapplicable);
}

TEST_CASE("Sylvester")
{
    for (auto [a, b] : {std::pair<std::int64_t, std::int64_t>{3, 4}, {3, 5}, {5, 7}}) {
        const std::vector<std::int64_t> gens{a, b};
        const auto frobenius = (a - 1) * (b - 1) - 1;
        CHECK_FALSE(numerical_monoid_contains(frobenius, gens));
        for (auto m = frobenius + 1; m <= frobenius + 100; ++m)
            CHECK(numerical_monoid_contains(m, gens));
        CHECK(numerical_monoid_contains((a - 1) * (b - 1), gens));
    }
    const std::vector<std::int64_t> gens{3, 5};
    CHECK(numerical_monoid_contains(0, gens));
    CHECK_FALSE(numerical_monoid_contains(7, gens));
}

TEST_CASE("perfect code existence")
{
    CHECK(perfect_code_exists(3, 7).exists);
    CHECK_FALSE(perfect_code_exists(3, 4).exists);
    CHECK(perfect_code_exists(2, 5).exists);
    const auto v = perfect_code_exists(4, 3);
    CHECK(v.exists);
    CHECK(v.radical == 3);
    CHECK(v.radical_divides_q);
    CHECK(v.divides_q_power_n);
}

TEST_CASE("two perfect-code criteria agree")
{
    std::size_t mismatches = 0;
    for (int n = 1; n <= 50; ++n)
        for (int q = 2; q <= 50; ++q) {
            const auto v = perfect_code_exists(n, q);
            mismatches += v.radical_divides_q != v.divides_q_power_n;
        }
    CHECK(mismatches == 0);
}

TEST_CASE("perfect codes force -1 into the spectrum")
{
    for (int n = 1; n <= 10; ++n)
        for (int q = 4; q <= 30; ++q) {
            const auto v = perfect_code_exists(n, q);
            if (!v.exists)
                continue;
            CAPTURE(n);
            CAPTURE(q);
            CHECK(w_prime_membership(n, q));
            CHECK(v.divides_q_power_n);
        }
}

TEST_CASE("code distance and perfection")
{
    CHECK(code_min_distance({2, 5, {{0, 0}, {1, 2}}}) == 3);
    CHECK(code_min_distance({1, 6, {{0}, {3}}}) == 3);
    CHECK(code_min_distance({2, 7, {{0, 0}, {0, 1}}}) == 1);
    CHECK_THROWS_AS(code_min_distance({1, 6, {{0}}}), InvalidParameter);

    CHECK(is_perfect_code({1, 6, {{0}, {3}}}));
    LeeCode whole{2, 3, {}};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            whole.codewords.push_back({a, b});
    const auto r = perfection_report(whole);
    CHECK(r.perfect);
    CHECK(r.covering_radius == 0);
    CHECK(*r.packing_radius == 0);

    const auto single = perfection_report({2, 4, {{0, 0}}});
    CHECK_FALSE(single.perfect);
    CHECK_FALSE(single.packing_radius.has_value());
    CHECK(single.covering_radius == 4);

    // the Lee-sphere tiling of Z_5^2 by x + 2y = 0
    LeeCode tiling{2, 5, {}};
    for (int x = 0; x < 5; ++x)
        tiling.codewords.push_back({x, (5 - x) * 3 % 5});
    CHECK(is_perfect_code(tiling));

    CHECK_THROWS_AS((LeeCode{1, 5, {{0}, {0}}}.validate()), InvalidParameter);
    CHECK_THROWS_AS((LeeCode{1, 5, {{5}}}.validate()), InvalidParameter);
    CHECK_THROWS_AS((LeeCode{2, 5, {{1}}}.validate()), InvalidParameter);
    CHECK_THROWS_AS(perfection_report({2, 1001, {{0, 0}}}), TooLarge);
}

TEST_CASE("independent sets become codes")
{
    const auto g = build_lee_graph({2, 5});
    // (0,0) and (1,2) sit at Lee distance 3
    const std::vector<Vertex> pair{0, 1 * 5 + 2};
    const auto code = independent_set_to_code(g, pair, 2, 5);
    CHECK(code_min_distance(code) >= 3);

    const std::vector<Vertex> close{0, 1};
    CHECK_THROWS_AS(independent_set_to_code(g, close, 2, 5), InvalidParameter);
    const std::vector<Vertex> one{0};
    CHECK_THROWS_AS(independent_set_to_code(g, one, 2, 5), InvalidParameter);

    const auto best = exact_independence_number(graph_power(g, 2), 10.0);
    REQUIRE(best.exact);
    CHECK(best.vertices.size() == 5);
    const auto perfect = independent_set_to_code(g, best.vertices, 2, 5);
    CHECK(is_perfect_code(perfect));
}

TEST_CASE("independence number equals the best code size")
{
    for (int n = 1; n <= 2; ++n)
        for (int q = 3; q <= 5; ++q)
            for (int t = 1; t <= 3; ++t) {
                const auto g = build_lee_graph({n, q});
                const auto r = exact_independence_number(graph_power(g, t), 10.0);
                REQUIRE(r.exact);
                CAPTURE(n);
                CAPTURE(q);
                CAPTURE(t);
                if (r.vertices.size() < 2)
                    continue;
                const auto code = independent_set_to_code(g, r.vertices, t, q);
                CHECK(code_min_distance(code) >= t + 1);
                CHECK(code.codewords.size() == std::size_t(r.lower));
            }
}

TEST_CASE("code file round trip")
{
    const LeeCode code{2, 5, {{0, 0}, {1, 2}, {2, 4}}};
    std::stringstream ss;
    write_lee_code(ss, code);
    const auto back = read_lee_code(ss);
    CHECK(back.n == 2);
    CHECK(back.q == 5);
    CHECK(back.codewords == code.codewords);

    std::istringstream bad("2 5\n0 0\n1\n");
    CHECK_THROWS_AS(read_lee_code(bad), InvalidParameter);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_lee_code(empty), InvalidParameter);
    CHECK_THROWS_AS(read_lee_code_file("/nonexistent/code.txt"), InvalidParameter);
}
