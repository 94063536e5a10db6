#include <chit/error.hpp>
#include <chit/graph.hpp>
#include <chit/spectrum.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace chit;

namespace {

Spectrum exact(std::vector<Eigenvalue> e)
{
    return Spectrum(std::move(e));
}

void check_close(const Spectrum & a, const Spectrum & b, double tol)
{
    REQUIRE(a.distinct() == b.distinct());
    for (std::size_t i = 0; i < a.distinct(); ++i) {
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(tol));
        CHECK(std::abs(a[i] - b[i]) <= tol);
        CHECK(a.multiplicity(i) == b.multiplicity(i));
    }
}

/// Brute-force (A^k)_{uu} summed over u via dense matrix powers.
double trace_of_power(const Graph & g, int k)
{
    const std::size_t n = g.size();
    std::vector<double> p(n * n, 0.0), next(n * n);
    for (std::size_t i = 0; i < n; ++i)
        p[i * n + i] = 1.0;
    for (int s = 0; s < k; ++s) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (p[i * n + j] != 0.0)
                    for (Vertex l : g.neighbours(Vertex(j)))
                        next[i * n + l] += p[i * n + j];
        p.swap(next);
    }
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        tr += p[i * n + i];
    return tr;
}

}  // namespace

TEST_CASE("hypercube spectrum")
{
    CHECK(hypercube_spectrum(3) == exact({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}));
    CHECK(hypercube_spectrum(1) == exact({{1, 1}, {-1, 1}}));
    CHECK(hypercube_spectrum(4) == exact({{4, 1}, {2, 4}, {0, 6}, {-2, 4}, {-4, 1}}));
    for (int n = 1; n <= 12; ++n) {
        const auto s = hypercube_spectrum(n);
        CHECK(s.largest() == n);
        CHECK(s.smallest() == -n);
        CHECK(s.total_multiplicity() == std::int64_t(1) << n);
    }
}

TEST_CASE("cycle spectrum")
{
    check_close(cycle_spectrum(4), exact({{2, 1}, {0, 2}, {-2, 1}}), 1e-12);
    check_close(cycle_spectrum(6), exact({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}), 1e-12);
    const double c1 = 2 * std::cos(2 * std::numbers::pi / 5), c2 = 2 * std::cos(4 * std::numbers::pi / 5);
    check_close(cycle_spectrum(5), exact({{2, 1}, {c1, 2}, {c2, 2}}), 1e-12);
    CHECK_THROWS_AS(cycle_spectrum(2), InvalidParameter);
}

TEST_CASE("Lee spectrum closed forms")
{
    for (int q = 3; q <= 9; ++q)
        CHECK(lee_spectrum({1, q}) == cycle_spectrum(q));
    check_close(lee_spectrum({2, 4}), exact({{4, 1}, {2, 4}, {0, 6}, {-2, 4}, {-4, 1}}), 1e-12);
    check_close(lee_spectrum({3, 3}), exact({{6, 1}, {3, 6}, {0, 12}, {-3, 8}}), 1e-12);
    for (int n = 1; n <= 4; ++n)
        for (int q = 3; q <= 8; ++q) {
            const auto s = lee_spectrum({n, q});
            CHECK(s.largest() == doctest::Approx(2 * n));
            CHECK(s.total_multiplicity() == std::int64_t(std::pow(q, n)));
            CHECK(std::abs(s.power_sum(1)) < 1e-8);
        }
}

TEST_CASE("numeric spectrum")
{
    check_close(numeric_spectrum(build_complete(2)), exact({{1, 1}, {-1, 1}}), 1e-9);
    check_close(numeric_spectrum(build_cycle(4)), cycle_spectrum(4), 1e-9);
    check_close(numeric_spectrum(build_hypercube(3)), hypercube_spectrum(3), 1e-9);

    const auto p3 = numeric_spectrum(build_path(3));
    CHECK(p3.largest() == doctest::Approx(std::sqrt(2.0)));
    CHECK(p3.multiplicity(1) == 1);
}

TEST_CASE("Lee spectrum agrees with the numeric eigensolver")
{
    for (int n = 1; n <= 3; ++n)
        for (int q = 3; q <= 7; ++q) {
            CAPTURE(n);
            CAPTURE(q);
            check_close(lee_spectrum({n, q}), numeric_spectrum(build_lee_graph({n, q})), 1e-6);
        }
}

TEST_CASE("Jacobi reports non-convergence")
{
    const auto g = build_hypercube(4);
    std::vector<double> a(g.size() * g.size(), 0.0);
    for (auto [u, v] : g.edges())
        a[u * g.size() + v] = a[v * g.size() + u] = 1.0;
    CHECK_THROWS_AS(jacobi_eigenvalues(a, g.size(), 1e-10, 0), NumericFailure);
    CHECK(jacobi_eigenvalues(a, g.size(), 1e-10).size() == g.size());
}

TEST_CASE("hypercube walk counts")
{
    for (int n = 1; n <= 10; ++n) {
        CHECK(hypercube_walk_count(n, 0) == 1);
        CHECK(hypercube_walk_count(n, 2) == n);
        for (int i = 1; i <= 9; i += 2)
            CHECK(hypercube_walk_count(n, i) == 0);
    }
    CHECK(hypercube_walk_count(7, 4) == 133);
    // agrees with explicit powers of the adjacency matrix
    for (int n = 2; n <= 5; ++n) {
        const auto w = walk_diagonal(build_hypercube(n), 6);
        for (int i = 0; i <= 6; ++i)
            CHECK(w(0, i) == double(hypercube_walk_count(n, i)));
    }
    CHECK_THROWS_AS(hypercube_walk_count(60, 40), OutOfRange);
}

TEST_CASE("walk diagonals")
{
    const auto path = build_path(4);
    const auto w = walk_diagonal(path, 3);
    for (Vertex u = 0; u < 4; ++u) {
        CHECK(w(u, 0) == 1.0);
        CHECK(w(u, 1) == 0.0);
        CHECK(w(u, 2) == double(path.degree(u)));
    }
    CHECK(walk_diagonal(build_hypercube(3), 3).column_max(3) == 0.0);
    CHECK(walk_diagonal(build_lee_graph({2, 4}), 4).column_constant(4));

    CHECK(is_partially_walk_regular(build_lee_graph({2, 5}), 6));
    CHECK(is_partially_walk_regular(build_cycle(7), 2));
    CHECK_FALSE(is_partially_walk_regular(build_path(3), 2));

    const auto from_spec = walk_diagonal_from_spectrum(lee_spectrum({3, 3}), 3);
    CHECK(from_spec(0, 3) == 6.0);
}

TEST_CASE("power sums match traces")
{
    std::vector<std::pair<Graph, Spectrum>> cases;
    for (int n = 1; n <= 3; ++n) {
        cases.emplace_back(build_hypercube(n), hypercube_spectrum(n));
        for (int q = 3; q <= 7; ++q)
            cases.emplace_back(build_lee_graph({n, q}), lee_spectrum({n, q}));
    }
    for (const auto & [g, s] : cases) {
        const auto w = walk_diagonal(g, 4);
        for (int k = 0; k <= 4; ++k) {
            double tr = 0.0;
            for (std::size_t u = 0; u < g.size(); ++u)
                tr += w(u, k);
            CHECK(s.power_sum(k) == doctest::Approx(tr).epsilon(1e-9));
            CHECK(tr == trace_of_power(g, k));
        }
    }
}

TEST_CASE("spectrum grouping")
{
    const auto s = Spectrum::from_values({1.0, 1.0 + 1e-12, -1.0, 0.5}, 1e-9);
    CHECK(s.distinct() == 3);
    CHECK(s.multiplicity(0) == 2);
    CHECK_THROWS_AS(Spectrum({{1, 1}, {2, 1}}), InvalidParameter);
    CHECK_THROWS_AS(Spectrum({{1, 0}}), InvalidParameter);
}
