#pragma once

#include <chit/bounds.hpp>
#include <chit/graph.hpp>
#include <chit/lp.hpp>
#include <chit/polynomial.hpp>
#include <chit/spectrum.hpp>

#include <cstdint>
#include <vector>

namespace chit {

/// Relaxation of the strict inequality p(theta_0) > p(theta_j).
inline constexpr double lp_strict_eps = 1e-7;

struct GeneralRatioResult {
    RatioCertificate certificate;
    std::size_t vertex = 0;  ///< u of the winning subproblem
    std::size_t ell = 0;     ///< eigenvalue index attaining lambda(p)
    std::size_t programs_solved = 0;
};

/// The LP for a fixed vertex u and eigenvalue index ell in [1, d]. Variables a_1..a_t
/// (a_0 cancels from every row).
LPProblem general_ratio_lp(const Spectrum & spectrum, const WalkDiagonal & walks, int t,
                           std::size_t u, std::size_t ell);

/// Best general Ratio-type bound over all degree-t polynomials. When every walk column
/// is constant only u = 0 is solved. Ties keep the lowest (u, ell).
GeneralRatioResult lp_general_ratio(const Spectrum & spectrum, const WalkDiagonal & walks, int t);
GeneralRatioResult lp_general_ratio(const Graph & g, int t);

struct MinorPolynomial {
    std::vector<double> point_values;  ///< x_0 = 1, x_1..x_d
    double trace_value = 0.0;          ///< sum m_i x_i
    Polynomial polynomial;             ///< degree <= t interpolant of the point values
};

/// Linear rows f[theta_0..theta_m] = 0 (m = t+1..d) over x_0..x_d, scaled and
/// orthonormalised in extended precision, then rounded.
std::vector<std::vector<double>> minor_constraint_rows(const Spectrum & spectrum, int t);

/// min sum_{i>=1} m_i x_i over x_1..x_d >= 0 subject to the rows above (x_0 = 1 moved right).
LPProblem minor_polynomial_lp(const Spectrum & spectrum, int t);

MinorPolynomial minor_polynomial(const Spectrum & spectrum, int t);

/// ceil(N / floor(trace)); N when the floor is 0.
std::int64_t lp_minor_bound(const Spectrum & spectrum, int t, std::size_t vertex_count);

}  // namespace chit
