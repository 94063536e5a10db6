#pragma once

#include <chit/graph.hpp>
#include <chit/polynomial.hpp>
#include <chit/spectrum.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chit {

/// Slack used when comparing floating eigenvalues against thresholds and when
/// rounding real-valued bounds to integers.
inline constexpr double threshold_tol = 1e-9;

/// A polynomial together with everything needed to read off a Ratio-type bound.
///
///   bound_plain = (p(lambda_1) - lambda(p)) / (W(p) - lambda(p))
///   bound_floor = N / floor(N (W(p) - lambda(p)) / (p(lambda_1) - lambda(p)))  (regular graphs)
///
/// `bound_ceiled` is the integer lower bound on chi_t: the ceiling of bound_floor when it
/// is defined, of bound_plain otherwise.
struct RatioCertificate {
    Polynomial polynomial;
    double p_lambda1 = 0.0;
    double W_p = 0.0;
    double lambda_p = 0.0;
    double bound_plain = 0.0;
    std::optional<double> bound_floor;
    std::int64_t bound_ceiled = 1;
    /// The inner floor of the regular bound evaluated to 0; bound_floor was set to N.
    bool degenerate = false;
};

enum class BoundMethod {
    closed_t2_general,
    closed_t2_regular,
    closed_t3_regular,
    ngo_lower,
    ngo_upper,
    hypercube_t45,
    lp_general,
    lp_minor,
    lee_theorem,
};

std::string_view to_string(BoundMethod m);
std::optional<BoundMethod> parse_bound_method(std::string_view name);
const std::vector<BoundMethod> & all_bound_methods();

struct BoundReport {
    std::string graph_id;
    int t = 1;
    BoundMethod method = BoundMethod::closed_t2_general;
    std::int64_t value = 1;
    std::optional<RatioCertificate> certificate;
};

/// ceil(x) after removing float dust.
std::int64_t ceil_bound(double x);
/// floor(x) after absorbing float dust from below (x = 0.9999999999 floors to 1).
std::int64_t floor_tolerant(double x);

/// Ratio-type bound for an arbitrary graph. lambda(p) is taken over theta_1..theta_d
/// (and theta_0 as well when its multiplicity exceeds one).
RatioCertificate eval_ratio_general(const Spectrum & spectrum, const WalkDiagonal & walks,
                                    const Polynomial & p);

/// Floor-enhanced Ratio-type bound; requires every walk-diagonal column to be constant.
RatioCertificate eval_ratio_regular(const Spectrum & spectrum, const WalkDiagonal & walks,
                                    const Polynomial & p, std::size_t vertex_count);

/// Optimal degree-2 polynomial for general graphs: theta_i is the largest eigenvalue
/// <= -Delta/theta_0 and p(x) = x^2 - (theta_i + theta_{i-1}) x.
RatioCertificate chi2_closed_general(const Spectrum & spectrum, double max_degree);

/// Regular t = 2 bound with theta_i the largest eigenvalue <= -1.
RatioCertificate chi2_closed_regular(const Spectrum & spectrum, std::size_t vertex_count);

/// Regular t = 3 bound; delta3 is max_u (A^3)_{uu}.
RatioCertificate chi3_closed_regular(const Spectrum & spectrum, double delta3,
                                     std::size_t vertex_count);

struct NgoBounds {
    std::int64_t lower = 0;                 ///< ceiling of the Johnson-type expression
    std::int64_t lower_floor_enhanced = 0;  ///< 2^n / floor(2^n / expression), ceiled
    std::int64_t upper = 0;
    double lower_real = 0.0;
};

/// Johnson-bound based lower and upper bounds on chi_t(Q_n). Requires 1 <= t <= n.
NgoBounds ngo_bounds(int n, int t);

struct HypercubeT45Polynomial {
    int m = 0;
    std::vector<std::int64_t> roots;         ///< the root set R_{t,m}
    std::vector<std::int64_t> coefficients;  ///< b_{t,m,i}, ascending
};

HypercubeT45Polynomial hypercube_t45_polynomial(int n, int t);

/// Spectral bound on chi_t(Q_n) for t in {4,5}, evaluated in exact integer arithmetic.
RatioCertificate hypercube_t45_bound(int n, int t);

/// 2^{n-1} when 2(n-1)/3 <= t <= n-1, otherwise empty.
std::optional<std::int64_t> hypercube_exact_range(int n, int t);

/// chi_2(G(n,q)) >= 2n+1 / 2n+2 / 2n+3 depending on whether -1 is an eigenvalue. q >= 4.
int lee_chi2_theorem_bound(const LeeParams & params);

}  // namespace chit
