#include <chit/bounds.hpp>

#include <chit/error.hpp>
#include <chit/leecodes.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace chit {

namespace mp = boost::multiprecision;
using mp::cpp_int;
using mp::cpp_rational;

namespace {

constexpr std::array<std::pair<BoundMethod, std::string_view>, 9> method_names{{
    {BoundMethod::closed_t2_general, "closed_t2_general"},
    {BoundMethod::closed_t2_regular, "closed_t2_regular"},
    {BoundMethod::closed_t3_regular, "closed_t3_regular"},
    {BoundMethod::ngo_lower, "ngo_lower"},
    {BoundMethod::ngo_upper, "ngo_upper"},
    {BoundMethod::hypercube_t45, "hypercube_t45"},
    {BoundMethod::lp_general, "lp_general"},
    {BoundMethod::lp_minor, "lp_minor"},
    {BoundMethod::lee_theorem, "lee_theorem"},
}};

/// min p(theta) over the non-principal eigenvalues.
double lambda_of(const Spectrum & s, const Polynomial & p)
{
    if (s.distinct() < 2 && s.multiplicity(0) < 2)
        throw BoundInapplicable("lambda(p) needs at least two eigenvalues");
    double best = s.multiplicity(0) > 1 ? p(s[0]) : p(s[1]);
    for (std::size_t i = 1; i < s.distinct(); ++i)
        best = std::min(best, p(s[i]));
    return best;
}

double w_of(const WalkDiagonal & walks, const Polynomial & p)
{
    if (p.degree() > walks.depth())
        throw InvalidParameter("polynomial degree exceeds the walk-diagonal depth");
    double best = -INFINITY;
    for (std::size_t u = 0; u < walks.vertex_count(); ++u) {
        double v = 0.0;
        for (int i = 0; i <= std::max(p.degree(), 0); ++i)
            v += p.coefficient(std::size_t(i)) * walks(u, i);
        best = std::max(best, v);
        if (walks.column_constant(0) && walks.all_columns_constant())
            break;
    }
    return best;
}

RatioCertificate finish(Polynomial p, double p_lambda1, double w, double lambda,
                        std::optional<std::size_t> vertex_count)
{
    if (!(p_lambda1 > lambda + threshold_tol))
        throw BoundInapplicable("Ratio-type bound requires p(lambda_1) > lambda(p)");
    if (!(w > lambda))
        throw BoundInapplicable("Ratio-type bound requires W(p) > lambda(p)");

    RatioCertificate c;
    c.polynomial = std::move(p);
    c.p_lambda1 = p_lambda1;
    c.W_p = w;
    c.lambda_p = lambda;
    c.bound_plain = (p_lambda1 - lambda) / (w - lambda);
    c.bound_ceiled = std::max<std::int64_t>(1, ceil_bound(c.bound_plain));
    if (vertex_count) {
        const double n = double(*vertex_count);
        const auto inner = floor_tolerant(n * (w - lambda) / (p_lambda1 - lambda));
        if (inner <= 0) {
            c.bound_floor = n;
            c.degenerate = true;
        }
        else
            c.bound_floor = n / double(inner);
        c.bound_ceiled = std::max<std::int64_t>(1, ceil_bound(*c.bound_floor));
    }
    return c;
}

/// Index of the largest eigenvalue <= threshold (with slack), searching theta_1..theta_d.
std::optional<std::size_t> largest_at_most(const Spectrum & s, double threshold)
{
    for (std::size_t i = 1; i < s.distinct(); ++i)
        if (s[i] <= threshold + threshold_tol)
            return i;
    return std::nullopt;
}

RatioCertificate quadratic_certificate(const Spectrum & s, std::size_t i, double w,
                                       std::optional<std::size_t> vertex_count)
{
    if (i < 2)
        throw BoundInapplicable("the selected eigenvalue has no non-principal predecessor");
    const double a = s[i], b = s[i - 1];
    Polynomial p{0.0, -(a + b), 1.0};
    return finish(p, p(s[0]), w, lambda_of(s, p), vertex_count);
}

cpp_int binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    cpp_int r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

cpp_int cumulative_binom(int n, int t)
{
    cpp_int s = 0;
    for (int i = 0; i <= t; ++i)
        s += binom(n, i);
    return s;
}

cpp_int floor_of(const cpp_rational & x)
{
    cpp_int num = mp::numerator(x), den = mp::denominator(x);
    cpp_int q = num / den;
    if (num % den != 0 && num < 0)
        --q;
    return q;
}

cpp_int ceil_of(const cpp_rational & x)
{
    return -floor_of(-x);
}

/// Johnson-type expression sum_{i<=s} C(m,i) + C(m,s)/floor(m/(s+1)) * frac((m-s)/(s+1)).
cpp_rational johnson_term(int m, int s)
{
    const int blocks = m / (s + 1);
    if (blocks == 0)
        throw OutOfRange("Johnson-type expression undefined: floor(m/(s+1)) = 0");
    const cpp_rational ratio(m - s, s + 1);
    const cpp_rational frac = ratio - cpp_rational(floor_of(ratio));
    return cpp_rational(cumulative_binom(m, s)) + cpp_rational(binom(m, s), blocks) * frac;
}

int floor_log2(const cpp_int & x)
{
    return int(mp::msb(x));
}

std::int64_t to_i64(const cpp_int & x)
{
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw OutOfRange("integer bound exceeds int64");
    return x.convert_to<std::int64_t>();
}

/// floor((sqrt(k) + k) / 2) exactly.
std::int64_t floor_half_sqrt_plus(std::int64_t k)
{
    std::int64_t m = k;  // (sqrt(k)+k)/2 <= k for k >= 1
    while (true) {
        const std::int64_t lhs = 2 * m - k;  // need lhs <= sqrt(k)
        if (lhs <= 0 || lhs * lhs <= k)
            return m;
        --m;
    }
}

}  // namespace

std::string_view to_string(BoundMethod m)
{
    for (auto [method, name] : method_names)
        if (method == m)
            return name;
    return "unknown";
}

std::optional<BoundMethod> parse_bound_method(std::string_view name)
{
    for (auto [method, n] : method_names)
        if (n == name)
            return method;
    return std::nullopt;
}

const std::vector<BoundMethod> & all_bound_methods()
{
    static const std::vector<BoundMethod> methods = [] {
        std::vector<BoundMethod> out;
        for (auto [m, name] : method_names)
            out.push_back(m);
        return out;
    }();
    return methods;
}

std::int64_t ceil_bound(double x)
{
    return std::int64_t(std::ceil(x - threshold_tol * std::max(1.0, std::abs(x))));
}

std::int64_t floor_tolerant(double x)
{
    return std::int64_t(std::floor(x + threshold_tol * std::max(1.0, std::abs(x))));
}

RatioCertificate eval_ratio_general(const Spectrum & spectrum, const WalkDiagonal & walks,
                                    const Polynomial & p)
{
    return finish(p, p(spectrum[0]), w_of(walks, p), lambda_of(spectrum, p), std::nullopt);
}

RatioCertificate eval_ratio_regular(const Spectrum & spectrum, const WalkDiagonal & walks,
                                    const Polynomial & p, std::size_t vertex_count)
{
    for (int i = 0; i <= std::min(walks.depth(), std::max(p.degree(), 0)); ++i)
        if (!walks.column_constant(i))
            throw NotRegular("walk diagonal column " + std::to_string(i) + " is not constant");
    return finish(p, p(spectrum[0]), w_of(walks, p), lambda_of(spectrum, p), vertex_count);
}

RatioCertificate chi2_closed_general(const Spectrum & spectrum, double max_degree)
{
    if (spectrum.distinct() < 3)
        throw BoundInapplicable("closed t=2 bound needs at least 3 distinct eigenvalues");
    const auto i = largest_at_most(spectrum, -max_degree / spectrum[0]);
    if (!i)
        throw BoundInapplicable("no eigenvalue below -Delta/theta_0");
    // diag(A^2 - bA) is the degree sequence
    return quadratic_certificate(spectrum, *i, max_degree, std::nullopt);
}

RatioCertificate chi2_closed_regular(const Spectrum & spectrum, std::size_t vertex_count)
{
    if (spectrum.distinct() < 3)
        throw BoundInapplicable("closed t=2 bound needs at least 3 distinct eigenvalues");
    const auto i = largest_at_most(spectrum, -1.0);
    if (!i)
        throw BoundInapplicable("no eigenvalue <= -1");
    return quadratic_certificate(spectrum, *i, spectrum[0], vertex_count);
}

RatioCertificate chi3_closed_regular(const Spectrum & spectrum, double delta3,
                                     std::size_t vertex_count)
{
    if (spectrum.distinct() < 4)
        throw BoundInapplicable("closed t=3 bound needs at least 4 distinct eigenvalues");
    const double k = spectrum[0], low = spectrum.smallest();
    if (std::abs(low + 1.0) <= threshold_tol)
        throw BoundInapplicable("closed t=3 threshold undefined: smallest eigenvalue is -1");
    const double threshold = -(k * k + k * low - delta3) / (k * (low + 1.0));
    const auto s = largest_at_most(spectrum, threshold);
    if (!s || *s < 2)
        throw BoundInapplicable("no admissible theta_s for the closed t=3 bound");

    const std::array<double, 3> roots{spectrum[*s], spectrum[*s - 1], low};
    Polynomial p = Polynomial::from_roots(roots);
    // diag p(A) = Delta3 + c2 * k + c0, with diag(A) = 0
    const double w = delta3 + p.coefficient(2) * k + p.coefficient(0);
    return finish(p, p(k), w, lambda_of(spectrum, p), vertex_count);
}

NgoBounds ngo_bounds(int n, int t)
{
    if (t < 1 || t > n)
        throw OutOfRange("ngo_bounds needs 1 <= t <= n, got n=" + std::to_string(n)
                         + " t=" + std::to_string(t));
    const int s = t / 2;
    cpp_rational expr;
    cpp_int upper_exp;
    if (t % 2 == 0) {
        expr = johnson_term(n, s);
        upper_exp = floor_log2(cumulative_binom(n - 1, t - 1)) + 1;
    }
    else {
        expr = 2 * johnson_term(n - 1, s);
        upper_exp = t >= 2 ? cpp_int(floor_log2(cumulative_binom(n - 2, t - 2)) + 2) : cpp_int(1);
    }
    const cpp_int vertices = cpp_int(1) << n;
    const cpp_int inner = floor_of(cpp_rational(vertices) / expr);

    NgoBounds b;
    b.lower = to_i64(ceil_of(expr));
    b.lower_real = expr.convert_to<double>();
    b.lower_floor_enhanced = inner > 0 ? to_i64(ceil_of(cpp_rational(vertices, inner))) : to_i64(vertices);
    b.upper = to_i64(cpp_int(1) << upper_exp.convert_to<unsigned>());
    return b;
}

HypercubeT45Polynomial hypercube_t45_polynomial(int n, int t)
{
    if (t != 4 && t != 5)
        throw InvalidParameter("hypercube_t45 bound is defined for t in {4,5}");
    if (n < t)
        throw OutOfRange("hypercube_t45 bound needs n >= t");
    const std::int64_t k = n + 3 - t;
    const std::int64_t ceil_half = (n + 4 - t + 1) / 2;
    HypercubeT45Polynomial out;
    out.m = int(floor_half_sqrt_plus(k) - ceil_half);
    const std::int64_t m = out.m;
    const bool even = n % 2 == 0;
    if (t == 4)
        out.roots = even ? std::vector<std::int64_t>{-(2 * m + 4), -(2 * m + 2), 2 * m, 2 * m + 2}
                         : std::vector<std::int64_t>{-(2 * m + 5), -(2 * m + 3), 2 * m + 1, 2 * m + 3};
    else
        out.roots = even ? std::vector<std::int64_t>{-n, -(2 * m + 4), -(2 * m + 2), 2 * m + 2, 2 * m + 4}
                         : std::vector<std::int64_t>{-n, -(2 * m + 3), -(2 * m + 1), 2 * m + 1, 2 * m + 3};

    std::vector<std::int64_t> c{1};
    for (auto r : out.roots) {
        std::vector<std::int64_t> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    out.coefficients = std::move(c);
    return out;
}

RatioCertificate hypercube_t45_bound(int n, int t)
{
    const auto poly = hypercube_t45_polynomial(n, t);
    auto eval = [&](std::int64_t x) {
        cpp_int acc = 0;
        for (std::size_t i = poly.coefficients.size(); i-- > 0;)
            acc = acc * x + poly.coefficients[i];
        return acc;
    };
    const cpp_int p_n = eval(n);
    cpp_int w = 0;
    for (int i = 0; i <= t; ++i)
        w += cpp_int(hypercube_walk_count(n, i)) * poly.coefficients[std::size_t(i)];
    cpp_int lambda = eval(n - 2);
    for (int l = 1; l <= n; ++l)
        lambda = std::min(lambda, eval(n - 2 * l));

    if (p_n <= lambda || w <= lambda)
        throw BoundInapplicable("hypercube_t45 polynomial fails the Ratio-type preconditions");

    const cpp_int vertices = cpp_int(1) << n;
    const cpp_rational plain(p_n - lambda, w - lambda);
    const cpp_int inner = floor_of(cpp_rational(vertices * (w - lambda), p_n - lambda));

    RatioCertificate c;
    std::vector<double> coeffs(poly.coefficients.begin(), poly.coefficients.end());
    c.polynomial = Polynomial(std::move(coeffs));
    c.p_lambda1 = p_n.convert_to<double>();
    c.W_p = w.convert_to<double>();
    c.lambda_p = lambda.convert_to<double>();
    c.bound_plain = plain.convert_to<double>();
    if (inner <= 0) {
        c.bound_floor = vertices.convert_to<double>();
        c.degenerate = true;
        c.bound_ceiled = to_i64(vertices);
    }
    else {
        const cpp_rational enhanced(vertices, inner);
        c.bound_floor = enhanced.convert_to<double>();
        c.bound_ceiled = to_i64(ceil_of(enhanced));
    }
    return c;
}

std::optional<std::int64_t> hypercube_exact_range(int n, int t)
{
    if (n < 2)
        throw InvalidParameter("hypercube_exact_range needs n >= 2");
    if (3 * t >= 2 * (n - 1) && t <= n - 1)
        return std::int64_t(1) << (n - 1);
    return std::nullopt;
}

int lee_chi2_theorem_bound(const LeeParams & params)
{
    LeeParams p(params.n, params.q);
    if (p.q < 4)
        throw OutOfRange("the Lee-graph chi_2 theorem requires q >= 4");
    if (p.n == 1 && p.q == 5)
        return 2 * p.n + 3;
    return minus_one_is_eigenvalue(p.n, p.q) ? 2 * p.n + 1 : 2 * p.n + 2;
}

}  // namespace chit
