#include <chit/spectrum.hpp>

#include <chit/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chit {

Spectrum::Spectrum(std::vector<Eigenvalue> entries) : entries_(std::move(entries))
{
    if (entries_.empty())
        throw InvalidParameter("spectrum must contain at least one eigenvalue");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].multiplicity <= 0)
            throw InvalidParameter("eigenvalue multiplicities must be positive");
        if (i > 0 && !(entries_[i].value < entries_[i - 1].value))
            throw InvalidParameter("spectrum entries must be strictly descending");
    }
}

Spectrum Spectrum::from_values(std::vector<double> values, double threshold)
{
    std::vector<Eigenvalue> weighted;
    weighted.reserve(values.size());
    for (double v : values)
        weighted.push_back({v, 1});
    return from_weighted(std::move(weighted), threshold);
}

Spectrum Spectrum::from_weighted(std::vector<Eigenvalue> values, double threshold)
{
    std::sort(values.begin(), values.end(),
              [](const Eigenvalue & a, const Eigenvalue & b) { return a.value > b.value; });
    std::vector<Eigenvalue> out;
    double weighted_sum = 0.0, previous = 0.0;
    for (const auto & e : values) {
        if (!out.empty() && previous - e.value < threshold) {
            weighted_sum += e.value * double(e.multiplicity);
            out.back().multiplicity += e.multiplicity;
            out.back().value = weighted_sum / double(out.back().multiplicity);
        }
        else {
            out.push_back(e);
            weighted_sum = e.value * double(e.multiplicity);
        }
        previous = e.value;
    }
    return Spectrum(std::move(out));
}

std::int64_t Spectrum::total_multiplicity() const
{
    std::int64_t total = 0;
    for (const auto & e : entries_)
        total += e.multiplicity;
    return total;
}

double Spectrum::power_sum(int k) const
{
    double total = 0.0;
    for (const auto & e : entries_)
        total += double(e.multiplicity) * std::pow(e.value, k);
    return total;
}

bool Spectrum::contains(double value, double tol) const
{
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Eigenvalue & e) { return std::abs(e.value - value) <= tol; });
}

WalkDiagonal::WalkDiagonal(std::size_t vertex_count, int depth)
    : vertex_count_(vertex_count), depth_(depth),
      data_(vertex_count * std::size_t(depth + 1), 0.0)
{
}

WalkDiagonal WalkDiagonal::uniform(std::size_t vertex_count, std::vector<double> row)
{
    if (row.empty())
        throw InvalidParameter("walk diagonal row must include the A^0 column");
    WalkDiagonal w;
    w.vertex_count_ = vertex_count;
    w.depth_ = int(row.size()) - 1;
    w.uniform_ = true;
    w.data_ = std::move(row);
    return w;
}

double WalkDiagonal::operator()(std::size_t u, int i) const
{
    const std::size_t row = uniform_ ? 0 : u;
    return data_[row * std::size_t(depth_ + 1) + std::size_t(i)];
}

double & WalkDiagonal::at(std::size_t u, int i)
{
    const std::size_t row = uniform_ ? 0 : u;
    return data_[row * std::size_t(depth_ + 1) + std::size_t(i)];
}

bool WalkDiagonal::column_constant(int i) const
{
    if (uniform_)
        return true;
    for (std::size_t u = 1; u < vertex_count_; ++u)
        if ((*this)(u, i) != (*this)(0, i))
            return false;
    return true;
}

double WalkDiagonal::column_max(int i) const
{
    const std::size_t rows = uniform_ ? 1 : vertex_count_;
    double best = (*this)(0, i);
    for (std::size_t u = 1; u < rows; ++u)
        best = std::max(best, (*this)(u, i));
    return best;
}

bool WalkDiagonal::all_columns_constant() const
{
    for (int i = 0; i <= depth_; ++i)
        if (!column_constant(i))
            return false;
    return true;
}

Spectrum hypercube_spectrum(int n)
{
    if (n < 1)
        throw InvalidParameter("hypercube dimension must be >= 1");
    if (n > 60)
        throw OutOfRange("hypercube dimension too large for int64 multiplicities");
    std::vector<Eigenvalue> entries;
    std::int64_t binom = 1;
    for (int l = 0; l <= n; ++l) {
        entries.push_back({double(n - 2 * l), binom});
        binom = binom * (n - l) / (l + 1);
    }
    return Spectrum(std::move(entries));
}

namespace {

double cosine_grouping_threshold(int n)
{
    return 1e-8 * std::max(1.0, 2.0 * n);
}

}  // namespace

Spectrum cycle_spectrum(int q)
{
    if (q < 3)
        throw InvalidParameter("cycle length must be >= 3");
    // l and q-l give the same value; walk half the circle.
    std::vector<Eigenvalue> values;
    for (int l = 0; 2 * l <= q; ++l) {
        const double v = 2.0 * std::cos(2.0 * std::numbers::pi * l / q);
        const bool self_paired = (l == 0) || (2 * l == q);
        values.push_back({v, self_paired ? 1 : 2});
    }
    return Spectrum::from_weighted(std::move(values), cosine_grouping_threshold(1));
}

Spectrum lee_spectrum(const LeeParams & params)
{
    LeeParams p(params.n, params.q);
    if (p.q < 3)
        throw InvalidParameter("lee_spectrum needs q >= 3; use hypercube_spectrum for q = 2");
    const Spectrum cycle = cycle_spectrum(p.q);
    const double threshold = cosine_grouping_threshold(p.n);
    Spectrum acc = cycle;
    for (int step = 1; step < p.n; ++step) {
        std::vector<Eigenvalue> sums;
        sums.reserve(acc.distinct() * cycle.distinct());
        for (const auto & a : acc.entries())
            for (const auto & b : cycle.entries())
                sums.push_back({a.value + b.value, a.multiplicity * b.multiplicity});
        acc = Spectrum::from_weighted(std::move(sums), threshold);
    }
    return acc;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, double tol,
                                       int max_sweeps)
{
    if (a.size() != n * n)
        throw InvalidParameter("matrix storage does not match dimension");
    auto at = [&](std::size_t i, std::size_t j) -> double & { return a[i * n + j]; };
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    s += at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    bool converged = off_norm() < tol;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0)
                                 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = at(q, p) = 0.0;
            }
        converged = off_norm() < tol;
    }
    if (!converged)
        throw NumericFailure("Jacobi eigenvalue iteration did not converge in "
                             + std::to_string(max_sweeps) + " sweeps");

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i)
        eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

Spectrum numeric_spectrum(const Graph & g, double tol)
{
    if (g.empty())
        throw InvalidParameter("numeric_spectrum of an empty graph");
    const std::size_t n = g.size();
    std::vector<double> a(n * n, 0.0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbours(u))
            a[std::size_t(u) * n + v] = 1.0;
    auto eig = jacobi_eigenvalues(std::move(a), n, tol);
    const double scale = std::max(1.0, std::abs(eig.front()));
    return Spectrum::from_values(std::move(eig), std::max(1e-7 * scale, 100.0 * tol));
}

std::int64_t hypercube_walk_count(int n, int i)
{
    using boost::multiprecision::cpp_int;
    if (n < 1 || i < 0)
        throw InvalidParameter("hypercube_walk_count needs n >= 1 and i >= 0");
    cpp_int total = 0, binom = 1;
    for (int j = 0; j <= n; ++j) {
        total += binom * boost::multiprecision::pow(cpp_int(n - 2 * j), unsigned(i));
        binom = binom * (n - j) / (j + 1);
    }
    const cpp_int denom = cpp_int(1) << n;
    if (total % denom != 0)
        throw NumericFailure("hypercube walk count is not integral");
    const cpp_int result = total / denom;
    if (result > std::numeric_limits<std::int64_t>::max())
        throw OutOfRange("hypercube walk count exceeds int64");
    return result.convert_to<std::int64_t>();
}

WalkDiagonal walk_diagonal(const Graph & g, int t)
{
    if (t < 1)
        throw InvalidParameter("walk depth must be >= 1");
    const std::size_t n = g.size();
    WalkDiagonal w(n, t);
    std::vector<double> cur(n), next(n);
    for (Vertex u = 0; u < n; ++u) {
        std::fill(cur.begin(), cur.end(), 0.0);
        cur[u] = 1.0;
        w.at(u, 0) = 1.0;
        for (int i = 1; i <= t; ++i) {
            for (Vertex v = 0; v < n; ++v) {
                double s = 0.0;
                for (Vertex x : g.neighbours(v))
                    s += cur[x];
                next[v] = s;
            }
            std::swap(cur, next);
            w.at(u, i) = cur[u];
        }
    }
    return w;
}

WalkDiagonal hypercube_walk_diagonal(int n, int t)
{
    std::vector<double> row;
    for (int i = 0; i <= t; ++i)
        row.push_back(double(hypercube_walk_count(n, i)));
    return WalkDiagonal::uniform(std::size_t(1) << n, std::move(row));
}

WalkDiagonal walk_diagonal_from_spectrum(const Spectrum & s, int t)
{
    const auto n = s.total_multiplicity();
    std::vector<double> row;
    for (int i = 0; i <= t; ++i)
        row.push_back(std::round(s.power_sum(i) / double(n)));
    return WalkDiagonal::uniform(std::size_t(n), std::move(row));
}

bool is_partially_walk_regular(const Graph & g, int t)
{
    return walk_diagonal(g, t).all_columns_constant();
}

}  // namespace chit
