#include <chit/lpopt.hpp>

#include <chit/error.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

namespace chit {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

double ipow(double x, int i)
{
    double r = 1.0;
    for (int k = 0; k < i; ++k)
        r *= x;
    return r;
}

void require_t(int t)
{
    if (t < 1)
        throw InvalidParameter("t must be >= 1");
}

}  // namespace

LPProblem general_ratio_lp(const Spectrum & spectrum, const WalkDiagonal & walks, int t,
                           std::size_t u, std::size_t ell)
{
    require_t(t);
    if (walks.depth() < t)
        throw InvalidParameter("walk diagonal shallower than t");
    const std::size_t d = spectrum.d();
    if (ell < 1 || ell > d)
        throw InvalidParameter("eigenvalue index out of range");
    const auto nv = std::size_t(t);
    const double theta0 = spectrum[0], theta_l = spectrum[ell];

    LPProblem lp(nv);
    lp.sense = Sense::maximize;
    for (std::size_t i = 0; i < nv; ++i) {
        lp.set_free(i);
        lp.names.push_back("a" + std::to_string(i + 1));
        lp.objective[i] = ipow(theta0, int(i) + 1) - ipow(theta_l, int(i) + 1);
    }

    // W(p) attained at u
    std::vector<std::vector<double>> seen;
    const bool uniform = walks.all_columns_constant();
    for (std::size_t v = 0; v < walks.vertex_count() && !uniform; ++v) {
        if (v == u)
            continue;
        std::vector<double> row(nv);
        bool nonzero = false;
        for (std::size_t i = 0; i < nv; ++i) {
            row[i] = walks(v, int(i) + 1) - walks(u, int(i) + 1);
            nonzero |= row[i] != 0.0;
        }
        if (!nonzero || std::find(seen.begin(), seen.end(), row) != seen.end())
            continue;
        seen.push_back(row);
        lp.add(std::move(row), Relation::le, 0.0);
    }

    // normalisation W(p) - p(theta_ell) = 1
    std::vector<double> norm(nv);
    for (std::size_t i = 0; i < nv; ++i)
        norm[i] = walks(u, int(i) + 1) - ipow(theta_l, int(i) + 1);
    lp.add(std::move(norm), Relation::eq, 1.0);

    for (std::size_t j = 1; j <= d; ++j) {
        std::vector<double> strict(nv), lam(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            const double pj = ipow(spectrum[j], int(i) + 1);
            strict[i] = ipow(theta0, int(i) + 1) - pj;
            lam[i] = pj - ipow(theta_l, int(i) + 1);
        }
        lp.add(std::move(strict), Relation::ge, lp_strict_eps);
        if (j != ell)
            lp.add(std::move(lam), Relation::ge, 0.0);
    }
    return lp;
}

GeneralRatioResult lp_general_ratio(const Spectrum & spectrum, const WalkDiagonal & walks, int t)
{
    require_t(t);
    if (spectrum.d() < 2)
        throw BoundInapplicable("LP ratio bound needs at least 3 distinct eigenvalues");
    const std::size_t vertices = walks.all_columns_constant() ? 1 : walks.vertex_count();

    std::optional<GeneralRatioResult> best;
    std::size_t solved = 0;
    for (std::size_t u = 0; u < vertices; ++u) {
        for (std::size_t ell = 1; ell <= spectrum.d(); ++ell) {
            const auto lp = general_ratio_lp(spectrum, walks, t, u, ell);
            const auto sol = solve_lp(lp);
            ++solved;
            if (sol.status != LPStatus::optimal)
                continue;
            std::vector<double> coeffs{0.0};
            coeffs.insert(coeffs.end(), sol.values.begin(), sol.values.end());
            try {
                auto cert = eval_ratio_general(spectrum, walks, Polynomial(std::move(coeffs)));
                if (!best || cert.bound_plain > best->certificate.bound_plain + 1e-12)
                    best = GeneralRatioResult{std::move(cert), u, ell, 0};
            }
            catch (const BoundInapplicable &) {
            }
        }
    }
    if (!best)
        throw BoundInapplicable("every LP subproblem was infeasible or inapplicable");
    best->programs_solved = solved;
    return *best;
}

GeneralRatioResult lp_general_ratio(const Graph & g, int t)
{
    return lp_general_ratio(numeric_spectrum(g), walk_diagonal(g, t), t);
}

namespace {

std::vector<std::vector<Real>> orthonormal_rows(const Spectrum & spectrum, int t)
{
    const std::size_t d = spectrum.d();
    std::vector<Real> theta(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        theta[i] = Real(spectrum[i]);

    std::vector<std::vector<Real>> rows;
    for (std::size_t m = std::size_t(t) + 1; m <= d; ++m) {
        std::vector<Real> r(d + 1, Real(0));
        for (std::size_t j = 0; j <= m; ++j) {
            Real prod = 1;
            for (std::size_t k = 0; k <= m; ++k)
                if (k != j)
                    prod *= theta[j] - theta[k];
            r[j] = 1 / prod;
        }
        rows.push_back(std::move(r));
    }

    // modified Gram-Schmidt, two passes
    auto norm = [](const std::vector<Real> & v) {
        Real s = 0;
        for (const auto & x : v)
            s += x * x;
        return sqrt(s);
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Real n0 = norm(rows[i]);
        for (auto & x : rows[i])
            x /= n0;
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < i; ++k) {
                Real dot = 0;
                for (std::size_t j = 0; j <= d; ++j)
                    dot += rows[i][j] * rows[k][j];
                for (std::size_t j = 0; j <= d; ++j)
                    rows[i][j] -= dot * rows[k][j];
            }
        Real n1 = norm(rows[i]);
        if (n1 < Real(1e-30))
            throw NumericFailure("divided-difference rows are linearly dependent");
        for (auto & x : rows[i])
            x /= n1;
    }
    return rows;
}

/// Newton interpolation through (theta_i, x_i), i = 0..t, expanded to ascending coefficients.
Polynomial interpolate(const Spectrum & spectrum, const std::vector<double> & x, int t)
{
    const auto k = std::size_t(t) + 1;
    std::vector<Real> nodes(k), dd(k);
    for (std::size_t i = 0; i < k; ++i) {
        nodes[i] = Real(spectrum[i]);
        dd[i] = Real(x[i]);
    }
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);

    std::vector<Real> c{dd[k - 1]};
    for (std::size_t i = k - 1; i-- > 0;) {
        // c <- c * (x - nodes[i]) + dd[i]
        std::vector<Real> next(c.size() + 1, Real(0));
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= nodes[i] * c[j];
        }
        next[0] += dd[i];
        c = std::move(next);
    }
    std::vector<double> out;
    for (const auto & v : c)
        out.push_back(v.convert_to<double>());
    return Polynomial(std::move(out));
}

}  // namespace

std::vector<std::vector<double>> minor_constraint_rows(const Spectrum & spectrum, int t)
{
    require_t(t);
    if (std::size_t(t) >= spectrum.d())
        throw BoundInapplicable("minor polynomial needs t < d (G^t is complete for t >= diameter)");
    std::vector<std::vector<double>> out;
    for (const auto & r : orthonormal_rows(spectrum, t)) {
        std::vector<double> row;
        for (const auto & v : r)
            row.push_back(v.convert_to<double>());
        out.push_back(std::move(row));
    }
    return out;
}

LPProblem minor_polynomial_lp(const Spectrum & spectrum, int t)
{
    const auto rows = minor_constraint_rows(spectrum, t);
    const std::size_t d = spectrum.d();

    LPProblem lp(d);
    lp.sense = Sense::minimize;
    for (std::size_t i = 1; i <= d; ++i) {
        lp.objective[i - 1] = double(spectrum.multiplicity(i));
        lp.names.push_back("x" + std::to_string(i));
    }
    for (const auto & r : rows)
        lp.add(std::vector<double>(r.begin() + 1, r.end()), Relation::eq, -r[0]);
    return lp;
}

MinorPolynomial minor_polynomial(const Spectrum & spectrum, int t)
{
    const std::size_t d = spectrum.d();
    const auto lp = minor_polynomial_lp(spectrum, t);
    const auto sol = solve_lp(lp);
    if (sol.status != LPStatus::optimal)
        throw NumericFailure("minor-polynomial LP is " + to_string(sol.status));

    MinorPolynomial mp;
    mp.point_values.push_back(1.0);
    for (double v : sol.values)
        mp.point_values.push_back(std::max(v, 0.0));
    mp.trace_value = double(spectrum.multiplicity(0));
    for (std::size_t i = 1; i <= d; ++i)
        mp.trace_value += double(spectrum.multiplicity(i)) * mp.point_values[i];
    mp.polynomial = interpolate(spectrum, mp.point_values, t);
    return mp;
}

std::int64_t lp_minor_bound(const Spectrum & spectrum, int t, std::size_t vertex_count)
{
    const auto mp = minor_polynomial(spectrum, t);
    const auto inner = floor_tolerant(mp.trace_value);
    if (inner <= 0)
        return std::int64_t(vertex_count);
    return ceil_bound(double(vertex_count) / double(inner));
}

}  // namespace chit
