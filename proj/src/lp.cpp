#include <chit/lp.hpp>

#include <chit/error.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace chit {

LPProblem::LPProblem(std::size_t variables)
    : objective(variables, 0.0), lower(variables, 0.0), upper(variables)
{
}

void LPProblem::add(std::vector<double> coefficients, Relation relation, double rhs)
{
    constraints.push_back({std::move(coefficients), relation, rhs});
}

void LPProblem::set_free(std::size_t j)
{
    lower.at(j).reset();
    upper.at(j).reset();
}

void LPProblem::validate() const
{
    const std::size_t n = variables();
    if (n == 0)
        throw InvalidParameter("LP has no variables");
    if (lower.size() != n || upper.size() != n)
        throw InvalidParameter("LP bound vectors do not match the variable count");
    for (std::size_t j = 0; j < n; ++j)
        if (lower[j] && upper[j] && *lower[j] > *upper[j])
            throw InvalidParameter("LP variable " + std::to_string(j) + " has crossing bounds");
    for (const auto & c : constraints)
        if (c.coefficients.size() != n)
            throw InvalidParameter("LP constraint width does not match the variable count");
}

namespace {

constexpr double pivot_tol = 1e-9;
constexpr double cost_tol = 1e-9;

/// x_j = offset + sign * y_pos (- y_neg when free).
struct VarMap {
    double offset = 0.0;
    double sign = 1.0;
    std::size_t pos = 0;
    std::optional<std::size_t> neg;
};

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows * (cols + 1), 0.0), basis_(rows) {}

    double & at(std::size_t i, std::size_t j) { return t_[i * (n_ + 1) + j]; }
    double at(std::size_t i, std::size_t j) const { return t_[i * (n_ + 1) + j]; }
    double & rhs(std::size_t i) { return at(i, n_); }
    double rhs(std::size_t i) const { return at(i, n_); }

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    std::vector<std::size_t> & basis() { return basis_; }

    void pivot(std::size_t r, std::size_t c)
    {
        const double p = at(r, c);
        for (std::size_t j = 0; j <= n_; ++j)
            at(r, j) /= p;
        at(r, c) = 1.0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r)
                continue;
            const double f = at(i, c);
            if (f == 0.0)
                continue;
            for (std::size_t j = 0; j <= n_; ++j)
                at(i, j) -= f * at(r, j);
            at(i, c) = 0.0;
        }
        basis_[r] = c;
    }

    void drop_row(std::size_t r)
    {
        t_.erase(t_.begin() + std::ptrdiff_t(r * (n_ + 1)), t_.begin() + std::ptrdiff_t((r + 1) * (n_ + 1)));
        basis_.erase(basis_.begin() + std::ptrdiff_t(r));
        --m_;
    }

    /// Minimises cost . y over columns [0, allowed). Returns false when unbounded.
    bool optimise(const std::vector<double> & cost, std::size_t allowed, std::size_t & iterations)
    {
        const std::size_t bland_after = 10 * (m_ + n_);
        const std::size_t hard_cap = 200 * (m_ + n_) + 1000;
        std::vector<double> reduced(n_);
        for (std::size_t iter = 0;; ++iter) {
            if (iter > hard_cap)
                throw NumericFailure("simplex exceeded its iteration cap");
            for (std::size_t j = 0; j < n_; ++j) {
                double r = cost[j];
                for (std::size_t i = 0; i < m_; ++i)
                    r -= cost[basis_[i]] * at(i, j);
                reduced[j] = r;
            }
            const bool bland = iter >= bland_after;
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (reduced[j] >= -cost_tol)
                    continue;
                if (!enter || (!bland && reduced[j] < reduced[*enter]))
                    enter = j;
                if (bland)
                    break;
            }
            if (!enter)
                return true;

            std::optional<std::size_t> leave;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m_; ++i) {
                const double a = at(i, *enter);
                if (a <= pivot_tol)
                    continue;
                const double ratio = rhs(i) / a;
                if (ratio < best - 1e-12
                    || (ratio <= best + 1e-12 && leave && basis_[i] < basis_[*leave])) {
                    best = std::min(best, ratio);
                    leave = i;
                }
            }
            if (!leave)
                return false;
            pivot(*leave, *enter);
            ++iterations;
            if (!std::isfinite(rhs(*leave)))
                throw NumericFailure("simplex produced a non-finite tableau entry");
        }
    }

private:
    std::size_t m_, n_;
    std::vector<double> t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LPSolution solve_lp(const LPProblem & problem)
{
    problem.validate();
    const std::size_t nvar = problem.variables();

    std::vector<VarMap> map(nvar);
    std::size_t ny = 0;
    std::vector<std::pair<std::size_t, double>> upper_rows;  // (y column, bound)
    for (std::size_t j = 0; j < nvar; ++j) {
        auto & v = map[j];
        const auto & lo = problem.lower[j];
        const auto & up = problem.upper[j];
        v.pos = ny++;
        if (lo) {
            v.offset = *lo;
            if (up)
                upper_rows.emplace_back(v.pos, *up - *lo);
        }
        else if (up) {
            v.offset = *up;
            v.sign = -1.0;
        }
        else
            v.neg = ny++;
    }

    struct Row {
        std::vector<double> a;
        Relation rel;
        double b;
    };
    std::vector<Row> rows;
    for (const auto & c : problem.constraints) {
        Row r{std::vector<double>(ny, 0.0), c.relation, c.rhs};
        for (std::size_t j = 0; j < nvar; ++j) {
            const double a = c.coefficients[j];
            r.b -= a * map[j].offset;
            r.a[map[j].pos] += a * map[j].sign;
            if (map[j].neg)
                r.a[*map[j].neg] -= a;
        }
        rows.push_back(std::move(r));
    }
    for (auto [col, bound] : upper_rows) {
        Row r{std::vector<double>(ny, 0.0), Relation::le, bound};
        r.a[col] = 1.0;
        rows.push_back(std::move(r));
    }
    for (auto & r : rows)
        if (r.b < 0) {
            for (auto & a : r.a)
                a = -a;
            r.b = -r.b;
            if (r.rel == Relation::le)
                r.rel = Relation::ge;
            else if (r.rel == Relation::ge)
                r.rel = Relation::le;
        }

    std::size_t slacks = 0, artificials = 0;
    for (const auto & r : rows) {
        slacks += r.rel != Relation::eq;
        artificials += r.rel != Relation::le;
    }
    const std::size_t structural = ny + slacks;
    Tableau tab(rows.size(), structural + artificials);
    std::size_t s = ny, art = structural;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < ny; ++j)
            tab.at(i, j) = rows[i].a[j];
        tab.rhs(i) = rows[i].b;
        switch (rows[i].rel) {
        case Relation::le:
            tab.at(i, s) = 1.0;
            tab.basis()[i] = s++;
            break;
        case Relation::ge:
            tab.at(i, s++) = -1.0;
            tab.at(i, art) = 1.0;
            tab.basis()[i] = art++;
            break;
        case Relation::eq:
            tab.at(i, art) = 1.0;
            tab.basis()[i] = art++;
            break;
        }
    }

    LPSolution sol;
    if (artificials > 0) {
        std::vector<double> phase1(tab.cols(), 0.0);
        std::fill(phase1.begin() + std::ptrdiff_t(structural), phase1.end(), 1.0);
        tab.optimise(phase1, tab.cols(), sol.iterations);
        double infeasibility = 0.0, scale = 1.0;
        for (std::size_t i = 0; i < tab.rows(); ++i) {
            if (tab.basis()[i] >= structural)
                infeasibility += tab.rhs(i);
        }
        for (const auto & r : rows)
            scale = std::max(scale, std::abs(r.b));
        if (infeasibility > 1e-7 * scale) {
            sol.status = LPStatus::infeasible;
            return sol;
        }
        // Drive remaining zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t i = tab.rows(); i-- > 0;) {
            if (tab.basis()[i] < structural)
                continue;
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < structural; ++j)
                if (std::abs(tab.at(i, j)) > pivot_tol && (!col || std::abs(tab.at(i, j)) > std::abs(tab.at(i, *col))))
                    col = j;
            if (col)
                tab.pivot(i, *col);
            else
                tab.drop_row(i);
        }
    }

    std::vector<double> phase2(tab.cols(), 0.0);
    const double dir = problem.sense == Sense::maximize ? -1.0 : 1.0;
    for (std::size_t j = 0; j < nvar; ++j) {
        phase2[map[j].pos] += dir * problem.objective[j] * map[j].sign;
        if (map[j].neg)
            phase2[*map[j].neg] -= dir * problem.objective[j];
    }
    if (!tab.optimise(phase2, structural, sol.iterations)) {
        sol.status = LPStatus::unbounded;
        return sol;
    }

    std::vector<double> y(tab.cols(), 0.0);
    for (std::size_t i = 0; i < tab.rows(); ++i)
        y[tab.basis()[i]] = tab.rhs(i);
    sol.values.assign(nvar, 0.0);
    for (std::size_t j = 0; j < nvar; ++j) {
        double x = map[j].offset + map[j].sign * y[map[j].pos];
        if (map[j].neg)
            x -= y[*map[j].neg];
        sol.values[j] = x;
        sol.objective_value += problem.objective[j] * x;
    }
    sol.status = LPStatus::optimal;
    return sol;
}

double max_violation(const LPProblem & problem, const std::vector<double> & x)
{
    double worst = 0.0;
    for (const auto & c : problem.constraints) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j)
            lhs += c.coefficients[j] * x[j];
        double v = 0.0;
        switch (c.relation) {
        case Relation::le: v = lhs - c.rhs; break;
        case Relation::ge: v = c.rhs - lhs; break;
        case Relation::eq: v = std::abs(lhs - c.rhs); break;
        }
        worst = std::max(worst, v);
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (problem.lower[j])
            worst = std::max(worst, *problem.lower[j] - x[j]);
        if (problem.upper[j])
            worst = std::max(worst, x[j] - *problem.upper[j]);
    }
    return worst;
}

namespace {

std::string var_name(const LPProblem & p, std::size_t j)
{
    if (j < p.names.size() && !p.names[j].empty())
        return p.names[j];
    return "x" + std::to_string(j);
}

void write_linear(std::ostream & out, const LPProblem & p, const std::vector<double> & a)
{
    bool any = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0.0)
            continue;
        out << (a[j] < 0 ? " - " : (any ? " + " : " ")) << std::abs(a[j]) << ' ' << var_name(p, j);
        any = true;
    }
    if (!any)
        out << " 0 " << var_name(p, 0);
}

}  // namespace

void write_lp(std::ostream & out, const LPProblem & problem)
{
    problem.validate();
    const auto old_precision = out.precision(17);
    out << (problem.sense == Sense::maximize ? "Maximize" : "Minimize") << "\n obj:";
    write_linear(out, problem, problem.objective);
    out << "\nSubject To\n";
    for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
        const auto & c = problem.constraints[i];
        out << " c" << i << ':';
        write_linear(out, problem, c.coefficients);
        out << (c.relation == Relation::le ? " <= " : c.relation == Relation::ge ? " >= " : " = ")
            << c.rhs << '\n';
    }
    out << "Bounds\n";
    for (std::size_t j = 0; j < problem.variables(); ++j) {
        const auto & lo = problem.lower[j];
        const auto & up = problem.upper[j];
        if (!lo && !up)
            out << ' ' << var_name(problem, j) << " free\n";
        else if (!lo)
            out << " -inf <= " << var_name(problem, j) << " <= " << *up << '\n';
        else if (up)
            out << ' ' << *lo << " <= " << var_name(problem, j) << " <= " << *up << '\n';
        else if (*lo != 0.0)
            out << ' ' << var_name(problem, j) << " >= " << *lo << '\n';
    }
    out << "End\n";
    out.precision(old_precision);
}

std::string to_string(LPStatus s)
{
    switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

}  // namespace chit
