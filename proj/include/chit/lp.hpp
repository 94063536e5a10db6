#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chit {

enum class Relation { le, eq, ge };
enum class Sense { minimize, maximize };
enum class LPStatus { optimal, infeasible, unbounded };

struct LPConstraint {
    std::vector<double> coefficients;
    Relation relation = Relation::le;
    double rhs = 0.0;
};

/// Dense linear program. Variables default to x >= 0; an empty lower bound means free below.
struct LPProblem {
    std::vector<double> objective;
    Sense sense = Sense::minimize;
    std::vector<LPConstraint> constraints;
    std::vector<std::optional<double>> lower;
    std::vector<std::optional<double>> upper;
    std::vector<std::string> names;  ///< optional, used by write_lp

    explicit LPProblem(std::size_t variables = 0);

    std::size_t variables() const { return objective.size(); }
    void add(std::vector<double> coefficients, Relation relation, double rhs);
    void set_free(std::size_t j);

    /// Throws InvalidParameter when dimensions disagree or bounds cross.
    void validate() const;
};

struct LPSolution {
    LPStatus status = LPStatus::infeasible;
    std::vector<double> values;
    double objective_value = 0.0;
    std::size_t iterations = 0;
};

/// Two-phase dense tableau simplex. Dantzig pricing, switching to Bland's rule once the
/// iteration count passes 10 * (rows + cols). Throws NumericFailure on breakdown.
LPSolution solve_lp(const LPProblem & problem);

/// Largest violation of any constraint or bound by `x`.
double max_violation(const LPProblem & problem, const std::vector<double> & x);

/// CPLEX LP text format.
void write_lp(std::ostream & out, const LPProblem & problem);

std::string to_string(LPStatus s);

}  // namespace chit
