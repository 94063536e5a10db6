#pragma once

#include <chit/error.hpp>
#include <chit/graph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace chit {

inline constexpr double default_oracle_budget = 60.0;  // seconds
inline constexpr std::size_t chromatic_vertex_cap = 700;
inline constexpr std::size_t independence_vertex_cap = 2000;

struct ColoringWitness {
    std::vector<int> colors;
    int color_count = 0;
};

/// Exact when `exact`; otherwise lower <= chi <= upper and `witness` attains `upper`.
struct ChromaticResult {
    bool exact = false;
    int lower = 0;
    int upper = 0;
    ColoringWitness witness;
    double seconds = 0.0;
};

struct IndependenceResult {
    bool exact = false;
    int lower = 0;  ///< size of `vertices`
    int upper = 0;
    std::vector<Vertex> vertices;
    double seconds = 0.0;
};

/// Raised by chi_t_exact / alpha_t_exact when the budget runs out.
class OracleTimeout : public Error {
public:
    OracleTimeout(int lower, int upper);
    int lower;
    int upper;
};

/// Checker kept separate from the search: every edge gets two distinct colors and
/// color_count equals the number of distinct colors.
bool is_proper_coloring(const Graph & g, const ColoringWitness & w);
bool is_independent_set(const Graph & g, std::span<const Vertex> vertices);

ColoringWitness dsatur_coloring(const Graph & g);

/// Maximum clique by branch and bound with greedy-coloring bounds.
IndependenceResult maximum_clique(const Graph & g, double budget_seconds = default_oracle_budget);

IndependenceResult exact_independence_number(const Graph & g,
                                             double budget_seconds = default_oracle_budget);

/// Iterative deepening over k from the best lower bound, each k decided by DSATUR
/// backtracking with forward checking. The lower bound is max(clique, ceil(N / alpha))
/// when alpha is found within a slice of the budget.
ChromaticResult exact_chromatic_number(const Graph & g,
                                       double budget_seconds = default_oracle_budget);

int chi_t_exact(const Graph & g, int t, double budget_seconds = default_oracle_budget);
int alpha_t_exact(const Graph & g, int t, double budget_seconds = default_oracle_budget);
int greedy_chi_upper(const Graph & g, int t);

}  // namespace chit
