#pragma once

#include <chit/graph.hpp>

#include <cstdint>
#include <vector>

namespace chit {

struct Eigenvalue {
    double value = 0.0;
    std::int64_t multiplicity = 0;

    bool operator==(const Eigenvalue &) const = default;
};

/// Distinct adjacency eigenvalues theta_0 > theta_1 > ... > theta_d with multiplicities.
class Spectrum {
public:
    Spectrum() = default;
    /// Entries must already be strictly descending with positive multiplicities.
    explicit Spectrum(std::vector<Eigenvalue> entries);

    /// Sorts and merges values closer than `threshold` (single linkage); merged value is
    /// the multiplicity-weighted mean of the cluster.
    static Spectrum from_values(std::vector<double> values, double threshold);
    static Spectrum from_weighted(std::vector<Eigenvalue> values, double threshold);

    const std::vector<Eigenvalue> & entries() const { return entries_; }
    std::size_t distinct() const { return entries_.size(); }
    /// Index of the smallest eigenvalue, i.e. the `d` in theta_0..theta_d.
    std::size_t d() const { return entries_.size() - 1; }
    double operator[](std::size_t i) const { return entries_[i].value; }
    std::int64_t multiplicity(std::size_t i) const { return entries_[i].multiplicity; }
    double largest() const { return entries_.front().value; }
    double smallest() const { return entries_.back().value; }

    std::int64_t total_multiplicity() const;
    /// Sum of m_i * theta_i^k, i.e. tr(A^k).
    double power_sum(int k) const;
    bool contains(double value, double tol) const;

    bool operator==(const Spectrum &) const = default;

private:
    std::vector<Eigenvalue> entries_;
};

/// Closed-walk counts: entry (u, i) is (A^i)_{uu} for i in [0, depth].
class WalkDiagonal {
public:
    WalkDiagonal() = default;
    WalkDiagonal(std::size_t vertex_count, int depth);
    /// Every vertex shares `row` (walk-regular families); stores a single row.
    static WalkDiagonal uniform(std::size_t vertex_count, std::vector<double> row);

    std::size_t vertex_count() const { return vertex_count_; }
    int depth() const { return depth_; }
    double operator()(std::size_t u, int i) const;
    double & at(std::size_t u, int i);

    bool column_constant(int i) const;
    double column_max(int i) const;
    bool all_columns_constant() const;

private:
    std::size_t vertex_count_ = 0;
    int depth_ = 0;
    bool uniform_ = false;
    std::vector<double> data_;
};

/// {n - 2l : C(n,l)}, exact integers.
Spectrum hypercube_spectrum(int n);
/// {2 cos(2 pi l / q) : l = 1..q}, grouped.
Spectrum cycle_spectrum(int q);
/// n-fold sumset of cycle_spectrum(q), folded left with grouping after each step.
Spectrum lee_spectrum(const LeeParams & params);

inline constexpr double default_eigen_tol = 1e-10;
inline constexpr int jacobi_sweep_cap = 100;

/// Cyclic Jacobi diagonalisation of the adjacency matrix.
Spectrum numeric_spectrum(const Graph & g, double tol = default_eigen_tol);
/// Raw (ungrouped, descending) eigenvalues of a dense symmetric matrix.
std::vector<double> jacobi_eigenvalues(std::vector<double> matrix, std::size_t n, double tol,
                                       int max_sweeps = jacobi_sweep_cap);

/// (A^i)_{uu} for Q_n: 2^-n * sum_j C(n,j) (n-2j)^i. Throws OutOfRange on int64 overflow.
std::int64_t hypercube_walk_count(int n, int i);

WalkDiagonal walk_diagonal(const Graph & g, int t);
WalkDiagonal hypercube_walk_diagonal(int n, int t);
/// For walk-regular graphs: (A^i)_{uu} = tr(A^i) / |V|, rounded to the nearest integer.
WalkDiagonal walk_diagonal_from_spectrum(const Spectrum & s, int t);

bool is_partially_walk_regular(const Graph & g, int t);

}  // namespace chit
