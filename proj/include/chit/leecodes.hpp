#pragma once

#include <chit/graph.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chit {

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;

    bool operator==(const PrimePower &) const = default;
};

/// Prime factorisation with primes strictly increasing.
struct Factorization {
    std::vector<PrimePower> factors;

    std::int64_t value() const;
    std::int64_t radical() const;
    std::size_t distinct_primes() const { return factors.size(); }

    bool operator==(const Factorization &) const = default;
};

Factorization factorize(std::int64_t m);

/// Is x a non-negative integer combination of `generators`? Coin-problem DP up to x.
bool numerical_monoid_contains(std::int64_t x, std::span<const std::int64_t> generators);

/// n in W'(q), i.e. -1 is an eigenvalue of the Lee graph G(n,q): 2n+1 lies in the monoid
/// generated by the distinct primes of q. Even q included, so 2^a never qualifies.
bool w_prime_membership(int n, int q);
bool minus_one_is_eigenvalue(int n, int q);

/// For q with at least two distinct primes, -1 is an eigenvalue of G(n,q) for every
/// n strictly above the returned value.
std::int64_t minus_one_threshold(int q, const Factorization & factorization);

struct PerfectCodeVerdict {
    bool exists = false;
    bool radical_divides_q = false;     ///< rad(2n+1) | q
    bool divides_q_power_n = false;     ///< (2n+1) | q^n
    std::int64_t radical = 0;           ///< rad(2n+1)
};

/// Existence of a perfect Lee code of minimum distance 3 in A_q^n.
PerfectCodeVerdict perfect_code_exists(int n, int q);

/// A set of words of A_q^n.
struct LeeCode {
    int n = 1;
    int q = 2;
    std::vector<Word> codewords;

    /// Throws InvalidParameter on out-of-range entries, wrong lengths, or duplicates.
    void validate() const;
};

int code_min_distance(const LeeCode & code);

struct PerfectionReport {
    /// Largest r with pairwise disjoint radius-r balls; empty for a single codeword.
    std::optional<int> packing_radius;
    int covering_radius = 0;
    bool perfect = false;
};

inline constexpr std::int64_t perfect_check_cap = 1'000'000;

/// Enumerates A_q^n (q^n <= 10^6) to obtain packing and covering radii.
PerfectionReport perfection_report(const LeeCode & code);
bool is_perfect_code(const LeeCode & code);

/// Labels of a distance-t independent vertex set of a Lee graph as a Lee code.
LeeCode independent_set_to_code(const Graph & g, std::span<const Vertex> vertices, int t,
                                int q);

/// Code file: first line `n q`, then one codeword per line.
LeeCode read_lee_code(std::istream & in);
LeeCode read_lee_code_file(const std::string & path);
void write_lee_code(std::ostream & out, const LeeCode & code);

}  // namespace chit
