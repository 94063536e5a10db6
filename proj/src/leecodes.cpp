#include <chit/leecodes.hpp>

#include <chit/error.hpp>

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace chit {

std::int64_t Factorization::value() const
{
    std::int64_t v = 1;
    for (const auto & f : factors)
        for (int e = 0; e < f.exponent; ++e)
            v *= f.prime;
    return v;
}

std::int64_t Factorization::radical() const
{
    std::int64_t v = 1;
    for (const auto & f : factors)
        v *= f.prime;
    return v;
}

Factorization factorize(std::int64_t m)
{
    if (m < 2)
        throw InvalidParameter("factorize needs m >= 2, got " + std::to_string(m));
    Factorization out;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0)
            continue;
        PrimePower pp{p, 0};
        while (m % p == 0) {
            m /= p;
            ++pp.exponent;
        }
        out.factors.push_back(pp);
    }
    if (m > 1)
        out.factors.push_back({m, 1});
    return out;
}

bool numerical_monoid_contains(std::int64_t x, std::span<const std::int64_t> generators)
{
    if (x < 0)
        return false;
    std::vector<char> reach(std::size_t(x) + 1, 0);
    reach[0] = 1;
    for (std::int64_t v = 1; v <= x; ++v)
        for (auto g : generators)
            if (g > 0 && g <= v && reach[std::size_t(v - g)]) {
                reach[std::size_t(v)] = 1;
                break;
            }
    return reach[std::size_t(x)] != 0;
}

bool w_prime_membership(int n, int q)
{
    if (n < 1 || q < 2)
        throw InvalidParameter("w_prime_membership needs n >= 1 and q >= 2");
    // -1 = sum of n cycle eigenvalues  <=>  1 + sum (z^k + z^-k) = 0, a vanishing sum of
    // 2n+1 q-th roots of unity. For even q the 2-part is 2N, not 4N: G(2,6) has 1 + (-2) = -1.
    std::vector<std::int64_t> gens;
    for (const auto & pp : factorize(q).factors)
        gens.push_back(pp.prime);
    return numerical_monoid_contains(2 * std::int64_t(n) + 1, gens);
}

bool minus_one_is_eigenvalue(int n, int q)
{
    return w_prime_membership(n, q);
}

std::int64_t minus_one_threshold(int q, const Factorization & factorization)
{
    if (factorization.distinct_primes() < 2)
        throw BoundInapplicable("minus_one_threshold needs q with at least two distinct primes");
    if (factorization.value() != q)
        throw InvalidParameter("factorization does not match q");
    const std::int64_t p1 = factorization.factors[0].prime;
    const std::int64_t p2 = factorization.factors[1].prime;
    const std::int64_t num = q % 2 == 0 ? -1 + (2 * p1 - 1) * (p2 - 1) : -1 + (p1 - 1) * (p2 - 1);
    return num >= 0 ? num / 2 : -((-num + 1) / 2);
}

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod)
{
    __int128 result = 1 % mod, b = base % mod;
    while (exp > 0) {
        if (exp & 1)
            result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return std::int64_t(result);
}

std::int64_t word_index(const Word & w, int q)
{
    std::int64_t idx = 0;
    for (int c : w)
        idx = idx * q + c;
    return idx;
}

std::int64_t checked_space_size(int n, int q)
{
    std::int64_t size = 1;
    for (int i = 0; i < n; ++i) {
        size *= q;
        if (size > perfect_check_cap)
            throw TooLarge("q^n exceeds the perfection-check cap of 10^6");
    }
    return size;
}

}  // namespace

PerfectCodeVerdict perfect_code_exists(int n, int q)
{
    if (n < 1 || q < 2)
        throw InvalidParameter("perfect_code_exists needs n >= 1 and q >= 2");
    const std::int64_t m = 2 * std::int64_t(n) + 1;
    PerfectCodeVerdict v;
    v.radical = factorize(m).radical();
    v.radical_divides_q = q % v.radical == 0;
    v.divides_q_power_n = pow_mod(q, n, m) == 0;
    if (v.radical_divides_q != v.divides_q_power_n)
        throw NumericFailure("radical and power divisibility criteria disagree for n="
                             + std::to_string(n) + " q=" + std::to_string(q));
    v.exists = v.radical_divides_q;
    return v;
}

void LeeCode::validate() const
{
    if (n < 1 || q < 2)
        throw InvalidParameter("Lee code needs n >= 1 and q >= 2");
    std::set<Word> seen;
    for (const auto & w : codewords) {
        if (int(w.size()) != n)
            throw InvalidParameter("codeword has length " + std::to_string(w.size())
                                   + ", expected " + std::to_string(n));
        for (int c : w)
            if (c < 0 || c >= q)
                throw InvalidParameter("codeword entry " + std::to_string(c) + " outside [0, q-1]");
        if (!seen.insert(w).second)
            throw InvalidParameter("duplicate codeword");
    }
}

int code_min_distance(const LeeCode & code)
{
    code.validate();
    if (code.codewords.size() < 2)
        throw InvalidParameter("minimum distance needs at least two codewords");
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < code.codewords.size(); ++i)
        for (std::size_t j = i + 1; j < code.codewords.size(); ++j)
            best = std::min(best, lee_distance(code.codewords[i], code.codewords[j], code.q));
    return best;
}

PerfectionReport perfection_report(const LeeCode & code)
{
    code.validate();
    if (code.codewords.empty())
        throw InvalidParameter("perfection check needs at least one codeword");
    const int n = code.n, q = code.q;
    const std::int64_t size = checked_space_size(n, q);

    // Multi-source BFS on the torus keeping the two nearest distinct sources per word.
    constexpr int none = -1;
    std::vector<int> d1(std::size_t(size), none), src1(std::size_t(size), none);
    std::vector<int> d2(std::size_t(size), none), src2(std::size_t(size), none);
    std::deque<std::pair<std::int64_t, int>> queue;  // (word, source)
    for (std::size_t c = 0; c < code.codewords.size(); ++c) {
        const auto idx = std::size_t(word_index(code.codewords[c], q));
        d1[idx] = 0;
        src1[idx] = int(c);
        queue.emplace_back(std::int64_t(idx), int(c));
    }
    std::vector<std::int64_t> stride(std::size_t(n), 1);
    for (int i = n - 2; i >= 0; --i)
        stride[std::size_t(i)] = stride[std::size_t(i) + 1] * q;

    while (!queue.empty()) {
        auto [w, s] = queue.front();
        queue.pop_front();
        const int dist = src1[std::size_t(w)] == s ? d1[std::size_t(w)] : d2[std::size_t(w)];
        for (int i = 0; i < n; ++i) {
            const std::int64_t st = stride[std::size_t(i)];
            const int digit = int((w / st) % q);
            const int steps = q == 2 ? 1 : 2;  // +1 and -1 coincide for q = 2
            for (int k = 0; k < steps; ++k) {
                const int delta = k == 0 ? 1 : q - 1;
                const std::int64_t nb = w + (std::int64_t((digit + delta) % q) - digit) * st;
                const auto u = std::size_t(nb);
                if (d1[u] == none) {
                    d1[u] = dist + 1;
                    src1[u] = s;
                    queue.emplace_back(nb, s);
                }
                else if (src1[u] != s && d2[u] == none) {
                    d2[u] = dist + 1;
                    src2[u] = s;
                    queue.emplace_back(nb, s);
                }
            }
        }
    }

    PerfectionReport r;
    r.covering_radius = *std::max_element(d1.begin(), d1.end());
    if (code.codewords.size() > 1) {
        // Balls of radius r are disjoint iff no word lies within r of two codewords.
        int min_second = std::numeric_limits<int>::max();
        for (std::size_t u = 0; u < d2.size(); ++u)
            if (d2[u] != none)
                min_second = std::min(min_second, d2[u]);
        r.packing_radius = min_second - 1;
    }
    r.perfect = r.packing_radius && *r.packing_radius == r.covering_radius;
    return r;
}

bool is_perfect_code(const LeeCode & code)
{
    return perfection_report(code).perfect;
}

LeeCode independent_set_to_code(const Graph & g, std::span<const Vertex> vertices, int t, int q)
{
    if (!g.has_labels())
        throw InvalidParameter("graph carries no Lee labels");
    if (vertices.size() < 2)
        throw InvalidParameter("a Lee code needs at least two codewords");
    LeeCode code;
    code.q = q;
    code.n = int(g.label(vertices[0]).size());
    for (Vertex v : vertices) {
        if (v >= g.size())
            throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
        code.codewords.push_back(g.label(v));
    }
    code.validate();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto dist = bfs_distances(g, vertices[i]);
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (dist[vertices[j]] <= std::uint32_t(t))
                throw InvalidParameter("vertex set is not distance-" + std::to_string(t)
                                       + " independent");
    }
    return code;
}

LeeCode read_lee_code(std::istream & in)
{
    LeeCode code;
    std::string line;
    bool header = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<long long> values;
        long long x;
        while (ls >> x)
            values.push_back(x);
        if (!ls.eof())
            throw InvalidParameter("line " + std::to_string(line_no) + ": not an integer list");
        if (values.empty())
            continue;
        if (!header) {
            if (values.size() != 2)
                throw InvalidParameter("line " + std::to_string(line_no) + ": expected `n q`");
            code.n = int(values[0]);
            code.q = int(values[1]);
            header = true;
            continue;
        }
        Word w(values.begin(), values.end());
        code.codewords.push_back(std::move(w));
    }
    if (!header)
        throw InvalidParameter("empty code file");
    code.validate();
    return code;
}

LeeCode read_lee_code_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidParameter("cannot open code file " + path);
    return read_lee_code(in);
}

void write_lee_code(std::ostream & out, const LeeCode & code)
{
    out << code.n << ' ' << code.q << '\n';
    for (const auto & w : code.codewords) {
        for (std::size_t i = 0; i < w.size(); ++i)
            out << (i ? " " : "") << w[i];
        out << '\n';
    }
}

}  // namespace chit
