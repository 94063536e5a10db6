#include <chit/oracle.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <set>

namespace chit {

OracleTimeout::OracleTimeout(int lo, int up)
    : Error("oracle budget exhausted; bracket [" + std::to_string(lo) + ", " + std::to_string(up) + "]"),
      lower(lo), upper(up)
{
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point start = Clock::now();
    Clock::time_point end;
    std::uint64_t ticks = 0;

    explicit Deadline(double seconds)
        : end(start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds)))
    {
    }

    bool expired()
    {
        return (++ticks & 1023) == 0 && Clock::now() >= end;
    }
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
    double remaining() const { return std::chrono::duration<double>(end - Clock::now()).count(); }
};

struct Expired {};

using Bits = std::vector<std::uint64_t>;

class BitGraph {
public:
    /// Vertex i of the bit graph is order[i] of g; `complement` flips non-diagonal entries.
    BitGraph(const Graph & g, const std::vector<Vertex> & order, bool complement)
        : n_(g.size()), words_((n_ + 63) / 64), adj_(n_, Bits(words_, 0))
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j && g.adjacent(order[i], order[j]) != complement)
                    adj_[i][j / 64] |= std::uint64_t(1) << (j % 64);
    }

    std::size_t size() const { return n_; }
    std::size_t words() const { return words_; }
    const Bits & row(std::size_t v) const { return adj_[v]; }

private:
    std::size_t n_, words_;
    std::vector<Bits> adj_;
};

bool any(const Bits & b)
{
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t first(const Bits & b)
{
    for (std::size_t w = 0; w < b.size(); ++w)
        if (b[w])
            return w * 64 + std::size_t(std::countr_zero(b[w]));
    return b.size() * 64;
}

void reset(Bits & b, std::size_t v)
{
    b[v / 64] &= ~(std::uint64_t(1) << (v % 64));
}

/// Tomita-style maximum clique search.
class CliqueSearch {
public:
    CliqueSearch(const BitGraph & g, Deadline & dl) : g_(g), dl_(dl) {}

    std::vector<std::size_t> best;

    /// Number of greedy colour classes of `p`; upper bound on any clique inside it.
    int colour_bound(Bits p, std::vector<std::size_t> * order, std::vector<int> * bound) const
    {
        int colour = 0;
        while (any(p)) {
            ++colour;
            Bits q = p;
            while (any(q)) {
                const std::size_t v = first(q);
                reset(q, v);
                reset(p, v);
                const auto & r = g_.row(v);
                for (std::size_t w = 0; w < q.size(); ++w)
                    q[w] &= ~r[w];
                if (order) {
                    order->push_back(v);
                    bound->push_back(colour);
                }
            }
        }
        return colour;
    }

    void expand(std::vector<std::size_t> & c, Bits p)
    {
        if (dl_.expired())
            throw Expired{};
        std::vector<std::size_t> order;
        std::vector<int> bound;
        colour_bound(p, &order, &bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (c.size() + std::size_t(bound[i]) <= best.size())
                return;
            const std::size_t v = order[i];
            c.push_back(v);
            Bits np(p.size());
            const auto & r = g_.row(v);
            for (std::size_t w = 0; w < p.size(); ++w)
                np[w] = p[w] & r[w];
            if (!any(np)) {
                if (c.size() > best.size())
                    best = c;
            }
            else
                expand(c, np);
            c.pop_back();
            reset(p, v);
        }
    }

private:
    const BitGraph & g_;
    Deadline & dl_;
};

IndependenceResult clique_search(const Graph & g, bool complement, double budget)
{
    Deadline dl(budget);
    IndependenceResult res;
    const std::size_t n = g.size();
    if (n == 0) {
        res.exact = true;
        return res;
    }
    // Higher-degree vertices first in the working graph.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex(0));
    auto deg = [&](Vertex v) { return complement ? n - 1 - g.degree(v) : g.degree(v); };
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg(a) > deg(b); });

    BitGraph bg(g, order, complement);
    CliqueSearch search(bg, dl);
    Bits all(bg.words(), 0);
    for (std::size_t v = 0; v < n; ++v)
        all[v / 64] |= std::uint64_t(1) << (v % 64);
    res.upper = search.colour_bound(all, nullptr, nullptr);
    search.best = {0};
    std::vector<std::size_t> c;
    try {
        search.expand(c, all);
        res.exact = true;
        res.upper = int(search.best.size());
    }
    catch (const Expired &) {
        res.exact = false;
    }
    for (auto v : search.best)
        res.vertices.push_back(order[v]);
    std::sort(res.vertices.begin(), res.vertices.end());
    res.lower = int(res.vertices.size());
    res.seconds = dl.elapsed();
    return res;
}

/// Decides k-colourability by DSATUR backtracking with forward checking.
class ColourSearch {
public:
    ColourSearch(const Graph & g, int k, const std::vector<Vertex> & clique, Deadline & dl)
        : g_(g), k_(k), n_(g.size()), colour_(n_, -1), count_(n_ * std::size_t(k), 0), sat_(n_, 0), dl_(dl),
          clique_(clique)
    {
    }

    bool run()
    {
        int used = 0;
        for (Vertex v : clique_) {
            if (used >= k_ || !assign(v, used))
                return false;
            ++used;
        }
        return search(clique_.size(), used);
    }

    const std::vector<int> & colours() const { return colour_; }

private:
    /// False when some uncoloured vertex loses its last colour.
    bool assign(Vertex v, int c)
    {
        colour_[v] = c;
        bool ok = true;
        for (Vertex u : g_.neighbours(v)) {
            if (count_[u * std::size_t(k_) + std::size_t(c)]++ == 0 && ++sat_[u] == k_ && colour_[u] < 0)
                ok = false;
        }
        return ok;
    }

    void unassign(Vertex v)
    {
        const int c = colour_[v];
        for (Vertex u : g_.neighbours(v))
            if (--count_[u * std::size_t(k_) + std::size_t(c)] == 0)
                --sat_[u];
        colour_[v] = -1;
    }

    bool search(std::size_t coloured, int used)
    {
        if (coloured == n_)
            return true;
        if (dl_.expired())
            throw Expired{};
        std::optional<Vertex> pick;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] >= 0)
                continue;
            if (!pick || sat_[v] > sat_[*pick]
                || (sat_[v] == sat_[*pick] && g_.degree(v) > g_.degree(*pick)))
                pick = v;
        }
        const Vertex v = *pick;
        const int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (count_[v * std::size_t(k_) + std::size_t(c)] != 0)
                continue;
            const bool ok = assign(v, c);
            if (ok && search(coloured + 1, std::max(used, c + 1)))
                return true;
            unassign(v);
        }
        return false;
    }

    const Graph & g_;
    int k_;
    std::size_t n_;
    std::vector<int> colour_;
    std::vector<int> count_;
    std::vector<int> sat_;
    Deadline & dl_;
    const std::vector<Vertex> & clique_;
};

int ceil_div(std::size_t a, std::size_t b)
{
    return int((a + b - 1) / b);
}

}  // namespace

bool is_proper_coloring(const Graph & g, const ColoringWitness & w)
{
    if (w.colors.size() != g.size())
        return false;
    std::set<int> distinct;
    for (int c : w.colors) {
        if (c < 0)
            return false;
        distinct.insert(c);
    }
    if (int(distinct.size()) != w.color_count)
        return false;
    for (auto [u, v] : g.edges())
        if (w.colors[u] == w.colors[v])
            return false;
    return true;
}

bool is_independent_set(const Graph & g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.size())
            return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j]))
                return false;
    }
    return true;
}

ColoringWitness dsatur_coloring(const Graph & g)
{
    const std::size_t n = g.size();
    ColoringWitness w;
    w.colors.assign(n, -1);
    std::vector<std::set<int>> seen(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::optional<Vertex> pick;
        for (Vertex v = 0; v < n; ++v) {
            if (w.colors[v] >= 0)
                continue;
            if (!pick || seen[v].size() > seen[*pick].size()
                || (seen[v].size() == seen[*pick].size() && g.degree(v) > g.degree(*pick)))
                pick = v;
        }
        int c = 0;
        while (seen[*pick].count(c))
            ++c;
        w.colors[*pick] = c;
        w.color_count = std::max(w.color_count, c + 1);
        for (Vertex u : g.neighbours(*pick))
            seen[u].insert(c);
    }
    return w;
}

IndependenceResult maximum_clique(const Graph & g, double budget_seconds)
{
    if (g.size() > independence_vertex_cap)
        throw TooLarge("clique search is capped at " + std::to_string(independence_vertex_cap) + " vertices");
    return clique_search(g, false, budget_seconds);
}

IndependenceResult exact_independence_number(const Graph & g, double budget_seconds)
{
    if (g.size() > independence_vertex_cap)
        throw TooLarge("independence search is capped at " + std::to_string(independence_vertex_cap)
                       + " vertices");
    return clique_search(g, true, budget_seconds);
}

ChromaticResult exact_chromatic_number(const Graph & g, double budget_seconds)
{
    if (g.size() > chromatic_vertex_cap)
        throw TooLarge("chromatic search is capped at " + std::to_string(chromatic_vertex_cap) + " vertices");
    Deadline dl(budget_seconds);
    ChromaticResult res;
    const std::size_t n = g.size();
    if (n == 0) {
        res.exact = true;
        return res;
    }

    res.witness = dsatur_coloring(g);
    res.upper = res.witness.color_count;

    const auto clique = maximum_clique(g, std::max(0.0, dl.remaining()) * 0.25);
    res.lower = std::max(1, clique.lower);
    if (res.lower < res.upper) {
        const auto alpha = exact_independence_number(g, std::max(0.0, dl.remaining()) * 0.25);
        if (alpha.upper > 0)
            res.lower = std::max(res.lower, ceil_div(n, std::size_t(alpha.upper)));
    }

    try {
        for (int k = res.lower; k < res.upper; ++k) {
            ColourSearch search(g, k, clique.vertices, dl);
            if (search.run()) {
                res.witness.colors = search.colours();
                res.witness.color_count = int(std::set<int>(res.witness.colors.begin(), res.witness.colors.end()).size());
                res.upper = res.witness.color_count;
                break;
            }
            res.lower = k + 1;
        }
        res.exact = true;
        res.lower = res.upper;
    }
    catch (const Expired &) {
        res.exact = false;
    }
    res.seconds = dl.elapsed();
    return res;
}

int chi_t_exact(const Graph & g, int t, double budget_seconds)
{
    const auto r = exact_chromatic_number(graph_power(g, t), budget_seconds);
    if (!r.exact)
        throw OracleTimeout(r.lower, r.upper);
    return r.upper;
}

int alpha_t_exact(const Graph & g, int t, double budget_seconds)
{
    const auto r = exact_independence_number(graph_power(g, t), budget_seconds);
    if (!r.exact)
        throw OracleTimeout(r.lower, r.upper);
    return r.lower;
}

int greedy_chi_upper(const Graph & g, int t)
{
    return dsatur_coloring(graph_power(g, t)).color_count;
}

}  // namespace chit
