#include <chit/graph.hpp>

#include <chit/error.hpp>

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace chit {

LeeParams::LeeParams(int n_, int q_) : n(n_), q(q_)
{
    if (n < 1)
        throw InvalidParameter("Lee graph length n must be >= 1, got " + std::to_string(n));
    if (q < 2)
        throw InvalidParameter("Lee graph alphabet q must be >= 2, got " + std::to_string(q));
}

Graph Graph::from_edges(std::size_t vertex_count,
                        std::span<const std::pair<Vertex, Vertex>> edges,
                        std::vector<Word> labels)
{
    if (!labels.empty()) {
        if (labels.size() != vertex_count)
            throw InvalidParameter("label count does not match vertex count");
        std::set<Word> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size())
            throw InvalidParameter("vertex labels must be pairwise distinct");
    }

    Graph g;
    g.n_ = vertex_count;
    g.adj_.assign(vertex_count * vertex_count, 0);
    g.nbrs_.resize(vertex_count);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw InvalidParameter("edge endpoint out of range");
        if (u == v)
            throw InvalidParameter("self loops are not allowed");
        if (g.adj_[std::size_t(u) * vertex_count + v])
            continue;
        g.adj_[std::size_t(u) * vertex_count + v] = 1;
        g.adj_[std::size_t(v) * vertex_count + u] = 1;
        ++g.edges_;
    }
    for (std::size_t u = 0; u < vertex_count; ++u)
        for (std::size_t v = 0; v < vertex_count; ++v)
            if (g.adj_[u * vertex_count + v])
                g.nbrs_[u].push_back(Vertex(v));
    g.labels_ = std::move(labels);
    return g;
}

std::size_t Graph::max_degree() const
{
    std::size_t best = 0;
    for (const auto & n : nbrs_)
        best = std::max(best, n.size());
    return best;
}

bool Graph::is_regular() const
{
    return std::all_of(nbrs_.begin(), nbrs_.end(),
                       [&](const auto & n) { return n.size() == nbrs_.front().size(); });
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : nbrs_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::uint32_t DistanceMatrix::diameter() const
{
    std::uint32_t best = 0;
    for (auto d : d_) {
        if (d == unreachable)
            return unreachable;
        best = std::max(best, d);
    }
    return best;
}

Graph build_cycle(int q)
{
    if (q < 3)
        throw InvalidParameter("cycle length must be >= 3, got " + std::to_string(q));
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Word> labels;
    for (int i = 0; i < q; ++i) {
        edges.emplace_back(Vertex(i), Vertex((i + 1) % q));
        labels.push_back({i});
    }
    return Graph::from_edges(std::size_t(q), edges, std::move(labels));
}

Graph build_complete(int n)
{
    if (n < 1)
        throw InvalidParameter("complete graph needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(Vertex(u), Vertex(v));
    return Graph::from_edges(std::size_t(n), edges);
}

Graph build_path(int n)
{
    if (n < 1)
        throw InvalidParameter("path needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u + 1 < n; ++u)
        edges.emplace_back(Vertex(u), Vertex(u + 1));
    return Graph::from_edges(std::size_t(n), edges);
}

Graph build_hypercube(int n)
{
    if (n < 1)
        throw InvalidParameter("hypercube dimension must be >= 1, got " + std::to_string(n));
    if (n > 20)
        throw TooLarge("hypercube dimension " + std::to_string(n) + " too large for dense storage");
    std::pair<Vertex, Vertex> edge{0, 1};
    Graph k2 = Graph::from_edges(2, std::span(&edge, 1), {{0}, {1}});
    Graph g = k2;
    for (int i = 1; i < n; ++i)
        g = cartesian_product(g, k2);
    return g;
}

Graph cartesian_product(const Graph & g, const Graph & h)
{
    if (g.empty() || h.empty())
        throw InvalidParameter("cartesian product of an empty graph");
    const std::size_t ng = g.size(), nh = h.size();
    auto index = [nh](std::size_t u, std::size_t v) { return Vertex(u * nh + v); };

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(g.edge_count() * nh + h.edge_count() * ng);
    for (std::size_t u = 0; u < ng; ++u)
        for (auto [a, b] : h.edges())
            edges.emplace_back(index(u, a), index(u, b));
    for (auto [a, b] : g.edges())
        for (std::size_t v = 0; v < nh; ++v)
            edges.emplace_back(index(a, v), index(b, v));

    std::vector<Word> labels;
    if (g.has_labels() && h.has_labels()) {
        labels.reserve(ng * nh);
        for (std::size_t u = 0; u < ng; ++u)
            for (std::size_t v = 0; v < nh; ++v) {
                Word w = g.label(Vertex(u));
                const Word & tail = h.label(Vertex(v));
                w.insert(w.end(), tail.begin(), tail.end());
                labels.push_back(std::move(w));
            }
    }
    return Graph::from_edges(ng * nh, edges, std::move(labels));
}

Graph build_lee_graph(const LeeParams & params)
{
    LeeParams checked(params.n, params.q);
    // C_2 would be a multigraph; G(n,2) is the hypercube.
    if (checked.q == 2)
        return build_hypercube(checked.n);
    Graph c = build_cycle(checked.q);
    Graph g = c;
    for (int i = 1; i < checked.n; ++i)
        g = cartesian_product(g, c);
    return g;
}

std::vector<std::uint32_t> bfs_distances(const Graph & g, Vertex source)
{
    std::vector<std::uint32_t> dist(g.size(), unreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbours(u))
            if (dist[v] == unreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph & g)
{
    DistanceMatrix d(g.size());
    for (Vertex u = 0; u < g.size(); ++u) {
        auto row = bfs_distances(g, u);
        for (std::size_t v = 0; v < g.size(); ++v)
            d(u, v) = row[v];
    }
    return d;
}

Graph graph_power(const Graph & g, int t)
{
    if (t < 1)
        throw InvalidParameter("graph power exponent must be >= 1, got " + std::to_string(t));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < g.size(); ++u) {
        auto dist = bfs_distances(g, u);
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (dist[v] != unreachable && dist[v] <= std::uint32_t(t))
                edges.emplace_back(u, v);
    }
    return Graph::from_edges(g.size(), edges, g.labels());
}

int lee_distance(std::span<const int> u, std::span<const int> v, int q)
{
    if (u.size() != v.size())
        throw InvalidParameter("Lee distance between words of different length");
    if (q < 2)
        throw InvalidParameter("alphabet size must be >= 2");
    int total = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 0 || u[i] >= q || v[i] < 0 || v[i] >= q)
            throw InvalidParameter("coordinate outside [0, q-1]");
        int diff = std::abs(u[i] - v[i]);
        total += std::min(diff, q - diff);
    }
    return total;
}

Graph read_edge_list(std::istream & in)
{
    std::string line;
    std::optional<std::size_t> vertex_count;
    std::vector<std::pair<Vertex, Vertex>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == 'c' || tag[0] == '#')
            continue;
        auto fail = [&](const std::string & why) {
            return InvalidParameter("edge list line " + std::to_string(line_no) + ": " + why);
        };
        if (tag == "p") {
            long long n;
            if (vertex_count || !(ls >> n) || n < 1)
                throw fail("expected a single `p <vertex_count>` header");
            vertex_count = std::size_t(n);
        }
        else if (tag == "e") {
            long long u, v;
            if (!vertex_count)
                throw fail("edge before `p` header");
            if (!(ls >> u >> v) || u < 0 || v < 0 || std::size_t(u) >= *vertex_count
                || std::size_t(v) >= *vertex_count)
                throw fail("malformed or out-of-range edge");
            edges.emplace_back(Vertex(u), Vertex(v));
        }
        else
            throw fail("unknown record `" + tag + "`");
    }
    if (!vertex_count)
        throw InvalidParameter("edge list is missing the `p <vertex_count>` header");
    return Graph::from_edges(*vertex_count, edges);
}

Graph read_edge_list_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidParameter("cannot open graph file " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream & out, const Graph & g)
{
    out << "p " << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
}

}  // namespace chit
