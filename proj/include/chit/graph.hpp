#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chit {

using Vertex = std::uint32_t;
using Word = std::vector<int>;  // element of A_q^n

/// Code length / alphabet size pair identifying the Lee graph G(n,q).
struct LeeParams {
    int n = 1;
    int q = 2;

    LeeParams() = default;
    LeeParams(int n_, int q_);
};

/// Simple undirected graph stored as a dense symmetric 0/1 matrix.
/// Neighbour lists are kept alongside for the walk/BFS kernels.
/// Values are immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Self loops are rejected; duplicate edges are merged.
    static Graph from_edges(std::size_t vertex_count,
                            std::span<const std::pair<Vertex, Vertex>> edges,
                            std::vector<Word> labels = {});

    std::size_t size() const { return n_; }
    std::size_t edge_count() const { return edges_; }
    bool empty() const { return n_ == 0; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[std::size_t(u) * n_ + v] != 0; }
    std::span<const Vertex> neighbours(Vertex u) const { return nbrs_[u]; }
    std::size_t degree(Vertex u) const { return nbrs_[u].size(); }
    std::size_t max_degree() const;
    bool is_regular() const;

    bool has_labels() const { return !labels_.empty(); }
    const Word & label(Vertex u) const { return labels_.at(u); }
    const std::vector<Word> & labels() const { return labels_; }

    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    std::size_t n_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
    std::vector<Word> labels_;
};

inline constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

/// Row-major |V| x |V| geodesic distance matrix; disconnected pairs hold `unreachable`.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, unreachable) {}

    std::size_t size() const { return n_; }
    std::uint32_t operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
    std::uint32_t & operator()(std::size_t u, std::size_t v) { return d_[u * n_ + v]; }

    /// Largest finite distance, or `unreachable` when the graph is disconnected.
    std::uint32_t diameter() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> d_;
};

Graph build_cycle(int q);
Graph build_complete(int n);
Graph build_path(int n);
Graph build_hypercube(int n);
Graph cartesian_product(const Graph & g, const Graph & h);
Graph build_lee_graph(const LeeParams & params);

/// G^t: same vertices, u ~ v iff 0 < d_G(u,v) <= t.
Graph graph_power(const Graph & g, int t);

DistanceMatrix all_pairs_distances(const Graph & g);
std::vector<std::uint32_t> bfs_distances(const Graph & g, Vertex source);

int lee_distance(std::span<const int> u, std::span<const int> v, int q);

/// Edge-list text format: `p <vertex_count>` then `e <u> <v>` lines, 0-based.
/// Blank lines and lines starting with `c` or `#` are ignored.
Graph read_edge_list(std::istream & in);
Graph read_edge_list_file(const std::string & path);
void write_edge_list(std::ostream & out, const Graph & g);

}  // namespace chit
