#pragma once

#include <chit/bounds.hpp>
#include <chit/graph.hpp>
#include <chit/spectrum.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace chit {

/// `qn:<n>`, `lee:<n>:<q>`, `cycle:<q>` or `file:<path>`.
struct GraphSpec {
    enum class Kind { hypercube, lee, cycle, file };
    Kind kind = Kind::hypercube;
    int n = 1;
    int q = 2;
    std::string path;

    /// Canonical form of the spec string.
    std::string id() const;
};

GraphSpec parse_graph_spec(std::string_view text);

/// A graph addressed by spec. Structured families get closed-form spectra and walk counts;
/// the adjacency structure is only built on demand.
class GraphInstance {
public:
    explicit GraphInstance(GraphSpec spec);

    const GraphSpec & spec() const { return spec_; }
    bool structured() const { return spec_.kind != GraphSpec::Kind::file; }
    bool is_hypercube() const;
    /// (n, q) when the instance is a Lee graph with q >= 3 (cycles included, n = 1).
    std::optional<LeeParams> lee_params() const;

    std::size_t vertex_count() const;
    const Graph & graph() const;
    const Spectrum & spectrum() const;
    WalkDiagonal walks(int t) const;
    double max_degree() const;
    bool regular() const;

private:
    GraphSpec spec_;
    mutable std::unique_ptr<Graph> graph_;
    mutable std::unique_ptr<Spectrum> spectrum_;
};

/// Runs one bound method. Throws BoundInapplicable for method/graph/t combinations the
/// method does not cover.
BoundReport compute_bound(const GraphInstance & g, int t, BoundMethod method);

}  // namespace chit
