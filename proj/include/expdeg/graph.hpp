#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expdeg/errors.hpp"

namespace expdeg {

using VertexId = std::string;
using EdgeId = std::string;

struct Vertex {
    VertexId id;
    std::optional<std::string> label;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
    EdgeId id;
    VertexId source;
    VertexId target;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Oriented dual graph of the special fibre of a simple degeneration:
// vertices are components, edges are double-locus components. Multi-edges
// are allowed. A loop (source == target) is representable but marks the
// degeneration as non-strict; every downstream operation rejects it.
class DualGraph {
public:
    DualGraph() = default;
    DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
              std::optional<int> fibre_dim = std::nullopt);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<int> fibre_dim() const { return fibre_dim_; }

    bool has_vertex(const VertexId& id) const;
    bool has_edge(const EdgeId& id) const;
    std::size_t vertex_index(const VertexId& id) const;
    const Edge& edge(const EdgeId& id) const;

    std::size_t out_degree(const VertexId& id) const;
    std::size_t in_degree(const VertexId& id) const;

    friend bool operator==(const DualGraph&, const DualGraph&) = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::optional<int> fibre_dim_;
};

// A two-sided vertex partition inducing a bipartite orientation: every edge
// runs from v_minus to v_plus. Vertex ids are listed in graph input order.
struct BipartiteSplit {
    std::vector<VertexId> v_minus;
    std::vector<VertexId> v_plus;
    friend bool operator==(const BipartiteSplit&, const BipartiteSplit&) = default;
};

// True iff no edge is a loop, i.e. all components of the special fibre are
// smooth and the expanded family is an honest scheme.
bool is_strict(const DualGraph& g);

// Standard DFS cycle detection on the chosen orientation; directed cycles
// obstruct projectivity of the expanded family.
bool has_directed_cycle(const DualGraph& g);

// Topological stratification of the vertices: level 0 holds the sources,
// level k the vertices whose longest incoming chain has length k. The
// concatenation is a valid topological order (the blow-up order).
// Throws DirectedCycleError when no such order exists.
std::vector<std::vector<VertexId>> blowup_order(const DualGraph& g);

// All vertex splits inducing a bipartite orientation of the underlying
// undirected graph (the current orientation is ignored). Empty iff some
// odd cycle exists; a connected bipartite graph yields exactly two splits,
// disconnected graphs 2^{#components}.
std::vector<BipartiteSplit> bipartite_orientations(const DualGraph& g);

// Redirect every edge so that it points from split.v_minus to split.v_plus.
// Throws InvalidSplitError when the split is not a partition or an edge
// joins two vertices on the same side.
DualGraph orient_bipartite(const DualGraph& g, const BipartiteSplit& split);

// Swap source and target of every edge. An involution.
DualGraph reverse_orientation(const DualGraph& g);

// Quadratic-base-change surgery on the dual graph: every edge D is replaced
// by a new exceptional vertex and two edges pointing from the old endpoints
// towards it. The result is always bipartitely orientable (old vertices on
// the minus side, new ones on the plus side).
DualGraph bipartify(const DualGraph& g);

// True when the orientation itself is bipartite: no loops and every vertex
// is a pure source or a pure sink.
bool is_bipartitely_oriented(const DualGraph& g);

// Extracts the (V-, V+) split realised by a bipartite orientation; vertices
// without edges are put on the minus side. Nullopt when the orientation is
// not bipartite.
std::optional<BipartiteSplit> orientation_split(const DualGraph& g);

}  // namespace expdeg
