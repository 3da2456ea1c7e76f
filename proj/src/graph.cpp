#include "expdeg/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace expdeg {

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                     std::optional<int> fibre_dim)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), fibre_dim_(fibre_dim) {
    std::set<VertexId> vseen;
    for (const auto& v : vertices_) {
        if (!vseen.insert(v.id).second)
            throw InputError("duplicate vertex id '" + v.id + "'");
    }
    std::set<EdgeId> eseen;
    for (const auto& e : edges_) {
        if (!eseen.insert(e.id).second)
            throw InputError("duplicate edge id '" + e.id + "'");
        if (!vseen.count(e.source))
            throw InputError("edge '" + e.id + "' references unknown source '" + e.source + "'");
        if (!vseen.count(e.target))
            throw InputError("edge '" + e.id + "' references unknown target '" + e.target + "'");
    }
    if (fibre_dim_ && *fibre_dim_ < 0)
        throw InputError("fibre_dim must be nonnegative");
}

bool DualGraph::has_vertex(const VertexId& id) const {
    return std::any_of(vertices_.begin(), vertices_.end(),
                       [&](const Vertex& v) { return v.id == id; });
}

bool DualGraph::has_edge(const EdgeId& id) const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return e.id == id; });
}

std::size_t DualGraph::vertex_index(const VertexId& id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id) return i;
    throw OutOfRangeError("unknown vertex '" + id + "'");
}

const Edge& DualGraph::edge(const EdgeId& id) const {
    for (const auto& e : edges_)
        if (e.id == id) return e;
    throw OutOfRangeError("unknown edge '" + id + "'");
}

std::size_t DualGraph::out_degree(const VertexId& id) const {
    std::size_t d = 0;
    for (const auto& e : edges_) d += (e.source == id);
    return d;
}

std::size_t DualGraph::in_degree(const VertexId& id) const {
    std::size_t d = 0;
    for (const auto& e : edges_) d += (e.target == id);
    return d;
}

bool is_strict(const DualGraph& g) {
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [](const Edge& e) { return e.source == e.target; });
}

namespace {

std::map<VertexId, std::vector<VertexId>> successors(const DualGraph& g) {
    std::map<VertexId, std::vector<VertexId>> next;
    for (const auto& v : g.vertices()) next[v.id];
    for (const auto& e : g.edges()) next[e.source].push_back(e.target);
    return next;
}

}  // namespace

bool has_directed_cycle(const DualGraph& g) {
    const auto next = successors(g);
    // 0 = unseen, 1 = on stack, 2 = done
    std::map<VertexId, int> state;
    for (const auto& v : g.vertices()) state[v.id] = 0;

    std::vector<std::pair<VertexId, std::size_t>> stack;
    for (const auto& v : g.vertices()) {
        if (state[v.id] != 0) continue;
        stack.push_back({v.id, 0});
        state[v.id] = 1;
        while (!stack.empty()) {
            auto& [id, pos] = stack.back();
            const auto& out = next.at(id);
            if (pos == out.size()) {
                state[id] = 2;
                stack.pop_back();
                continue;
            }
            const VertexId& w = out[pos++];
            if (state[w] == 1) return true;
            if (state[w] == 0) {
                state[w] = 1;
                stack.push_back({w, 0});
            }
        }
    }
    return false;
}

std::vector<std::vector<VertexId>> blowup_order(const DualGraph& g) {
    if (has_directed_cycle(g))
        throw DirectedCycleError("graph has a directed cycle, no blow-up order exists");

    const auto next = successors(g);
    std::map<VertexId, std::size_t> indeg;
    for (const auto& v : g.vertices()) indeg[v.id] = g.in_degree(v.id);

    std::map<VertexId, std::size_t> level;
    std::vector<VertexId> frontier;
    for (const auto& v : g.vertices())
        if (indeg[v.id] == 0) {
            level[v.id] = 0;
            frontier.push_back(v.id);
        }
    // longest-incoming-chain levels via Kahn peeling
    while (!frontier.empty()) {
        std::vector<VertexId> coming;
        for (const auto& id : frontier) {
            for (const auto& w : next.at(id)) {
                level[w] = std::max(level.count(w) ? level[w] : 0, level[id] + 1);
                if (--indeg[w] == 0) coming.push_back(w);
            }
        }
        frontier = std::move(coming);
    }

    std::size_t depth = 0;
    for (const auto& [id, l] : level) depth = std::max(depth, l + 1);
    std::vector<std::vector<VertexId>> out(g.vertices().empty() ? 0 : depth);
    for (const auto& v : g.vertices()) out[level[v.id]].push_back(v.id);
    return out;
}

std::vector<BipartiteSplit> bipartite_orientations(const DualGraph& g) {
    if (!is_strict(g)) return {};

    const std::size_t nv = g.vertices().size();
    std::vector<std::vector<std::size_t>> adj(nv);
    for (const auto& e : g.edges()) {
        const std::size_t a = g.vertex_index(e.source);
        const std::size_t b = g.vertex_index(e.target);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // 2-colour each connected component; colour -1 = unassigned.
    std::vector<int> colour(nv, -1);
    std::vector<std::vector<std::size_t>> components;
    for (std::size_t s = 0; s < nv; ++s) {
        if (colour[s] != -1) continue;
        std::vector<std::size_t> comp;
        std::vector<std::size_t> queue{s};
        colour[s] = 0;
        while (!queue.empty()) {
            const std::size_t v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            for (std::size_t w : adj[v]) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return {};  // odd cycle
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }

    // Each component independently contributes its colouring or its swap.
    std::vector<BipartiteSplit> splits;
    const std::size_t total = std::size_t{1} << components.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<int> side(nv);
        for (std::size_t c = 0; c < components.size(); ++c) {
            const bool flip = (mask >> c) & 1;
            for (std::size_t v : components[c]) side[v] = colour[v] ^ int(flip);
        }
        BipartiteSplit split;
        for (std::size_t v = 0; v < nv; ++v)
            (side[v] == 0 ? split.v_minus : split.v_plus).push_back(g.vertices()[v].id);
        splits.push_back(std::move(split));
    }
    return splits;
}

DualGraph orient_bipartite(const DualGraph& g, const BipartiteSplit& split) {
    std::map<VertexId, int> side;
    for (const auto& id : split.v_minus) {
        if (!g.has_vertex(id) || side.count(id))
            throw InvalidSplitError("split is not a partition of the vertex set");
        side[id] = 0;
    }
    for (const auto& id : split.v_plus) {
        if (!g.has_vertex(id) || side.count(id))
            throw InvalidSplitError("split is not a partition of the vertex set");
        side[id] = 1;
    }
    if (side.size() != g.vertices().size())
        throw InvalidSplitError("split misses some vertices");

    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        if (side[e.source] == side[e.target])
            throw InvalidSplitError("edge '" + e.id + "' joins two vertices on the same side");
        if (side[e.source] == 0)
            edges.push_back(e);
        else
            edges.push_back({e.id, e.target, e.source});
    }
    return DualGraph(g.vertices(), std::move(edges), g.fibre_dim());
}

DualGraph reverse_orientation(const DualGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) edges.push_back({e.id, e.target, e.source});
    return DualGraph(g.vertices(), std::move(edges), g.fibre_dim());
}

namespace {

std::string fresh_id(const std::string& base, std::set<std::string>& used) {
    std::string id = base;
    while (!used.insert(id).second) id += "'";
    return id;
}

}  // namespace

DualGraph bipartify(const DualGraph& g) {
    if (!is_strict(g)) throw NonStrictError("bipartify requires a strict degeneration (no loops)");

    std::set<std::string> used_v, used_e;
    for (const auto& v : g.vertices()) used_v.insert(v.id);

    std::vector<Vertex> vertices = g.vertices();
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        const std::string hat = fresh_id("Yhat(" + e.id + ")", used_v);
        vertices.push_back({hat, std::nullopt});
        edges.push_back({fresh_id(e.id + "-", used_e), e.source, hat});
        edges.push_back({fresh_id(e.id + "+", used_e), e.target, hat});
    }
    return DualGraph(std::move(vertices), std::move(edges), g.fibre_dim());
}

bool is_bipartitely_oriented(const DualGraph& g) {
    return orientation_split(g).has_value();
}

std::optional<BipartiteSplit> orientation_split(const DualGraph& g) {
    if (!is_strict(g)) return std::nullopt;
    BipartiteSplit split;
    for (const auto& v : g.vertices()) {
        const bool out = g.out_degree(v.id) > 0;
        const bool in = g.in_degree(v.id) > 0;
        if (out && in) return std::nullopt;
        // isolated vertices go to the minus side by convention
        (in ? split.v_plus : split.v_minus).push_back(v.id);
    }
    return split;
}

}  // namespace expdeg
