#include "expdeg/dot.hpp"

#include <set>
#include <sstream>

namespace expdeg {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string graph_to_dot(const DualGraph& g) {
    std::ostringstream out;
    out << "digraph dual_graph {\n";
    out << "  node [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
    for (const auto& v : g.vertices()) {
        out << "  " << quoted(v.id);
        if (v.label) out << " [xlabel=" << quoted(*v.label) << "]";
        out << ";\n";
    }
    for (const auto& e : g.edges())
        out << "  " << quoted(e.source) << " -> " << quoted(e.target)
            << " [label=" << quoted(e.id) << "];\n";
    out << "}\n";
    return out.str();
}

std::string expanded_to_dot(const ExpandedGraph& eg) {
    std::ostringstream out;
    out << "digraph expanded_graph {\n";
    out << "  rankdir=LR;\n";
    for (const auto& node : eg.nodes()) {
        out << "  " << quoted(node.name()) << " [shape=circle";
        if (node.kind == ExpandedNode::Kind::Black)
            out << ", style=filled, fillcolor=black, fontcolor=white";
        out << "];\n";
    }
    for (const auto& arrow : eg.arrows())
        out << "  " << quoted(arrow.from.name()) << " -> " << quoted(arrow.to.name())
            << " [label=\"" << arrow.label << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string closure_to_dot(const std::vector<Stratum>& strata, const ClosureOrder& order) {
    auto name = [&](std::size_t i) {
        std::string s = "I={";
        const auto I = strata[i].a.index_set();
        for (std::size_t k = 0; k < I.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(I[k]);
        }
        return s + "}";
    };

    // keep only covering relations for the Hasse diagram
    std::set<std::pair<std::size_t, std::size_t>> rel(order.relations.begin(),
                                                      order.relations.end());
    std::ostringstream out;
    out << "digraph closure_order {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < strata.size(); ++i)
        out << "  " << quoted(name(i)) << ";\n";
    for (const auto& [p, q] : order.relations) {
        bool covering = true;
        for (std::size_t m = 0; m < strata.size() && covering; ++m)
            if (m != p && m != q && rel.count({p, m}) && rel.count({m, q})) covering = false;
        if (covering)
            out << "  " << quoted(name(p)) << " -> " << quoted(name(q)) << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace expdeg
