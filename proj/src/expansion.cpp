#include "expdeg/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace expdeg {

AVector::AVector(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw InputError("degree n must be positive");
    if (entries_.size() < 3)
        throw InputError("index tuple needs at least one interior entry (r >= 1)");
    if (entries_.front() != 1 || entries_.back() != n_ + 1)
        throw InputError("index tuple sentinels must be a_0 = 1 and a_{r+1} = n+1");
    const int r = static_cast<int>(entries_.size()) - 2;
    if (entries_[0] > entries_[1] || entries_[r] > entries_[r + 1])
        throw InputError("index tuple must be nondecreasing at the sentinels");
    for (int i = 1; i < r; ++i)
        if (entries_[i] >= entries_[i + 1])
            throw InputError("interior entries of the index tuple must strictly increase");
}

int AVector::at(int i) const {
    if (i < 0 || i >= static_cast<int>(entries_.size()))
        throw OutOfRangeError("index tuple position out of range");
    return entries_[i];
}

std::vector<int> AVector::index_set() const {
    return std::vector<int>(entries_.begin() + 1, entries_.end() - 1);
}

bool AVector::contains(int i) const {
    for (int j = 1; j <= r(); ++j)
        if (entries_[j] == i) return true;
    return false;
}

int AVector::level_of_label(int label) const {
    if (label == 0) return 0;
    for (int j = 1; j <= r(); ++j)
        if (entries_[j] == label) return j;
    throw OutOfRangeError("label " + std::to_string(label) + " is not in {0} u I");
}

int AVector::label_of_level(int level) const {
    if (level < 0 || level > r()) throw OutOfRangeError("level out of range");
    return level == 0 ? 0 : entries_[level];
}

std::int64_t SupportVector::sum() const {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

AVector avector_from_set(int n, const std::vector<int>& index_set) {
    if (index_set.empty()) throw EmptyIndexSetError("index set must be non-empty");
    std::set<int> sorted(index_set.begin(), index_set.end());
    for (int i : sorted)
        if (i < 1 || i > n + 1)
            throw OutOfRangeError("index " + std::to_string(i) + " outside [" +
                                  std::to_string(n + 1) + "]");
    std::vector<int> entries;
    entries.push_back(1);
    entries.insert(entries.end(), sorted.begin(), sorted.end());
    entries.push_back(n + 1);
    return AVector(n, std::move(entries));
}

SupportVector canonical_support(const AVector& a) {
    SupportVector out;
    for (int i = 0; i <= a.r(); ++i)
        out.v.push_back(a.at(i + 1) - a.at(i));
    return out;
}

AVector avector_from_support(int n, const SupportVector& v) {
    if (v.v.size() < 2) throw NotInBijectionRangeError("support vector needs r >= 1 levels");
    if (v.sum() != n)
        throw NotInBijectionRangeError("support vector entries must sum to n");
    for (const auto e : v.v)
        if (e < 0) throw NotInBijectionRangeError("support vector entries must be nonnegative");
    for (std::size_t i = 1; i + 1 < v.v.size(); ++i)
        if (v.v[i] == 0)
            throw NotInBijectionRangeError(
                "interior entry v_" + std::to_string(i) +
                " vanishes: no strictly increasing index tuple exists");
    std::vector<int> entries;
    int acc = 1;
    entries.push_back(acc);
    for (const auto e : v.v) {
        acc += static_cast<int>(e);
        entries.push_back(acc);
    }
    return AVector(n, std::move(entries));
}

std::vector<std::pair<int, int>> intervals(const AVector& a) {
    const int r = a.r();
    std::vector<std::pair<int, int>> out;
    out.push_back({0, a.at(1) - 1});
    for (int ell = 1; ell < r; ++ell) out.push_back({a.at(ell), a.at(ell + 1) - 1});
    out.push_back({a.at(r), a.n() + 1});
    return out;
}

AVector standard_embed(const AVector& a_small, int n, const std::vector<int>& image_set) {
    std::set<int> image(image_set.begin(), image_set.end());
    if (static_cast<int>(image.size()) != a_small.n() + 1)
        throw SizeMismatchError("standard embedding needs |I| = m+1");
    for (int i : image)
        if (i < 1 || i > n + 1)
            throw OutOfRangeError("embedding image outside [" + std::to_string(n + 1) + "]");
    std::vector<int> iota(image.begin(), image.end());  // order preserving
    std::vector<int> relabelled;
    for (int i : a_small.index_set()) relabelled.push_back(iota[i - 1]);
    return avector_from_set(n, relabelled);
}

std::string ExpandedNode::name() const {
    return kind == Kind::Black ? vertex : edge + ":" + std::to_string(label);
}

int ExpandedGraph::level(const ExpandedNode& node) const {
    if (node.kind == ExpandedNode::Kind::White) return a_.level_of_label(node.label);
    // black: sinks sit at level r, everything else (sources, isolated) at 0
    return base_.in_degree(node.vertex) > 0 ? a_.r() : 0;
}

std::size_t ExpandedGraph::valence(const ExpandedNode& node) const {
    std::size_t d = 0;
    for (const auto& arrow : arrows_) d += (arrow.from == node) + (arrow.to == node);
    return d;
}

ExpandedGraph expand(const DualGraph& g, const AVector& a) {
    if (!is_strict(g)) throw NonStrictError("expand requires a strict degeneration");
    if (!is_bipartitely_oriented(g))
        throw NotBipartiteError("expand requires a bipartitely oriented graph");

    const auto I = a.index_set();
    const int r = a.r();

    std::vector<ExpandedNode> nodes;
    for (const auto& v : g.vertices()) nodes.push_back(ExpandedNode::black(v.id));
    for (const auto& e : g.edges())
        for (int i = 1; i < r; ++i) nodes.push_back(ExpandedNode::white(e.id, I[i - 1]));

    std::vector<ExpandedArrow> arrows;
    for (const auto& e : g.edges()) {
        ExpandedNode prev = ExpandedNode::black(e.source);
        for (int i = 1; i <= r; ++i) {
            ExpandedNode next = (i == r) ? ExpandedNode::black(e.target)
                                         : ExpandedNode::white(e.id, I[i - 1]);
            arrows.push_back({e.id, I[i - 1], prev, next});
            prev = next;
        }
    }
    return ExpandedGraph(g, a, std::move(nodes), std::move(arrows));
}

const ExpandedNode& NodeMap::apply(const ExpandedNode& node) const {
    for (const auto& [from, to] : pairs)
        if (from == node) return to;
    throw OutOfRangeError("node '" + node.name() + "' not in the domain of the map");
}

std::pair<ExpandedGraph, NodeMap> contract(const ExpandedGraph& gJ, const std::vector<int>& I) {
    const auto J = gJ.avector().index_set();
    const std::set<int> Jset(J.begin(), J.end());
    std::set<int> Iset(I.begin(), I.end());
    if (Iset.empty()) throw NotSubsetError("contraction target index set must be non-empty");
    for (int i : Iset)
        if (!Jset.count(i))
            throw NotSubsetError("index " + std::to_string(i) + " not contained in J");

    const int n = gJ.avector().n();
    ExpandedGraph gI = expand(gJ.base(), avector_from_set(n, I));
    const std::vector<int> sortedI(Iset.begin(), Iset.end());
    const int rI = static_cast<int>(sortedI.size());

    // q is computable by pattern: a white node (D, a) lands at chain position
    // p = #{i in I : i <= a}; p = 0 is the source black node, p = |I| the
    // target, otherwise the white node (D, i_p).
    NodeMap q;
    for (const auto& node : gJ.nodes()) {
        if (node.kind == ExpandedNode::Kind::Black) {
            q.pairs.push_back({node, node});
            continue;
        }
        int p = 0;
        for (int i : sortedI)
            if (i <= node.label) ++p;
        const Edge& e = gJ.base().edge(node.edge);
        ExpandedNode image = (p == 0)   ? ExpandedNode::black(e.source)
                             : (p == rI) ? ExpandedNode::black(e.target)
                                         : ExpandedNode::white(node.edge, sortedI[p - 1]);
        q.pairs.push_back({node, std::move(image)});
    }
    return {std::move(gI), std::move(q)};
}

}  // namespace expdeg
