#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "expdeg/graph.hpp"

namespace expdeg {

// The tuple (a_0, ..., a_{r+1}) with
//
//     1 = a_0 <= a_1 < a_2 < ... < a_r <= a_{r+1} = n+1
//
// encoding the set I = {a_1, ..., a_r} of base coordinates that vanish.
// The sentinels a_0 and a_{r+1} are stored explicitly; they play only a
// formal role but keep every index formula uniform.
class AVector {
public:
    AVector(int n, std::vector<int> entries);

    int n() const { return n_; }
    int r() const { return static_cast<int>(entries_.size()) - 2; }
    int at(int i) const;  // a_i for 0 <= i <= r+1
    const std::vector<int>& entries() const { return entries_; }

    std::vector<int> index_set() const;  // {a_1, ..., a_r}
    bool contains(int i) const;          // i in I

    // Component labels are {0, a_1, ..., a_r}: 0 names the source-side black
    // component, a_r the target side, interior a_i the white components.
    // level_of_label maps a label to its chain position 0..r.
    int level_of_label(int label) const;
    int label_of_level(int level) const;

    friend bool operator==(const AVector&, const AVector&) = default;

private:
    int n_;
    std::vector<int> entries_;
};

// Per-level multiplicity vector v = (v_0, ..., v_r) with sum n.
struct SupportVector {
    std::vector<std::int64_t> v;
    std::int64_t sum() const;
    friend bool operator==(const SupportVector&, const SupportVector&) = default;
};

// I -> a with sentinels. Throws EmptyIndexSetError / OutOfRangeError.
AVector avector_from_set(int n, const std::vector<int>& index_set);

// v_a = (a_1 - a_0, ..., a_{r+1} - a_r).
SupportVector canonical_support(const AVector& a);

// Inverse bijection via partial sums b_i = 1 + v_0 + ... + v_{i-1}.
// Throws NotInBijectionRangeError when some interior entry of v vanishes.
AVector avector_from_support(int n, const SupportVector& v);

// Partition of {0, ..., n+1} into consecutive intervals
// [0, a_1-1], [a_1, a_2-1], ..., [a_r, n+1]; the ell-th interval meets [n]
// in exactly v_a[ell] integers.
std::vector<std::pair<int, int>> intervals(const AVector& a);

// Relabel the vanishing set of a_small (over m) through the order-preserving
// inclusion [m+1] -> I c [n+1]. Requires |I| = m+1 (SizeMismatchError).
AVector standard_embed(const AVector& a_small, int n, const std::vector<int>& image_set);

// --- expanded graphs -------------------------------------------------------

// A node of the expanded graph: either an original (black) component or an
// inserted (white) component named by (edge, incoming arrow label).
struct ExpandedNode {
    enum class Kind { Black, White };
    Kind kind = Kind::Black;
    VertexId vertex;  // black only
    EdgeId edge;      // white only
    int label = 0;    // white only

    static ExpandedNode black(VertexId v) { return {Kind::Black, std::move(v), {}, 0}; }
    static ExpandedNode white(EdgeId e, int label) { return {Kind::White, {}, std::move(e), label}; }

    std::string name() const;

    friend bool operator==(const ExpandedNode&, const ExpandedNode&) = default;
    friend std::strong_ordering operator<=>(const ExpandedNode&, const ExpandedNode&) = default;
};

struct ExpandedArrow {
    EdgeId edge;
    int label;
    ExpandedNode from;
    ExpandedNode to;
    friend bool operator==(const ExpandedArrow&, const ExpandedArrow&) = default;
};

// The graph Gamma_I: every edge of the base graph replaced by a chain of
// r arrows labelled a_1 < ... < a_r, with r-1 white nodes in between.
class ExpandedGraph {
public:
    ExpandedGraph(DualGraph base, AVector a, std::vector<ExpandedNode> nodes,
                  std::vector<ExpandedArrow> arrows)
        : base_(std::move(base)), a_(std::move(a)), nodes_(std::move(nodes)),
          arrows_(std::move(arrows)) {}

    const DualGraph& base() const { return base_; }
    const AVector& avector() const { return a_; }
    const std::vector<ExpandedNode>& nodes() const { return nodes_; }
    const std::vector<ExpandedArrow>& arrows() const { return arrows_; }

    // Level map: black V- nodes at 0, black V+ nodes at r, white (D, a_i) at i.
    int level(const ExpandedNode& node) const;
    std::size_t valence(const ExpandedNode& node) const;

private:
    DualGraph base_;
    AVector a_;
    std::vector<ExpandedNode> nodes_;
    std::vector<ExpandedArrow> arrows_;
};

// Build Gamma_I for a strict, bipartitely oriented graph.
// Throws NonStrictError / NotBipartiteError.
ExpandedGraph expand(const DualGraph& g, const AVector& a);

// Node map of a contraction q_{J,I}; defined on nodes only, arrows of the
// target are rebuilt from scratch.
struct NodeMap {
    std::vector<std::pair<ExpandedNode, ExpandedNode>> pairs;
    const ExpandedNode& apply(const ExpandedNode& node) const;
};

// Delete the arrows labelled J \ I and identify their endpoints. Requires a
// non-empty I contained in J (NotSubsetError). The returned map is surjective
// onto the nodes of Gamma_I, contract(g, J) is the identity, and contraction
// is functorial in I.
std::pair<ExpandedGraph, NodeMap> contract(const ExpandedGraph& gJ, const std::vector<int>& I);

}  // namespace expdeg
