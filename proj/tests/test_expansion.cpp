#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "expdeg/expansion.hpp"

using namespace expdeg;

namespace {

DualGraph one_edge() { return DualGraph({{"Y1", {}}, {"Y2", {}}}, {{"D", "Y1", "Y2"}}); }

DualGraph two_edges_to_sink() {
    return DualGraph({{"A", {}}, {"B", {}}, {"C", {}}},
                     {{"D1", "A", "C"}, {"D2", "B", "C"}});
}

// Node-for-node comparison ignoring container order.
bool same_graph(const ExpandedGraph& x, const ExpandedGraph& y) {
    auto nodes = [](const ExpandedGraph& g) {
        auto v = g.nodes();
        std::sort(v.begin(), v.end());
        return v;
    };
    auto arrows = [](const ExpandedGraph& g) {
        std::vector<std::tuple<EdgeId, int, ExpandedNode, ExpandedNode>> v;
        for (const auto& a : g.arrows()) v.push_back({a.edge, a.label, a.from, a.to});
        std::sort(v.begin(), v.end());
        return v;
    };
    return nodes(x) == nodes(y) && arrows(x) == arrows(y);
}

}  // namespace

TEST_CASE("avector_from_set") {
    CHECK(avector_from_set(2, {1, 3}).entries() == std::vector<int>{1, 1, 3, 3});
    CHECK(avector_from_set(2, {2}).entries() == std::vector<int>{1, 2, 3});
    CHECK(avector_from_set(3, {1, 2, 3, 4}).entries() == std::vector<int>{1, 1, 2, 3, 4, 4});
    CHECK_THROWS_AS(avector_from_set(2, {}), EmptyIndexSetError);
    CHECK_THROWS_AS(avector_from_set(2, {4}), OutOfRangeError);
    CHECK_THROWS_AS(avector_from_set(2, {0}), OutOfRangeError);
}

TEST_CASE("canonical support") {
    CHECK(canonical_support(AVector(2, {1, 1, 3, 3})).v == std::vector<std::int64_t>{0, 2, 0});
    CHECK(canonical_support(AVector(2, {1, 1, 2, 3, 3})).v ==
          std::vector<std::int64_t>{0, 1, 1, 0});
    CHECK(canonical_support(AVector(2, {1, 2, 3})).v == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("avector_from_support") {
    CHECK(avector_from_support(2, {{0, 2, 0}}) == AVector(2, {1, 1, 3, 3}));
    CHECK(avector_from_support(2, {{1, 1}}) == AVector(2, {1, 2, 3}));
    CHECK_THROWS_AS(avector_from_support(2, {{0, 0, 2}}), NotInBijectionRangeError);
    CHECK_THROWS_AS(avector_from_support(3, {{1, 1}}), NotInBijectionRangeError);
}

TEST_CASE("support bijection is exhaustive for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        // every subset I gives a round trip a -> v -> a
        std::vector<int> I;
        auto rec = [&](auto&& self, int next) -> void {
            if (!I.empty()) {
                const AVector a = avector_from_set(n, I);
                CHECK(avector_from_support(n, canonical_support(a)) == a);
            }
            for (int i = next; i <= n + 1; ++i) {
                I.push_back(i);
                self(self, i + 1);
                I.pop_back();
            }
        };
        rec(rec, 1);
    }
}

TEST_CASE("intervals") {
    using P = std::vector<std::pair<int, int>>;
    CHECK(intervals(AVector(2, {1, 1, 3, 3})) == P{{0, 0}, {1, 2}, {3, 3}});
    CHECK(intervals(AVector(2, {1, 2, 3})) == P{{0, 1}, {2, 3}});

    // |I_ell n [n]| = v_ell, exhaustively for n <= 6
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> I;
        auto rec = [&](auto&& self, int next) -> void {
            if (!I.empty()) {
                const AVector a = avector_from_set(n, I);
                const SupportVector v = canonical_support(a);
                const auto parts = intervals(a);
                REQUIRE(parts.size() == v.v.size());
                CHECK(parts.front().first == 0);
                CHECK(parts.back().second == n + 1);
                for (std::size_t ell = 0; ell < parts.size(); ++ell) {
                    const int lo = std::max(parts[ell].first, 1);
                    const int hi = std::min(parts[ell].second, n);
                    CHECK(std::int64_t{std::max(0, hi - lo + 1)} == v.v[ell]);
                    if (ell + 1 < parts.size())
                        CHECK(parts[ell + 1].first == parts[ell].second + 1);
                }
            }
            for (int i = next; i <= n + 1; ++i) {
                I.push_back(i);
                self(self, i + 1);
                I.pop_back();
            }
        };
        rec(rec, 1);
    }
}

TEST_CASE("standard embedding") {
    const AVector small = avector_from_set(1, {1, 2});
    const AVector embedded = standard_embed(small, 3, {2, 4});
    CHECK(embedded.index_set() == std::vector<int>{2, 4});

    const AVector a = avector_from_set(2, {1, 3});
    CHECK(standard_embed(a, 2, {1, 2, 3}) == a);  // identity image

    // composite of embeddings = embedding along the composed inclusion
    const AVector first = standard_embed(small, 2, {1, 3});
    const AVector second = standard_embed(first, 4, {2, 3, 5});
    // iota_{235} o iota_{13} : 1 -> 2, 2 -> 5
    CHECK(second.index_set() == std::vector<int>{2, 5});

    CHECK_THROWS_AS(standard_embed(small, 3, {2}), SizeMismatchError);
}

TEST_CASE("expand the single edge") {
    const DualGraph g = one_edge();

    const ExpandedGraph chain = expand(g, avector_from_set(2, {1, 2, 3}));
    CHECK(chain.nodes().size() == 4);  // 2 black + 2 white
    CHECK(chain.arrows().size() == 3);
    CHECK(chain.arrows()[0].label == 1);
    CHECK(chain.arrows()[1].label == 2);
    CHECK(chain.arrows()[2].label == 3);
    CHECK(chain.arrows()[0].from == ExpandedNode::black("Y1"));
    CHECK(chain.arrows()[2].to == ExpandedNode::black("Y2"));
    CHECK(chain.level(ExpandedNode::black("Y1")) == 0);
    CHECK(chain.level(ExpandedNode::black("Y2")) == 3);
    CHECK(chain.level(ExpandedNode::white("D", 1)) == 1);
    CHECK(chain.level(ExpandedNode::white("D", 2)) == 2);

    const ExpandedGraph r1 = expand(g, avector_from_set(2, {2}));
    CHECK(r1.nodes().size() == 2);
    CHECK(r1.arrows().size() == 1);
    CHECK(r1.arrows()[0].label == 2);

    const ExpandedGraph pair = expand(two_edges_to_sink(), avector_from_set(3, {1, 3}));
    int whites = 0;
    for (const auto& node : pair.nodes()) whites += node.kind == ExpandedNode::Kind::White;
    CHECK(whites == 2);  // one per edge per interior index

    CHECK_THROWS_AS(expand(DualGraph({{"A", {}}}, {{"e", "A", "A"}}), avector_from_set(2, {1})),
                    NonStrictError);
    CHECK_THROWS_AS(
        expand(DualGraph({{"A", {}}, {"B", {}}, {"C", {}}},
                         {{"e1", "A", "B"}, {"e2", "B", "C"}}),
               avector_from_set(2, {1})),
        NotBipartiteError);
}

TEST_CASE("valences") {
    for (const DualGraph& g : {one_edge(), two_edges_to_sink()}) {
        for (int n = 1; n <= 4; ++n) {
            std::vector<int> I;
            auto rec = [&](auto&& self, int next) -> void {
                if (!I.empty()) {
                    const ExpandedGraph eg = expand(g, avector_from_set(n, I));
                    for (const auto& node : eg.nodes()) {
                        if (node.kind == ExpandedNode::Kind::White) {
                            CHECK(eg.valence(node) == 2);
                        } else {
                            CHECK(eg.valence(node) ==
                                  g.in_degree(node.vertex) + g.out_degree(node.vertex));
                        }
                    }
                    CHECK(eg.arrows().size() == g.edges().size() * I.size());
                }
                for (int i = next; i <= n + 1; ++i) {
                    I.push_back(i);
                    self(self, i + 1);
                    I.pop_back();
                }
            };
            rec(rec, 1);
        }
    }
}

TEST_CASE("contract examples") {
    const DualGraph g = one_edge();

    SUBCASE("J={1,2,3} -> I={2} merges the chain into the two black nodes") {
        const ExpandedGraph gJ = expand(g, avector_from_set(2, {1, 2, 3}));
        const auto [gI, q] = contract(gJ, {2});
        CHECK(gI.nodes().size() == 2);
        CHECK(q.apply(ExpandedNode::black("Y1")) == ExpandedNode::black("Y1"));
        CHECK(q.apply(ExpandedNode::white("D", 1)) == ExpandedNode::black("Y1"));
        CHECK(q.apply(ExpandedNode::white("D", 2)) == ExpandedNode::black("Y2"));
        CHECK(q.apply(ExpandedNode::black("Y2")) == ExpandedNode::black("Y2"));
    }

    SUBCASE("I = J is the identity") {
        const ExpandedGraph gJ = expand(g, avector_from_set(3, {1, 3}));
        const auto [gI, q] = contract(gJ, {1, 3});
        CHECK(same_graph(gI, gJ));
        for (const auto& [from, to] : q.pairs) CHECK(from == to);
    }

    SUBCASE("J={1,3} -> I={1}: the white node joins the target black node") {
        const ExpandedGraph gJ = expand(g, avector_from_set(2, {1, 3}));
        const auto [gI, q] = contract(gJ, {1});
        CHECK(q.apply(ExpandedNode::white("D", 1)) == ExpandedNode::black("Y2"));
    }

    CHECK_THROWS_AS(contract(expand(g, avector_from_set(2, {1, 3})), {2}), NotSubsetError);
    CHECK_THROWS_AS(contract(expand(g, avector_from_set(2, {1, 3})), {}), NotSubsetError);
}

TEST_CASE("contract reproduces a direct expansion and is functorial") {
    for (const DualGraph& g : {one_edge(), two_edges_to_sink()}) {
        for (int n = 1; n <= 4; ++n) {
            // enumerate all chains I c K c J over [n+1]
            std::vector<int> J;
            auto recJ = [&](auto&& self, int next) -> void {
                if (!J.empty()) {
                    const ExpandedGraph gJ = expand(g, avector_from_set(n, J));
                    const auto subsets = [&](const std::vector<int>& base) {
                        std::vector<std::vector<int>> out;
                        for (std::size_t mask = 1; mask < (std::size_t{1} << base.size());
                             ++mask) {
                            std::vector<int> sub;
                            for (std::size_t b = 0; b < base.size(); ++b)
                                if ((mask >> b) & 1) sub.push_back(base[b]);
                            out.push_back(std::move(sub));
                        }
                        return out;
                    };
                    for (const auto& K : subsets(J)) {
                        const auto [gK, qJK] = contract(gJ, K);
                        CHECK(same_graph(gK, expand(g, avector_from_set(n, K))));
                        // surjectivity of q
                        std::set<ExpandedNode> image;
                        for (const auto& [from, to] : qJK.pairs) image.insert(to);
                        CHECK(image.size() == gK.nodes().size());
                        for (const auto& I : subsets(K)) {
                            const auto [gI_direct, qJI] = contract(gJ, I);
                            const auto [gI_via, qKI] = contract(gK, I);
                            CHECK(same_graph(gI_direct, gI_via));
                            for (const auto& node : gJ.nodes())
                                CHECK(qJI.apply(node) == qKI.apply(qJK.apply(node)));
                        }
                    }
                }
                for (int i = next; i <= n + 1; ++i) {
                    J.push_back(i);
                    self(self, i + 1);
                    J.pop_back();
                }
            };
            recJ(recJ, 1);
        }
    }
}
