#include <doctest.h>

#include <random>

#include "expdeg/stability.hpp"
#include "expdeg/weights.hpp"

using namespace expdeg;

namespace {

OneParamSubgroup ops(std::vector<std::int64_t> s) { return OneParamSubgroup{std::move(s)}; }

// Odometer over [-radius, radius]^n.
template <typename F>
void for_each_subgroup(int n, std::int64_t radius, F&& f) {
    OneParamSubgroup s;
    s.s.assign(static_cast<std::size_t>(n), -radius);
    for (;;) {
        f(s);
        int pos = 0;
        while (pos < n && s.s[pos] == radius) s.s[pos++] = -radius;
        if (pos == n) return;
        ++s.s[pos];
    }
}

}  // namespace

TEST_CASE("tau / sigma coordinate change") {
    CHECK(tau_to_sigma(ops({1, 1, 1})).w == std::vector<std::int64_t>{1, 0, 0, -1});
    CHECK(tau_to_sigma(ops({0, 0})).w == std::vector<std::int64_t>{0, 0, 0});

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        OneParamSubgroup s;
        for (int i = 0; i < n; ++i) s.s.push_back(static_cast<std::int64_t>(rng() % 21) - 10);
        const SigmaExponents w = tau_to_sigma(s);
        std::int64_t sum = 0;
        for (const auto v : w.w) sum += v;
        CHECK(sum == 0);
        CHECK(sigma_to_tau(w) == s);
    }
}

TEST_CASE("limit existence and landing fibre") {
    // I = {2}, source-side point, s = (1, 0): increase at 1, J = {1, 2}
    const AVector a2 = avector_from_set(2, {2});
    const PointPosition src = PointPosition::smooth(a2, "D", 0);
    const LimitOutcome lo = limit(src, ops({1, 0}));
    REQUIRE(lo.exists);
    CHECK(lo.J == std::vector<int>{1, 2});
    CHECK_FALSE(lo.landing->is_corner());
    CHECK(lo.landing->label() == 0);

    // trivial subgroup fixes everything
    const LimitOutcome fixed = limit(src, ops({0, 0}));
    REQUIRE(fixed.exists);
    CHECK(fixed.J == std::vector<int>{2});
    CHECK(*fixed.landing == src);

    // n=1, I={1,2}, white point, s=(-1): all-negative run lands on the corner (1,2)
    const AVector a1 = avector_from_set(1, {1, 2});
    const PointPosition white = PointPosition::smooth(a1, "D", 1);
    const LimitOutcome down = limit(white, ops({-1}));
    REQUIRE(down.exists);
    CHECK(down.J == std::vector<int>{1, 2});
    REQUIRE(down.landing->is_corner());
    CHECK(down.landing->corner_pair() == std::pair<int, int>{1, 2});

    // no limit when a coordinate outside I decreases
    CHECK_FALSE(limit(src, ops({0, 1})).exists);   // drop at i=3 not in I
    CHECK_FALSE(limit(src, ops({-1, -1})).exists); // drop at i=1 not in I
}

TEST_CASE("limit flow is a fixed point on the landing position") {
    std::vector<AVector> tuples;
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= n + 1; ++r)
            for (const AVector& a : all_avectors(n, r)) tuples.push_back(a);

    for (const AVector& a : tuples) {
        std::vector<PointPosition> positions;
        positions.push_back(PointPosition::smooth(a, "D", 0));
        for (int j = 1; j <= a.r(); ++j) {
            positions.push_back(PointPosition::smooth(a, "D", a.at(j)));
            positions.push_back(
                PointPosition::corner(a, "D", a.label_of_level(j - 1), a.at(j)));
        }
        for_each_subgroup(a.n(), 2, [&](const OneParamSubgroup& s) {
            for (const auto& p : positions) {
                const LimitOutcome first = limit(p, s);
                if (!first.exists) continue;
                // J always contains I
                for (int i : a.index_set())
                    CHECK(std::find(first.J.begin(), first.J.end(), i) != first.J.end());
                const LimitOutcome second = limit(*first.landing, s);
                REQUIRE(second.exists);
                CHECK(second.J == first.J);
                CHECK(*second.landing == *first.landing);
            }
        });
    }
}

TEST_CASE("point weights") {
    // white point of the full expansion at n=1
    const AVector a1 = avector_from_set(1, {1, 2});
    const PointPosition white = PointPosition::smooth(a1, "D", 1);
    CHECK(point_weight(white, ops({1})) == Weight(1));
    CHECK(point_weight(white, ops({-1})) == Weight(1));

    // corner (0,1) at n=2, I={1,3}: contributions -k s_k below 1, (n+1-k) s_k above
    const AVector a13 = avector_from_set(2, {1, 3});
    const PointPosition corner = PointPosition::corner(a13, "D", 0, 1);
    CHECK(point_weight(corner, ops({0, 1})) == Weight(1));

    // no limit means an infinite weight
    const PointPosition src = PointPosition::smooth(avector_from_set(2, {2}), "D", 0);
    CHECK(point_weight(src, ops({0, 1})).is_infinite());
    CHECK(point_weight(src, ops({0, 1})) == Weight::infinity());
}

TEST_CASE("level weight recipe") {
    // zero exponent, zero weight
    for (int lvl = 0; lvl <= 2; ++lvl)
        CHECK(level_weight(avector_from_set(2, {1, 3}), lvl, 1, 0) == 0);

    // middle range at n=1
    CHECK(level_weight(AVector(1, {1, 1, 2, 2}), 1, 1, 1) == 1);

    // n=2, a=(1,2,3), level 0, k=2 >= a_1: the (n+1-k) s_k range.
    // Frozen from the closed form: omega_2(v_b, s) = 2 for b = (1,3,3),
    // i.e. two points at level 0, so each contributes +1.
    const AVector a = AVector(2, {1, 2, 3});
    CHECK(support_weight_closed_form(a, {1, 3, 3}, 2, 1) == 2);
    CHECK(level_weight(a, 0, 2, 1) == 1);
}

TEST_CASE("support weight") {
    const AVector a1 = AVector(1, {1, 1, 2, 2});
    CHECK(support_weight(a1, {{0, 1, 0}}, ops({0})) == 0);
    CHECK(support_weight(a1, {{0, 1, 0}}, ops({1})) == 1);
    CHECK(support_weight(a1, {{0, 0, 1}}, ops({1})) == -1);

    CHECK_THROWS_AS(support_weight(a1, {{1, 0}}, ops({1})), LengthMismatchError);
    CHECK_THROWS_AS(support_weight(a1, {{0, 1, 0}}, ops({1, 0})), LengthMismatchError);
}

TEST_CASE("positive homogeneity in s") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int r = 1 + static_cast<int>(rng() % (n + 1));
        const auto tuples = all_avectors(n, r);
        const AVector& a = tuples[rng() % tuples.size()];
        const auto supports = all_support_vectors(n, r);
        const SupportVector& v = supports[rng() % supports.size()];
        OneParamSubgroup s;
        for (int i = 0; i < n; ++i) s.s.push_back(static_cast<std::int64_t>(rng() % 9) - 4);
        const std::int64_t lambda = 1 + static_cast<std::int64_t>(rng() % 5);
        OneParamSubgroup scaled;
        for (const auto e : s.s) scaled.s.push_back(lambda * e);
        CHECK(support_weight(a, v, scaled) == lambda * support_weight(a, v, s));
    }
}

TEST_CASE("closed form equals the recipe") {
    SUBCASE("frozen example") {
        const AVector a = AVector(2, {1, 2, 3});
        CHECK(support_weight_closed_form(a, {1, 1, 3}, 1, 1) == -2);
        CHECK(support_weight_closed_form(a, {1, 1, 3}, 1, 0) == 0);
    }

    SUBCASE("random sweep n <= 6") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 4000; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 6);
            const int r = 1 + static_cast<int>(rng() % (n + 1));
            const auto tuples = all_avectors(n, r);
            const AVector& a = tuples[rng() % tuples.size()];
            const auto supports = all_support_vectors(n, r);
            const SupportVector& v = supports[rng() % supports.size()];
            const std::vector<int> b = monotone_tuple(n, v);
            const int k = 1 + static_cast<int>(rng() % n);
            const std::int64_t s_k = static_cast<std::int64_t>(rng() % 7) - 3;

            std::int64_t recipe = 0;
            for (int i = 0; i <= r; ++i)
                recipe += v.v[i] * level_weight(a, i, k, s_k);
            CHECK(support_weight_closed_form(a, b, k, s_k) == recipe);
        }
    }
}

TEST_CASE("canonical support has strictly positive weights") {
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= n + 1; ++r)
            for (const AVector& a : all_avectors(n, r)) {
                const SupportVector v = canonical_support(a);
                for_each_subgroup(n, 2, [&](const OneParamSubgroup& s) {
                    if (s.is_trivial()) return;
                    for (int k = 1; k <= n; ++k) {
                        const std::int64_t s_k = s.at(k);
                        if (s_k == 0) continue;
                        std::int64_t wk = 0;
                        for (int i = 0; i <= r; ++i)
                            wk += v.v[i] * level_weight(a, i, k, s_k);
                        CHECK(wk > 0);
                    }
                    if (limit_exists(a, s)) CHECK(support_weight(a, v, s) > 0);
                });
            }
}

TEST_CASE("cycle weight agrees with the support weight on smooth cycles") {
    const DualGraph g = single_edge_graph();
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= n + 1; ++r)
            for (const AVector& a : all_avectors(n, r))
                for (const SupportVector& v : all_support_vectors(n, r)) {
                    const Configuration c = configuration_from_support(g, "D", a, v);
                    for_each_subgroup(n, 2, [&](const OneParamSubgroup& s) {
                        const Weight w = cycle_weight(c, s);
                        if (limit_exists(a, s))
                            CHECK(w == Weight(support_weight(a, v, s)));
                        else
                            CHECK(w.is_infinite());
                    });
                }
}

TEST_CASE("corner points never exceed the smooth weight at the same level") {
    const DualGraph g = single_edge_graph();
    for (int n = 2; n <= 3; ++n)
        for (int r = 1; r <= n + 1; ++r)
            for (const AVector& a : all_avectors(n, r))
                for (int j = 1; j <= r; ++j) {
                    // one corner point plus padding at level 0, against the same
                    // cycle with the corner replaced by a smooth point on either
                    // adjacent level
                    std::vector<ConfigPoint> corner_pts, low_pts, high_pts;
                    corner_pts.push_back(
                        {PointPosition::corner(a, "D", a.label_of_level(j - 1), a.at(j)), 1,
                         {}, {}});
                    low_pts.push_back(
                        {PointPosition::smooth(a, "D", a.label_of_level(j - 1)), 1, {}, {}});
                    high_pts.push_back(
                        {PointPosition::smooth(a, "D", a.label_of_level(j)), 1, {}, {}});
                    if (n > 1) {
                        const ConfigPoint pad{PointPosition::smooth(a, "D", 0),
                                              n - 1, {}, {}};
                        corner_pts.push_back(pad);
                        low_pts.push_back(pad);
                        high_pts.push_back(pad);
                    }
                    const Configuration corner(n, g, a, corner_pts);
                    const Configuration low(n, g, a, low_pts);
                    const Configuration high(n, g, a, high_pts);
                    for_each_subgroup(n, 2, [&](const OneParamSubgroup& s) {
                        if (!limit_exists(a, s)) return;
                        const std::int64_t wc = cycle_weight(corner, s).value();
                        CHECK(wc <= cycle_weight(low, s).value());
                        CHECK(wc <= cycle_weight(high, s).value());
                    });
                }
}

TEST_CASE("position validation") {
    const AVector a = avector_from_set(2, {1, 3});
    CHECK_THROWS_AS(PointPosition::smooth(a, "D", 2), OutOfRangeError);
    CHECK_THROWS_AS(PointPosition::corner(a, "D", 0, 3), OutOfRangeError);
    CHECK_THROWS_AS(PointPosition::corner(a, "D", 1, 2), OutOfRangeError);
    CHECK(PointPosition::corner(a, "D", 1, 3).corner_pair() == std::pair<int, int>{1, 3});
}
