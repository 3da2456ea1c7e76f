#include "expdeg/stability.hpp"

#include <algorithm>
#include <map>

namespace expdeg {

Configuration::Configuration(int n, DualGraph graph, AVector a, std::vector<ConfigPoint> points)
    : n_(n), graph_(std::move(graph)), a_(std::move(a)), points_(std::move(points)) {
    if (a_->n() != n_) throw InputError("index tuple degree does not match n");
    std::int64_t total = 0;
    for (const auto& pt : points_) {
        if (pt.multiplicity < 1) throw InputError("multiplicities must be >= 1");
        total += pt.multiplicity;
        if (!(pt.position.avector() == *a_))
            throw InputError("every point must carry the configuration's index tuple");
        if (!graph_.has_edge(pt.position.edge()))
            throw InputError("point references unknown edge '" + pt.position.edge() + "'");
        if (pt.fiber) {
            if (pt.fiber->is_zero()) throw InputError("fiber coordinates must be nonzero");
            if (pt.position.is_corner())
                throw InputError("fiber coordinates only apply to smooth positions");
            const int lvl = pt.position.level();
            if (lvl == 0 || lvl == a_->r())
                throw InputError("fiber coordinates only apply to white-level positions");
        }
    }
    if (total != n_) throw InputError("multiplicities must sum to n");
}

Configuration Configuration::generic(int n, DualGraph graph) {
    if (n < 1) throw InputError("degree n must be positive");
    return Configuration(n, std::move(graph));
}

const AVector& Configuration::avector() const {
    if (!a_) throw OutOfRangeError("generic-fibre configuration has no index tuple");
    return *a_;
}

bool Configuration::has_smooth_support() const {
    return std::none_of(points_.begin(), points_.end(),
                        [](const ConfigPoint& pt) { return pt.position.is_corner(); });
}

SupportVector numerical_support(const Configuration& c) {
    if (c.is_generic()) return SupportVector{{c.n()}};
    if (!c.has_smooth_support())
        throw NonSmoothSupportError("numerical support needs smooth support");
    SupportVector v;
    v.v.assign(static_cast<std::size_t>(c.avector().r()) + 1, 0);
    for (const auto& pt : c.points())
        v.v[static_cast<std::size_t>(pt.position.level())] += pt.multiplicity;
    return v;
}

namespace {

// Ramps from the stability theorem's proof. Case 1 (a_{j+1} > b_{j+1}):
// zeros, then 0,1,2,... rising across the gap [a_j, a_{j+1}), with the large
// value d at the top position a_{j+1}-1. Case 2 (b_j > a_j): the large
// negative d at a_j, rising by 1 up to -1 just below a_{j+1}.
OneParamSubgroup ramp_case1(const AVector& a, int j, std::int64_t d) {
    OneParamSubgroup s;
    s.s.assign(static_cast<std::size_t>(a.n()), 0);
    const int lo = a.at(j), hi = a.at(j + 1);
    for (int k = lo + 1; k < hi - 1; ++k) s.s[k - 1] = k - lo;
    s.s[hi - 2] = d;
    return s;
}

OneParamSubgroup ramp_case2(const AVector& a, int j, std::int64_t d) {
    OneParamSubgroup s;
    s.s.assign(static_cast<std::size_t>(a.n()), 0);
    const int lo = a.at(j), hi = a.at(j + 1);
    s.s[lo - 1] = d;
    for (int m = 1; m <= hi - lo - 1; ++m) s.s[hi - m - 1] = -m;
    return s;
}

// Comparison supports for a cycle with corner points: corner points at the
// lowest occupied corner are pushed to its two adjacent levels, producing two
// distinct smooth supports both dominating the cycle weight.
std::pair<SupportVector, SupportVector> corner_comparison_supports(const Configuration& c) {
    const int r = c.avector().r();
    SupportVector lowered, raised;
    lowered.v.assign(static_cast<std::size_t>(r) + 1, 0);
    raised.v.assign(static_cast<std::size_t>(r) + 1, 0);

    int j_min = r + 1;
    for (const auto& pt : c.points())
        if (pt.position.is_corner()) {
            const int upper_level = c.avector().level_of_label(pt.position.corner_pair().second);
            j_min = std::min(j_min, upper_level - 1);
        }

    for (const auto& pt : c.points()) {
        if (!pt.position.is_corner()) {
            lowered.v[pt.position.level()] += pt.multiplicity;
            raised.v[pt.position.level()] += pt.multiplicity;
            continue;
        }
        const int lower_level = c.avector().level_of_label(pt.position.corner_pair().second) - 1;
        if (lower_level == j_min) {
            lowered.v[lower_level] += pt.multiplicity;
            raised.v[lower_level + 1] += pt.multiplicity;
        } else {
            lowered.v[lower_level] += pt.multiplicity;
            raised.v[lower_level] += pt.multiplicity;
        }
    }
    return {lowered, raised};
}

OneParamSubgroup witness_from_support(const Configuration& c, const SupportVector& v_target) {
    const AVector& a = c.avector();
    const std::vector<int> b = monotone_tuple(a.n(), v_target);

    int case1_j = -1, case2_j = -1;
    for (int j = 0; j <= a.r() && case1_j < 0; ++j)
        if (a.at(j + 1) > b[j + 1]) case1_j = j;
    for (int j = 1; j <= a.r() && case2_j < 0; ++j)
        if (b[j] > a.at(j)) case2_j = j;
    if (case1_j < 0 && case2_j < 0)
        throw IsStableError("support equals the canonical one, no witness exists");

    for (std::int64_t d = 1; d <= (std::int64_t{1} << 40); d *= 2) {
        OneParamSubgroup s = case1_j >= 0 ? ramp_case1(a, case1_j, d)
                                          : ramp_case2(a, case2_j, -d);
        const Weight w = cycle_weight(c, s);
        if (!w.is_infinite() && w.value() < 0) return s;
    }
    throw Error("destabilizing ramp failed to dominate");  // unreachable
}

}  // namespace

OneParamSubgroup destabilizing_witness(const Configuration& c) {
    if (c.is_generic())
        throw IsStableError("generic-fibre configurations are stable");
    if (c.has_smooth_support()) {
        const SupportVector v = numerical_support(c);
        if (v == canonical_support(c.avector()))
            throw IsStableError("configuration is stable, no witness exists");
        return witness_from_support(c, v);
    }
    const auto [lowered, raised] = corner_comparison_supports(c);
    const SupportVector canonical = canonical_support(c.avector());
    return witness_from_support(c, lowered == canonical ? raised : lowered);
}

StabilityVerdict git_stable(const Configuration& c) {
    StabilityVerdict verdict;
    verdict.ell_threshold = default_ell(c.n());
    if (c.is_generic()) return verdict;

    if (!is_bipartitely_oriented(c.graph()))
        throw NotBipartiteError("stability needs a bipartitely oriented graph");

    if (c.has_smooth_support() &&
        numerical_support(c) == canonical_support(c.avector()))
        return verdict;

    verdict.status = Stability::Unstable;
    verdict.witness = destabilizing_witness(c);
    verdict.witness_weight = cycle_weight(c, *verdict.witness).value();
    return verdict;
}

OracleScan oracle_scan(const Configuration& c, std::int64_t box_radius) {
    if (box_radius < 1) throw InputError("box radius must be >= 1");
    const int n = c.n();
    OracleScan scan;

    OneParamSubgroup s;
    s.s.assign(static_cast<std::size_t>(n), -box_radius);
    for (;;) {
        if (!s.is_trivial()) {
            const Weight w = cycle_weight(c, s);
            if (!w.is_infinite()) {
                if (!scan.any_admissible || w.value() < scan.min_weight) {
                    scan.any_admissible = true;
                    scan.min_weight = w.value();
                    scan.argmin = s;
                }
            }
        }
        int pos = 0;
        while (pos < n && s.s[pos] == box_radius) s.s[pos++] = -box_radius;
        if (pos == n) break;
        ++s.s[pos];
    }
    return scan;
}

bool oracle_stable(const Configuration& c, std::int64_t box_radius) {
    const OracleScan scan = oracle_scan(c, box_radius);
    return !scan.any_admissible || scan.min_weight > 0;
}

bool oracle_stable(const Configuration& c) { return oracle_stable(c, default_box(c.n())); }

bool lw_stable(const Configuration& c) {
    if (c.is_generic()) return true;
    if (!c.has_smooth_support()) return false;
    const SupportVector v = numerical_support(c);
    for (std::size_t i = 1; i + 1 < v.v.size(); ++i)
        if (v.v[i] == 0) return false;
    return true;
}

WeightEnvelope weight_envelope(const Configuration& c, const OneParamSubgroup& s,
                               std::int64_t ell) {
    const Weight w = cycle_weight(c, s);
    if (w.is_infinite())
        throw NoLimitError("no limit exists for this one-parameter subgroup");
    WeightEnvelope env;
    env.center = ell * w.value();
    const std::int64_t n = c.n();
    std::int64_t abs_sum = 0;
    for (const auto v : s.s) abs_sum += v < 0 ? -v : v;
    env.radius = 2 * n * n * abs_sum;
    return env;
}

bool forcing_inequalities_hold(const AVector& a, const std::vector<int>& b) {
    const int n = a.n();
    for (int j = 0; j <= a.r(); ++j)
        for (int k = a.at(j); k < a.at(j + 1); ++k) {
            if (std::int64_t{k + 1 - b[j + 1]} * (n + 1) - k > 0) return false;
            if (std::int64_t{k + 1 - b[j]} * (n + 1) - k < 0) return false;
        }
    return true;
}

namespace {

bool forcing_inequalities_strict(const AVector& a, const std::vector<int>& b) {
    const int n = a.n();
    for (int j = 0; j <= a.r(); ++j)
        for (int k = a.at(j); k < a.at(j + 1); ++k) {
            if (std::int64_t{k + 1 - b[j + 1]} * (n + 1) - k >= 0) return false;
            if (std::int64_t{k + 1 - b[j]} * (n + 1) - k <= 0) return false;
        }
    return true;
}

}  // namespace

std::vector<SupportVector> all_support_vectors(int n, int r) {
    std::vector<SupportVector> out;
    SupportVector cur;
    cur.v.assign(static_cast<std::size_t>(r) + 1, 0);
    // odometer over compositions of n into r+1 nonnegative parts
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == r) {
            cur.v[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            cur.v[pos] = take;
            self(self, pos + 1, remaining - take);
        }
    };
    rec(rec, 0, n);
    return out;
}

std::vector<AVector> all_avectors(int n, int r) {
    std::vector<AVector> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(pick.size()) == r) {
            out.push_back(avector_from_set(n, pick));
            return;
        }
        for (int i = next; i <= n + 1; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

bool verify_forcing_lemma(int n, int r, const AVector& a) {
    if (a.n() != n || a.r() != r) throw LengthMismatchError("index tuple does not match (n, r)");
    const std::vector<int> a_tuple = a.entries();
    for (const auto& v : all_support_vectors(n, r)) {
        const std::vector<int> b = monotone_tuple(n, v);
        const bool holds = forcing_inequalities_hold(a, b);
        if (holds != (b == a_tuple)) return false;
    }
    return forcing_inequalities_strict(a, a_tuple);
}

DualGraph single_edge_graph(std::optional<int> fibre_dim) {
    return DualGraph({{"Y1", {}}, {"Y2", {}}}, {{"D", "Y1", "Y2"}}, fibre_dim);
}

Configuration configuration_from_support(DualGraph g, const EdgeId& edge, const AVector& a,
                                         const SupportVector& v) {
    if (static_cast<int>(v.v.size()) != a.r() + 1)
        throw LengthMismatchError("support vector has wrong number of levels");
    std::vector<ConfigPoint> points;
    for (int i = 0; i <= a.r(); ++i)
        if (v.v[i] > 0)
            points.push_back({PointPosition::smooth(a, edge, a.label_of_level(i)), v.v[i],
                              std::nullopt, std::nullopt});
    return Configuration(static_cast<int>(v.sum()), std::move(g), a, std::move(points));
}

AVector canonical_stabilizing_index(int n, const SupportVector& v) {
    for (std::size_t i = 1; i + 1 < v.v.size(); ++i)
        if (v.v[i] == 0)
            throw NotLWStableError("interior level " + std::to_string(i) +
                                   " is empty: support is not Li-Wu stable");
    try {
        return avector_from_support(n, v);
    } catch (const NotInBijectionRangeError& e) {
        throw NotLWStableError(e.what());
    }
}

}  // namespace expdeg
