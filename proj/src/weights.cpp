#include "expdeg/weights.hpp"

#include <algorithm>
#include <set>

#include "expdeg/stability.hpp"

namespace expdeg {

bool OneParamSubgroup::is_trivial() const {
    return std::all_of(s.begin(), s.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t OneParamSubgroup::at(int k) const {
    if (k <= 0 || k > n()) return 0;
    return s[static_cast<std::size_t>(k) - 1];
}

SigmaExponents tau_to_sigma(const OneParamSubgroup& s) {
    SigmaExponents out;
    for (int i = 1; i <= s.n() + 1; ++i) out.w.push_back(s.at(i) - s.at(i - 1));
    return out;
}

OneParamSubgroup sigma_to_tau(const SigmaExponents& w) {
    if (w.w.empty()) throw LengthMismatchError("sigma exponents must have n+1 entries");
    std::int64_t acc = 0;
    OneParamSubgroup out;
    for (std::size_t i = 0; i + 1 < w.w.size(); ++i) {
        acc += w.w[i];
        out.s.push_back(acc);
    }
    if (acc + w.w.back() != 0)
        throw LengthMismatchError("sigma exponents must sum to zero");
    return out;
}

PointPosition PointPosition::smooth(AVector a, EdgeId edge, int label) {
    if (label != 0 && !a.contains(label))
        throw OutOfRangeError("smooth label must lie in {0} u I");
    PointPosition p(std::move(a), std::move(edge));
    p.label_ = label;
    return p;
}

PointPosition PointPosition::corner(AVector a, EdgeId edge, int lower, int upper) {
    if (!a.contains(upper))
        throw OutOfRangeError("corner upper label must lie in I");
    const int lvl = a.level_of_label(upper);
    const int expected_lower = lvl == 1 ? 0 : a.at(lvl - 1);
    if (lower != expected_lower)
        throw OutOfRangeError("corner labels must be consecutive in {0} u I");
    PointPosition p(std::move(a), std::move(edge));
    p.corner_ = {lower, upper};
    return p;
}

int PointPosition::label() const {
    if (corner_) throw OutOfRangeError("corner position has no single label");
    return label_;
}

std::pair<int, int> PointPosition::corner_pair() const {
    if (!corner_) throw OutOfRangeError("smooth position has no corner pair");
    return *corner_;
}

int PointPosition::level() const { return a_.level_of_label(label()); }

bool limit_exists(const AVector& a, const OneParamSubgroup& s) {
    if (s.n() != a.n()) throw LengthMismatchError("one-parameter subgroup has wrong length");
    for (int i = 1; i <= a.n() + 1; ++i)
        if (!a.contains(i) && s.at(i - 1) > s.at(i)) return false;
    return true;
}

std::vector<int> limit_index_set(const AVector& a, const OneParamSubgroup& s) {
    std::set<int> J;
    for (int i : a.index_set()) J.insert(i);
    for (int i = 1; i <= a.n() + 1; ++i)
        if (s.at(i - 1) < s.at(i)) J.insert(i);
    return std::vector<int>(J.begin(), J.end());
}

namespace {

// Successor of a label in I u {n+2}.
int successor_in_I(const AVector& a, int label) {
    for (int j = 1; j <= a.r(); ++j)
        if (a.at(j) > label) return a.at(j);
    return a.n() + 2;
}

// Predecessor of `upper` in {0} u J.
int predecessor(const std::vector<int>& J, int upper) {
    int pred = 0;
    for (int j : J) {
        if (j >= upper) break;
        pred = j;
    }
    return pred;
}

// The landing cut of a smooth point: the run i <= k < j is monotone, split it
// as negatives [i, a), zeros [a, b), positives [b, j). Returns (a, b); the
// landing is the corner with upper label a when a == b, else the smooth
// component labelled a.
std::pair<int, int> landing_cut(const PointPosition& p, const OneParamSubgroup& s) {
    const AVector& a = p.avector();
    const int lo = p.label();
    const int hi = successor_in_I(a, lo);
    int first_zero = hi, first_pos = hi;
    for (int k = lo; k < hi; ++k) {
        const std::int64_t v = s.at(k);
        if (v == 0) { first_zero = std::min(first_zero, k); }
        if (v > 0) { first_pos = std::min(first_pos, k); }
    }
    return {std::min(first_zero, first_pos), first_pos};
}

}  // namespace

LimitOutcome limit(const PointPosition& p, const OneParamSubgroup& s) {
    const AVector& a = p.avector();
    if (!limit_exists(a, s)) return {};

    LimitOutcome out;
    out.exists = true;
    out.J = limit_index_set(a, s);
    AVector aJ = avector_from_set(a.n(), out.J);

    if (p.is_corner()) {
        const int upper = p.corner_pair().second;
        out.landing = PointPosition::corner(std::move(aJ), p.edge(),
                                            predecessor(out.J, upper), upper);
        return out;
    }

    const auto [cut_a, cut_b] = landing_cut(p, s);
    if (cut_a == cut_b) {
        // every exponent on the run is nonzero: the point flows into a corner
        out.landing = PointPosition::corner(std::move(aJ), p.edge(),
                                            predecessor(out.J, cut_a), cut_a);
    } else {
        out.landing = PointPosition::smooth(std::move(aJ), p.edge(), cut_a);
    }
    return out;
}

namespace {

std::int64_t weight_sum(int n, const OneParamSubgroup& s, int cut_a, int cut_b) {
    std::int64_t total = 0;
    for (int k = 1; k <= n; ++k) {
        if (k < cut_a)
            total += -std::int64_t{k} * s.at(k);
        else if (k >= cut_b)
            total += std::int64_t{n + 1 - k} * s.at(k);
    }
    return total;
}

}  // namespace

Weight point_weight(const PointPosition& p, const OneParamSubgroup& s) {
    const AVector& a = p.avector();
    if (!limit_exists(a, s)) return Weight::infinity();
    const int n = a.n();
    if (p.is_corner()) {
        const int j = p.corner_pair().second;
        return weight_sum(n, s, j, j);
    }
    const auto [cut_a, cut_b] = landing_cut(p, s);
    return weight_sum(n, s, cut_a, cut_b);
}

std::int64_t level_weight(const AVector& a, int level, int k, std::int64_t s_k) {
    if (level < 0 || level > a.r()) throw OutOfRangeError("level out of range");
    if (k < 1 || k > a.n()) throw OutOfRangeError("coordinate index out of range");
    const int n = a.n();
    if (k < a.at(level)) return -std::int64_t{k} * s_k;
    if (k < a.at(level + 1))
        return s_k >= 0 ? std::int64_t{n + 1 - k} * s_k : -std::int64_t{k} * s_k;
    return std::int64_t{n + 1 - k} * s_k;
}

std::int64_t support_weight(const AVector& a, const SupportVector& v, const OneParamSubgroup& s) {
    if (static_cast<int>(v.v.size()) != a.r() + 1)
        throw LengthMismatchError("support vector has wrong number of levels");
    if (s.n() != a.n()) throw LengthMismatchError("one-parameter subgroup has wrong length");
    std::int64_t total = 0;
    for (int k = 1; k <= a.n(); ++k) {
        const std::int64_t s_k = s.at(k);
        if (s_k == 0) continue;
        for (int i = 0; i <= a.r(); ++i)
            if (v.v[i] != 0) total += v.v[i] * level_weight(a, i, k, s_k);
    }
    return total;
}

std::int64_t support_weight_closed_form(const AVector& a, const std::vector<int>& b, int k,
                                        std::int64_t s_k) {
    const int r = a.r();
    const int n = a.n();
    if (static_cast<int>(b.size()) != r + 2)
        throw LengthMismatchError("monotone tuple has wrong length");
    if (b.front() != 1 || b.back() != n + 1)
        throw InputError("monotone tuple must start at 1 and end at n+1");
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (b[i] > b[i + 1]) throw InputError("tuple must be monotone");
    if (k < 1 || k > n) throw OutOfRangeError("coordinate index out of range");

    int j = 0;
    while (!(a.at(j) <= k && k < a.at(j + 1))) ++j;

    if (s_k >= 0)
        return -s_k * (std::int64_t{k + 1 - b[j + 1]} * (n + 1) - k);
    return -s_k * (std::int64_t{k + 1 - b[j]} * (n + 1) - k);
}

std::vector<int> monotone_tuple(int n, const SupportVector& v) {
    if (v.sum() != n) throw LengthMismatchError("support vector entries must sum to n");
    std::vector<int> b;
    int acc = 1;
    b.push_back(acc);
    for (const auto e : v.v) {
        acc += static_cast<int>(e);
        b.push_back(acc);
    }
    return b;
}

Weight cycle_weight(const Configuration& c, const OneParamSubgroup& s) {
    if (c.is_generic()) {
        // over the open part of the base no nontrivial subgroup has a limit
        return s.is_trivial() ? Weight(0) : Weight::infinity();
    }
    if (!limit_exists(c.avector(), s)) return Weight::infinity();
    std::int64_t total = 0;
    for (const auto& pt : c.points())
        total += pt.multiplicity * point_weight(pt.position, s).value();
    return Weight(total);
}

}  // namespace expdeg
