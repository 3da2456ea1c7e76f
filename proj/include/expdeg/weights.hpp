#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "expdeg/expansion.hpp"

namespace expdeg {

class Configuration;  // defined in stability.hpp

// One-parameter subgroup of the torus in tau-coordinates: tau maps to
// (tau^{s_1}, ..., tau^{s_n}). The conventions s_0 = s_{n+1} = 0 are baked
// into every formula below.
struct OneParamSubgroup {
    std::vector<std::int64_t> s;

    int n() const { return static_cast<int>(s.size()); }
    bool is_trivial() const;
    // s_k with the boundary convention; k may be 0 or n+1.
    std::int64_t at(int k) const;
    friend bool operator==(const OneParamSubgroup&, const OneParamSubgroup&) = default;
};

// Exponents in sigma-coordinates (the diagonal torus of SL(n+1)):
// w_i = s_i - s_{i-1}, so the entries sum to zero.
struct SigmaExponents {
    std::vector<std::int64_t> w;
    friend bool operator==(const SigmaExponents&, const SigmaExponents&) = default;
};

SigmaExponents tau_to_sigma(const OneParamSubgroup& s);
OneParamSubgroup sigma_to_tau(const SigmaExponents& w);  // partial sums; needs sum w = 0

// Position of a cycle point on the fibre indexed by a, along the chain of one
// base edge. Smooth positions carry a component label in {0} u I (0 = source
// side, max I = target side); corners carry a consecutive label pair (i, j)
// in {0} u I with j in I.
class PointPosition {
public:
    static PointPosition smooth(AVector a, EdgeId edge, int label);
    static PointPosition corner(AVector a, EdgeId edge, int lower, int upper);

    bool is_corner() const { return corner_.has_value(); }
    int label() const;                    // smooth positions only
    std::pair<int, int> corner_pair() const;  // corner positions only
    int level() const;                    // chain position 0..r (smooth only)

    const AVector& avector() const { return a_; }
    const EdgeId& edge() const { return edge_; }

    friend bool operator==(const PointPosition&, const PointPosition&) = default;

private:
    PointPosition(AVector a, EdgeId edge) : a_(std::move(a)), edge_(std::move(edge)) {}
    AVector a_;
    EdgeId edge_;
    int label_ = 0;
    std::optional<std::pair<int, int>> corner_;
};

// Outcome of flowing a point to its limit under a one-parameter subgroup.
struct LimitOutcome {
    bool exists = false;
    std::vector<int> J;                        // vanishing set at the limit, J >= I
    std::optional<PointPosition> landing;      // position of the limit point
};

// True iff the limit over the fibre indexed by a exists: s_{i-1} <= s_i for
// every i outside I. Existence depends only on (I, s), never on the point.
bool limit_exists(const AVector& a, const OneParamSubgroup& s);

// The vanishing set at the limit: J = I u {i : s_{i-1} < s_i}.
std::vector<int> limit_index_set(const AVector& a, const OneParamSubgroup& s);

// Limit existence, landing fibre and landing position. Corners stay corners
// (the lower label is recomputed as the predecessor inside J); smooth points
// land smoothly when their monotone run contains a zero exponent and on a
// corner otherwise.
LimitOutcome limit(const PointPosition& p, const OneParamSubgroup& s);

// An integer weight or +infinity (the value assigned when no limit exists;
// such one-parameter subgroups never destabilize).
class Weight {
public:
    static Weight infinity() { return Weight(); }
    Weight(std::int64_t value) : finite_(true), value_(value) {}

    bool is_infinite() const { return !finite_; }
    std::int64_t value() const {
        if (!finite_) throw NoLimitError("weight is infinite");
        return value_;
    }
    friend bool operator==(const Weight&, const Weight&) = default;

private:
    Weight() = default;
    bool finite_ = false;
    std::int64_t value_ = 0;
};

// Hilbert-Mumford weight of a single point: +infinity without a limit, else
// the sum over k of -k s_k below the landing cut and (n+1-k) s_k above it.
Weight point_weight(const PointPosition& p, const OneParamSubgroup& s);

// The weight recipe for one basis vector e_i (chain level i, 0 <= i <= r)
// and one coordinate k in [n]:
//
//     -k s_k                                   for k <  a_i
//     ((n+1)/2 - k) s_k + (n+1)/2 |s_k|        for a_i <= k < a_{i+1}
//     (n+1-k) s_k                              for a_{i+1} <= k <= n
//
// evaluated by sign split, so the result is always an integer.
std::int64_t level_weight(const AVector& a, int level, int k, std::int64_t s_k);

// omega(v, s) = sum_k sum_i v_i * level_weight(a, i, k, s_k): the
// combinatorial weight of a smooth-support cycle with numerical support v.
// Linear in v and positively homogeneous of degree 1 in s.
std::int64_t support_weight(const AVector& a, const SupportVector& v, const OneParamSubgroup& s);

// Closed form of the k-th summand for an arbitrary monotone tuple b
// (1 = b_0 <= ... <= b_{r+1} = n+1), with j determined by a_j <= k < a_{j+1}:
//
//     s_k >= 0:  -|s_k| ((k+1-b_{j+1})(n+1) - k)
//     s_k <= 0:  +|s_k| ((k+1-b_j)(n+1) - k)
//
// Must agree with the recipe summed against v_b.
std::int64_t support_weight_closed_form(const AVector& a, const std::vector<int>& b, int k,
                                        std::int64_t s_k);

// Monotone tuple of partial sums 1 = b_0 <= ... <= b_{r+1} = n+1 attached to
// a support vector.
std::vector<int> monotone_tuple(int n, const SupportVector& v);

// Combinatorial weight of a whole configuration: +infinity when no limit
// exists, otherwise the multiplicity-weighted sum of point weights. Agrees
// with support_weight on smooth-support configurations.
Weight cycle_weight(const Configuration& c, const OneParamSubgroup& s);

}  // namespace expdeg
