#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expdeg/rational.hpp"
#include "expdeg/weights.hpp"

namespace expdeg {

// One point group of a degree-n cycle: a position on the expanded fibre, a
// multiplicity, and (optionally) the base point on the double locus plus the
// exact fiber coordinate in the ruling. Base point and coordinate never
// influence stability; they feed the stabilizer computation.
struct ConfigPoint {
    PointPosition position;
    std::int64_t multiplicity = 1;
    std::optional<std::string> base_point;
    std::optional<Rational> fiber;
};

// Degree-n cycle data on a fibre of the expanded family. The index tuple is
// absent exactly for cycles over the open part of the base (generic fibre),
// where no positional bookkeeping applies.
class Configuration {
public:
    Configuration(int n, DualGraph graph, AVector a, std::vector<ConfigPoint> points);
    static Configuration generic(int n, DualGraph graph);

    int n() const { return n_; }
    bool is_generic() const { return !a_.has_value(); }
    const AVector& avector() const;
    const DualGraph& graph() const { return graph_; }
    const std::vector<ConfigPoint>& points() const { return points_; }

    bool has_smooth_support() const;

private:
    Configuration(int n, DualGraph graph) : n_(n), graph_(std::move(graph)) {}
    int n_;
    DualGraph graph_;
    std::optional<AVector> a_;
    std::vector<ConfigPoint> points_;
};

enum class Stability { Stable, Unstable };

struct StabilityVerdict {
    Stability status = Stability::Stable;
    std::optional<OneParamSubgroup> witness;       // present iff Unstable
    std::optional<std::int64_t> witness_weight;    // cycle weight of the witness, < 0
    std::int64_t ell_threshold = 0;                // the concrete ell used
};

// Interval guaranteed to contain the full Hilbert-Mumford weight: the cycle
// part ell * mu_c plus the scheme-structure part, bounded by 2n^2 sum |s_i|.
struct WeightEnvelope {
    std::int64_t center = 0;
    std::int64_t radius = 0;
    std::int64_t lower() const { return center - radius; }
    std::int64_t upper() const { return center + radius; }
    bool sign_determined() const { return lower() > 0 || upper() < 0; }
};

// Smallest integer validating the dominance argument (the proofs only need
// ell > 2n^2).
constexpr std::int64_t default_ell(int n) { return 2 * std::int64_t{n} * n + 1; }

// Default sweep radius for the brute-force oracle.
constexpr std::int64_t default_box(int n) { return n + 1; }

// Per-level multiplicity vector of a smooth-support cycle, aggregated across
// all edges and both black sides. Throws NonSmoothSupportError.
SupportVector numerical_support(const Configuration& c);

// Full stability decision: a smooth-support cycle is stable iff its numerical
// support equals the canonical one; everything else is unstable and ships a
// verified witness. There are no strictly semistable cycles. Requires a
// bipartitely oriented graph (NotBipartiteError).
StabilityVerdict git_stable(const Configuration& c);

// Explicit destabilizing one-parameter subgroup, built from the mismatch
// between the actual and the canonical support (ascending ramp when
// a_{j+1} > b_{j+1}, descending ramp when b_j > a_j; non-smooth cycles are
// first dominated by one of two smooth comparison supports). The magnitude d
// starts at 1 and doubles until the cycle weight is verified negative.
// Throws IsStableError on stable input.
OneParamSubgroup destabilizing_witness(const Configuration& c);

// Brute-force sweep over the box [-S, S]^n.
struct OracleScan {
    bool any_admissible = false;          // some nonzero s with existing limit
    std::int64_t min_weight = 0;          // minimum cycle weight over those
    OneParamSubgroup argmin;              // first subgroup attaining it
};
OracleScan oracle_scan(const Configuration& c, std::int64_t box_radius);

// Independent stability oracle: true iff every nonzero s in the box whose
// limit exists has strictly positive cycle weight.
bool oracle_stable(const Configuration& c, std::int64_t box_radius);
bool oracle_stable(const Configuration& c);  // box radius n+1

// Li-Wu stability: smooth support and every interior level 1..r-1 occupied
// (aggregated across edges).
bool lw_stable(const Configuration& c);

// Envelope for the full weight at a given ell. Throws NoLimitError.
WeightEnvelope weight_envelope(const Configuration& c, const OneParamSubgroup& s,
                               std::int64_t ell);

// The two inequality families
//     (k+1-b_{j+1})(n+1) - k <= 0      and      (k+1-b_j)(n+1) - k >= 0
// over all j and a_j <= k < a_{j+1}.
bool forcing_inequalities_hold(const AVector& a, const std::vector<int>& b);

// Confirms, by enumerating all monotone tuples b, that the inequality
// families hold only for b = a, and strictly there.
bool verify_forcing_lemma(int n, int r, const AVector& a);

// All monotone tuples b for given (n, r), i.e. all support vectors.
std::vector<SupportVector> all_support_vectors(int n, int r);

// All index tuples a over n with exactly r interior entries.
std::vector<AVector> all_avectors(int n, int r);

// The unique index tuple stabilizing a Li-Wu stable support: the partial-sum
// preimage of v. Throws NotLWStableError when an interior level is empty.
AVector canonical_stabilizing_index(int n, const SupportVector& v);

// The two-vertex one-edge graph Y1 -> Y2 (edge id "D").
DualGraph single_edge_graph(std::optional<int> fibre_dim = std::nullopt);

// Smooth-support configuration on one edge of g: one point of multiplicity
// v_i at every occupied level i.
Configuration configuration_from_support(DualGraph g, const EdgeId& edge, const AVector& a,
                                         const SupportVector& v);

}  // namespace expdeg
