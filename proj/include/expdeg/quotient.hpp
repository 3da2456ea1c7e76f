#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expdeg/stability.hpp"

namespace expdeg {

// One stratum of the central fibre of the quotient, indexed by the tuple a.
// For the two-component graph the locally closed piece is a torus quotient of
// Hilb^{v_0}(source°) x Hilb^{v_1}(Delta^{a_1}°) x ... x Hilb^{v_r}(target°)
// with v = v_a; its dimension is d n - (r-1) when the fibre dimension d is
// known. For other graphs only the index poset is emitted.
struct Stratum {
    AVector a;
    std::vector<std::string> factors;       // empty when not synthesized
    int torus_rank = 0;                     // r - 1
    std::optional<std::int64_t> dimension;  // d*n - (r-1) when available
};

// Factor list of one stratum; only the two-vertex one-edge graph is
// supported (UnsupportedGraphError otherwise).
std::vector<std::string> stratum_factors(const DualGraph& g, const AVector& a);

// One stratum per nonempty I, ordered by (|I|, lexicographic).
std::vector<Stratum> strata(const DualGraph& g, int n);

// Closure incidences: stratum q lies in the closure of stratum p iff
// I_p is a subset of I_q.
struct ClosureOrder {
    std::size_t count = 0;
    // (p, q) with I_p a proper subset of I_q
    std::vector<std::pair<std::size_t, std::size_t>> relations;
};
ClosureOrder closure_order(const std::vector<Stratum>& strata);

// The dual complex of the central fibre for the two-component case: the full
// simplex on the vertex set [n+1], faces = all nonempty subsets.
struct DualComplex {
    int n = 0;
    std::vector<std::vector<int>> faces;  // by (size, lexicographic)
    std::vector<std::int64_t> f_vector() const;
    std::int64_t euler_characteristic() const;
};
DualComplex dual_complex(int n);

// Stabilizer of a reduced smooth-support configuration inside the
// base-fixing subtorus, acting on the fiber coordinate of an interior
// level-j point through the character chi_j. Over the rationals every
// constrained character is +-1; an unoccupied interior level leaves its
// character free and the stabilizer infinite.
struct StabilizerResult {
    bool finite = true;
    std::int64_t order = 1;                         // valid when finite
    std::vector<std::vector<Rational>> generators;  // tuples (chi_1..chi_{r-1})
};
StabilizerResult stabilizer(const Configuration& c);

// Transversal singularity of the degree-2 quotient along the double locus:
// type 1/2(1,...,1) with d+2 entries, the cone over the Veronese embedding
// of P^{d+1}, supported on the order-2-stabilizer locus U + V = 0.
struct SingularityReport {
    std::string type;
    int ones = 0;
    std::string model;
    std::string locus;
};
SingularityReport singularity_report(int n, int d);

}  // namespace expdeg
