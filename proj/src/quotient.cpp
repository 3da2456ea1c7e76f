#include "expdeg/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace expdeg {

namespace {

bool is_single_edge_graph(const DualGraph& g) {
    return g.vertices().size() == 2 && g.edges().size() == 1 &&
           g.edges()[0].source != g.edges()[0].target;
}

}  // namespace

std::vector<std::string> stratum_factors(const DualGraph& g, const AVector& a) {
    if (!is_single_edge_graph(g))
        throw UnsupportedGraphError("stratum factors are synthesized only for the "
                                    "two-vertex one-edge graph");
    const Edge& e = g.edges()[0];
    const SupportVector v = canonical_support(a);
    std::vector<std::string> factors;
    factors.push_back("Hilb^" + std::to_string(v.v[0]) + "(" + e.source + "*)");
    for (int i = 1; i < a.r(); ++i)
        factors.push_back("Hilb^" + std::to_string(v.v[i]) + "(Delta^" +
                          std::to_string(a.at(i)) + "*)");
    factors.push_back("Hilb^" + std::to_string(v.v[a.r()]) + "(" + e.target + "*)");
    return factors;
}

std::vector<Stratum> strata(const DualGraph& g, int n) {
    if (n < 1) throw InputError("degree n must be positive");
    const bool single_edge = is_single_edge_graph(g);

    std::vector<Stratum> out;
    for (int r = 1; r <= n + 1; ++r) {
        for (const AVector& a : all_avectors(n, r)) {
            Stratum st{a, {}, r - 1, std::nullopt};
            if (single_edge) {
                st.factors = stratum_factors(g, a);
                if (g.fibre_dim())
                    st.dimension = std::int64_t{*g.fibre_dim()} * n - (r - 1);
            }
            out.push_back(std::move(st));
        }
    }
    return out;
}

ClosureOrder closure_order(const std::vector<Stratum>& strata) {
    ClosureOrder order;
    order.count = strata.size();
    std::vector<std::set<int>> sets;
    sets.reserve(strata.size());
    for (const auto& st : strata) {
        const auto I = st.a.index_set();
        sets.emplace_back(I.begin(), I.end());
    }
    for (std::size_t p = 0; p < sets.size(); ++p)
        for (std::size_t q = 0; q < sets.size(); ++q) {
            if (p == q || sets[p].size() >= sets[q].size()) continue;
            if (std::includes(sets[q].begin(), sets[q].end(), sets[p].begin(), sets[p].end()))
                order.relations.push_back({p, q});
        }
    return order;
}

DualComplex dual_complex(int n) {
    if (n < 1) throw InputError("degree n must be positive");
    DualComplex complex;
    complex.n = n;
    for (int size = 1; size <= n + 1; ++size)
        for (const AVector& a : all_avectors(n, size))
            complex.faces.push_back(a.index_set());
    return complex;
}

std::vector<std::int64_t> DualComplex::f_vector() const {
    std::vector<std::int64_t> f(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& face : faces) ++f[face.size() - 1];
    return f;
}

std::int64_t DualComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    std::int64_t sign = 1;
    for (const auto count : f_vector()) {
        chi += sign * count;
        sign = -sign;
    }
    return chi;
}

StabilizerResult stabilizer(const Configuration& c) {
    StabilizerResult result;
    if (c.is_generic()) return result;

    for (const auto& pt : c.points())
        if (pt.multiplicity != 1)
            throw NonReducedError("stabilizer computation needs a reduced configuration");
    if (!c.has_smooth_support())
        throw NonSmoothSupportError("stabilizer computation needs smooth support");

    const AVector& a = c.avector();
    const int r = a.r();

    // Fiber-coordinate multisets, grouped by (level, edge, base point).
    // Points without a named base point sit at pairwise distinct generic
    // base points, so each forms its own group.
    std::map<int, std::vector<std::vector<Rational>>> groups_by_level;
    std::map<std::tuple<int, EdgeId, std::string>, std::vector<Rational>> named;
    for (const auto& pt : c.points()) {
        const int lvl = pt.position.level();
        if (lvl == 0 || lvl == r) continue;  // black sides: characters act trivially
        if (!pt.fiber)
            throw MissingFiberCoordinateError(
                "interior-level point lacks its fiber coordinate");
        if (pt.base_point)
            named[{lvl, pt.position.edge(), *pt.base_point}].push_back(*pt.fiber);
        else
            groups_by_level[lvl].push_back({*pt.fiber});
    }
    for (auto& [key, coords] : named) groups_by_level[std::get<0>(key)].push_back(coords);

    result.order = 1;
    for (int lvl = 1; lvl < r; ++lvl) {
        auto it = groups_by_level.find(lvl);
        if (it == groups_by_level.end() || it->second.empty()) {
            // unoccupied interior level: the character chi_lvl is unconstrained
            result.finite = false;
            result.order = 0;
            result.generators.clear();
            return result;
        }
        // chi must permute every group's multiset by scalar multiplication;
        // over Q only +-1 can, and -1 works iff every multiset is symmetric.
        bool minus_one_ok = true;
        for (const auto& group : it->second) {
            std::vector<Rational> sorted = group, negated;
            for (const auto& q : group) negated.push_back(-q);
            std::sort(sorted.begin(), sorted.end());
            std::sort(negated.begin(), negated.end());
            if (sorted != negated) {
                minus_one_ok = false;
                break;
            }
        }
        if (minus_one_ok) {
            result.order *= 2;
            std::vector<Rational> generator(static_cast<std::size_t>(r) - 1, Rational(1));
            generator[static_cast<std::size_t>(lvl) - 1] = Rational(-1);
            result.generators.push_back(std::move(generator));
        }
    }
    return result;
}

SingularityReport singularity_report(int n, int d) {
    if (n != 2)
        throw UnsupportedDegreeError("the singularity classification covers degree 2 only");
    if (d < 1) throw InputError("fibre dimension must be >= 1");
    SingularityReport report;
    report.type = "1/2(1,...,1)";
    report.ones = d + 2;
    report.model = "cone over the Veronese embedding of P^" + std::to_string(d + 1);
    report.locus = "order-2-stabilizer configurations U+V=0";
    return report;
}

}  // namespace expdeg
