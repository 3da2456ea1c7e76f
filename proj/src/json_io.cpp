#include "expdeg/json_io.hpp"

#include <set>

namespace expdeg {

namespace {

const Json& require(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw InputError("expected an object", path);
    auto it = j.find(key);
    if (it == j.end()) throw InputError("missing field '" + key + "'", path);
    return *it;
}

std::string as_string(const Json& j, const std::string& path) {
    if (!j.is_string()) throw InputError("expected a string", path);
    return j.get<std::string>();
}

std::int64_t as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw InputError("expected an integer", path);
    return j.get<std::int64_t>();
}

const Json& as_array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw InputError("expected an array", path);
    return j;
}

}  // namespace

Json parse_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("malformed JSON");
    return j;
}

DualGraph parse_graph(const Json& j, const std::string& path) {
    std::vector<Vertex> vertices;
    const Json& jv = as_array(require(j, "vertices", path), path + "/vertices");
    for (std::size_t i = 0; i < jv.size(); ++i) {
        const std::string p = path + "/vertices/" + std::to_string(i);
        Vertex v;
        v.id = as_string(require(jv[i], "id", p), p + "/id");
        if (jv[i].contains("label")) v.label = as_string(jv[i]["label"], p + "/label");
        vertices.push_back(std::move(v));
    }
    std::vector<Edge> edges;
    const Json& je = as_array(require(j, "edges", path), path + "/edges");
    for (std::size_t i = 0; i < je.size(); ++i) {
        const std::string p = path + "/edges/" + std::to_string(i);
        Edge e;
        e.id = as_string(require(je[i], "id", p), p + "/id");
        e.source = as_string(require(je[i], "source", p), p + "/source");
        e.target = as_string(require(je[i], "target", p), p + "/target");
        edges.push_back(std::move(e));
    }
    std::optional<int> fibre_dim;
    if (j.contains("fibre_dim"))
        fibre_dim = static_cast<int>(as_int(j["fibre_dim"], path + "/fibre_dim"));
    try {
        return DualGraph(std::move(vertices), std::move(edges), fibre_dim);
    } catch (const InputError& e) {
        throw InputError(e.what(), path.empty() ? "/" : path);
    }
}

Json graph_to_json(const DualGraph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : g.vertices()) {
        Json jv{{"id", v.id}};
        if (v.label) jv["label"] = *v.label;
        j["vertices"].push_back(std::move(jv));
    }
    j["edges"] = Json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back({{"id", e.id}, {"source", e.source}, {"target", e.target}});
    if (g.fibre_dim()) j["fibre_dim"] = *g.fibre_dim();
    return j;
}

Configuration parse_configuration(const Json& j, const std::string& path) {
    const int n = static_cast<int>(as_int(require(j, "n", path), path + "/n"));
    if (n < 1) throw InputError("n must be positive", path + "/n");

    std::vector<int> I;
    const Json& ji = as_array(require(j, "I", path), path + "/I");
    for (std::size_t i = 0; i < ji.size(); ++i)
        I.push_back(static_cast<int>(as_int(ji[i], path + "/I/" + std::to_string(i))));

    const Json empty_points = Json::array();
    const Json& jp = j.contains("points")
                         ? as_array(j["points"], path + "/points")
                         : empty_points;

    std::optional<DualGraph> graph;
    if (j.contains("graph")) graph = parse_graph(j["graph"], path + "/graph");
    if (!graph) {
        std::set<std::string> edge_ids;
        for (const auto& pt : jp)
            if (pt.is_object() && pt.contains("edge") && pt["edge"].is_string())
                edge_ids.insert(pt["edge"].get<std::string>());
        if (edge_ids.size() > 1)
            throw InputError("points mention several edges; an explicit graph is required",
                             path + "/points");
        const std::string edge_id = edge_ids.empty() ? "D" : *edge_ids.begin();
        graph = DualGraph({{"Y1", {}}, {"Y2", {}}},
                          {{edge_id, "Y1", "Y2"}});
    }

    if (I.empty()) {
        if (!jp.empty())
            throw InputError("a generic-fibre configuration (empty I) carries no points",
                             path + "/points");
        return Configuration::generic(n, std::move(*graph));
    }

    AVector a = [&] {
        try {
            return avector_from_set(n, I);
        } catch (const Error& e) {
            throw InputError(e.what(), path + "/I");
        }
    }();

    std::vector<ConfigPoint> points;
    for (std::size_t i = 0; i < jp.size(); ++i) {
        const std::string p = path + "/points/" + std::to_string(i);
        const Json& jpt = jp[i];
        const std::string edge = as_string(require(jpt, "edge", p), p + "/edge");
        const bool has_level = jpt.is_object() && jpt.contains("level");
        const bool has_corner = jpt.is_object() && jpt.contains("corner");
        if (has_level == has_corner)
            throw InputError("each point needs exactly one of 'level' or 'corner'", p);
        if (has_corner) {
            const Json& jc = as_array(jpt["corner"], p + "/corner");
            if (jc.size() != 2)
                throw InputError("corner must have exactly two labels", p + "/corner");
        }
        try {
            ConfigPoint pt{
                has_level
                    ? PointPosition::smooth(a, edge,
                                            static_cast<int>(as_int(jpt["level"], p + "/level")))
                    : PointPosition::corner(
                          a, edge,
                          static_cast<int>(as_int(jpt["corner"][0], p + "/corner/0")),
                          static_cast<int>(as_int(jpt["corner"][1], p + "/corner/1"))),
                1, std::nullopt, std::nullopt};
            if (jpt.contains("mult")) pt.multiplicity = as_int(jpt["mult"], p + "/mult");
            if (jpt.contains("base")) pt.base_point = as_string(jpt["base"], p + "/base");
            if (jpt.contains("fiber")) {
                const Json& jf = jpt["fiber"];
                if (jf.is_string())
                    pt.fiber = Rational::parse(jf.get<std::string>());
                else
                    pt.fiber = Rational(as_int(jf, p + "/fiber"));
            }
            points.push_back(std::move(pt));
        } catch (const InputError&) {
            throw;
        } catch (const Error& e) {
            throw InputError(e.what(), p);
        }
    }

    try {
        return Configuration(n, std::move(*graph), std::move(a), std::move(points));
    } catch (const Error& e) {
        throw InputError(e.what(), path.empty() ? "/" : path);
    }
}

Json configuration_to_json(const Configuration& c) {
    Json j;
    j["n"] = c.n();
    j["I"] = c.is_generic() ? Json::array() : Json(c.avector().index_set());
    j["graph"] = graph_to_json(c.graph());
    if (!c.is_generic()) {
        j["points"] = Json::array();
        for (const auto& pt : c.points()) {
            Json jp;
            jp["edge"] = pt.position.edge();
            if (pt.position.is_corner()) {
                const auto [lo, hi] = pt.position.corner_pair();
                jp["corner"] = {lo, hi};
            } else {
                jp["level"] = pt.position.label();
            }
            jp["mult"] = pt.multiplicity;
            if (pt.base_point) jp["base"] = *pt.base_point;
            if (pt.fiber) jp["fiber"] = pt.fiber->str();
            j["points"].push_back(std::move(jp));
        }
    }
    return j;
}

OneParamSubgroup parse_oneps(const Json& j, int n, const std::string& path) {
    const Json& ja = as_array(j, path);
    OneParamSubgroup s;
    for (std::size_t i = 0; i < ja.size(); ++i)
        s.s.push_back(as_int(ja[i], path + "/" + std::to_string(i)));
    if (s.n() != n)
        throw InputError("one-parameter subgroup needs exactly " + std::to_string(n) +
                             " exponents",
                         path);
    return s;
}

Json oneps_to_json(const OneParamSubgroup& s) { return Json(s.s); }

Json verdict_to_json(const StabilityVerdict& v) {
    Json j;
    j["status"] = v.status == Stability::Stable ? "stable" : "unstable";
    if (v.witness) {
        j["witness"] = oneps_to_json(*v.witness);
        j["omega"] = *v.witness_weight;
    }
    j["ell"] = v.ell_threshold;
    return j;
}

Json position_to_json(const PointPosition& p) {
    Json j;
    j["edge"] = p.edge();
    if (p.is_corner()) {
        const auto [lo, hi] = p.corner_pair();
        j["corner"] = {lo, hi};
    } else {
        j["level"] = p.label();
    }
    return j;
}

Json limit_to_json(const LimitOutcome& outcome) {
    Json j;
    j["exists"] = outcome.exists;
    if (outcome.exists) {
        j["J"] = outcome.J;
        if (outcome.landing) j["landing"] = position_to_json(*outcome.landing);
    }
    return j;
}

namespace {

Json node_to_json(const ExpandedNode& node) {
    if (node.kind == ExpandedNode::Kind::Black) return Json{{"vertex", node.vertex}};
    return Json{{"edge", node.edge}, {"label", node.label}};
}

}  // namespace

Json expanded_to_json(const ExpandedGraph& eg) {
    Json j;
    j["n"] = eg.avector().n();
    j["I"] = eg.avector().index_set();
    j["black"] = Json::array();
    j["white"] = Json::array();
    for (const auto& node : eg.nodes()) {
        Json jn = node_to_json(node);
        jn["level"] = eg.level(node);
        (node.kind == ExpandedNode::Kind::Black ? j["black"] : j["white"]).push_back(jn);
    }
    j["arrows"] = Json::array();
    for (const auto& arrow : eg.arrows())
        j["arrows"].push_back({{"edge", arrow.edge},
                               {"label", arrow.label},
                               {"from", node_to_json(arrow.from)},
                               {"to", node_to_json(arrow.to)}});
    return j;
}

Json node_map_to_json(const NodeMap& q) {
    Json j = Json::array();
    for (const auto& [from, to] : q.pairs)
        j.push_back({{"from", node_to_json(from)}, {"to", node_to_json(to)}});
    return j;
}

Json strata_to_json(const std::vector<Stratum>& strata, const ClosureOrder& order) {
    Json j;
    j["strata"] = Json::array();
    for (const auto& st : strata) {
        Json js;
        js["I"] = st.a.index_set();
        js["a"] = st.a.entries();
        js["torus_rank"] = st.torus_rank;
        if (st.dimension) js["dimension"] = *st.dimension;
        if (!st.factors.empty()) js["factors"] = st.factors;
        j["strata"].push_back(std::move(js));
    }
    j["closure"] = Json::array();
    for (const auto& [p, q] : order.relations) j["closure"].push_back({p, q});
    return j;
}

Json dual_complex_to_json(const DualComplex& complex) {
    Json j;
    j["n"] = complex.n;
    j["f_vector"] = complex.f_vector();
    j["euler_characteristic"] = complex.euler_characteristic();
    j["faces"] = complex.faces;
    return j;
}

Json stabilizer_to_json(const StabilizerResult& result) {
    Json j;
    if (result.finite)
        j["order"] = result.order;
    else
        j["order"] = "infinite";
    j["generators"] = Json::array();
    for (const auto& gen : result.generators) {
        Json jg = Json::array();
        for (const auto& chi : gen) jg.push_back(chi.str());
        j["generators"].push_back(std::move(jg));
    }
    return j;
}

Json singularity_to_json(const SingularityReport& report) {
    return Json{{"type", report.type},
                {"ones", report.ones},
                {"model", report.model},
                {"locus", report.locus}};
}

Json envelope_to_json(const WeightEnvelope& env) {
    return Json{{"center", env.center},
                {"radius", env.radius},
                {"lower", env.lower()},
                {"upper", env.upper()},
                {"sign_determined", env.sign_determined()}};
}

}  // namespace expdeg
