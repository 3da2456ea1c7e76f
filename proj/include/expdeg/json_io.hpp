#pragma once

#include <string>

#include <json.hpp>

#include "expdeg/quotient.hpp"
#include "expdeg/stability.hpp"

namespace expdeg {

// Insertion-ordered JSON so the emitted bytes are deterministic.
using Json = nlohmann::ordered_json;

// Schema violations raise InputError carrying a JSON-pointer path.

DualGraph parse_graph(const Json& j, const std::string& path = "");
Json graph_to_json(const DualGraph& g);

// A configuration document may carry its graph inline; when absent, a
// two-vertex one-edge graph is synthesized around the (unique) edge id the
// points mention ("D" when there are no points).
Configuration parse_configuration(const Json& j, const std::string& path = "");
Json configuration_to_json(const Configuration& c);

OneParamSubgroup parse_oneps(const Json& j, int n, const std::string& path = "");
Json oneps_to_json(const OneParamSubgroup& s);

Json verdict_to_json(const StabilityVerdict& v);
Json limit_to_json(const LimitOutcome& outcome);
Json position_to_json(const PointPosition& p);
Json expanded_to_json(const ExpandedGraph& eg);
Json node_map_to_json(const NodeMap& q);
Json strata_to_json(const std::vector<Stratum>& strata, const ClosureOrder& order);
Json dual_complex_to_json(const DualComplex& complex);
Json stabilizer_to_json(const StabilizerResult& result);
Json singularity_to_json(const SingularityReport& report);
Json envelope_to_json(const WeightEnvelope& env);

Json parse_text(const std::string& text);  // InputError on malformed JSON

}  // namespace expdeg
