#pragma once

#include <string>
#include <vector>

#include "expdeg/expansion.hpp"
#include "expdeg/quotient.hpp"

namespace expdeg {

// Dual graph: black filled circles, labelled directed edges.
std::string graph_to_dot(const DualGraph& g);

// Expanded graph: black nodes filled, white nodes hollow, arrow labels
// are the indices a_i.
std::string expanded_to_dot(const ExpandedGraph& eg);

// Hasse diagram of the closure order on strata.
std::string closure_to_dot(const std::vector<Stratum>& strata, const ClosureOrder& order);

}  // namespace expdeg
