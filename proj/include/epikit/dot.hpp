#pragma once

#include <string>
#include <string_view>

#include "epikit/action_model.hpp"
#include "epikit/dynamic_model.hpp"
#include "epikit/kripke.hpp"

namespace epikit {

// Graphviz export following the paper's figure conventions: one node per
// world labeled with its true atoms, one undirected edge per cross-world pair
// per agent with the agent labels merged ("a,b"), reflexive loops suppressed.
// Output is deterministic: nodes in model order, edges in index order.
std::string to_dot(const EpistemicModel& m, std::string_view name);

// Actions as nodes labeled with their preconditions.
std::string to_dot(const ActionModel& a);

// The base model plus one table node per agent listing f_j per ~_j class.
std::string to_dot(const DynamicModel& m, std::string_view name);

}  // namespace epikit
