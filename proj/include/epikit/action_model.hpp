#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "epikit/formula.hpp"
#include "epikit/kripke.hpp"
#include "epikit/partition.hpp"
#include "epikit/signature.hpp"

namespace epikit {

struct ActionEdge {
  std::string agent;
  std::string from;
  std::string to;
};

// A finite set of epistemic actions with per-agent indistinguishability
// partitions and L_EL preconditions. Built from a signature (inheriting its
// preconditions) or standalone for public announcements.
class ActionModel {
public:
  ActionModel(std::string name, std::vector<std::string> actions,
              std::vector<std::string> agents, std::vector<Partition> partitions,
              std::map<std::string, FormulaRef> pre);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& actions() const { return actions_; }
  const std::vector<std::string>& agents() const { return agents_; }
  int action_count() const { return static_cast<int>(actions_.size()); }

  int action_index(std::string_view name) const;  // throws UnknownAction
  bool has_action(std::string_view name) const;
  int agent_index(std::string_view name) const;  // throws UnknownIdentifier

  const Partition& partition(int agent) const { return partitions_[agent]; }
  const Partition& partition(std::string_view agent) const;

  const FormulaRef& precondition(std::string_view action) const;
  const std::map<std::string, FormulaRef>& preconditions() const { return pre_; }

private:
  std::string name_;
  std::vector<std::string> actions_;
  std::vector<std::string> agents_;
  std::vector<Partition> partitions_;
  std::map<std::string, FormulaRef> pre_;
};

// Closes the given edges per agent into partitions; actions and preconditions
// come from the signature.
ActionModel build_action_model(std::string name, const std::vector<std::string>& actions,
                               const std::vector<ActionEdge>& edges, const Signature& sig);

// Name of the product world for (world, action): "(w,s)".
std::string product_world_name(std::string_view world, std::string_view action);

// The restricted product M^A: pairs (w,s) with (M,w) |= Pre(s), indistinguishable
// for an agent iff both components are, valuation lifted from the base world.
EpistemicModel product_update(const EpistemicModel& m, const ActionModel& a);

// One action named `action_name` with precondition phi; every agent's
// partition is the singleton. Product update with it is bisimilar to
// restriction to the phi-worlds.
ActionModel public_announcement_model(const FormulaRef& phi,
                                      const std::vector<std::string>& agents,
                                      std::string name = "pub",
                                      std::string action_name = "announce");

// Union of actions, partitions, and preconditions; cross-model actions are
// never related. Action names must already be distinct.
ActionModel disjoint_union_actions(const std::vector<ActionModel>& models);

}  // namespace epikit
