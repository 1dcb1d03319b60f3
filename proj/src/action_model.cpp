#include "epikit/action_model.hpp"

#include <algorithm>
#include <set>

#include "epikit/errors.hpp"
#include "epikit/semantics.hpp"

namespace epikit {

ActionModel::ActionModel(std::string name, std::vector<std::string> actions,
                         std::vector<std::string> agents, std::vector<Partition> partitions,
                         std::map<std::string, FormulaRef> pre)
    : name_(std::move(name)),
      actions_(std::move(actions)),
      agents_(std::move(agents)),
      partitions_(std::move(partitions)),
      pre_(std::move(pre)) {
  if (actions_.empty()) throw EmptyActionSet("action model '" + name_ + "' has no actions");
  if (partitions_.size() != agents_.size())
    throw ValidationError("one action partition per agent required");
  for (const auto& p : partitions_) {
    if (p.size() != action_count())
      throw ValidationError("action partition does not cover the action set");
  }
  for (const auto& a : actions_) {
    auto it = pre_.find(a);
    if (it == pre_.end() || it->second == nullptr)
      throw ValidationError("action '" + a + "' has no precondition");
    if (!in_fragment(*it->second, Fragment::el))
      throw ValidationError("precondition of '" + a + "' is not in L_EL");
  }
}

int ActionModel::action_index(std::string_view name) const {
  auto it = std::find(actions_.begin(), actions_.end(), name);
  if (it == actions_.end()) throw UnknownAction(std::string(name));
  return static_cast<int>(it - actions_.begin());
}

bool ActionModel::has_action(std::string_view name) const {
  return std::find(actions_.begin(), actions_.end(), name) != actions_.end();
}

int ActionModel::agent_index(std::string_view name) const {
  auto it = std::find(agents_.begin(), agents_.end(), name);
  if (it == agents_.end()) throw UnknownIdentifier(std::string(name), "agent");
  return static_cast<int>(it - agents_.begin());
}

const Partition& ActionModel::partition(std::string_view agent) const {
  return partitions_[agent_index(agent)];
}

const FormulaRef& ActionModel::precondition(std::string_view action) const {
  auto it = pre_.find(std::string(action));
  if (it == pre_.end()) throw UnknownAction(std::string(action));
  return it->second;
}

ActionModel build_action_model(std::string name, const std::vector<std::string>& actions,
                               const std::vector<ActionEdge>& edges, const Signature& sig) {
  if (actions.empty()) throw EmptyActionSet("action model '" + name + "' has no actions");

  std::map<std::string, int, std::less<>> index;
  for (int i = 0; i < static_cast<int>(actions.size()); ++i) {
    if (!sig.has_action(actions[i])) throw UnknownAction(actions[i]);
    if (!index.emplace(actions[i], i).second) throw NameCollision(actions[i]);
  }

  std::vector<std::vector<std::pair<int, int>>> pairs(sig.agents.size());
  for (const auto& e : edges) {
    auto a = std::find(sig.agents.begin(), sig.agents.end(), e.agent);
    if (a == sig.agents.end()) throw UnknownIdentifier(e.agent, "agent");
    auto from = index.find(e.from);
    if (from == index.end()) throw UnknownAction(e.from);
    auto to = index.find(e.to);
    if (to == index.end()) throw UnknownAction(e.to);
    pairs[a - sig.agents.begin()].push_back({from->second, to->second});
  }

  std::vector<Partition> partitions;
  partitions.reserve(sig.agents.size());
  for (std::size_t j = 0; j < sig.agents.size(); ++j)
    partitions.push_back(Partition::from_pairs(static_cast<int>(actions.size()), pairs[j]));

  std::map<std::string, FormulaRef> pre;
  for (const auto& a : actions) pre.emplace(a, sig.precondition(a));

  return ActionModel(std::move(name), actions, sig.agents, std::move(partitions), std::move(pre));
}

std::string product_world_name(std::string_view world, std::string_view action) {
  std::string out = "(";
  out += world;
  out += ",";
  out += action;
  out += ")";
  return out;
}

EpistemicModel product_update(const EpistemicModel& m, const ActionModel& a) {
  if (m.agents() != a.agents())
    throw ValidationError("product_update requires matching agent lists");

  EvalContext ctx(m);

  // Surviving pairs in world-major, action-minor order.
  std::vector<std::pair<int, int>> pairs;
  for (int w = 0; w < m.world_count(); ++w) {
    for (int s = 0; s < a.action_count(); ++s) {
      if (ctx.eval(w, a.precondition(a.actions()[s]))) pairs.push_back({w, s});
    }
  }
  if (pairs.empty()) throw EmptyProduct("no (world, action) pair satisfies its precondition");

  std::vector<std::string> worlds;
  worlds.reserve(pairs.size());
  for (const auto& [w, s] : pairs)
    worlds.push_back(product_world_name(m.worlds()[w], a.actions()[s]));

  std::vector<Partition> partitions;
  for (std::size_t j = 0; j < m.agents().size(); ++j) {
    const Partition& pw = m.partition(static_cast<int>(j));
    const Partition& pa = a.partition(static_cast<int>(j));
    std::vector<int> raw;
    raw.reserve(pairs.size());
    for (const auto& [w, s] : pairs)
      raw.push_back(pw.block(w) * pa.block_count() + pa.block(s));
    partitions.push_back(Partition::from_block_of(std::move(raw)));
  }

  std::map<std::string, std::vector<bool>> val;
  for (const auto& [prop, mask] : m.valuation()) {
    std::vector<bool> lifted;
    lifted.reserve(pairs.size());
    for (const auto& [w, s] : pairs) lifted.push_back(mask[w]);
    val.emplace(prop, std::move(lifted));
  }

  return EpistemicModel(std::move(worlds), m.agents(), std::move(partitions), std::move(val));
}

ActionModel public_announcement_model(const FormulaRef& phi,
                                      const std::vector<std::string>& agents, std::string name,
                                      std::string action_name) {
  if (!in_fragment(*phi, Fragment::el))
    throw UnsupportedFragment("announcement precondition must be in L_EL");
  std::vector<Partition> partitions(agents.size(), Partition::single_block(1));
  std::map<std::string, FormulaRef> pre{{action_name, phi}};
  return ActionModel(std::move(name), {action_name}, agents, std::move(partitions),
                     std::move(pre));
}

ActionModel disjoint_union_actions(const std::vector<ActionModel>& models) {
  if (models.empty()) throw InvalidArgument("disjoint_union_actions needs at least one model");

  const std::vector<std::string>& agents = models.front().agents();
  for (const auto& m : models) {
    if (m.agents() != agents)
      throw ValidationError("disjoint_union_actions requires matching agent lists");
  }

  std::vector<std::string> actions;
  std::map<std::string, FormulaRef> pre;
  std::string name;
  std::set<std::string> seen;
  for (const auto& m : models) {
    if (!name.empty()) name += "+";
    name += m.name();
    for (const auto& act : m.actions()) {
      if (!seen.insert(act).second) throw NameCollision(act);
      actions.push_back(act);
      pre.emplace(act, m.precondition(act));
    }
  }

  std::vector<Partition> partitions;
  for (std::size_t j = 0; j < agents.size(); ++j) {
    std::vector<int> raw;
    int offset = 0;
    for (const auto& m : models) {
      const Partition& p = m.partition(static_cast<int>(j));
      for (int s = 0; s < m.action_count(); ++s) raw.push_back(offset + p.block(s));
      offset += p.block_count();
    }
    partitions.push_back(Partition::from_block_of(std::move(raw)));
  }

  return ActionModel(std::move(name), std::move(actions), agents, std::move(partitions),
                     std::move(pre));
}

}  // namespace epikit
