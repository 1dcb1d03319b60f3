#include "epikit/signature.hpp"

#include <algorithm>
#include <set>

#include "epikit/errors.hpp"

namespace epikit {

namespace {

bool contains(const std::vector<std::string>& xs, std::string_view name) {
  return std::find(xs.begin(), xs.end(), name) != xs.end();
}

}  // namespace

bool Signature::has_agent(std::string_view name) const { return contains(agents, name); }
bool Signature::has_prop(std::string_view name) const { return contains(props, name); }
bool Signature::has_action(std::string_view name) const { return contains(actions, name); }

int Signature::action_index(std::string_view name) const {
  auto it = std::find(actions.begin(), actions.end(), name);
  if (it == actions.end()) throw UnknownAction(std::string(name));
  return static_cast<int>(it - actions.begin());
}

const FormulaRef& Signature::precondition(std::string_view action) const {
  auto it = pre.find(std::string(action));
  if (it == pre.end()) throw UnknownAction(std::string(action));
  return it->second;
}

void Signature::validate() const {
  auto check_unique = [](const std::vector<std::string>& xs, const char* kind) {
    std::set<std::string> seen;
    for (const auto& x : xs) {
      if (x.empty()) throw ValidationError(std::string("empty ") + kind + " name");
      if (!seen.insert(x).second) throw NameCollision(x);
    }
  };
  check_unique(agents, "agent");
  check_unique(props, "prop");
  check_unique(actions, "action");
  if (agents.empty()) throw ValidationError("signature declares no agents");
  for (const auto& a : actions) {
    auto it = pre.find(a);
    if (it == pre.end() || it->second == nullptr)
      throw ValidationError("action '" + a + "' has no precondition");
    if (!in_fragment(*it->second, Fragment::el))
      throw ValidationError("precondition of '" + a + "' is not in L_EL");
  }
}

Signature Signature::narrowed_to(const std::vector<std::string>& subset) const {
  Signature out;
  out.agents = agents;
  out.props = props;
  for (const auto& a : actions) {
    if (std::find(subset.begin(), subset.end(), a) == subset.end()) continue;
    out.actions.push_back(a);
    out.pre.emplace(a, pre.at(a));
  }
  for (const auto& a : subset)
    if (!has_action(a)) throw UnknownAction(a);
  return out;
}

}  // namespace epikit
