#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "epikit/formula.hpp"

namespace epikit {

// A scenario's vocabulary: the agent set G, the proposition set, and the
// action set Sigma with its precondition function Pre: Sigma -> L_EL.
struct Signature {
  std::vector<std::string> agents;
  std::vector<std::string> props;
  std::vector<std::string> actions;
  std::map<std::string, FormulaRef> pre;

  bool has_agent(std::string_view name) const;
  bool has_prop(std::string_view name) const;
  bool has_action(std::string_view name) const;
  int action_index(std::string_view name) const;  // throws UnknownAction

  const FormulaRef& precondition(std::string_view action) const;  // throws UnknownAction

  // Checks name uniqueness, totality of pre, and that every precondition is L_EL.
  void validate() const;

  // Copy of this signature with the action set narrowed to `subset`
  // (preserving declaration order) and pre restricted accordingly.
  Signature narrowed_to(const std::vector<std::string>& subset) const;
};

}  // namespace epikit
