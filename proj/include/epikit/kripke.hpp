#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epikit/formula.hpp"
#include "epikit/partition.hpp"

namespace epikit {

struct LabeledEdge {
  std::string agent;
  std::string from;
  std::string to;
};

// An S5 Kripke structure: a finite ordered world set, one indistinguishability
// partition per agent, and a valuation. Immutable after construction.
class EpistemicModel {
public:
  EpistemicModel(std::vector<std::string> worlds, std::vector<std::string> agents,
                 std::vector<Partition> partitions,
                 std::map<std::string, std::vector<bool>> valuation);

  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::vector<std::string>& agents() const { return agents_; }
  int world_count() const { return static_cast<int>(worlds_.size()); }

  int world_index(std::string_view name) const;  // throws UnknownWorld
  std::optional<int> find_world(std::string_view name) const;
  int agent_index(std::string_view name) const;  // throws UnknownIdentifier

  const Partition& partition(int agent) const { return partitions_[agent]; }
  const Partition& partition(std::string_view agent) const;

  bool has_prop(std::string_view prop) const;
  bool atom_true(std::string_view prop, int world) const;  // throws UnknownIdentifier
  const std::map<std::string, std::vector<bool>>& valuation() const { return valuation_; }

  // Structural checks: partition sizes, valuation sizes. Throws ValidationError.
  void check_invariants() const;

  bool operator==(const EpistemicModel& other) const;

private:
  std::vector<std::string> worlds_;
  std::vector<std::string> agents_;
  std::vector<Partition> partitions_;                     // aligned with agents_
  std::map<std::string, std::vector<bool>> valuation_;    // prop -> mask over worlds
  std::map<std::string, int, std::less<>> world_index_;
};

// Builds a model from labeled edges; each agent's relation is the
// reflexive-symmetric-transitive closure of its edges.
EpistemicModel build_epistemic_model(
    const std::vector<std::string>& worlds, const std::vector<std::string>& agents,
    const std::vector<LabeledEdge>& edges,
    const std::map<std::string, std::vector<std::string>>& valuation);

// Keeps exactly the marked worlds; partitions and valuation restrict.
// An S5 restriction is again S5, so no re-closure happens.
EpistemicModel restrict_to(const EpistemicModel& m, const std::vector<bool>& keep);

// Restriction to the worlds satisfying an L_EL formula.
EpistemicModel restrict(const EpistemicModel& m, const FormulaRef& phi);

EpistemicModel disjoint_union(const EpistemicModel& m1, const EpistemicModel& m2);

// Standard bisimilarity of pointed models, computed by partition refinement
// on the disjoint union. Atom agreement uses the union of both prop sets.
bool bisimilar(const EpistemicModel& m1, std::string_view w1, const EpistemicModel& m2,
               std::string_view w2);

}  // namespace epikit
