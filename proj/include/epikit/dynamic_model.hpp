#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "epikit/action_model.hpp"
#include "epikit/kripke.hpp"
#include "epikit/partition.hpp"
#include "epikit/signature.hpp"

namespace epikit {

struct FEdge {
  std::string agent;
  std::string world;
  std::string performed;
  std::string confusable;
};

struct Violation {
  std::string kind;  // "C1" or "C2"
  std::string agent;
  std::string world_a;
  std::string world_b;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_text() const;
};

// An epistemic model extended with world-indexed action indistinguishability:
// for each agent j and world w, f_j(w) partitions the action set, expressing
// which actions j cannot tell apart when they happen at w.
//
// (C1) requires f_j to be constant on each ~_j class, so the partitions are
// stored once per class; the per-world accessors stay.
class DynamicModel {
public:
  DynamicModel(EpistemicModel base, Signature sig,
               std::vector<std::vector<Partition>> f_per_class);

  const EpistemicModel& base() const { return base_; }
  const Signature& sig() const { return sig_; }

  const Partition& f(int agent, int world) const;
  const Partition& f(std::string_view agent, std::string_view world) const;

  // (performed, confusable) in f_agent(world)?
  bool xi_holds(std::string_view agent, std::string_view performed, std::string_view confusable,
                int world) const;

  // Per-world expansion of f for one agent; used by validation and export.
  std::vector<Partition> f_per_world(int agent) const;

private:
  EpistemicModel base_;
  Signature sig_;
  std::vector<std::vector<Partition>> f_per_class_;  // [agent][base block] -> partition of Sigma
};

// Per-world f data (one partition of the signature's actions per agent per
// world); the raw form that C1 validation runs against.
using PerWorldF = std::vector<std::vector<Partition>>;  // [agent][world]

// Reports every C1/C2 violation in the raw assignment with witnesses.
ValidationReport validate_f(const EpistemicModel& base, const Signature& sig,
                            const PerWorldF& f);

// Re-expands a built model and re-runs the same checks.
ValidationReport validate(const DynamicModel& m);

// Builds f_j(w) as the closure of the pairs listed for (j, w); worlds without
// listed pairs get the identity partition. Throws C1Violation on breach
// rather than repairing.
DynamicModel build_dynamic_model(EpistemicModel base, const std::vector<FEdge>& f_edges,
                                 Signature sig);

// Same, from already-closed per-world partitions.
DynamicModel build_dynamic_model_from_partitions(EpistemicModel base, Signature sig,
                                                 const PerWorldF& f);

// The updated model M+: pairs (w,s) with w |= Pre(s); (w,s) ~+_j (w',s') iff
// w ~_j w' and (s,s') in f_j(w); f+_j(w,s) = f_j(w); valuation lifted. The
// relation ~+_j is built pair-by-pair from that definition and checked to be
// an equivalence before conversion, and the result is validated again.
DynamicModel update_plus(const DynamicModel& m);

// Action-model update as a special case: f_j is constant at A's partition.
DynamicModel embed_action_model(const EpistemicModel& m, const ActionModel& a,
                                const Signature& sig);

const EpistemicModel& epistemic_part(const DynamicModel& m);

// Text table of f per agent and ~_j class, e.g. "f_a:\n  {w0,w1}: {sp,snp}".
std::string render_f_table(const DynamicModel& m);

}  // namespace epikit
