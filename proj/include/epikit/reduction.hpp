#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "epikit/dynamic_model.hpp"
#include "epikit/formula.hpp"
#include "epikit/signature.hpp"

namespace epikit {

inline constexpr long kDefaultTranslateFuel = 1'000'000;

// The reduction translation t: L_DL+ -> L_EL+. Clauses:
//   t(p) = p, t(xi) = xi, homomorphic on !, &, K;
//   t([s]p)      = pre_s -> p
//   t([s]xi)     = pre_s -> xi
//   t([s]!f)     = pre_s -> !t([s]f)
//   t([s](f&g))  = t([s]f) & t([s]g)
//   t([s]K_a f)  = pre_s -> AND_{s' in Sigma} (xi(a,s,s') -> K_a t([s']f))
//   t([s][s']f)  = t([s] t([s']f))
// The fuel counter bounds the number of recursive steps; exhausting it means
// a non-terminating clause combination, which the measures (d, w) rule out.
FormulaRef translate(const FormulaRef& phi, const Signature& sig,
                     long fuel = kDefaultTranslateFuel);

// Metavariable assignment for axiom schemas. Unused members may stay empty.
struct AxiomBindings {
  FormulaRef phi;
  FormulaRef psi;
  std::string agent;
  std::string action;
  std::string action2;
  std::string action3;
  std::string prop;
};

// Schema ids: "1".."5" (propositional tautology shape and S5), "6a".."6c"
// (xi is an equivalence), "7a" (xi -> K xi), "7b" (the derived !xi -> K !xi),
// "10a".."10e" (action axioms), and "control" (the deliberately unsound
// commutation [s]K_a f <-> K_a [s]f used as a fuzzing control).
FormulaRef instantiate_axiom(std::string_view id, const AxiomBindings& bindings,
                             const Signature& sig);

// Every sound schema id, in fuzzing order.
const std::vector<std::string>& axiom_schema_ids();
inline constexpr std::string_view kControlSchemaId = "control";

// Uniform random set partition of {0..n-1} (each partition equally likely).
std::vector<int> random_set_partition(std::mt19937_64& rng, int n);

struct RandomModelParams {
  int world_count = 4;
  int agent_count = 2;
  int prop_count = 2;
  std::uint64_t seed = 0;
};

// Deterministic per seed. Uses the first agent_count agents and prop_count
// props of the signature and its full action set; per agent a uniform
// partition of the worlds, per agent and class a uniform partition of the
// actions (so (C1)/(C2) hold by construction), and a uniform valuation.
DynamicModel random_dynamic_model(const RandomModelParams& params, const Signature& sig);

EpistemicModel random_epistemic_model(const RandomModelParams& params, const Signature& sig);

// Random action model over the signature's full action set.
ActionModel random_action_model(std::string name, const Signature& sig, std::uint64_t seed);

// Random formula of bounded connective depth in the given fragment
// (el, el_plus, dl, or dl_plus).
FormulaRef random_formula(std::mt19937_64& rng, const Signature& sig, int depth, Fragment frag);

struct FuzzParams {
  int world_count = 4;
  int agent_count = 2;
  int prop_count = 2;
  int action_count = 2;
  int formula_depth = 3;
};

struct FuzzFailure {
  std::string schema;
  std::uint64_t seed;
  std::string world;
  std::string formula;
};

struct FuzzReport {
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<FuzzFailure> failures;

  bool ok() const { return failures.empty(); }
  // One line per failure: "schema=<id> seed=<n> world=<w> formula=<rendered>".
  std::string to_text() const;
};

// Per trial: a fresh random signature and dynamic model, then every schema is
// instantiated with random bindings (subformulas of bounded depth) and checked
// for validity; counterexamples are recorded with a witness world.
FuzzReport soundness_fuzz(const std::vector<std::string>& schemas, int trials,
                          const FuzzParams& params, std::uint64_t seed);

// truth_set(phi) == truth_set(t(phi)) in the given model.
bool check_translation_equivalence(const FormulaRef& phi, const DynamicModel& model);

}  // namespace epikit
