#pragma once

#include <array>
#include <chrono>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "epikit/action_model.hpp"
#include "epikit/dynamic_model.hpp"
#include "epikit/kripke.hpp"
#include "epikit/signature.hpp"

namespace epikit {

// A named assertion against one of the scenario's models.
struct Check {
  enum class Kind {
    formula_at_world,  // eval at a world, compare to boolean
    formula_valid,     // validity over all worlds, compare to boolean
    validate_report,   // validate a dynamic model, expect an empty report
    bisim,             // bisimilarity of two pointed models
  };

  Kind kind;
  std::string model;
  std::string world;
  std::string formula_text;
  FormulaRef formula;
  std::array<std::string, 4> bisim_ref;  // m1, w1, m2, w2
  bool expect = true;

  std::string describe() const;
};

struct CheckResult {
  int index;
  std::string description;
  std::string expected;
  std::string actual;
  bool pass;
  std::chrono::microseconds elapsed{0};
};

// A declarative binding of a signature, models (including derived ones,
// materialized at load time), and named checks.
struct Scenario {
  std::string name;
  Signature sig;
  std::map<std::string, EpistemicModel> epistemic;
  std::map<std::string, ActionModel> action_models;
  std::map<std::string, DynamicModel> dynamic;
  std::vector<std::string> model_order;  // declaration order across all kinds
  std::vector<Check> checks;

  bool has_model(std::string_view name) const;
  const EpistemicModel* find_epistemic(std::string_view name) const;
  const DynamicModel* find_dynamic(std::string_view name) const;
  const ActionModel* find_action_model(std::string_view name) const;

  // The epistemic structure of a named model (base of a dynamic model).
  const EpistemicModel& epistemic_view(std::string_view name) const;
};

Scenario load_scenario(const std::string& path);
Scenario load_scenario_text(std::string_view text, std::string_view fallback_name = "scenario");

// Evaluates every check in declaration order. Evaluation errors become
// failed results carrying the diagnostic.
std::vector<CheckResult> run_checks(const Scenario& scenario);
bool all_passed(const std::vector<CheckResult>& results);

std::string results_to_text(const Scenario& scenario, const std::vector<CheckResult>& results);
// Byte-deterministic JSON (timings excluded).
std::string results_to_json(const Scenario& scenario, const std::vector<CheckResult>& results);

// The built-in fixture corpus, in order: example1, example3, example_adjusted,
// example_dynamic, example_8world.
const std::vector<std::pair<std::string, std::string>>& builtin_fixtures();
const std::string* find_builtin_fixture(std::string_view name);

}  // namespace epikit
