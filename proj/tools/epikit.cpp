#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epikit/dot.hpp"
#include "epikit/errors.hpp"
#include "epikit/parser.hpp"
#include "epikit/reduction.hpp"
#include "epikit/scenario.hpp"
#include "epikit/semantics.hpp"

namespace {

// A scenario argument is a file path or the name of a built-in fixture.
epikit::Scenario resolve_scenario(const std::string& ref) {
  if (std::filesystem::exists(ref)) return epikit::load_scenario(ref);
  if (const std::string* text = epikit::find_builtin_fixture(ref))
    return epikit::load_scenario_text(*text, ref);
  throw epikit::IoError("'" + ref + "' is neither a file nor a built-in fixture");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw epikit::IoError("cannot open '" + path + "' for writing");
  out << content;
}

int cmd_check(const std::string& scenario_ref, bool json) {
  epikit::Scenario scenario = resolve_scenario(scenario_ref);
  std::vector<epikit::CheckResult> results = epikit::run_checks(scenario);
  std::cout << (json ? epikit::results_to_json(scenario, results)
                     : epikit::results_to_text(scenario, results));
  return epikit::all_passed(results) ? 0 : 1;
}

int cmd_dot(const std::string& scenario_ref, const std::string& model, const std::string& out) {
  epikit::Scenario scenario = resolve_scenario(scenario_ref);
  std::string dot;
  if (const epikit::DynamicModel* d = scenario.find_dynamic(model)) {
    dot = epikit::to_dot(*d, model);
  } else if (const epikit::EpistemicModel* m = scenario.find_epistemic(model)) {
    dot = epikit::to_dot(*m, model);
  } else if (const epikit::ActionModel* a = scenario.find_action_model(model)) {
    dot = epikit::to_dot(*a);
  } else {
    std::string known;
    for (const auto& name : scenario.model_order) {
      if (!known.empty()) known += ", ";
      known += name;
    }
    throw epikit::ValidationError("no model named '" + model + "'; scenario defines: " + known);
  }
  write_output(out, dot);
  return 0;
}

int cmd_translate(const std::string& formula_text, const std::string& scenario_ref) {
  epikit::Scenario scenario = resolve_scenario(scenario_ref);
  epikit::FormulaRef phi = epikit::parse_formula(formula_text, scenario.sig);
  epikit::FormulaRef reduced = epikit::translate(phi, scenario.sig);
  std::cout << epikit::render_formula(reduced) << "\n";
  return 0;
}

int cmd_fuzz(const std::vector<std::string>& schemas, int trials, std::uint64_t seed,
             const epikit::FuzzParams& params) {
  std::vector<std::string> selected = schemas.empty() ? epikit::axiom_schema_ids() : schemas;
  epikit::FuzzReport report = epikit::soundness_fuzz(selected, trials, params, seed);
  std::cout << report.to_text();
  std::cout << "trials=" << report.trials << " schemas=" << selected.size()
            << " failures=" << report.failures.size() << "\n";
  return report.ok() ? 0 : 1;
}

int cmd_bisim(const std::string& scenario_ref, const std::string& m1, const std::string& w1,
              const std::string& m2, const std::string& w2) {
  epikit::Scenario scenario = resolve_scenario(scenario_ref);
  const bool result =
      epikit::bisimilar(scenario.epistemic_view(m1), w1, scenario.epistemic_view(m2), w2);
  std::cout << (result ? "true" : "false") << "\n";
  return 0;
}

int cmd_fixture(bool list, const std::string& name, const std::string& out) {
  if (list) {
    for (const auto& [fixture_name, text] : epikit::builtin_fixtures())
      std::cout << fixture_name << "\n";
    return 0;
  }
  const std::string* text = epikit::find_builtin_fixture(name);
  if (text == nullptr) throw epikit::UnknownIdentifier(name, "fixture");
  write_output(out, *text + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"epikit - epistemic and dynamic model checking"};
  app.require_subcommand(1);

  std::string scenario_ref, model, world, formula_text, out_path = "-";
  std::string m2, w2;
  bool json = false;
  bool list = false;
  int trials = 500;
  std::uint64_t seed = 1;
  std::vector<std::string> schemas;
  epikit::FuzzParams fuzz_params;

  CLI::App* check = app.add_subcommand("check", "run a scenario's checks");
  check->add_option("scenario", scenario_ref, "scenario file or built-in fixture name")
      ->required();
  check->add_flag("--json", json, "machine-readable results");

  CLI::App* dot = app.add_subcommand("dot", "export a model as Graphviz DOT");
  dot->add_option("scenario", scenario_ref)->required();
  dot->add_option("model", model, "model name within the scenario")->required();
  dot->add_option("-o,--output", out_path, "output file ('-' for stdout)");

  CLI::App* translate = app.add_subcommand("translate", "reduce an L_DL+ formula to L_EL+");
  translate->add_option("formula", formula_text)->required();
  translate->add_option("--sig", scenario_ref, "scenario providing the signature")->required();

  CLI::App* fuzz = app.add_subcommand("fuzz", "fuzz axiom schemas for validity");
  fuzz->add_option("--trials", trials, "number of trials")->capture_default_str();
  fuzz->add_option("--seed", seed, "base seed")->capture_default_str();
  fuzz->add_option("--schemas", schemas, "schema ids (default: all sound schemas)")
      ->delimiter(',');
  fuzz->add_option("--worlds", fuzz_params.world_count)->capture_default_str();
  fuzz->add_option("--agents", fuzz_params.agent_count)->capture_default_str();
  fuzz->add_option("--props", fuzz_params.prop_count)->capture_default_str();
  fuzz->add_option("--actions", fuzz_params.action_count)->capture_default_str();

  CLI::App* bisim = app.add_subcommand("bisim", "check bisimilarity of two pointed models");
  bisim->add_option("scenario", scenario_ref)->required();
  bisim->add_option("m1", model)->required();
  bisim->add_option("w1", world)->required();
  bisim->add_option("m2", m2)->required();
  bisim->add_option("w2", w2)->required();

  CLI::App* fixture = app.add_subcommand("fixture", "print a built-in fixture");
  fixture->add_flag("--list", list, "list fixture names");
  fixture->add_option("name", model, "fixture name");
  fixture->add_option("-o,--output", out_path, "output file ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(scenario_ref, json);
    if (dot->parsed()) return cmd_dot(scenario_ref, model, out_path);
    if (translate->parsed()) return cmd_translate(formula_text, scenario_ref);
    if (fuzz->parsed()) return cmd_fuzz(schemas, trials, seed, fuzz_params);
    if (bisim->parsed()) return cmd_bisim(scenario_ref, model, world, m2, w2);
    if (fixture->parsed()) {
      if (!list && model.empty())
        throw epikit::InvalidArgument("fixture needs a name or --list");
      return cmd_fixture(list, model, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
