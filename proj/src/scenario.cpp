#include "epikit/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "epikit/errors.hpp"
#include "epikit/parser.hpp"
#include "epikit/semantics.hpp"

namespace epikit {

namespace {

using Json = nlohmann::ordered_json;

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw ValidationError(what + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

EpistemicModel load_epistemic(const std::string& name, const Json& j, const Signature& sig) {
  if (!j.is_object()) throw ValidationError("epistemic model '" + name + "' must be an object");
  std::vector<std::string> worlds = string_list(j.at("worlds"), name + ".worlds");

  std::vector<LabeledEdge> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      std::vector<std::string> triple = string_list(e, name + ".edges entry");
      if (triple.size() != 3)
        throw ValidationError(name + ".edges entries must be [agent, world, world]");
      edges.push_back({triple[0], triple[1], triple[2]});
    }
  }

  // Every declared prop gets a mask so atoms always resolve.
  std::map<std::string, std::vector<std::string>> valuation;
  for (const auto& p : sig.props) valuation[p] = {};
  if (j.contains("val")) {
    for (const auto& [prop, v] : j.at("val").items()) {
      if (!sig.has_prop(prop)) throw UnknownIdentifier(prop, "prop");
      valuation[prop] = string_list(v, name + ".val." + prop);
    }
  }

  return build_epistemic_model(worlds, sig.agents, edges, valuation);
}

ActionModel load_action_model(const std::string& name, const Json& j, const Signature& sig) {
  if (!j.is_object()) throw ValidationError("action model '" + name + "' must be an object");
  std::vector<std::string> actions = string_list(j.at("actions"), name + ".actions");
  std::vector<ActionEdge> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      std::vector<std::string> triple = string_list(e, name + ".edges entry");
      if (triple.size() != 3)
        throw ValidationError(name + ".edges entries must be [agent, action, action]");
      edges.push_back({triple[0], triple[1], triple[2]});
    }
  }
  return build_action_model(name, actions, edges, sig);
}

DynamicModel load_dynamic(const std::string& name, const Json& j, const Scenario& scenario) {
  if (!j.is_object()) throw ValidationError("dynamic model '" + name + "' must be an object");
  const std::string base_name = j.at("base").get<std::string>();
  const EpistemicModel* base = scenario.find_epistemic(base_name);
  if (base == nullptr) throw UnknownIdentifier(base_name, "epistemic model");

  std::vector<std::string> actions =
      j.contains("actions") ? string_list(j.at("actions"), name + ".actions")
                            : scenario.sig.actions;
  Signature narrowed = scenario.sig.narrowed_to(actions);
  if (narrowed.actions.empty())
    throw ValidationError("dynamic model '" + name + "' has an empty action set");
  const int action_count = static_cast<int>(narrowed.actions.size());

  // f entries are tried in order per agent; the first entry whose guard holds
  // at a world provides that world's partition. Unmatched worlds default to
  // the identity partition. Guards are L_EL and evaluated on the base model.
  struct Entry {
    int agent;
    std::vector<bool> guard_mask;
    Partition partition;
  };
  std::vector<Entry> entries;
  EvalContext guard_ctx(*base);
  if (j.contains("f")) {
    for (const auto& e : j.at("f")) {
      Entry entry;
      const std::string agent = e.at("agent").get<std::string>();
      entry.agent = base->agent_index(agent);
      if (e.contains("guard")) {
        FormulaRef guard = parse_formula(e.at("guard").get<std::string>(), scenario.sig);
        if (!in_fragment(*guard, Fragment::el))
          throw ValidationError("guard for agent '" + agent + "' in '" + name +
                                "' must be in L_EL");
        entry.guard_mask = guard_ctx.truth_mask(guard);
      } else {
        entry.guard_mask.assign(base->world_count(), true);
      }
      std::vector<int> block_of(action_count);
      for (int s = 0; s < action_count; ++s) block_of[s] = action_count + s;
      int block = 0;
      std::vector<bool> assigned(action_count, false);
      for (const auto& cls : e.at("partition")) {
        for (const auto& action : string_list(cls, name + ".f partition class")) {
          const int s = narrowed.action_index(action);
          if (assigned[s])
            throw ValidationError("action '" + action + "' listed twice in a partition of '" +
                                  name + "'");
          assigned[s] = true;
          block_of[s] = block;
        }
        ++block;
      }
      entry.partition = Partition::from_block_of(std::move(block_of));
      entries.push_back(std::move(entry));
    }
  }

  PerWorldF f(base->agents().size());
  for (std::size_t a = 0; a < base->agents().size(); ++a)
    f[a].assign(base->world_count(), Partition::identity(action_count));
  for (int w = 0; w < base->world_count(); ++w) {
    std::vector<bool> matched(base->agents().size(), false);
    for (const auto& entry : entries) {
      if (matched[entry.agent] || !entry.guard_mask[w]) continue;
      matched[entry.agent] = true;
      f[entry.agent][w] = entry.partition;
    }
  }

  return build_dynamic_model_from_partitions(*base, std::move(narrowed), f);
}

void load_derived(const std::string& name, const Json& j, Scenario& scenario) {
  if (scenario.has_model(name)) throw NameCollision(name);
  if (!j.is_object() || j.size() != 1)
    throw ValidationError("derived model '" + name + "' must have exactly one constructor");

  const std::string op = j.begin().key();
  const Json& arg = j.begin().value();
  if (op == "product") {
    std::vector<std::string> pair = string_list(arg, name + ".product");
    if (pair.size() != 2)
      throw ValidationError(name + ".product must be [epistemic, action_model]");
    const EpistemicModel* m = scenario.find_epistemic(pair[0]);
    if (m == nullptr) throw UnknownIdentifier(pair[0], "epistemic model");
    const ActionModel* a = scenario.find_action_model(pair[1]);
    if (a == nullptr) throw UnknownIdentifier(pair[1], "action model");
    scenario.epistemic.emplace(name, product_update(*m, *a));
  } else if (op == "update") {
    const DynamicModel* d = scenario.find_dynamic(arg.get<std::string>());
    if (d == nullptr) throw UnknownIdentifier(arg.get<std::string>(), "dynamic model");
    scenario.dynamic.emplace(name, update_plus(*d));
  } else if (op == "epistemic_part") {
    const DynamicModel* d = scenario.find_dynamic(arg.get<std::string>());
    if (d == nullptr) throw UnknownIdentifier(arg.get<std::string>(), "dynamic model");
    scenario.epistemic.emplace(name, epistemic_part(*d));
  } else if (op == "restrict") {
    std::vector<std::string> pair = string_list(arg, name + ".restrict");
    if (pair.size() != 2) throw ValidationError(name + ".restrict must be [model, formula]");
    const EpistemicModel* m = scenario.find_epistemic(pair[0]);
    if (m == nullptr) throw UnknownIdentifier(pair[0], "epistemic model");
    scenario.epistemic.emplace(name, restrict(*m, parse_formula(pair[1], scenario.sig)));
  } else {
    throw ValidationError("unknown derived-model constructor '" + op + "'");
  }
  scenario.model_order.push_back(name);
}

Check load_check(const Json& j, const Scenario& scenario) {
  Check check;
  if (!j.is_object()) throw ValidationError("checks must be objects");

  if (j.contains("bisim")) {
    std::vector<std::string> parts = string_list(j.at("bisim"), "bisim");
    if (parts.size() != 4) throw ValidationError("bisim must be [m1, w1, m2, w2]");
    check.kind = Check::Kind::bisim;
    std::copy(parts.begin(), parts.end(), check.bisim_ref.begin());
    for (int i : {0, 2}) {
      if (!scenario.has_model(parts[i])) throw UnknownIdentifier(parts[i], "model");
      scenario.epistemic_view(parts[i]).world_index(parts[i + 1]);
    }
    check.expect = j.at("expect").get<bool>();
    return check;
  }

  check.model = j.at("model").get<std::string>();
  if (!scenario.has_model(check.model)) throw UnknownIdentifier(check.model, "model");

  const Json& expect = j.at("expect");
  if (expect.is_string() && expect.get<std::string>() == "report") {
    check.kind = Check::Kind::validate_report;
    if (scenario.find_dynamic(check.model) == nullptr)
      throw ValidationError("validate checks require a dynamic model, got '" + check.model + "'");
    check.expect = true;
    return check;
  }

  check.formula_text = j.at("formula").get<std::string>();
  check.formula = parse_formula(check.formula_text, scenario.sig);
  check.expect = expect.get<bool>();
  if (j.contains("world")) {
    check.kind = Check::Kind::formula_at_world;
    check.world = j.at("world").get<std::string>();
    scenario.epistemic_view(check.model).world_index(check.world);
  } else {
    check.kind = Check::Kind::formula_valid;
  }
  return check;
}

Scenario load_from_json(const Json& doc, std::string_view fallback_name) {
  Scenario scenario;
  try {
    scenario.name = doc.contains("name") ? doc.at("name").get<std::string>()
                                         : std::string(fallback_name);
    scenario.sig.agents = string_list(doc.at("agents"), "agents");
    scenario.sig.props = string_list(doc.at("props"), "props");
    if (doc.contains("actions")) {
      for (const auto& [action, pre_text] : doc.at("actions").items()) {
        scenario.sig.actions.push_back(action);
        scenario.sig.pre.emplace(action,
                                 parse_formula(pre_text.get<std::string>(), scenario.sig));
      }
    }
    scenario.sig.validate();

    if (doc.contains("epistemic")) {
      for (const auto& [name, j] : doc.at("epistemic").items()) {
        if (scenario.has_model(name)) throw NameCollision(name);
        scenario.epistemic.emplace(name, load_epistemic(name, j, scenario.sig));
        scenario.model_order.push_back(name);
      }
    }
    if (doc.contains("action_models")) {
      for (const auto& [name, j] : doc.at("action_models").items()) {
        if (scenario.has_model(name)) throw NameCollision(name);
        scenario.action_models.emplace(name, load_action_model(name, j, scenario.sig));
        scenario.model_order.push_back(name);
      }
    }
    if (doc.contains("dynamic")) {
      for (const auto& [name, j] : doc.at("dynamic").items()) {
        if (scenario.has_model(name)) throw NameCollision(name);
        scenario.dynamic.emplace(name, load_dynamic(name, j, scenario));
        scenario.model_order.push_back(name);
      }
    }
    if (doc.contains("derived")) {
      for (const auto& [name, j] : doc.at("derived").items()) load_derived(name, j, scenario);
    }
    if (doc.contains("checks")) {
      for (const auto& j : doc.at("checks")) scenario.checks.push_back(load_check(j, scenario));
    }
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed scenario: ") + e.what());
  }
  return scenario;
}

}  // namespace

std::string Check::describe() const {
  switch (kind) {
    case Kind::formula_at_world:
      return "model=" + model + " world=" + world + " formula=" + formula_text;
    case Kind::formula_valid:
      return "model=" + model + " valid formula=" + formula_text;
    case Kind::validate_report:
      return "validate model=" + model;
    case Kind::bisim:
      return "bisim (" + bisim_ref[0] + "," + bisim_ref[1] + ") ~ (" + bisim_ref[2] + "," +
             bisim_ref[3] + ")";
  }
  return "?";
}

bool Scenario::has_model(std::string_view name) const {
  return find_epistemic(name) != nullptr || find_dynamic(name) != nullptr ||
         find_action_model(name) != nullptr;
}

const EpistemicModel* Scenario::find_epistemic(std::string_view name) const {
  auto it = epistemic.find(std::string(name));
  return it == epistemic.end() ? nullptr : &it->second;
}

const DynamicModel* Scenario::find_dynamic(std::string_view name) const {
  auto it = dynamic.find(std::string(name));
  return it == dynamic.end() ? nullptr : &it->second;
}

const ActionModel* Scenario::find_action_model(std::string_view name) const {
  auto it = action_models.find(std::string(name));
  return it == action_models.end() ? nullptr : &it->second;
}

const EpistemicModel& Scenario::epistemic_view(std::string_view name) const {
  if (const EpistemicModel* m = find_epistemic(name)) return *m;
  if (const DynamicModel* d = find_dynamic(name)) return d->base();
  throw UnknownIdentifier(std::string(name), "model");
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();

  std::string fallback = path;
  if (auto slash = fallback.find_last_of('/'); slash != std::string::npos)
    fallback = fallback.substr(slash + 1);
  if (auto dot = fallback.find_last_of('.'); dot != std::string::npos)
    fallback = fallback.substr(0, dot);

  return load_scenario_text(buffer.str(), fallback);
}

Scenario load_scenario_text(std::string_view text, std::string_view fallback_name) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, column, e.what());
  }
  return load_from_json(doc, fallback_name);
}

std::vector<CheckResult> run_checks(const Scenario& scenario) {
  std::vector<CheckResult> results;
  results.reserve(scenario.checks.size());

  for (std::size_t i = 0; i < scenario.checks.size(); ++i) {
    const Check& check = scenario.checks[i];
    CheckResult result;
    result.index = static_cast<int>(i);
    result.description = check.describe();
    result.expected = check.kind == Check::Kind::validate_report
                          ? "empty report"
                          : (check.expect ? "true" : "false");

    const auto start = std::chrono::steady_clock::now();
    try {
      bool actual = false;
      switch (check.kind) {
        case Check::Kind::formula_at_world: {
          const EpistemicModel* epi = scenario.find_epistemic(check.model);
          if (epi != nullptr) {
            EvalContext ctx(*epi, &scenario.action_models);
            actual = ctx.eval(check.world, check.formula);
          } else {
            EvalContext ctx(*scenario.find_dynamic(check.model), &scenario.action_models);
            actual = ctx.eval(check.world, check.formula);
          }
          result.actual = actual ? "true" : "false";
          result.pass = actual == check.expect;
          break;
        }
        case Check::Kind::formula_valid: {
          const EpistemicModel* epi = scenario.find_epistemic(check.model);
          if (epi != nullptr) {
            EvalContext ctx(*epi, &scenario.action_models);
            actual = ctx.is_valid_in(check.formula);
          } else {
            EvalContext ctx(*scenario.find_dynamic(check.model), &scenario.action_models);
            actual = ctx.is_valid_in(check.formula);
          }
          result.actual = actual ? "true" : "false";
          result.pass = actual == check.expect;
          break;
        }
        case Check::Kind::validate_report: {
          ValidationReport report = validate(*scenario.find_dynamic(check.model));
          result.actual = report.ok() ? "empty report" : report.to_text();
          result.pass = report.ok();
          break;
        }
        case Check::Kind::bisim: {
          actual = bisimilar(scenario.epistemic_view(check.bisim_ref[0]), check.bisim_ref[1],
                             scenario.epistemic_view(check.bisim_ref[2]), check.bisim_ref[3]);
          result.actual = actual ? "true" : "false";
          result.pass = actual == check.expect;
          break;
        }
      }
    } catch (const std::exception& e) {
      result.actual = std::string("error: ") + e.what();
      result.pass = false;
    }
    result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    results.push_back(std::move(result));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string results_to_text(const Scenario& scenario, const std::vector<CheckResult>& results) {
  std::string out;
  int passed = 0;
  for (const auto& r : results) {
    out += "check " + std::to_string(r.index) + ": " + (r.pass ? "PASS" : "FAIL") + " " +
           r.description;
    if (!r.pass) out += " (expected " + r.expected + ", got " + r.actual + ")";
    out += "\n";
    if (r.pass) ++passed;
  }
  out += scenario.name + ": " + std::to_string(passed) + "/" + std::to_string(results.size()) +
         " checks passed\n";
  return out;
}

std::string results_to_json(const Scenario& scenario, const std::vector<CheckResult>& results) {
  Json doc;
  doc["scenario"] = scenario.name;
  doc["results"] = Json::array();
  int passed = 0;
  for (const auto& r : results) {
    Json item;
    item["index"] = r.index;
    item["description"] = r.description;
    item["expected"] = r.expected;
    item["actual"] = r.actual;
    item["pass"] = r.pass;
    doc["results"].push_back(std::move(item));
    if (r.pass) ++passed;
  }
  doc["passed"] = passed;
  doc["total"] = static_cast<int>(results.size());
  return doc.dump(2) + "\n";
}

}  // namespace epikit
