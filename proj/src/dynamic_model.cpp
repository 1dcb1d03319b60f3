#include "epikit/dynamic_model.hpp"

#include <algorithm>
#include <set>

#include "epikit/errors.hpp"
#include "epikit/semantics.hpp"

namespace epikit {

namespace {

std::string render_action_partition(const Signature& sig, const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += " ";
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += sig.actions[block[i]];
    }
    out += "}";
  }
  return out;
}

}  // namespace

std::string ValidationReport::to_text() const {
  if (violations.empty()) return "ok\n";
  std::string out;
  for (const auto& v : violations) {
    out += v.kind + " violation agent=" + v.agent;
    if (!v.world_a.empty()) out += " world=" + v.world_a;
    if (!v.world_b.empty()) out += " world=" + v.world_b;
    if (!v.detail.empty()) out += " " + v.detail;
    out += "\n";
  }
  return out;
}

DynamicModel::DynamicModel(EpistemicModel base, Signature sig,
                           std::vector<std::vector<Partition>> f_per_class)
    : base_(std::move(base)), sig_(std::move(sig)), f_per_class_(std::move(f_per_class)) {
  if (f_per_class_.size() != base_.agents().size())
    throw ValidationError("f must be defined for every agent");
  for (std::size_t j = 0; j < f_per_class_.size(); ++j) {
    if (static_cast<int>(f_per_class_[j].size()) != base_.partition(static_cast<int>(j)).block_count())
      throw ValidationError("f for agent '" + base_.agents()[j] +
                            "' must cover every indistinguishability class");
    for (const auto& p : f_per_class_[j]) {
      if (p.size() != static_cast<int>(sig_.actions.size()))
        throw ValidationError("f partition does not cover the action set");
    }
  }
}

const Partition& DynamicModel::f(int agent, int world) const {
  return f_per_class_[agent][base_.partition(agent).block(world)];
}

const Partition& DynamicModel::f(std::string_view agent, std::string_view world) const {
  return f(base_.agent_index(agent), base_.world_index(world));
}

bool DynamicModel::xi_holds(std::string_view agent, std::string_view performed,
                            std::string_view confusable, int world) const {
  const Partition& p = f(base_.agent_index(agent), world);
  return p.same_block(sig_.action_index(performed), sig_.action_index(confusable));
}

std::vector<Partition> DynamicModel::f_per_world(int agent) const {
  std::vector<Partition> out;
  out.reserve(base_.world_count());
  for (int w = 0; w < base_.world_count(); ++w) out.push_back(f(agent, w));
  return out;
}

ValidationReport validate_f(const EpistemicModel& base, const Signature& sig,
                            const PerWorldF& f) {
  ValidationReport report;
  const int action_count = static_cast<int>(sig.actions.size());

  if (f.size() != base.agents().size()) {
    report.violations.push_back({"C2", "", "", "", "f is not defined for every agent"});
    return report;
  }
  for (std::size_t j = 0; j < base.agents().size(); ++j) {
    const std::string& agent = base.agents()[j];
    if (static_cast<int>(f[j].size()) != base.world_count()) {
      report.violations.push_back({"C2", agent, "", "", "f is not defined at every world"});
      continue;
    }
    // (C2): each f_j(w) must be a partition of the full action set. The
    // Partition type is an equivalence by construction, so only coverage
    // can fail here.
    for (int w = 0; w < base.world_count(); ++w) {
      if (f[j][w].size() != action_count) {
        report.violations.push_back(
            {"C2", agent, base.worlds()[w], "", "partition does not cover the action set"});
      }
    }
    // (C1): constant across each ~_j class, witnessed against the class
    // representative.
    for (const auto& block : base.partition(static_cast<int>(j)).blocks()) {
      const int rep = block.front();
      for (int w : block) {
        if (!(f[j][w] == f[j][rep])) {
          report.violations.push_back({"C1", agent, base.worlds()[rep], base.worlds()[w],
                                       "f differs inside one indistinguishability class"});
        }
      }
    }
  }
  return report;
}

ValidationReport validate(const DynamicModel& m) {
  PerWorldF f;
  for (std::size_t j = 0; j < m.base().agents().size(); ++j)
    f.push_back(m.f_per_world(static_cast<int>(j)));
  return validate_f(m.base(), m.sig(), f);
}

DynamicModel build_dynamic_model_from_partitions(EpistemicModel base, Signature sig,
                                                 const PerWorldF& f) {
  ValidationReport report = validate_f(base, sig, f);
  if (!report.ok()) {
    for (const auto& v : report.violations) {
      if (v.kind == "C1") throw C1Violation(v.agent, v.world_a, v.world_b);
    }
    throw ValidationError(report.to_text());
  }

  std::vector<std::vector<Partition>> per_class(base.agents().size());
  for (std::size_t j = 0; j < base.agents().size(); ++j) {
    for (const auto& block : base.partition(static_cast<int>(j)).blocks())
      per_class[j].push_back(f[j][block.front()]);
  }
  return DynamicModel(std::move(base), std::move(sig), std::move(per_class));
}

DynamicModel build_dynamic_model(EpistemicModel base, const std::vector<FEdge>& f_edges,
                                 Signature sig) {
  const int action_count = static_cast<int>(sig.actions.size());
  std::vector<std::vector<std::vector<std::pair<int, int>>>> pairs(
      base.agents().size(),
      std::vector<std::vector<std::pair<int, int>>>(base.world_count()));

  for (const auto& e : f_edges) {
    const int j = base.agent_index(e.agent);
    const int w = base.world_index(e.world);
    pairs[j][w].push_back({sig.action_index(e.performed), sig.action_index(e.confusable)});
  }

  PerWorldF f(base.agents().size());
  for (std::size_t j = 0; j < base.agents().size(); ++j) {
    f[j].reserve(base.world_count());
    for (int w = 0; w < base.world_count(); ++w)
      f[j].push_back(Partition::from_pairs(action_count, pairs[j][w]));
  }

  return build_dynamic_model_from_partitions(std::move(base), std::move(sig), f);
}

DynamicModel update_plus(const DynamicModel& m) {
  const EpistemicModel& base = m.base();
  const Signature& sig = m.sig();
  EvalContext ctx(base);

  std::vector<std::pair<int, int>> pairs;  // (world, action index)
  for (int w = 0; w < base.world_count(); ++w) {
    for (int s = 0; s < static_cast<int>(sig.actions.size()); ++s) {
      if (ctx.eval(w, sig.precondition(sig.actions[s]))) pairs.push_back({w, s});
    }
  }
  if (pairs.empty()) throw EmptyProduct("no (world, action) pair satisfies its precondition");

  const int n = static_cast<int>(pairs.size());
  std::vector<std::string> worlds;
  worlds.reserve(n);
  for (const auto& [w, s] : pairs)
    worlds.push_back(product_world_name(base.worlds()[w], sig.actions[s]));

  // ~+_j assembled from its definition as a raw relation, then checked to be
  // an equivalence (Proposition 1) before becoming a partition.
  std::vector<Partition> partitions;
  for (std::size_t j = 0; j < base.agents().size(); ++j) {
    const Partition& pw = base.partition(static_cast<int>(j));
    std::set<std::pair<int, int>> rel;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const auto& [wx, sx] = pairs[x];
        const auto& [wy, sy] = pairs[y];
        if (pw.same_block(wx, wy) && m.f(static_cast<int>(j), wx).same_block(sx, sy))
          rel.insert({x, y});
      }
    }
    bool was_equivalence = false;
    Partition p = closure_of_relation(n, rel, &was_equivalence);
    if (!was_equivalence)
      throw ValidationError("updated relation for agent '" + base.agents()[j] +
                            "' is not an equivalence relation");
    partitions.push_back(std::move(p));
  }

  std::map<std::string, std::vector<bool>> val;
  for (const auto& [prop, mask] : base.valuation()) {
    std::vector<bool> lifted;
    lifted.reserve(n);
    for (const auto& [w, s] : pairs) lifted.push_back(mask[w]);
    val.emplace(prop, std::move(lifted));
  }

  EpistemicModel plus_base(std::move(worlds), base.agents(), std::move(partitions),
                           std::move(val));

  // f+_j(w,s) = f_j(w), handed to the validating builder per world so C1 for
  // the updated model is checked for real.
  PerWorldF f_plus(base.agents().size());
  for (std::size_t j = 0; j < base.agents().size(); ++j) {
    f_plus[j].reserve(n);
    for (const auto& [w, s] : pairs) f_plus[j].push_back(m.f(static_cast<int>(j), w));
  }

  return build_dynamic_model_from_partitions(std::move(plus_base), sig, f_plus);
}

DynamicModel embed_action_model(const EpistemicModel& m, const ActionModel& a,
                                const Signature& sig) {
  if (m.agents() != a.agents())
    throw ValidationError("embed_action_model requires matching agent lists");

  Signature narrowed;
  narrowed.agents = sig.agents;
  narrowed.props = sig.props;
  narrowed.actions = a.actions();
  for (const auto& act : a.actions()) narrowed.pre.emplace(act, a.precondition(act));

  PerWorldF f(m.agents().size());
  for (std::size_t j = 0; j < m.agents().size(); ++j)
    f[j].assign(m.world_count(), a.partition(static_cast<int>(j)));

  return build_dynamic_model_from_partitions(m, std::move(narrowed), f);
}

const EpistemicModel& epistemic_part(const DynamicModel& m) { return m.base(); }

std::string render_f_table(const DynamicModel& m) {
  std::string out;
  const EpistemicModel& base = m.base();
  for (std::size_t j = 0; j < base.agents().size(); ++j) {
    out += "f_" + base.agents()[j] + ":\n";
    for (const auto& block : base.partition(static_cast<int>(j)).blocks()) {
      std::string cls;
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) cls += ",";
        cls += base.worlds()[block[i]];
      }
      out += "  {" + cls + "}: " + render_action_partition(m.sig(), m.f(static_cast<int>(j), block.front())) + "\n";
    }
  }
  return out;
}

}  // namespace epikit
