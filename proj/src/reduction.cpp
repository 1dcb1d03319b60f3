#include "epikit/reduction.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "epikit/errors.hpp"
#include "epikit/semantics.hpp"

namespace epikit {

namespace {

FormulaRef translate_rec(const FormulaRef& phi, const Signature& sig, long& fuel) {
  if (--fuel < 0) throw Error("translate: fuel exhausted");

  switch (phi->kind()) {
    case Formula::Kind::atom:
    case Formula::Kind::xi:
      return phi;
    case Formula::Kind::lnot:
      return Formula::lnot(translate_rec(phi->child(), sig, fuel));
    case Formula::Kind::land:
      return Formula::land(translate_rec(phi->lhs(), sig, fuel),
                           translate_rec(phi->rhs(), sig, fuel));
    case Formula::Kind::knows:
      return Formula::knows(phi->agent(), translate_rec(phi->child(), sig, fuel));
    case Formula::Kind::update_am:
      break;
    case Formula::Kind::update_dyn: {
      const FormulaRef& body = phi->child();
      const FormulaRef& pre = sig.precondition(phi->action());
      switch (body->kind()) {
        case Formula::Kind::atom:
        case Formula::Kind::xi:
          // xi is update-invariant (f+_j(w,s) = f_j(w)), so it reduces like
          // an atom.
          return Formula::implies(pre, body);
        case Formula::Kind::lnot:
          return Formula::implies(
              pre, Formula::lnot(translate_rec(Formula::update(phi->action(), body->child()),
                                               sig, fuel)));
        case Formula::Kind::land:
          return Formula::land(
              translate_rec(Formula::update(phi->action(), body->lhs()), sig, fuel),
              translate_rec(Formula::update(phi->action(), body->rhs()), sig, fuel));
        case Formula::Kind::knows: {
          FormulaRef conjunction;
          for (const auto& other : sig.actions) {
            FormulaRef conjunct = Formula::implies(
                Formula::xi(body->agent(), phi->action(), other),
                Formula::knows(body->agent(),
                               translate_rec(Formula::update(other, body->child()), sig, fuel)));
            conjunction = conjunction ? Formula::land(std::move(conjunction), std::move(conjunct))
                                      : std::move(conjunct);
          }
          return Formula::implies(pre, std::move(conjunction));
        }
        case Formula::Kind::update_dyn: {
          FormulaRef inner = translate_rec(body, sig, fuel);
          return translate_rec(Formula::update(phi->action(), std::move(inner)), sig, fuel);
        }
        case Formula::Kind::update_am:
          break;
      }
      break;
    }
  }
  throw UnsupportedFragment("translate is defined on L_DL+ only; formula contains [A:s]");
}

const std::string& require(const std::string& value, const char* name) {
  if (value.empty()) throw MissingBinding(name);
  return value;
}

const FormulaRef& require(const FormulaRef& value, const char* name) {
  if (value == nullptr) throw MissingBinding(name);
  return value;
}

// Bell numbers fit uint64 up to B(25).
constexpr int kMaxPartitionSize = 25;

const std::vector<std::uint64_t>& bell_numbers() {
  static const std::vector<std::uint64_t> bells = [] {
    std::vector<std::uint64_t> b(kMaxPartitionSize + 1, 0);
    std::vector<std::uint64_t> row{1};
    b[0] = 1;
    for (int n = 1; n <= kMaxPartitionSize; ++n) {
      std::vector<std::uint64_t> next(n + 1);
      next[0] = row.back();
      for (int k = 1; k <= n; ++k) next[k] = next[k - 1] + row[k - 1];
      row = std::move(next);
      b[n] = row[0];
    }
    return b;
  }();
  return bells;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace

FormulaRef translate(const FormulaRef& phi, const Signature& sig, long fuel) {
  return translate_rec(phi, sig, fuel);
}

FormulaRef instantiate_axiom(std::string_view id, const AxiomBindings& b, const Signature& sig) {
  using F = Formula;
  auto phi = [&] { return require(b.phi, "phi"); };
  auto psi = [&] { return require(b.psi, "psi"); };
  auto j = [&] { return require(b.agent, "agent"); };
  auto s = [&] { return require(b.action, "action"); };
  auto s2 = [&] { return require(b.action2, "action2"); };
  auto s3 = [&] { return require(b.action3, "action3"); };
  auto p = [&] { return require(b.prop, "prop"); };
  auto pre = [&](const std::string& action) { return sig.precondition(action); };

  if (id == "1") return F::implies(phi(), F::implies(psi(), phi()));
  if (id == "2")
    return F::implies(F::knows(j(), F::implies(phi(), psi())),
                      F::implies(F::knows(j(), phi()), F::knows(j(), psi())));
  if (id == "3") return F::implies(F::knows(j(), phi()), phi());
  if (id == "4") return F::implies(F::knows(j(), phi()), F::knows(j(), F::knows(j(), phi())));
  if (id == "5")
    return F::implies(F::lnot(F::knows(j(), phi())),
                      F::knows(j(), F::lnot(F::knows(j(), phi()))));
  if (id == "6a") return F::xi(j(), s(), s());
  if (id == "6b") return F::implies(F::xi(j(), s(), s2()), F::xi(j(), s2(), s()));
  if (id == "6c")
    return F::implies(F::xi(j(), s(), s2()),
                      F::implies(F::xi(j(), s2(), s3()), F::xi(j(), s(), s3())));
  if (id == "7a") return F::implies(F::xi(j(), s(), s2()), F::knows(j(), F::xi(j(), s(), s2())));
  if (id == "7b")
    return F::implies(F::lnot(F::xi(j(), s(), s2())),
                      F::knows(j(), F::lnot(F::xi(j(), s(), s2()))));
  if (id == "10a")
    return F::implies(F::update(s(), F::implies(phi(), psi())),
                      F::implies(F::update(s(), phi()), F::update(s(), psi())));
  if (id == "10b")
    return F::iff(F::update(s(), F::atom(p())), F::implies(pre(s()), F::atom(p())));
  if (id == "10c")
    return F::iff(F::update(s(), F::lnot(phi())),
                  F::implies(pre(s()), F::lnot(F::update(s(), phi()))));
  if (id == "10d")
    return F::iff(F::update(s(), F::land(phi(), psi())),
                  F::land(F::update(s(), phi()), F::update(s(), psi())));
  if (id == "10e") {
    FormulaRef conjunction;
    for (const auto& other : sig.actions) {
      FormulaRef conjunct = F::implies(F::xi(j(), s(), other),
                                       F::knows(j(), F::update(other, phi())));
      conjunction = conjunction ? F::land(std::move(conjunction), std::move(conjunct))
                                : std::move(conjunct);
    }
    return F::iff(F::update(s(), F::knows(j(), phi())),
                  F::implies(pre(s()), std::move(conjunction)));
  }
  if (id == kControlSchemaId)
    return F::iff(F::update(s(), F::knows(j(), phi())), F::knows(j(), F::update(s(), phi())));

  throw InvalidArgument("unknown axiom schema '" + std::string(id) + "'");
}

const std::vector<std::string>& axiom_schema_ids() {
  static const std::vector<std::string> ids = {"1",   "2",   "3",   "4",   "5",
                                               "6a",  "6b",  "6c",  "7a",  "7b",
                                               "10a", "10b", "10c", "10d", "10e"};
  return ids;
}

std::vector<int> random_set_partition(std::mt19937_64& rng, int n) {
  if (n < 0 || n > kMaxPartitionSize)
    throw InvalidArgument("random_set_partition supports 0.." +
                          std::to_string(kMaxPartitionSize) + " elements");
  const auto& bell = bell_numbers();
  std::vector<int> block_of(n, -1);
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);

  int next_block = 0;
  while (!remaining.empty()) {
    const int m = static_cast<int>(remaining.size());
    std::uniform_int_distribution<std::uint64_t> draw(0, bell[m] - 1);
    const std::uint64_t r = draw(rng);
    // The block containing the first remaining element has size k with
    // probability C(m-1, k-1) * Bell(m-k) / Bell(m).
    int k = 1;
    std::uint64_t cum = 0;
    for (; k < m; ++k) {
      const std::uint64_t w = binomial(m - 1, k - 1) * bell[m - k];
      if (r < cum + w) break;
      cum += w;
    }
    // Uniform (k-1)-subset of the other remaining elements.
    for (int i = 1; i < k; ++i) {
      std::uniform_int_distribution<int> pick(i, m - 1);
      std::swap(remaining[i], remaining[pick(rng)]);
    }
    std::sort(remaining.begin(), remaining.begin() + k);
    for (int i = 0; i < k; ++i) block_of[remaining[i]] = next_block;
    ++next_block;
    remaining.erase(remaining.begin(), remaining.begin() + k);
  }
  return block_of;
}

namespace {

struct Chosen {
  std::vector<std::string> agents;
  std::vector<std::string> props;
};

Chosen choose(const RandomModelParams& params, const Signature& sig) {
  if (params.world_count < 1 || params.agent_count < 1 || params.prop_count < 1)
    throw InvalidArgument("random model counts must be >= 1");
  if (params.agent_count > static_cast<int>(sig.agents.size()))
    throw InvalidArgument("signature has fewer agents than requested");
  if (params.prop_count > static_cast<int>(sig.props.size()))
    throw InvalidArgument("signature has fewer props than requested");
  Chosen c;
  c.agents.assign(sig.agents.begin(), sig.agents.begin() + params.agent_count);
  c.props.assign(sig.props.begin(), sig.props.begin() + params.prop_count);
  return c;
}

EpistemicModel random_epistemic_core(std::mt19937_64& rng, const RandomModelParams& params,
                                     const Chosen& chosen) {
  std::vector<std::string> worlds;
  worlds.reserve(params.world_count);
  for (int i = 0; i < params.world_count; ++i) worlds.push_back("v" + std::to_string(i));

  std::vector<Partition> partitions;
  partitions.reserve(chosen.agents.size());
  for (std::size_t j = 0; j < chosen.agents.size(); ++j)
    partitions.push_back(Partition::from_block_of(random_set_partition(rng, params.world_count)));

  std::map<std::string, std::vector<bool>> valuation;
  std::uniform_int_distribution<int> coin(0, 1);
  for (const auto& p : chosen.props) {
    std::vector<bool> mask(params.world_count);
    for (int w = 0; w < params.world_count; ++w) mask[w] = coin(rng) == 1;
    valuation.emplace(p, std::move(mask));
  }

  return EpistemicModel(std::move(worlds), chosen.agents, std::move(partitions),
                        std::move(valuation));
}

}  // namespace

EpistemicModel random_epistemic_model(const RandomModelParams& params, const Signature& sig) {
  std::mt19937_64 rng(params.seed);
  return random_epistemic_core(rng, params, choose(params, sig));
}

DynamicModel random_dynamic_model(const RandomModelParams& params, const Signature& sig) {
  std::mt19937_64 rng(params.seed);
  Chosen chosen = choose(params, sig);
  EpistemicModel base = random_epistemic_core(rng, params, chosen);

  Signature narrowed;
  narrowed.agents = chosen.agents;
  narrowed.props = chosen.props;
  narrowed.actions = sig.actions;
  narrowed.pre = sig.pre;

  const int action_count = static_cast<int>(sig.actions.size());
  PerWorldF f(chosen.agents.size());
  for (std::size_t j = 0; j < chosen.agents.size(); ++j) {
    // One partition of Sigma per ~_j class, copied to every world of the
    // class, so (C1) holds by construction.
    std::vector<Partition> per_class;
    const Partition& pj = base.partition(static_cast<int>(j));
    for (int c = 0; c < pj.block_count(); ++c)
      per_class.push_back(Partition::from_block_of(random_set_partition(rng, action_count)));
    f[j].reserve(base.world_count());
    for (int w = 0; w < base.world_count(); ++w) f[j].push_back(per_class[pj.block(w)]);
  }

  return build_dynamic_model_from_partitions(std::move(base), std::move(narrowed), f);
}

ActionModel random_action_model(std::string name, const Signature& sig, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int action_count = static_cast<int>(sig.actions.size());
  if (action_count == 0) throw EmptyActionSet("signature has no actions");
  std::vector<Partition> partitions;
  partitions.reserve(sig.agents.size());
  for (std::size_t j = 0; j < sig.agents.size(); ++j)
    partitions.push_back(Partition::from_block_of(random_set_partition(rng, action_count)));
  std::map<std::string, FormulaRef> pre = sig.pre;
  return ActionModel(std::move(name), sig.actions, sig.agents, std::move(partitions),
                     std::move(pre));
}

FormulaRef random_formula(std::mt19937_64& rng, const Signature& sig, int depth, Fragment frag) {
  const bool xi_ok =
      (frag == Fragment::el_plus || frag == Fragment::dl_plus) && !sig.actions.empty();
  const bool update_ok =
      (frag == Fragment::dl || frag == Fragment::dl_plus) && !sig.actions.empty();

  auto pick = [&rng](const auto& xs) -> const auto& {
    std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
    return xs[d(rng)];
  };

  auto leaf = [&]() -> FormulaRef {
    if (xi_ok) {
      std::uniform_int_distribution<int> d(0, 3);
      if (d(rng) == 0) return Formula::xi(pick(sig.agents), pick(sig.actions), pick(sig.actions));
    }
    return Formula::atom(pick(sig.props));
  };

  if (depth <= 0) return leaf();

  std::uniform_int_distribution<int> d(0, 9);
  const int roll = d(rng);
  if (roll <= 1) return leaf();
  if (roll <= 3) return Formula::lnot(random_formula(rng, sig, depth - 1, frag));
  if (roll <= 5)
    return Formula::land(random_formula(rng, sig, depth - 1, frag),
                         random_formula(rng, sig, depth - 1, frag));
  if (roll <= 7)
    return Formula::knows(pick(sig.agents), random_formula(rng, sig, depth - 1, frag));
  if (update_ok)
    return Formula::update(pick(sig.actions), random_formula(rng, sig, depth - 1, frag));
  return Formula::knows(pick(sig.agents), random_formula(rng, sig, depth - 1, frag));
}

std::string FuzzReport::to_text() const {
  std::string out;
  for (const auto& f : failures) {
    out += "schema=" + f.schema + " seed=" + std::to_string(f.seed) + " world=" + f.world +
           " formula=" + f.formula + "\n";
  }
  return out;
}

FuzzReport soundness_fuzz(const std::vector<std::string>& schemas, int trials,
                          const FuzzParams& params, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("soundness_fuzz needs at least one trial");

  static const std::vector<std::string> agent_pool = {"a", "b", "c", "d", "e"};
  static const std::vector<std::string> prop_pool = {"p", "q", "r", "u", "v"};
  if (params.agent_count > static_cast<int>(agent_pool.size()) ||
      params.prop_count > static_cast<int>(prop_pool.size()))
    throw InvalidArgument("fuzz supports at most 5 agents and 5 props");
  if (params.action_count < 1) throw InvalidArgument("fuzz needs at least one action");

  FuzzReport report;
  report.trials = trials;
  report.seed = seed;

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
    std::mt19937_64 rng(trial_seed);

    Signature sig;
    sig.agents.assign(agent_pool.begin(), agent_pool.begin() + params.agent_count);
    sig.props.assign(prop_pool.begin(), prop_pool.begin() + params.prop_count);
    for (int s = 0; s < params.action_count; ++s) {
      std::string name = "s" + std::to_string(s);
      sig.actions.push_back(name);
    }
    for (const auto& name : sig.actions)
      sig.pre.emplace(name, random_formula(rng, sig, 2, Fragment::el));

    RandomModelParams mp;
    mp.world_count = params.world_count;
    mp.agent_count = params.agent_count;
    mp.prop_count = params.prop_count;
    mp.seed = rng();
    DynamicModel model = random_dynamic_model(mp, sig);
    EvalContext ctx(model);

    for (const auto& id : schemas) {
      AxiomBindings b;
      b.phi = random_formula(rng, sig, params.formula_depth, Fragment::dl_plus);
      b.psi = random_formula(rng, sig, params.formula_depth, Fragment::dl_plus);
      std::uniform_int_distribution<std::size_t> da(0, sig.agents.size() - 1);
      std::uniform_int_distribution<std::size_t> ds(0, sig.actions.size() - 1);
      std::uniform_int_distribution<std::size_t> dp(0, sig.props.size() - 1);
      b.agent = sig.agents[da(rng)];
      b.action = sig.actions[ds(rng)];
      b.action2 = sig.actions[ds(rng)];
      b.action3 = sig.actions[ds(rng)];
      b.prop = sig.props[dp(rng)];

      FormulaRef inst = instantiate_axiom(id, b, sig);
      for (int w = 0; w < model.base().world_count(); ++w) {
        if (!ctx.eval(w, inst)) {
          report.failures.push_back(
              {id, trial_seed, model.base().worlds()[w], render_formula(inst)});
          break;
        }
      }
    }
  }
  return report;
}

bool check_translation_equivalence(const FormulaRef& phi, const DynamicModel& model) {
  if (!in_fragment(*phi, Fragment::dl_plus))
    throw UnsupportedFragment("check_translation_equivalence takes L_DL+ formulas");
  FormulaRef reduced = translate(phi, model.sig());
  EvalContext ctx(model);
  return ctx.truth_mask(phi) == ctx.truth_mask(reduced);
}

}  // namespace epikit
