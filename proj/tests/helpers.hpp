#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "epikit/action_model.hpp"
#include "epikit/dynamic_model.hpp"
#include "epikit/kripke.hpp"
#include "epikit/parser.hpp"
#include "epikit/semantics.hpp"
#include "epikit/signature.hpp"

namespace test_helpers {

using namespace epikit;

inline Signature make_sig(std::vector<std::string> agents, std::vector<std::string> props,
                          std::vector<std::pair<std::string, std::string>> actions) {
  Signature sig;
  sig.agents = std::move(agents);
  sig.props = std::move(props);
  for (const auto& [name, pre] : actions) sig.actions.push_back(name);
  for (const auto& [name, pre] : actions) sig.pre.emplace(name, parse_formula(pre, sig));
  sig.validate();
  return sig;
}

// Anne and Bob's initial uncertainty about p.
inline Signature sig0() { return make_sig({"a", "b"}, {"p"}, {{"sp", "p"}, {"snp", "!p"}}); }

inline EpistemicModel model_m0(const Signature& sig) {
  return build_epistemic_model({"w0", "w1"}, sig.agents,
                               {{"a", "w0", "w1"}, {"b", "w0", "w1"}}, {{"p", {"w0"}}});
}

// Carl's report to Bob: Anne cannot tell the two announcements apart.
inline ActionModel model_a0(const Signature& sig) {
  return build_action_model("A0", {"sp", "snp"}, {{"a", "sp", "snp"}}, sig);
}

// Expanded signature with q = "Bob speaks French" and the three-action model.
inline Signature sig1() {
  return make_sig({"a", "b"}, {"p", "q"}, {{"sp", "p & q"}, {"snp", "!p & q"}, {"s", "!q"}});
}

inline EpistemicModel model_m1(const Signature& sig) {
  return build_epistemic_model({"w0", "w1", "w2", "w3"}, sig.agents,
                               {{"a", "w0", "w1"},
                                {"a", "w1", "w2"},
                                {"a", "w2", "w3"},
                                {"b", "w0", "w1"},
                                {"b", "w2", "w3"}},
                               {{"p", {"w0", "w2"}}, {"q", {"w0", "w1"}}});
}

inline ActionModel model_a1(const Signature& sig) {
  return build_action_model("A1", {"sp", "snp", "s"},
                            {{"a", "sp", "snp"}, {"a", "snp", "s"}}, sig);
}

// The adjusted four-action model for when Anne speaks French.
inline Signature sig2() {
  return make_sig({"a", "b"}, {"p", "q"},
                  {{"cpq", "p & q"}, {"cnpq", "!p & q"}, {"cpnq", "p & !q"},
                   {"cnpnq", "!p & !q"}});
}

inline ActionModel model_a2(const Signature& sig) {
  return build_action_model("A2", {"cpq", "cnpq", "cpnq", "cnpnq"},
                            {{"a", "cpq", "cpnq"}, {"a", "cnpq", "cnpnq"},
                             {"b", "cpnq", "cnpnq"}},
                            sig);
}

// Dynamic signature: the two plain announcements with preconditions p / !p.
inline Signature dynamic_sig() {
  return make_sig({"a", "b"}, {"p", "q"}, {{"sp", "p"}, {"snp", "!p"}});
}

// M1 with f_a = Sigma x Sigma everywhere and f_b = id exactly where q holds.
inline DynamicModel model_m1_tilde(const Signature& sig) {
  std::vector<FEdge> edges;
  for (const std::string w : {"w0", "w1", "w2", "w3"}) edges.push_back({"a", w, "sp", "snp"});
  edges.push_back({"b", "w2", "sp", "snp"});
  edges.push_back({"b", "w3", "sp", "snp"});
  return build_dynamic_model(model_m1(sig), edges, sig);
}

// Same but Anne speaks French: f_a = id everywhere.
inline DynamicModel model_m1_tilde_prime(const Signature& sig) {
  std::vector<FEdge> edges;
  edges.push_back({"b", "w2", "sp", "snp"});
  edges.push_back({"b", "w3", "sp", "snp"});
  return build_dynamic_model(model_m1(sig), edges, sig);
}

// Naive bisimulation oracle: greatest fixpoint over world pairs, starting
// from atom agreement and pruning forth/back violations. Kept independent of
// the partition-refinement implementation it checks.
inline bool naive_bisimilar(const EpistemicModel& a, const std::string& wa,
                            const EpistemicModel& b, const std::string& wb) {
  std::set<std::string> props;
  for (const auto& [p, mask] : a.valuation()) props.insert(p);
  for (const auto& [p, mask] : b.valuation()) props.insert(p);

  auto atom = [&props](const EpistemicModel& m, int w) {
    std::vector<bool> profile;
    for (const auto& p : props) profile.push_back(m.has_prop(p) ? m.atom_true(p, w) : false);
    return profile;
  };

  const int na = a.world_count();
  const int nb = b.world_count();
  std::vector<std::vector<bool>> rel(na, std::vector<bool>(nb, false));
  for (int i = 0; i < na; ++i)
    for (int k = 0; k < nb; ++k) rel[i][k] = atom(a, i) == atom(b, k);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < na; ++i) {
      for (int k = 0; k < nb; ++k) {
        if (!rel[i][k]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < a.agents().size() && ok; ++j) {
          // forth
          for (int i2 = 0; i2 < na && ok; ++i2) {
            if (!a.partition(static_cast<int>(j)).same_block(i, i2)) continue;
            bool witness = false;
            for (int k2 = 0; k2 < nb && !witness; ++k2)
              if (b.partition(static_cast<int>(j)).same_block(k, k2) && rel[i2][k2])
                witness = true;
            if (!witness) ok = false;
          }
          // back
          for (int k2 = 0; k2 < nb && ok; ++k2) {
            if (!b.partition(static_cast<int>(j)).same_block(k, k2)) continue;
            bool witness = false;
            for (int i2 = 0; i2 < na && !witness; ++i2)
              if (a.partition(static_cast<int>(j)).same_block(i, i2) && rel[i2][k2])
                witness = true;
            if (!witness) ok = false;
          }
        }
        if (!ok) {
          rel[i][k] = false;
          changed = true;
        }
      }
    }
  }
  return rel[a.world_index(wa)][b.world_index(wb)];
}

}  // namespace test_helpers
