#include <doctest.h>

#include <optional>
#include <random>

#include "epikit/dynamic_model.hpp"
#include "epikit/errors.hpp"
#include "epikit/parser.hpp"
#include "epikit/reduction.hpp"
#include "epikit/semantics.hpp"

#include "helpers.hpp"

using namespace epikit;
using test_helpers::dynamic_sig;
using test_helpers::make_sig;
using test_helpers::model_a0;
using test_helpers::model_a1;
using test_helpers::model_a2;
using test_helpers::model_m0;
using test_helpers::model_m1;
using test_helpers::model_m1_tilde;
using test_helpers::model_m1_tilde_prime;
using test_helpers::sig0;
using test_helpers::sig1;
using test_helpers::sig2;

TEST_CASE("M1-tilde: f per world") {
  Signature sig = dynamic_sig();
  DynamicModel d = model_m1_tilde(sig);
  CHECK(d.f("a", "w0").block_count() == 1);
  CHECK(d.f("a", "w3").block_count() == 1);
  CHECK(d.f("b", "w0").block_count() == 2);
  CHECK(d.f("b", "w1").block_count() == 2);
  CHECK(d.f("b", "w2").block_count() == 1);
  CHECK(d.xi_holds("a", "sp", "snp", 0));
  CHECK(!d.xi_holds("b", "sp", "snp", 0));
  CHECK(d.xi_holds("b", "sp", "snp", 2));
  CHECK(validate(d).ok());
}

TEST_CASE("M1-tilde-prime: Anne tells the actions apart everywhere") {
  Signature sig = dynamic_sig();
  DynamicModel d = model_m1_tilde_prime(sig);
  for (int w = 0; w < 4; ++w) CHECK(d.f(0, w).block_count() == 2);
  CHECK(validate(d).ok());
}

TEST_CASE("C1 breach: f_b differs inside Bob's class") {
  Signature sig = dynamic_sig();
  EpistemicModel m1 = model_m1(sig);
  // w0 ~_b w1, but f_b merges the actions only at w1.
  std::vector<FEdge> edges{{"b", "w1", "sp", "snp"}};
  CHECK_THROWS_AS(build_dynamic_model(m1, edges, sig), C1Violation);

  PerWorldF f(2);
  for (int j = 0; j < 2; ++j) f[j].assign(4, Partition::identity(2));
  f[1][1] = Partition::single_block(2);
  ValidationReport report = validate_f(m1, sig, f);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == "C1");
  CHECK(report.violations[0].agent == "b");
  CHECK(report.violations[0].world_a == "w0");
  CHECK(report.violations[0].world_b == "w1");
}

TEST_CASE("build errors on unresolved identifiers") {
  Signature sig = dynamic_sig();
  EpistemicModel m1 = model_m1(sig);
  CHECK_THROWS_AS(build_dynamic_model(m1, {{"z", "w0", "sp", "snp"}}, sig), UnknownIdentifier);
  CHECK_THROWS_AS(build_dynamic_model(m1, {{"a", "w9", "sp", "snp"}}, sig), UnknownWorld);
  CHECK_THROWS_AS(build_dynamic_model(m1, {{"a", "w0", "zz", "snp"}}, sig), UnknownAction);
}

TEST_CASE("update_plus: M1-tilde matches M1 x A1 up to relabeling") {
  Signature sig = dynamic_sig();
  DynamicModel plus = update_plus(model_m1_tilde(sig));
  const EpistemicModel& part = epistemic_part(plus);
  CHECK(part.worlds() ==
        std::vector<std::string>{"(w0,sp)", "(w1,snp)", "(w2,sp)", "(w3,snp)"});

  Signature al_sig = sig1();
  EpistemicModel product = product_update(model_m1(al_sig), model_a1(al_sig));
  // (w2,s) and (w3,s) relabel to (w2,sp) and (w3,snp).
  CHECK(bisimilar(part, "(w0,sp)", product, "(w0,sp)"));
  CHECK(bisimilar(part, "(w1,snp)", product, "(w1,snp)"));
  CHECK(bisimilar(part, "(w2,sp)", product, "(w2,s)"));
  CHECK(bisimilar(part, "(w3,snp)", product, "(w3,s)"));
}

TEST_CASE("update_plus: M1-tilde-prime matches M1 x A2 up to relabeling") {
  Signature sig = dynamic_sig();
  DynamicModel plus = update_plus(model_m1_tilde_prime(sig));
  const EpistemicModel& part = epistemic_part(plus);

  Signature al_sig = sig2();
  EpistemicModel product = product_update(model_m1(al_sig), model_a2(al_sig));
  CHECK(bisimilar(part, "(w0,sp)", product, "(w0,cpq)"));
  CHECK(bisimilar(part, "(w1,snp)", product, "(w1,cnpq)"));
  CHECK(bisimilar(part, "(w2,sp)", product, "(w2,cpnq)"));
  CHECK(bisimilar(part, "(w3,snp)", product, "(w3,cnpnq)"));
}

TEST_CASE("embedding: constant f reproduces the action model") {
  Signature sig = sig0();
  EpistemicModel m0 = model_m0(sig);
  ActionModel a0 = model_a0(sig);
  DynamicModel embedded = embed_action_model(m0, a0, sig);

  for (int w = 0; w < m0.world_count(); ++w) {
    CHECK(embedded.f(0, w) == a0.partition(0));
    CHECK(embedded.f(1, w) == a0.partition(1));
  }
  CHECK(validate(embedded).ok());

  // Update through the embedding coincides with the product update on the
  // same pair names.
  CHECK(epistemic_part(update_plus(embedded)) == product_update(m0, a0));
}

TEST_CASE("embedding reproduces product updates on the fixture pairs") {
  Signature s1 = sig1();
  CHECK(epistemic_part(update_plus(embed_action_model(model_m1(s1), model_a1(s1), s1))) ==
        product_update(model_m1(s1), model_a1(s1)));
  Signature s2 = sig2();
  CHECK(epistemic_part(update_plus(embed_action_model(model_m1(s2), model_a2(s2), s2))) ==
        product_update(model_m1(s2), model_a2(s2)));
}

TEST_CASE("embedding a public announcement gives singleton partitions") {
  Signature sig = sig0();
  EpistemicModel m0 = model_m0(sig);
  ActionModel pub = public_announcement_model(parse_formula("p", sig), sig.agents);
  DynamicModel embedded = embed_action_model(m0, pub, sig);
  for (int w = 0; w < m0.world_count(); ++w) {
    CHECK(embedded.f(0, w).size() == 1);
    CHECK(embedded.f(0, w).block_count() == 1);
  }
}

TEST_CASE("epistemic_part is the projection") {
  Signature sig = dynamic_sig();
  DynamicModel d = model_m1_tilde(sig);
  CHECK(epistemic_part(d) == model_m1(sig));

  Signature s0 = sig0();
  EpistemicModel m0 = model_m0(s0);
  CHECK(epistemic_part(embed_action_model(m0, model_a0(s0), s0)) == m0);
}

TEST_CASE("8-world model: every world survives exactly one announcement") {
  Signature sig = make_sig({"a", "b"}, {"p", "q", "r"}, {{"sp", "p"}, {"snp", "!p"}});
  EpistemicModel m2 = build_epistemic_model(
      {"w0", "w1", "w2", "w3", "w4", "w5", "w6", "w7"}, sig.agents,
      {{"a", "w0", "w1"}, {"a", "w1", "w2"}, {"a", "w2", "w3"},
       {"a", "w4", "w5"}, {"a", "w5", "w6"}, {"a", "w6", "w7"},
       {"b", "w0", "w1"}, {"b", "w1", "w4"}, {"b", "w4", "w5"},
       {"b", "w2", "w3"}, {"b", "w3", "w6"}, {"b", "w6", "w7"}},
      {{"p", {"w0", "w2", "w4", "w6"}},
       {"q", {"w0", "w1", "w4", "w5"}},
       {"r", {"w0", "w1", "w2", "w3"}}});

  // f_a keyed on r, f_b keyed on q.
  PerWorldF f(2);
  EvalContext guard_ctx(m2);
  std::vector<bool> r_mask = guard_ctx.truth_mask(parse_formula("r", sig));
  std::vector<bool> q_mask = guard_ctx.truth_mask(parse_formula("q", sig));
  for (int w = 0; w < 8; ++w) {
    f[0].push_back(r_mask[w] ? Partition::identity(2) : Partition::single_block(2));
    f[1].push_back(q_mask[w] ? Partition::identity(2) : Partition::single_block(2));
  }
  DynamicModel m2_tilde = build_dynamic_model_from_partitions(m2, sig, f);
  CHECK(validate(m2_tilde).ok());

  // Brute-force oracle: count surviving pairs from the preconditions alone.
  int expected_pairs = 0;
  EvalContext ctx(m2);
  for (int w = 0; w < m2.world_count(); ++w) {
    for (const auto& action : sig.actions)
      if (ctx.eval(w, sig.precondition(action))) ++expected_pairs;
  }
  CHECK(expected_pairs == 8);
  CHECK(epistemic_part(update_plus(m2_tilde)).world_count() == expected_pairs);
}

TEST_CASE("update_plus: definitional oracle on random dynamic models") {
  Signature sig = make_sig({"a", "b", "c"}, {"p", "q"},
                           {{"s0", "p"}, {"s1", "!p | q"}, {"s2", "q"}});
  std::mt19937_64 seeds(53);
  int checked = 0;
  while (checked < 120) {
    RandomModelParams params{1 + static_cast<int>(seeds() % 6),
                             1 + static_cast<int>(seeds() % 3), 2, seeds()};
    DynamicModel m = random_dynamic_model(params, sig);

    std::optional<DynamicModel> maybe_plus;
    try {
      maybe_plus.emplace(update_plus(m));
    } catch (const EmptyProduct&) {
      continue;
    }
    ++checked;
    const DynamicModel& plus = *maybe_plus;

    // Proposition 1: the result validates as a dynamic model.
    CHECK(validate(plus).ok());

    // Recompute the surviving pairs in the same order the update uses.
    EvalContext ctx(m.base());
    std::vector<std::pair<int, int>> pairs;
    for (int w = 0; w < m.base().world_count(); ++w)
      for (int s = 0; s < static_cast<int>(m.sig().actions.size()); ++s)
        if (ctx.eval(w, m.sig().precondition(m.sig().actions[s]))) pairs.push_back({w, s});
    REQUIRE(static_cast<int>(pairs.size()) == plus.base().world_count());

    for (std::size_t x = 0; x < pairs.size(); ++x) {
      CHECK(plus.base().worlds()[x] ==
            product_world_name(m.base().worlds()[pairs[x].first],
                               m.sig().actions[pairs[x].second]));
    }

    // ~+_j against its definition, f+ against its inheritance rule, and the
    // lifted valuation, all checked pointwise.
    for (std::size_t j = 0; j < m.base().agents().size(); ++j) {
      const int ji = static_cast<int>(j);
      for (std::size_t x = 0; x < pairs.size(); ++x) {
        const auto& [wx, sx] = pairs[x];
        CHECK(plus.f(ji, static_cast<int>(x)) == m.f(ji, wx));
        for (std::size_t y = 0; y < pairs.size(); ++y) {
          const auto& [wy, sy] = pairs[y];
          const bool expected =
              m.base().partition(ji).same_block(wx, wy) && m.f(ji, wx).same_block(sx, sy);
          CHECK(plus.base().partition(ji).same_block(static_cast<int>(x),
                                                     static_cast<int>(y)) == expected);
        }
      }
    }
    for (const auto& [prop, mask] : m.base().valuation()) {
      for (std::size_t x = 0; x < pairs.size(); ++x)
        CHECK(plus.base().atom_true(prop, static_cast<int>(x)) == mask[pairs[x].first]);
    }
  }
}

TEST_CASE("update_plus can be iterated") {
  Signature sig = dynamic_sig();
  DynamicModel plus = update_plus(model_m1_tilde(sig));
  DynamicModel plus2 = update_plus(plus);
  CHECK(validate(plus2).ok());
  CHECK(plus2.base().world_count() == 4);
  CHECK(plus2.base().worlds()[0] == "((w0,sp),sp)");
}

TEST_CASE("update_plus: empty product is an error") {
  Signature sig = make_sig({"a"}, {"p"}, {{"s0", "p & !p"}});
  EpistemicModel m = build_epistemic_model({"w0"}, sig.agents, {}, {{"p", {}}});
  PerWorldF f{{Partition::identity(1)}};
  DynamicModel d = build_dynamic_model_from_partitions(m, sig, f);
  CHECK_THROWS_AS(update_plus(d), EmptyProduct);
}
