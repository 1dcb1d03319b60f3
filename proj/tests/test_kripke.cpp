#include <doctest.h>

#include <random>

#include "epikit/errors.hpp"
#include "epikit/kripke.hpp"
#include "epikit/parser.hpp"
#include "epikit/reduction.hpp"
#include "epikit/semantics.hpp"

#include "helpers.hpp"

using namespace epikit;
using test_helpers::make_sig;
using test_helpers::model_m0;
using test_helpers::model_m1;
using test_helpers::naive_bisimilar;
using test_helpers::sig0;
using test_helpers::sig1;

TEST_CASE("build: closure yields one class per connected component") {
  Signature sig = sig0();
  EpistemicModel m0 = model_m0(sig);
  CHECK(m0.partition("a").block_count() == 1);
  CHECK(m0.partition("b").block_count() == 1);
  CHECK(m0.atom_true("p", 0));
  CHECK(!m0.atom_true("p", 1));
}

TEST_CASE("build: single world gets reflexive singletons") {
  EpistemicModel m = build_epistemic_model({"w0"}, {"a", "b"}, {}, {});
  CHECK(m.partition("a").block_count() == 1);
  CHECK(m.partition("b").block_count() == 1);
  CHECK(m.world_count() == 1);
}

TEST_CASE("build: transitive closure merges chains") {
  EpistemicModel m = build_epistemic_model({"w0", "w1", "w2"}, {"a"},
                                           {{"a", "w0", "w1"}, {"a", "w1", "w2"}}, {});
  CHECK(m.partition("a").block_count() == 1);
  CHECK(m.partition("a").same_block(0, 2));
}

TEST_CASE("build: errors") {
  CHECK_THROWS_AS(build_epistemic_model({}, {"a"}, {}, {}), EmptyModel);
  CHECK_THROWS_AS(build_epistemic_model({"w0"}, {"a"}, {{"a", "w0", "w9"}}, {}), UnknownWorld);
  CHECK_THROWS_AS(build_epistemic_model({"w0", "w0"}, {"a"}, {}, {}), NameCollision);
  CHECK_THROWS_AS(build_epistemic_model({"w0"}, {"a"}, {{"z", "w0", "w0"}}, {}),
                  UnknownIdentifier);
  CHECK_THROWS_AS(build_epistemic_model({"w0"}, {"a"}, {}, {{"p", {"w9"}}}), UnknownWorld);
}

TEST_CASE("partitions cover the world set exactly") {
  Signature sig = make_sig({"a", "b", "c"}, {"p", "q"}, {{"s0", "p"}});
  std::mt19937_64 seeds(3);
  for (int i = 0; i < 50; ++i) {
    RandomModelParams params{6, 3, 2, seeds()};
    EpistemicModel m = random_epistemic_model(params, sig);
    for (std::size_t j = 0; j < m.agents().size(); ++j) {
      const Partition& p = m.partition(static_cast<int>(j));
      REQUIRE(p.size() == m.world_count());
      int covered = 0;
      for (const auto& block : p.blocks()) covered += static_cast<int>(block.size());
      CHECK(covered == m.world_count());
      for (int w = 0; w < m.world_count(); ++w) {
        CHECK(p.block(w) >= 0);
        CHECK(p.block(w) < p.block_count());
      }
    }
  }
}

TEST_CASE("restrict: public announcement of p on M0") {
  Signature sig = sig0();
  EpistemicModel m0 = model_m0(sig);
  EpistemicModel r = restrict(m0, parse_formula("p", sig));
  CHECK(r.worlds() == std::vector<std::string>{"w0"});
  CHECK(r.atom_true("p", 0));
}

TEST_CASE("restrict: tautology restriction is identity") {
  Signature sig = sig0();
  EpistemicModel m0 = model_m0(sig);
  CHECK(restrict(m0, parse_formula("p | !p", sig)) == m0);
}

TEST_CASE("restrict: M1 to the q-worlds") {
  Signature sig = sig1();
  EpistemicModel r = restrict(model_m1(sig), parse_formula("q", sig));
  CHECK(r.worlds() == std::vector<std::string>{"w0", "w1"});
  CHECK(r.partition("a").block_count() == 1);
  CHECK(r.partition("b").block_count() == 1);
}

TEST_CASE("restrict: errors") {
  Signature sig = sig0();
  EpistemicModel m0 = model_m0(sig);
  CHECK_THROWS_AS(restrict(m0, parse_formula("p & !p", sig)), EmptyRestriction);
  CHECK_THROWS_AS(restrict(m0, Formula::xi("a", "sp", "snp")), UnsupportedFragment);
}

TEST_CASE("restrict is idempotent") {
  Signature sig = sig1();
  EpistemicModel m1 = model_m1(sig);
  FormulaRef q = parse_formula("q", sig);
  CHECK(restrict(restrict(m1, q), q) == restrict(m1, q));
}

TEST_CASE("bisimilar: identity and atom mismatch") {
  Signature sig = sig0();
  EpistemicModel m0 = model_m0(sig);
  CHECK(bisimilar(m0, "w0", m0, "w0"));
  CHECK(!bisimilar(m0, "w0", m0, "w1"));
}

TEST_CASE("disjoint_union: sizes, classes, names") {
  Signature sig = sig0();
  EpistemicModel m0 = model_m0(sig);
  EpistemicModel u = disjoint_union(m0, m0);
  CHECK(u.world_count() == 4);
  CHECK(u.partition("a").block_count() == 2);
  CHECK(u.partition("b").block_count() == 2);
  // Second copy renamed apart.
  CHECK(u.worlds() == std::vector<std::string>{"w0", "w1", "w0'", "w1'"});
  CHECK(bisimilar(u, "w0'", m0, "w0"));
  CHECK(bisimilar(u, "w0", m0, "w0"));
}

TEST_CASE("bisimilar is an equivalence on sampled models") {
  Signature sig = make_sig({"a", "b"}, {"p"}, {{"s0", "p"}});
  std::mt19937_64 seeds(17);
  std::vector<EpistemicModel> models;
  for (int i = 0; i < 6; ++i)
    models.push_back(random_epistemic_model({4, 2, 1, seeds()}, sig));

  for (const auto& m : models) {
    for (int w = 0; w < m.world_count(); ++w)
      CHECK(bisimilar(m, m.worlds()[w], m, m.worlds()[w]));
  }
  for (const auto& m1 : models) {
    for (const auto& m2 : models) {
      for (int w1 = 0; w1 < m1.world_count(); ++w1) {
        for (int w2 = 0; w2 < m2.world_count(); ++w2) {
          CHECK(bisimilar(m1, m1.worlds()[w1], m2, m2.worlds()[w2]) ==
                bisimilar(m2, m2.worlds()[w2], m1, m1.worlds()[w1]));
        }
      }
    }
  }
  // Transitivity on a sample of triples.
  for (std::size_t i = 0; i + 2 < models.size(); ++i) {
    const auto& ma = models[i];
    const auto& mb = models[i + 1];
    const auto& mc = models[i + 2];
    for (int x = 0; x < ma.world_count(); ++x) {
      for (int y = 0; y < mb.world_count(); ++y) {
        if (!bisimilar(ma, ma.worlds()[x], mb, mb.worlds()[y])) continue;
        for (int z = 0; z < mc.world_count(); ++z) {
          if (bisimilar(mb, mb.worlds()[y], mc, mc.worlds()[z]))
            CHECK(bisimilar(ma, ma.worlds()[x], mc, mc.worlds()[z]));
        }
      }
    }
  }
}

TEST_CASE("bisimilar agrees with the naive fixpoint oracle") {
  Signature sig = make_sig({"a", "b"}, {"p", "q"}, {{"s0", "p"}});
  std::mt19937_64 seeds(23);
  for (int i = 0; i < 40; ++i) {
    EpistemicModel m1 = random_epistemic_model({4, 2, 2, seeds()}, sig);
    EpistemicModel m2 = random_epistemic_model({5, 2, 2, seeds()}, sig);
    for (int w1 = 0; w1 < m1.world_count(); ++w1) {
      for (int w2 = 0; w2 < m2.world_count(); ++w2) {
        CHECK(bisimilar(m1, m1.worlds()[w1], m2, m2.worlds()[w2]) ==
              naive_bisimilar(m1, m1.worlds()[w1], m2, m2.worlds()[w2]));
      }
    }
  }
}

TEST_CASE("bisimilar pointed models agree on L_EL formulas up to depth 4") {
  Signature sig = make_sig({"a", "b"}, {"p", "q"}, {{"s0", "p"}});
  std::mt19937_64 seeds(31);
  std::mt19937_64 formula_rng(32);
  int agreements_checked = 0;
  for (int i = 0; i < 30; ++i) {
    EpistemicModel m1 = random_epistemic_model({4, 2, 2, seeds()}, sig);
    EpistemicModel m2 = random_epistemic_model({4, 2, 2, seeds()}, sig);
    EvalContext c1(m1);
    EvalContext c2(m2);
    for (int w1 = 0; w1 < m1.world_count(); ++w1) {
      for (int w2 = 0; w2 < m2.world_count(); ++w2) {
        if (!bisimilar(m1, m1.worlds()[w1], m2, m2.worlds()[w2])) continue;
        for (int k = 0; k < 10; ++k) {
          FormulaRef f = random_formula(formula_rng, sig, 4, Fragment::el);
          CHECK(c1.eval(w1, f) == c2.eval(w2, f));
          ++agreements_checked;
        }
      }
    }
  }
  CHECK(agreements_checked > 0);
}
