#include <doctest.h>

#include <random>

#include "epikit/errors.hpp"
#include "epikit/formula.hpp"
#include "epikit/parser.hpp"
#include "epikit/reduction.hpp"

#include "helpers.hpp"

using namespace epikit;
using test_helpers::make_sig;

namespace {

Signature parse_sig() {
  return make_sig({"a", "b"}, {"p", "q"}, {{"sp", "p"}, {"snp", "!p"}});
}

}  // namespace

TEST_CASE("parse: knowledge operator") {
  Signature sig = parse_sig();
  FormulaRef f = parse_formula("K_a p", sig);
  CHECK(*f == *Formula::knows("a", Formula::atom("p")));
}

TEST_CASE("parse: update around disjunction") {
  Signature sig = parse_sig();
  FormulaRef f = parse_formula("[sp] (K_b p | K_b !p)", sig);
  FormulaRef expected = Formula::update(
      "sp", Formula::lor(Formula::knows("b", Formula::atom("p")),
                         Formula::knows("b", Formula::lnot(Formula::atom("p")))));
  CHECK(*f == *expected);
}

TEST_CASE("parse: xi and implication") {
  Signature sig = parse_sig();
  FormulaRef f = parse_formula("xi(a, sp, snp) -> K_a xi(a, sp, snp)", sig);
  FormulaRef xi = Formula::xi("a", "sp", "snp");
  CHECK(*f == *Formula::implies(xi, Formula::knows("a", xi)));
}

TEST_CASE("parse: precedence and associativity") {
  Signature sig = parse_sig();
  // Unary binds tighter than &, & tighter than |, -> is right-associative.
  CHECK(*parse_formula("!p & q", sig) ==
        *Formula::land(Formula::lnot(Formula::atom("p")), Formula::atom("q")));
  CHECK(*parse_formula("K_a p & q", sig) ==
        *Formula::land(Formula::knows("a", Formula::atom("p")), Formula::atom("q")));
  CHECK(*parse_formula("p -> q -> p", sig) ==
        *Formula::implies(Formula::atom("p"),
                          Formula::implies(Formula::atom("q"), Formula::atom("p"))));
  CHECK(*parse_formula("p | q & p", sig) ==
        *Formula::lor(Formula::atom("p"), Formula::land(Formula::atom("q"), Formula::atom("p"))));
  CHECK(*parse_formula("p <-> q <-> p", sig) ==
        *Formula::iff(Formula::iff(Formula::atom("p"), Formula::atom("q")), Formula::atom("p")));
  CHECK(*parse_formula("<sp> p", sig) == *Formula::diamond("sp", Formula::atom("p")));
  CHECK(*parse_formula("Khat_b q", sig) == *Formula::khat("b", Formula::atom("q")));
}

TEST_CASE("parse: action-model update") {
  Signature sig = parse_sig();
  CHECK(*parse_formula("[A0:sp] p", sig) ==
        *Formula::am_update("A0", "sp", Formula::atom("p")));
}

TEST_CASE("parse: syntax errors carry a position") {
  Signature sig = parse_sig();
  CHECK_THROWS_AS(parse_formula("K_a (p", sig), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p &", sig), SyntaxError);
  CHECK_THROWS_AS(parse_formula("", sig), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p # q", sig), SyntaxError);
  try {
    parse_formula("p & & q", sig);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("parse: unknown identifiers carry name and kind") {
  Signature sig = parse_sig();
  try {
    parse_formula("K_a z", sig);
    FAIL("expected UnknownIdentifier");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.name == "z");
    CHECK(e.kind == "prop");
  }
  CHECK_THROWS_AS(parse_formula("K_z p", sig), UnknownIdentifier);
  CHECK_THROWS_AS(parse_formula("[zz] p", sig), UnknownIdentifier);
  CHECK_THROWS_AS(parse_formula("xi(a, sp, zz)", sig), UnknownIdentifier);
}

TEST_CASE("parse: mixed update operators are rejected") {
  Signature sig = parse_sig();
  CHECK_THROWS_AS(parse_formula("[A0:sp] [sp] p", sig), UnsupportedFragment);
  CHECK_THROWS_AS(parse_formula("[A0:sp] xi(a,sp,snp)", sig), UnsupportedFragment);
}

TEST_CASE("render: inverse of parse") {
  CHECK(render_formula(Formula::knows("a", Formula::atom("p"))) == "K_a p");
  CHECK(render_formula(Formula::lnot(Formula::knows("a", Formula::lnot(Formula::atom("p"))))) ==
        "!K_a !p");
  CHECK(render_formula(Formula::am_update("A0", "sp", Formula::atom("p"))) == "[A0:sp] p");
}

TEST_CASE("render/parse round-trip on random formulas") {
  Signature sig = parse_sig();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    FormulaRef f = random_formula(rng, sig, 5, Fragment::dl_plus);
    CHECK(*parse_formula(render_formula(f), sig) == *f);
  }
  // The action-model operator is not produced by the generator.
  FormulaRef am = Formula::am_update(
      "A0", "sp", Formula::land(Formula::atom("p"), Formula::lnot(Formula::atom("q"))));
  CHECK(*parse_formula(render_formula(am), sig) == *am);
}

TEST_CASE("fragment classification") {
  Signature sig = parse_sig();
  CHECK(fragment(*parse_formula("p & K_a p", sig)) == Fragment::el);
  CHECK(fragment(*parse_formula("xi(a,sp,snp)", sig)) == Fragment::el_plus);
  CHECK(fragment(*parse_formula("[A0:sp] p", sig)) == Fragment::al);
  CHECK(fragment(*parse_formula("[sp] p", sig)) == Fragment::dl);
  CHECK(fragment(*parse_formula("[sp] xi(a,sp,snp)", sig)) == Fragment::dl_plus);
  CHECK(fragment(*Formula::am_update("A0", "sp", Formula::xi("a", "sp", "snp"))) ==
        Fragment::mixed);

  CHECK(in_fragment(*parse_formula("p", sig), Fragment::el));
  CHECK(in_fragment(*parse_formula("p", sig), Fragment::dl_plus));
  CHECK(!in_fragment(*parse_formula("[sp] p", sig), Fragment::el_plus));
}

TEST_CASE("action_depth") {
  Signature sig = parse_sig();
  CHECK(action_depth(*Formula::atom("p")) == 0);
  CHECK(action_depth(*parse_formula("[sp] [snp] p", sig)) == 2);
  CHECK(action_depth(*Formula::knows("a", Formula::atom("p"))) == 0);
  CHECK(action_depth(*Formula::xi("a", "sp", "snp")) == 0);
  CHECK(action_depth(*parse_formula("[sp] p & K_a p", sig)) == 1);
  CHECK_THROWS_AS(action_depth(*Formula::am_update("A0", "sp", Formula::atom("p"))),
                  UnsupportedFragment);
}

TEST_CASE("weight") {
  Signature sig = parse_sig();
  CHECK(weight(*Formula::atom("p")) == 1);
  CHECK(weight(*Formula::land(Formula::atom("p"), Formula::lnot(Formula::atom("q")))) == 3);
  CHECK(weight(*Formula::xi("a", "sp", "snp")) == 1);
  CHECK(weight(*parse_formula("[sp] K_a p", sig)) == 3);
  CHECK_THROWS_AS(weight(*Formula::am_update("A0", "sp", Formula::atom("p"))),
                  UnsupportedFragment);
}

namespace {

void collect_children(const Formula& f, std::vector<FormulaRef>& out) {
  switch (f.kind()) {
    case Formula::Kind::atom:
    case Formula::Kind::xi:
      return;
    case Formula::Kind::land:
      out.push_back(f.lhs());
      out.push_back(f.rhs());
      return;
    default:
      out.push_back(f.child());
  }
}

}  // namespace

TEST_CASE("measures: weight strictly decreases, depth never increases, on subformulas") {
  Signature sig = parse_sig();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    FormulaRef f = random_formula(rng, sig, 5, Fragment::dl_plus);
    std::vector<FormulaRef> stack{f};
    while (!stack.empty()) {
      FormulaRef cur = stack.back();
      stack.pop_back();
      std::vector<FormulaRef> children;
      collect_children(*cur, children);
      for (const auto& child : children) {
        CHECK(weight(*child) < weight(*cur));
        CHECK(action_depth(*child) <= action_depth(*cur));
        stack.push_back(child);
      }
    }
  }
}
