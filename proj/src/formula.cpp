#include "epikit/formula.hpp"

#include <algorithm>

#include "epikit/errors.hpp"

namespace epikit {

namespace {

FormulaRef make(Formula::Kind k, std::string s1 = {}, std::string s2 = {}, std::string s3 = {},
                FormulaRef c1 = nullptr, FormulaRef c2 = nullptr) {
  struct Access : Formula {
    Access(Kind k, std::string s1, std::string s2, std::string s3, FormulaRef c1, FormulaRef c2)
        : Formula(k, std::move(s1), std::move(s2), std::move(s3), std::move(c1), std::move(c2)) {}
  };
  return std::make_shared<const Access>(k, std::move(s1), std::move(s2), std::move(s3),
                                        std::move(c1), std::move(c2));
}

struct FragmentFlags {
  bool has_xi = false;
  bool has_dyn = false;
  bool has_am = false;
};

void scan(const Formula& f, FragmentFlags& flags) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      return;
    case Formula::Kind::xi:
      flags.has_xi = true;
      return;
    case Formula::Kind::lnot:
    case Formula::Kind::knows:
      scan(*f.child(), flags);
      return;
    case Formula::Kind::land:
      scan(*f.lhs(), flags);
      scan(*f.rhs(), flags);
      return;
    case Formula::Kind::update_dyn:
      flags.has_dyn = true;
      scan(*f.child(), flags);
      return;
    case Formula::Kind::update_am:
      flags.has_am = true;
      scan(*f.child(), flags);
      return;
  }
}

void reject_am(const Formula& f, const char* op) {
  if (in_fragment(f, Fragment::dl_plus)) return;
  throw UnsupportedFragment(std::string(op) + " is defined on L_DL+ only; formula contains [A:s]");
}

}  // namespace

bool Formula::operator==(const Formula& other) const {
  if (kind_ != other.kind_) return false;
  if (s1_ != other.s1_ || s2_ != other.s2_ || s3_ != other.s3_) return false;
  if ((c1_ == nullptr) != (other.c1_ == nullptr)) return false;
  if (c1_ && !(*c1_ == *other.c1_)) return false;
  if ((c2_ == nullptr) != (other.c2_ == nullptr)) return false;
  if (c2_ && !(*c2_ == *other.c2_)) return false;
  return true;
}

FormulaRef Formula::atom(std::string prop) { return make(Kind::atom, std::move(prop)); }

FormulaRef Formula::xi(std::string agent, std::string performed, std::string confusable) {
  return make(Kind::xi, std::move(agent), std::move(performed), std::move(confusable));
}

FormulaRef Formula::lnot(FormulaRef f) {
  return make(Kind::lnot, {}, {}, {}, std::move(f));
}

FormulaRef Formula::land(FormulaRef l, FormulaRef r) {
  return make(Kind::land, {}, {}, {}, std::move(l), std::move(r));
}

FormulaRef Formula::knows(std::string agent, FormulaRef f) {
  return make(Kind::knows, std::move(agent), {}, {}, std::move(f));
}

FormulaRef Formula::update(std::string action, FormulaRef f) {
  return make(Kind::update_dyn, {}, std::move(action), {}, std::move(f));
}

FormulaRef Formula::am_update(std::string model, std::string action, FormulaRef f) {
  return make(Kind::update_am, std::move(model), std::move(action), {}, std::move(f));
}

FormulaRef Formula::lor(FormulaRef l, FormulaRef r) {
  return lnot(land(lnot(std::move(l)), lnot(std::move(r))));
}

FormulaRef Formula::implies(FormulaRef l, FormulaRef r) {
  return lnot(land(std::move(l), lnot(std::move(r))));
}

FormulaRef Formula::iff(FormulaRef l, FormulaRef r) {
  FormulaRef forward = implies(l, r);
  FormulaRef backward = implies(std::move(r), std::move(l));
  return land(std::move(forward), std::move(backward));
}

FormulaRef Formula::khat(std::string agent, FormulaRef f) {
  return lnot(knows(std::move(agent), lnot(std::move(f))));
}

FormulaRef Formula::diamond(std::string action, FormulaRef f) {
  return lnot(update(std::move(action), lnot(std::move(f))));
}

Fragment fragment(const Formula& f) {
  FragmentFlags flags;
  scan(f, flags);
  if (flags.has_am && (flags.has_xi || flags.has_dyn)) return Fragment::mixed;
  if (flags.has_am) return Fragment::al;
  if (flags.has_dyn) return flags.has_xi ? Fragment::dl_plus : Fragment::dl;
  if (flags.has_xi) return Fragment::el_plus;
  return Fragment::el;
}

bool in_fragment(const Formula& f, Fragment frag) {
  FragmentFlags flags;
  scan(f, flags);
  switch (frag) {
    case Fragment::el:
      return !flags.has_xi && !flags.has_dyn && !flags.has_am;
    case Fragment::el_plus:
      return !flags.has_dyn && !flags.has_am;
    case Fragment::al:
      return !flags.has_xi && !flags.has_dyn;
    case Fragment::dl:
      return !flags.has_xi && !flags.has_am;
    case Fragment::dl_plus:
      return !flags.has_am;
    case Fragment::mixed:
      return true;
  }
  return false;
}

const char* fragment_name(Fragment frag) {
  switch (frag) {
    case Fragment::el: return "L_EL";
    case Fragment::el_plus: return "L_EL+";
    case Fragment::al: return "L_AL";
    case Fragment::dl: return "L_DL";
    case Fragment::dl_plus: return "L_DL+";
    case Fragment::mixed: return "mixed";
  }
  return "?";
}

int action_depth(const Formula& f) {
  reject_am(f, "action_depth");
  switch (f.kind()) {
    case Formula::Kind::atom:
    case Formula::Kind::xi:
      return 0;
    case Formula::Kind::lnot:
    case Formula::Kind::knows:
      return action_depth(*f.child());
    case Formula::Kind::land:
      return std::max(action_depth(*f.lhs()), action_depth(*f.rhs()));
    case Formula::Kind::update_dyn:
      return action_depth(*f.child()) + 1;
    case Formula::Kind::update_am:
      break;
  }
  throw UnsupportedFragment("action_depth: [A:s] operator not supported");
}

int weight(const Formula& f) {
  reject_am(f, "weight");
  switch (f.kind()) {
    case Formula::Kind::atom:
    case Formula::Kind::xi:
      return 1;
    case Formula::Kind::lnot:
    case Formula::Kind::knows:
    case Formula::Kind::update_dyn:
      return weight(*f.child()) + 1;
    case Formula::Kind::land:
      return std::max(weight(*f.lhs()), weight(*f.rhs())) + 1;
    case Formula::Kind::update_am:
      break;
  }
  throw UnsupportedFragment("weight: [A:s] operator not supported");
}

namespace {

// Unary operators bind tighter than &, so a conjunction under a unary
// operator (or on the right of another &) needs parentheses.
std::string render_operand(const Formula& f) {
  std::string s = render_formula(f);
  if (f.kind() == Formula::Kind::land) return "(" + s + ")";
  return s;
}

}  // namespace

std::string render_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      return f.prop();
    case Formula::Kind::xi:
      return "xi(" + f.agent() + "," + f.performed() + "," + f.confusable() + ")";
    case Formula::Kind::lnot:
      return "!" + render_operand(*f.child());
    case Formula::Kind::land:
      return render_formula(*f.lhs()) + " & " + render_operand(*f.rhs());
    case Formula::Kind::knows:
      return "K_" + f.agent() + " " + render_operand(*f.child());
    case Formula::Kind::update_dyn:
      return "[" + f.action() + "] " + render_operand(*f.child());
    case Formula::Kind::update_am:
      return "[" + f.model_name() + ":" + f.action() + "] " + render_operand(*f.child());
  }
  return "?";
}

}  // namespace epikit
