#pragma once

#include <memory>
#include <string>

namespace epikit {

class Formula;
using FormulaRef = std::shared_ptr<const Formula>;

// Language fragments, ordered from plain epistemic logic upward. `mixed`
// marks formulas combining [A:s] with xi or [s], which have no semantics here.
enum class Fragment { el, el_plus, al, dl, dl_plus, mixed };

// Immutable formula AST. Derived connectives (|, ->, <->, Khat, <s>) are
// desugared into the core constructors at build time, so the tree only ever
// contains the seven kinds below.
class Formula {
public:
  enum class Kind { atom, xi, lnot, land, knows, update_dyn, update_am };

  Kind kind() const { return kind_; }

  const std::string& prop() const { return s1_; }        // atom
  const std::string& agent() const { return s1_; }       // knows, xi
  const std::string& performed() const { return s2_; }   // xi
  const std::string& confusable() const { return s3_; }  // xi
  const std::string& action() const { return s2_; }      // update_dyn, update_am
  const std::string& model_name() const { return s1_; }  // update_am

  const FormulaRef& lhs() const { return c1_; }    // land
  const FormulaRef& rhs() const { return c2_; }    // land
  const FormulaRef& child() const { return c1_; }  // lnot, knows, update_dyn, update_am

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  static FormulaRef atom(std::string prop);
  static FormulaRef xi(std::string agent, std::string performed, std::string confusable);
  static FormulaRef lnot(FormulaRef f);
  static FormulaRef land(FormulaRef l, FormulaRef r);
  static FormulaRef knows(std::string agent, FormulaRef f);
  static FormulaRef update(std::string action, FormulaRef f);  // [s]f
  static FormulaRef am_update(std::string model, std::string action, FormulaRef f);  // [A:s]f

  // Sugar; desugared on construction.
  static FormulaRef lor(FormulaRef l, FormulaRef r);
  static FormulaRef implies(FormulaRef l, FormulaRef r);
  static FormulaRef iff(FormulaRef l, FormulaRef r);
  static FormulaRef khat(std::string agent, FormulaRef f);    // !K_a !f
  static FormulaRef diamond(std::string action, FormulaRef f);  // !<s desugared> = ![s]!f

protected:
  Formula(Kind k, std::string s1, std::string s2, std::string s3, FormulaRef c1, FormulaRef c2)
      : kind_(k),
        s1_(std::move(s1)),
        s2_(std::move(s2)),
        s3_(std::move(s3)),
        c1_(std::move(c1)),
        c2_(std::move(c2)) {}

private:
  Kind kind_;
  std::string s1_, s2_, s3_;
  FormulaRef c1_, c2_;
};

// Smallest fragment containing the formula.
Fragment fragment(const Formula& f);
bool in_fragment(const Formula& f, Fragment frag);
const char* fragment_name(Fragment frag);

// Action nesting depth d: atoms and xi count 0, [s] adds 1, everything else
// passes through (conjunction takes the max). Rejects [A:s] formulas.
int action_depth(const Formula& f);

// Weight w: atoms and xi weigh 1, every connective adds 1 on top of the max
// of its children. Rejects [A:s] formulas.
int weight(const Formula& f);

// Concrete syntax with minimal parenthesization; parse_formula inverts it.
std::string render_formula(const Formula& f);
inline std::string render_formula(const FormulaRef& f) { return render_formula(*f); }

}  // namespace epikit
