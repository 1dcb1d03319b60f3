#pragma once

#include <string_view>

#include "epikit/formula.hpp"
#include "epikit/signature.hpp"

namespace epikit {

// Parses the concrete formula syntax. Grammar, loosest to tightest binding:
//
//   formula := iff
//   iff     := imp ("<->" imp)*            (left-associative)
//   imp     := or ("->" or)*               (right-associative)
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | "K_<agent>" unary | "Khat_<agent>" unary
//            | "[" action "]" unary | "<" action ">" unary
//            | "[" model ":" action "]" unary
//            | "xi" "(" agent "," action "," action ")"
//            | prop | "(" formula ")"
//
// All identifiers except the action-model name are resolved against the
// signature; derived connectives are desugared. Formulas mixing [A:s] with
// [s] or xi are rejected.
FormulaRef parse_formula(std::string_view text, const Signature& sig);

}  // namespace epikit
