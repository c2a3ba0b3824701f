#pragma once

#include <string>

#include "lz/ast.hpp"

namespace lz {

// Concrete-syntax rendering. Everything prints in core form except the two
// input sugars, which are restored: expanded equality prints as `t = u` and
// successor terms print as `S(t)`.
std::string print_term(const TermPtr& t);
std::string print_formula(const FormulaPtr& f);
std::string print_proof(const ProofPtr& p);

// The schema parameters of an `ind` proof term print in first-occurrence
// order of the schema's free variables; this returns that order.
std::vector<std::string> ordered_free_fo_vars(const FormulaPtr& f);

}  // namespace lz
