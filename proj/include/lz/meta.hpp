#pragma once

#include <string>

#include "lz/ast.hpp"
#include "lz/theory.hpp"

namespace lz {

// A class given by a formula with one distinguished free variable (the
// membership hole): T(t) is body[hole := t].
struct ClassPredicate {
  std::string hole;
  FormulaPtr body;

  FormulaPtr apply(const TermPtr& t) const {
    return subst_fo(body, hole, t);
  }
  // Free variables of the class other than the hole.
  NameSet parameters() const {
    NameSet fv = free_fo_vars(body);
    fv.erase(hole);
    return fv;
  }
};

// The trivial class x = x (expanded); every set belongs to it.
ClassPredicate trivial_class();

// Defining formula of a set term: a term-free formula phi(x, a...) whose
// models of x are exactly the denotation of the term. `hole` names the
// distinguished variable (freshened against the term's free variables).
// Self-referential constructors (omega, and the circular constants of the
// non-well-founded theory) get the fixed-point form, with the constructor
// occurrence replaced by the hole variable.
FormulaPtr define_term(const Theory& theory, const TermPtr& term,
                       const std::string& hole = "x");

// Rewrites every atom mentioning a composite term into an existential over
// defining formulas, leaving a term-free formula.
FormulaPtr eliminate_terms(const Theory& theory, const FormulaPtr& formula);

// Restriction of a formula to the class T: quantifiers acquire a T-guard
// (forall becomes implication, exists becomes conjunction), membership atoms
// relativize their terms.
FormulaPtr relativize_formula(const FormulaPtr& formula,
                              const ClassPredicate& T);

// Restriction of a set term to the class T: variables, empty, omega, pairs
// and unions are untouched (beyond their subterms); a power set is cut down
// by separation on T; carried formulas of separation are relativized; carried
// formulas of replacement additionally constrain the output to T.
TermPtr relativize_term(const TermPtr& term, const ClassPredicate& T);

}  // namespace lz
