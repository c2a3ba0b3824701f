#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lz/ast.hpp"
#include "lz/checker.hpp"
#include "lz/reducer.hpp"
#include "lz/theory.hpp"

namespace lz {

struct ExtractionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Disjunct {
  enum class Side { Left, Right };
  Side side;
  ProofPtr subproof;
  FormulaPtr formula;
};

struct WitnessResult {
  TermPtr term;       // closed
  ProofPtr subproof;  // checks against the goal body at `term`
};

struct NumeralWitness {
  std::uint64_t value = 0;
  // t0, t1, ..., tn; length value + 1.
  std::vector<TermPtr> chain;
  // value proofs of t_i = S(t_{i+1}) followed by one proof of t_n = 0,
  // all with = expanded.
  std::vector<ProofPtr> equation_proofs;
};

// Evaluates a closed proof of a disjunction to an injection and returns the
// decided side; the subproof re-checks against the returned disjunct.
Disjunct extract_disjunct(const Theory& theory, const ProofPtr& proof,
                          const FormulaPtr& goal,
                          std::uint64_t fuel = 1'000'000);

// Evaluates a closed proof of an existential to a witness pair. Free
// first-order variables of the witness term are closed by substituting the
// empty set; the subproof re-checks against the instantiated body.
WitnessResult extract_witness(const Theory& theory, const ProofPtr& proof,
                              const FormulaPtr& goal,
                              std::uint64_t fuel = 1'000'000);

// Extracts the natural number denoted by a closed proof of t in omega,
// together with the witness chain and its equation proofs. Every
// intermediate canonical form is re-checked; a malformed one is reported as
// a kernel bug.
NumeralWitness extract_numeral(const Theory& theory, const ProofPtr& proof,
                               std::uint64_t fuel = 1'000'000);

// The canonical proof of a comprehension axiom instance:
//   fun f... => fun a... => fun c =>
//     <fun (x : c in t_A(a...)) => axprop(...)(x),
//      fun (x : phi_A(c,a...)) => axrep(...)(x)>
// It checks against check_axiom_instance(theory, ctor_name, params).
ProofPtr axiom_proof(const Theory& theory, const std::string& ctor_name,
                     const std::vector<FormulaParam>& params);

// The canonical proof of the epsilon-induction axiom for a schema; checks
// against induction_axiom_formula. Throws TheoryError when the theory has
// no induction.
ProofPtr induction_proof(const Theory& theory, const std::string& schema_var,
                         const std::vector<std::string>& schema_params,
                         const FormulaPtr& schema);

// Proof of t = t (expanded equality).
ProofPtr eq_refl_proof(const TermPtr& t);

// Given p : t = u and q : u = s (expanded), a proof of t = s.
ProofPtr eq_transitivity_proof(const TermPtr& t, const TermPtr& u,
                               const TermPtr& s, const ProofPtr& p,
                               const ProofPtr& q);

}  // namespace lz
