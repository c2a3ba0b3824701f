#pragma once

#include <string>
#include <vector>

#include "lz/ast.hpp"
#include "lz/theory.hpp"

namespace lz::fixtures {

// ---- Crabbe counterexample (izf-r-minus) ----------------------------------
// t = sep[x : x in x -> false](0)
// N = fun (y : t in t) => snd (axprop{sep}(t; 0)(y)) y        : t in t -> false
// M = fun (x : t in 0) => N (axrep{sep}(t; 0)(<x, N>))        : t in 0 -> false

CtorInstance crabbe_inst();
TermPtr crabbe_t();
ProofPtr crabbe_N();
ProofPtr crabbe_M();
FormulaPtr crabbe_N_type();
FormulaPtr crabbe_M_type();

// ---- circular-sets counterexample (nonwf theory) --------------------------
// O = fun (x : d in d) => snd (axprop{d}(d)(x)) x             : d in d -> d in d
// N = axrep{c}(d)(proof of d = c)                             : d in c
// M = O (axrep{d}(d)(<N, O>))                                 : d in d

CtorInstance c_inst();
CtorInstance d_inst();
ProofPtr nonwf_O();
ProofPtr nonwf_N();
ProofPtr nonwf_M();
FormulaPtr nonwf_N_type();
FormulaPtr nonwf_M_type();

// ---- independent numeral-membership oracle --------------------------------

CtorInstance omega_inst();
// Hand-built reflexivity proof (independent of the library helper).
ProofPtr hand_refl(const TermPtr& t);
// Proof of numeral(k) in omega by direct axiom introductions; the
// brute-force oracle for numeral extraction.
ProofPtr numeral_in_omega(long long k);

// ---- corpus ---------------------------------------------------------------

struct CorpusEntry {
  std::string name;
  ProofPtr proof;
  FormulaPtr formula;
};

// Closed well-typed proofs under izf-r-minus, covering every proof-term
// constructor, the generated axiom proofs (including ind users), numerals
// and the Crabbe terms.
std::vector<CorpusEntry> izf_corpus();

// Set terms exercising every constructor, with nesting.
std::vector<TermPtr> corpus_terms();

// Formulas exercising every connective and both sugars.
std::vector<FormulaPtr> corpus_formulas();

}  // namespace lz::fixtures
