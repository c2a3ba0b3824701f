#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lz/ast.hpp"

namespace lz {

enum class ParamSpec { None, OneBinder, TwoBinder };

// One comprehension axiom as data: the set-term constructor t_A together with
// its defining formula schema phi_A. The schema's distinguished holes are the
// member variable, the argument variables and (for Sep/Repl) Formula::Hole
// nodes standing for the carried formula.
struct AxiomDescriptor {
  std::string name;
  int term_arity = 0;
  ParamSpec param_spec = ParamSpec::None;
  std::string member_var;
  std::vector<std::string> arg_vars;
  FormulaPtr schema;
};

struct Theory {
  std::string name;
  std::vector<AxiomDescriptor> descriptors;
  bool has_induction = false;

  const AxiomDescriptor* find(const std::string& ctor_name) const;
};

struct TheoryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// IZF with Replacement, minus the Leibniz schema: empty, pair, omega, sep,
// union, power, repl; epsilon-induction available.
Theory izf_r_minus();

// The two-axiom non-well-founded theory: constants c and d, no induction.
Theory nonwf_theory();

int binder_count(ParamSpec spec);

// Ensures the instance resolves in the theory and matches the descriptor's
// arities; throws TheoryError otherwise.
void validate_instance(const Theory& theory, const CtorInstance& inst);

// The defining formula phi_A(member, args) of a constructor instance, with
// the carried formula spliced in capture-avoidingly.
FormulaPtr phi_a(const Theory& theory, const CtorInstance& inst,
                 const TermPtr& member);

// The membership atom `member in t_A(args)`.
FormulaPtr member_of_instance(const CtorInstance& inst, const TermPtr& member);

// Descriptor invariant violations, empty when the theory is well-formed.
std::vector<std::string> validate_theory(const Theory& theory);

}  // namespace lz
