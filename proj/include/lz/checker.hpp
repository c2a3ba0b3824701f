#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lz/ast.hpp"
#include "lz/theory.hpp"

namespace lz {

// Ordered for reproducible error messages; semantically a set.
class Context {
 public:
  Context() = default;

  // Returns false (and leaves the context unchanged) on a duplicate name.
  bool bind(const std::string& var, FormulaPtr formula);
  Context extended(const std::string& var, FormulaPtr formula) const;

  const FormulaPtr* lookup(const std::string& var) const;
  bool contains(const std::string& var) const { return lookup(var) != nullptr; }

  NameSet domain() const;
  // Free first-order variables of all formulas in the range.
  NameSet range_fo_vars() const;

  const std::vector<std::pair<std::string, FormulaPtr>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::string, FormulaPtr>> entries_;
};

enum class CheckErrorKind {
  UnboundVariable,
  TypeMismatch,
  NotSynthesizable,
  SideConditionViolated,
  Arity,
  UnknownCtor,
  InductionUnavailable,
};

struct CheckError {
  CheckErrorKind kind;
  // Child indices from the root of the checked proof term to the offender.
  std::vector<int> path;
  std::string message;
  FormulaPtr expected;  // may be null
  FormulaPtr actual;    // may be null
};

std::string to_string(CheckErrorKind kind);

using SynthesisResult = std::variant<FormulaPtr, CheckError>;

// Bidirectional checking of lambda-Z proof terms against a theory.
SynthesisResult synthesize(const Theory& theory, const Context& ctx,
                           const ProofPtr& proof);
std::optional<CheckError> check(const Theory& theory, const Context& ctx,
                                const ProofPtr& proof, const FormulaPtr& goal);

// The closed universal axiom formula for a constructor instance, with the
// biconditional expanded: forall params, args, member.
//   (member in t_A(args) -> phi_A) /\ (phi_A -> member in t_A(args)).
// `params` supplies the carried formula for Sep/Repl-style constructors.
FormulaPtr check_axiom_instance(const Theory& theory,
                                const std::string& ctor_name,
                                const std::vector<FormulaParam>& params);

// The induction axiom formula for the schema phi(var, param_vars):
//   forall params. (forall a. (forall b in a. phi(b)) -> phi(a))
//     -> forall a. phi(a)
FormulaPtr induction_axiom_formula(const std::string& schema_var,
                                   const std::vector<std::string>& schema_params,
                                   const FormulaPtr& schema);

}  // namespace lz
