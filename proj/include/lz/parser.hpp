#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lz/ast.hpp"
#include "lz/theory.hpp"

namespace lz {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line, int col, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + message),
        line(line),
        col(col) {}
};

// Name resolution for the concrete syntax: identifiers resolve first against
// definitions, then against the theory's nullary constructors, and finally
// as variables.
struct ParseEnv {
  const Theory* theory = nullptr;
  std::map<std::string, TermPtr> terms;
  std::map<std::string, FormulaPtr> formulas;
  std::map<std::string, ProofPtr> proofs;
};

TermPtr parse_term(const std::string& source, const ParseEnv& env = {});
FormulaPtr parse_formula(const std::string& source, const ParseEnv& env = {});
ProofPtr parse_proof(const std::string& source, const ParseEnv& env = {});

// Theory file: a sequence of
//   axiom NAME[member args... : schema](arity)
//   induction on|off
// where the schema may contain `?(t, ...)` holes for a carried formula;
// the hole arity determines the binder count. The result is validated.
Theory parse_theory(const std::string& source, const std::string& name);

struct Definition {
  enum class Kind { Term, Formula, Proof };
  std::string name;
  Kind kind;
  TermPtr term;
  FormulaPtr formula;
  ProofPtr proof;
};

struct Judgment {
  enum class Mode { Check, Synth };
  Mode mode;
  std::string name;
  FormulaPtr goal;  // null for Synth
};

struct ProofScript {
  std::string theory_selector;
  Theory theory;
  std::vector<Definition> defs;
  std::vector<Judgment> judgments;
  ParseEnv env;  // resolved definitions, for later lookups

  const Definition* find(const std::string& name) const;
};

// Script files: an optional `theory NAME-or-path` line (default izf-r-minus),
// `def name := body` with the kind inferred, and `check name : phi` /
// `synth name` judgments. `base_dir` resolves theory file paths.
ProofScript parse_script(const std::string& source,
                         const std::string& base_dir = ".");

}  // namespace lz
