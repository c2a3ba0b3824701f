#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "lz/ast.hpp"

namespace lz {

struct StepOutcome {
  struct Stepped {
    ProofPtr term;
  };
  struct Value {};
  struct Stuck {
    std::string reason;
  };
  std::variant<Stepped, Value, Stuck> outcome;

  bool stepped() const {
    return std::holds_alternative<Stepped>(outcome);
  }
  bool value() const { return std::holds_alternative<Value>(outcome); }
  bool stuck() const { return std::holds_alternative<Stuck>(outcome); }
  const ProofPtr& term() const { return std::get<Stepped>(outcome).term; }
};

// Ascriptions are looked through.
bool is_value(const ProofPtr& term);

// Removes every Ascribe node; reduction operates on the erased term.
ProofPtr erase_ascriptions(const ProofPtr& term);

// One step of the deterministic lazy strategy (weak head, per the
// evaluation contexts: projections, case scrutinee, axProp body, let head,
// application head, magic).
StepOutcome step(const ProofPtr& term);

// One step of unrestricted leftmost-outermost reduction, descending under
// binders, pairs, injections, witnesses and axRep bodies.
StepOutcome full_step(const ProofPtr& term);

enum class Strategy { Lazy, Full };

struct EvalResult {
  struct Normalized {
    ProofPtr value;
    std::uint64_t steps;
  };
  struct FuelExhausted {
    ProofPtr last_term;
    std::uint64_t steps;
  };
  struct CycleDetected {
    std::uint64_t period;
    ProofPtr witness;
    std::uint64_t steps_to_entry;
  };
  struct StuckTerm {
    ProofPtr term;
    std::uint64_t steps;
    std::string reason;
  };
  std::variant<Normalized, FuelExhausted, CycleDetected, StuckTerm> result;
};

struct EvalOptions {
  std::uint64_t fuel = 1'000'000;
  bool detect_cycles = false;
  Strategy strategy = Strategy::Lazy;
  // Alpha-canonical forms kept for recurrence detection.
  std::size_t cycle_window = 64;
};

EvalResult evaluate(const ProofPtr& term, const EvalOptions& options = {});

// Every intermediate term of the reduction sequence, starting with the
// (ascription-erased) input; capped by fuel.
std::vector<ProofPtr> trace(const ProofPtr& term, const EvalOptions& options = {});

}  // namespace lz
