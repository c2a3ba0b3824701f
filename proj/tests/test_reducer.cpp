#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lz/checker.hpp"
#include "lz/extraction.hpp"
#include "lz/reducer.hpp"
#include "support/fixtures.hpp"

using namespace lz;
using namespace lz::mk;

namespace {

ProofPtr step_once(const ProofPtr& p) {
  StepOutcome out = step(p);
  REQUIRE(out.stepped());
  return out.term();
}

}  // namespace

TEST_CASE("values are exactly the introduction forms") {
  ProofPtr refl = eq_refl_proof(empty());
  CHECK(is_value(lam("x", bottom(), var("x"))));
  CHECK(is_value(fo_lam("a", var("x"))));
  CHECK(is_value(inl(var("x"))));
  CHECK(is_value(inr(var("x"))));
  CHECK(is_value(witness(empty(), var("x"))));
  CHECK(is_value(proof_pair(var("x"), var("y"))));
  CHECK(is_value(fixtures::numeral_in_omega(0)));
  CHECK(is_value(ascribe(refl, eq(empty(), empty()))));
  CHECK_FALSE(is_value(app(refl, refl)));
  CHECK_FALSE(is_value(fst(proof_pair(var("x"), var("y")))));
  CHECK_FALSE(is_value(var("x")));
}

TEST_CASE("ascriptions are erased before reduction") {
  FormulaPtr ee = eq(empty(), empty());
  ProofPtr p = app(ascribe(lam("x", ee, ascribe(var("x"), ee)), ee),
                   eq_refl_proof(empty()));
  ProofPtr q = erase_ascriptions(p);
  CHECK(alpha_equal(q, app(lam("x", ee, var("x")), eq_refl_proof(empty()))));
  // step looks through the ascription and beta-reduces.
  CHECK(alpha_equal(step_once(p), eq_refl_proof(empty())));
}

TEST_CASE("beta rules for both kinds of abstraction") {
  ProofPtr refl = eq_refl_proof(empty());
  CHECK(alpha_equal(step_once(app(lam("x", bottom(), var("x")), refl)),
                    refl));
  ProofPtr fo = fo_app(fo_lam("a", fixtures::hand_refl(fovar("a"))),
                       omega());
  CHECK(alpha_equal(step_once(fo), fixtures::hand_refl(omega())));
}

TEST_CASE("projections, case and let select their components") {
  ProofPtr a = var("a");
  ProofPtr b = var("b");
  CHECK(alpha_equal(step_once(fst(proof_pair(a, b))), a));
  CHECK(alpha_equal(step_once(snd(proof_pair(a, b))), b));
  ProofPtr left = case_of(inl(a), "x", bottom(), var("x"), "y", bottom(),
                          var("y"));
  CHECK(alpha_equal(step_once(left), a));
  ProofPtr right = case_of(inr(b), "x", bottom(), var("x"), "y", bottom(),
                           var("y"));
  CHECK(alpha_equal(step_once(right), b));
  ProofPtr l = let_in("v", "x", member(fovar("v"), omega()),
                      witness(empty(), a),
                      proof_pair(var("x"), fixtures::hand_refl(fovar("v"))));
  CHECK(alpha_equal(step_once(l),
                    proof_pair(a, fixtures::hand_refl(empty()))));
}

TEST_CASE("axprop cancels a matching axrep only") {
  CtorInstance inst = fixtures::omega_inst();
  ProofPtr inner = var("m");
  ProofPtr ok = ax_prop(inst, numeral(0), ax_rep(inst, numeral(0), inner));
  CHECK(alpha_equal(step_once(ok), inner));
  // Same constructor, different member: stuck rather than cancelled.
  ProofPtr bad = ax_prop(inst, numeral(1), ax_rep(inst, numeral(0), inner));
  CHECK(step(bad).stuck());
  // Different carried formula on a sep instance: also stuck.
  CtorInstance sep1 = fixtures::crabbe_inst();
  CtorInstance sep2{"sep", {FormulaParam{{"x"}, mk::bottom()}}, {numeral(0)}};
  TermPtr t = fixtures::crabbe_t();
  ProofPtr mismatch = ax_prop(sep1, t, ax_rep(sep2, t, inner));
  CHECK(step(mismatch).stuck());
}

TEST_CASE("lazy reduction walks the evaluation contexts, not values") {
  ProofPtr redex = fst(proof_pair(var("a"), var("b")));
  // Inside an application head.
  CHECK(step(app(redex, var("c"))).stepped());
  // Inside projections, case scrutinee, let head and magic.
  CHECK(step(fst(redex)).stepped());
  CHECK(step(snd(redex)).stepped());
  CHECK(step(case_of(redex, "x", bottom(), var("x"), "y", bottom(),
                     var("y")))
            .stepped());
  CHECK(step(let_in("v", "x", bottom(), redex, var("x"))).stepped());
  CHECK(step(magic(redex)).stepped());
  // Not inside values.
  CHECK(step(proof_pair(redex, var("b"))).value());
  CHECK(step(inl(redex)).value());
  CHECK(step(witness(empty(), redex)).value());
  CHECK(step(lam("x", bottom(), redex)).value());
  CHECK(step(ax_rep(fixtures::omega_inst(), numeral(0), redex)).value());
}

TEST_CASE("ind unfolds to the recursor") {
  FormulaPtr schema = member(fovar("a"), omega());
  ProofPtr i = ind("a", {}, schema, {}, var("m"));
  ProofPtr unfolded = step_once(i);
  // fun c => m @ c (fun b => fun (x : b in c) => ind @ b)
  auto* fo = std::get_if<ProofTerm::FoLam>(&unfolded->node);
  REQUIRE(fo != nullptr);
  auto* outer = std::get_if<ProofTerm::App>(&fo->body->node);
  REQUIRE(outer != nullptr);
  auto* arg = std::get_if<ProofTerm::FoLam>(&outer->arg->node);
  REQUIRE(arg != nullptr);
  auto* inner = std::get_if<ProofTerm::Lam>(&arg->body->node);
  REQUIRE(inner != nullptr);
  auto* recur = std::get_if<ProofTerm::FoApp>(&inner->body->node);
  REQUIRE(recur != nullptr);
  CHECK(alpha_equal(recur->fn, i));
}

TEST_CASE("stuck terms are reported with reasons") {
  StepOutcome s1 = step(var("x"));
  REQUIRE(s1.stuck());
  StepOutcome s2 = step(fst(lam("x", bottom(), var("x"))));
  REQUIRE(s2.stuck());
  EvalResult r = evaluate(fst(lam("x", bottom(), var("x"))));
  CHECK(std::holds_alternative<EvalResult::StuckTerm>(r.result));
}

TEST_CASE("evaluation reports fuel exhaustion separately") {
  EvalOptions opts;
  opts.fuel = 2;
  EvalResult r = evaluate(fixtures::nonwf_M(), opts);
  auto* fe = std::get_if<EvalResult::FuelExhausted>(&r.result);
  REQUIRE(fe != nullptr);
  CHECK(fe->steps == 2);
}

TEST_CASE("the Crabbe proof is a lazy value but loops under full reduction") {
  ProofPtr m = fixtures::crabbe_M();
  EvalResult lazy = evaluate(m);
  auto* n = std::get_if<EvalResult::Normalized>(&lazy.result);
  REQUIRE(n != nullptr);
  CHECK(n->steps == 0);
  CHECK(is_value(n->value));

  EvalOptions opts;
  opts.strategy = Strategy::Full;
  opts.detect_cycles = true;
  opts.fuel = 10;
  EvalResult full = evaluate(m, opts);
  auto* cycle = std::get_if<EvalResult::CycleDetected>(&full.result);
  REQUIRE(cycle != nullptr);
  CHECK(cycle->period == 3);
}

TEST_CASE("the circular-sets proof cycles under lazy reduction") {
  EvalOptions opts;
  opts.detect_cycles = true;
  opts.fuel = 100;
  EvalResult r = evaluate(fixtures::nonwf_M(), opts);
  auto* cycle = std::get_if<EvalResult::CycleDetected>(&r.result);
  REQUIRE(cycle != nullptr);
  CHECK(cycle->period == 3);
  CHECK(cycle->steps_to_entry == 0);
}

TEST_CASE("full reduction normalizes open normal forms") {
  // Under a binder the bound variable is not stuck for the full strategy.
  ProofPtr p = lam("x", bottom(),
                   fst(proof_pair(var("x"), var("x"))));
  StepOutcome s = full_step(p);
  REQUIRE(s.stepped());
  CHECK(alpha_equal(s.term(), lam("x", bottom(), var("x"))));
  CHECK(full_step(s.term()).value());
}

TEST_CASE("traces list every intermediate term") {
  ProofPtr refl = eq_refl_proof(empty());
  ProofPtr p = fst(proof_pair(app(lam("x", bottom(), var("x")), refl),
                              var("b")));
  std::vector<ProofPtr> tr = trace(p);
  REQUIRE(tr.size() == 3);
  CHECK(alpha_equal(tr.front(), p));
  CHECK(alpha_equal(tr[1], app(lam("x", bottom(), var("x")), refl)));
  CHECK(alpha_equal(tr.back(), refl));
}

TEST_CASE("corpus proofs normalize lazily") {
  for (const auto& entry : fixtures::izf_corpus()) {
    CAPTURE(entry.name);
    EvalResult r = evaluate(entry.proof);
    CHECK(std::holds_alternative<EvalResult::Normalized>(r.result));
  }
}
