// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lz/checker.hpp"
#include "lz/extraction.hpp"
#include "lz/meta.hpp"
#include "lz/parser.hpp"
#include "lz/printer.hpp"
#include "lz/reducer.hpp"
#include "lz/theory.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace lz;
using namespace lz::mk;

namespace {

struct Criterion {
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

int g_failures = 0;

void run(int number, const std::string& title,
         const std::function<void(Criterion&)>& body, long limit_ms) {
  Criterion c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.problems.push_back(std::string("exception: ") + e.what());
  }
  auto end = std::chrono::steady_clock::now();
  long ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start)
          .count();
  if (limit_ms > 0 && ms > limit_ms)
    c.problems.push_back("took " + std::to_string(ms) + " ms, limit " +
                         std::to_string(limit_ms) + " ms");
  if (c.problems.empty()) {
    std::printf("PASS [%d] %s (%ld ms)\n", number, title.c_str(), ms);
  } else {
    ++g_failures;
    std::printf("FAIL [%d] %s (%ld ms)\n", number, title.c_str(), ms);
    for (const auto& p : c.problems)
      std::printf("       - %s\n", p.c_str());
  }
  std::fflush(stdout);
}

// ---- canonical forms ------------------------------------------------------

bool canonical_matches(const ProofPtr& v, const FormulaPtr& f) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::And>)
          return std::holds_alternative<ProofTerm::Pair>(v->node);
        else if constexpr (std::is_same_v<T, Formula::Or>)
          return std::holds_alternative<ProofTerm::Inl>(v->node) ||
                 std::holds_alternative<ProofTerm::Inr>(v->node);
        else if constexpr (std::is_same_v<T, Formula::Implies>)
          return std::holds_alternative<ProofTerm::Lam>(v->node);
        else if constexpr (std::is_same_v<T, Formula::Forall>)
          return std::holds_alternative<ProofTerm::FoLam>(v->node);
        else if constexpr (std::is_same_v<T, Formula::Exists>)
          return std::holds_alternative<ProofTerm::Witness>(v->node);
        else if constexpr (std::is_same_v<T, Formula::Member>)
          return std::holds_alternative<ProofTerm::AxRep>(v->node);
        else
          return false;  // no closed value inhabits bottom (or a hole)
      },
      f->node);
}

bool checks(const Theory& th, const ProofPtr& p, const FormulaPtr& f) {
  return !check(th, Context{}, p, f).has_value();
}

// ---- criteria -------------------------------------------------------------

void axiom_round_trips(Criterion& c) {
  Theory th = izf_r_minus();
  FormulaParam one{{"q"}, member(fovar("q"), fovar("p"))};
  FormulaParam two{{"q", "r"}, eq(fovar("r"), fovar("q"))};
  int covered = 0;
  for (const auto& d : th.descriptors) {
    std::vector<FormulaParam> params;
    if (d.param_spec == ParamSpec::OneBinder) params = {one};
    if (d.param_spec == ParamSpec::TwoBinder) params = {two};
    ProofPtr proof = axiom_proof(th, d.name, params);
    FormulaPtr formula = check_axiom_instance(th, d.name, params);
    c.require(checks(th, proof, formula),
              "axiom proof for '" + d.name + "' does not check");
    ++covered;
  }
  c.require(covered == 7, "expected 7 set constructors");

  struct SchemaCase {
    std::string var;
    std::vector<std::string> params;
    FormulaPtr schema;
  };
  std::vector<SchemaCase> schemas = {
      {"a", {}, member(fovar("a"), omega())},
      {"a", {}, disj(member(fovar("a"), omega()),
                     neg(member(fovar("a"), omega())))},
      {"a", {}, implies(member(fovar("a"), omega()), eq(fovar("a"),
                                                        fovar("a")))},
      {"a", {"p"}, member(fovar("a"), fovar("p"))},
      {"a", {"p", "q"}, implies(member(fovar("a"), fovar("p")),
                                member(fovar("a"), fovar("q")))},
  };
  for (size_t i = 0; i < schemas.size(); ++i) {
    const SchemaCase& s = schemas[i];
    ProofPtr proof = induction_proof(th, s.var, s.params, s.schema);
    FormulaPtr formula = induction_axiom_formula(s.var, s.params, s.schema);
    c.require(checks(th, proof, formula),
              "induction proof " + std::to_string(i) + " does not check");
  }
}

void looping_separation_fixture(Criterion& c) {
  const std::string src =
      "def t := sep[x : x in x -> false](0)\n"
      "def N := fun (y : t in t) =>\n"
      "  snd (axprop{sep[x : x in x -> false]}(t; 0)(y)) y\n"
      "def M := fun (x : t in 0) =>\n"
      "  N (axrep{sep[x : x in x -> false]}(t; 0)(<x, N>))\n"
      "synth N\n"
      "synth M\n";
  ProofScript script = parse_script(src);
  const Definition* n = script.find("N");
  const Definition* m = script.find("M");
  c.require(n && m, "script definitions missing");
  if (!n || !m) return;

  SynthesisResult sn = synthesize(script.theory, Context{}, n->proof);
  c.require(std::holds_alternative<FormulaPtr>(sn) &&
                alpha_equal(std::get<FormulaPtr>(sn),
                            fixtures::crabbe_N_type()),
            "N does not synthesize t in t -> false");
  SynthesisResult sm = synthesize(script.theory, Context{}, m->proof);
  c.require(std::holds_alternative<FormulaPtr>(sm) &&
                alpha_equal(std::get<FormulaPtr>(sm),
                            fixtures::crabbe_M_type()),
            "M does not synthesize t in 0 -> false");

  EvalResult lazy = evaluate(m->proof);
  auto* norm = std::get_if<EvalResult::Normalized>(&lazy.result);
  c.require(norm && norm->steps == 0,
            "lazy evaluation of M is not an immediate value");

  EvalOptions full;
  full.strategy = Strategy::Full;
  full.detect_cycles = true;
  full.fuel = 10;
  EvalResult loop = evaluate(m->proof, full);
  auto* cyc = std::get_if<EvalResult::CycleDetected>(&loop.result);
  c.require(cyc && cyc->period == 3,
            "full reduction of M does not cycle with period 3 in 10 steps");
}

void circular_sets_fixture(Criterion& c) {
  Theory th = nonwf_theory();
  c.require(checks(th, fixtures::nonwf_N(), fixtures::nonwf_N_type()),
            "proof of d in c does not check");
  c.require(checks(th, fixtures::nonwf_M(), fixtures::nonwf_M_type()),
            "proof of d in d does not check");
  EvalOptions opts;
  opts.detect_cycles = true;
  opts.fuel = 100;
  EvalResult r = evaluate(fixtures::nonwf_M(), opts);
  auto* cyc = std::get_if<EvalResult::CycleDetected>(&r.result);
  c.require(cyc && cyc->period == 3,
            "lazy evaluation of M does not cycle with period 3");
}

void extraction_suite(Criterion& c) {
  Theory th = izf_r_minus();
  for (long long k = 0; k <= 3; ++k) {
    NumeralWitness w = extract_numeral(th, fixtures::numeral_in_omega(k));
    c.require(w.value == static_cast<std::uint64_t>(k) &&
                  w.chain.size() == static_cast<size_t>(k) + 1,
              "numeral extraction failed for " + std::to_string(k));
  }

  FormulaPtr ee = eq(empty(), empty());
  ProofPtr refl = eq_refl_proof(empty());
  struct DisjCase {
    ProofPtr proof;
    FormulaPtr goal;
  };
  std::vector<DisjCase> disjs = {
      {ascribe(inl(refl), disj(ee, bottom())), disj(ee, bottom())},
      {app(lam("x", disj(bottom(), ee), var("x")),
           ascribe(inr(refl), disj(bottom(), ee))),
       disj(bottom(), ee)},
      {ax_prop(fixtures::omega_inst(), numeral(0),
               fixtures::numeral_in_omega(0)),
       phi_a(th, fixtures::omega_inst(), numeral(0))},
  };
  for (size_t i = 0; i < disjs.size(); ++i) {
    Disjunct d = extract_disjunct(th, disjs[i].proof, disjs[i].goal);
    c.require(checks(th, d.subproof, d.formula),
              "disjunct subproof " + std::to_string(i) + " does not check");
  }

  struct WitCase {
    ProofPtr proof;
    FormulaPtr goal;
  };
  FormulaPtr at_v = eq(fovar("v"), omega());
  std::vector<WitCase> wits = {
      {ascribe(witness(empty(), refl), exists("a", eq(fovar("a"), empty()))),
       exists("a", eq(fovar("a"), empty()))},
      {let_in("v", "x", at_v,
              ascribe(witness(omega(), fixtures::hand_refl(omega())),
                      exists("v", at_v)),
              witness(fovar("v"), var("x"))),
       exists("a", eq(fovar("a"), omega()))},
      {ascribe(witness(fovar("b"), fixtures::hand_refl(fovar("b"))),
               exists("a", eq(fovar("a"), fovar("a")))),
       exists("a", eq(fovar("a"), fovar("a")))},
  };
  for (size_t i = 0; i < wits.size(); ++i) {
    WitnessResult w = extract_witness(th, wits[i].proof, wits[i].goal);
    FormulaPtr at = std::visit(
        [&](const auto& n) -> FormulaPtr {
          if constexpr (std::is_same_v<std::decay_t<decltype(n)>,
                                       Formula::Exists>)
            return subst_fo(n.body, n.var, w.term);
          else
            return nullptr;
        },
        wits[i].goal->node);
    c.require(at != nullptr && checks(th, w.subproof, at),
              "witness subproof " + std::to_string(i) + " does not check");
  }
}

void metatheory_properties(Criterion& c) {
  gen::ProofGenerator pg(20240817);
  const Theory& th = pg.theory();
  int sr_failures = 0, progress_failures = 0, canon_failures = 0,
      check_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    gen::TypedProof tp = pg.next();
    if (!checks(th, tp.proof, tp.formula)) {
      ++check_failures;
      continue;
    }
    ProofPtr t = erase_ascriptions(tp.proof);
    for (int s = 0; s < 10000; ++s) {
      StepOutcome out = step(t);
      if (out.stuck()) {
        ++progress_failures;
        break;
      }
      if (out.value()) {
        if (!canonical_matches(t, tp.formula)) ++canon_failures;
        break;
      }
      t = out.term();
      if (!checks(th, t, tp.formula)) {
        ++sr_failures;
        break;
      }
    }
  }
  c.require(check_failures == 0,
            std::to_string(check_failures) + " generated proofs fail to check");
  c.require(sr_failures == 0,
            std::to_string(sr_failures) + " subject-reduction violations");
  c.require(progress_failures == 0,
            std::to_string(progress_failures) + " progress violations");
  c.require(canon_failures == 0,
            std::to_string(canon_failures) + " canonical-form violations");

  gen::SubstGenerator sg(20240817);
  int subst_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    gen::SubstCase sc = sg.next();
    FormulaPtr lhs = subst_fo(subst_fo(sc.phi, sc.a, sc.t), sc.b,
                              subst_fo(sc.u, sc.a, sc.t));
    FormulaPtr rhs = subst_fo(subst_fo(sc.phi, sc.b, sc.u), sc.a, sc.t);
    if (!alpha_equal(lhs, rhs)) ++subst_failures;
  }
  c.require(subst_failures == 0,
            std::to_string(subst_failures) +
                " substitution-commutation violations");
}

void corpus_normalization(Criterion& c) {
  EvalOptions opts;
  opts.fuel = 1'000'000;
  for (const auto& entry : fixtures::izf_corpus()) {
    EvalResult r = evaluate(entry.proof, opts);
    c.require(std::holds_alternative<EvalResult::Normalized>(r.result),
              "'" + entry.name + "' does not normalize");
  }
}

bool formula_term_free(const FormulaPtr& f) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        auto var = [](const TermPtr& t) {
          return std::holds_alternative<SetTerm::FoVar>(t->node);
        };
        if constexpr (std::is_same_v<T, Formula::Bottom>)
          return true;
        else if constexpr (std::is_same_v<T, Formula::Member>)
          return var(n.element) && var(n.set);
        else if constexpr (std::is_same_v<T, Formula::And> ||
                           std::is_same_v<T, Formula::Or>)
          return formula_term_free(n.left) && formula_term_free(n.right);
        else if constexpr (std::is_same_v<T, Formula::Implies>)
          return formula_term_free(n.lhs) && formula_term_free(n.rhs);
        else if constexpr (std::is_same_v<T, Formula::Forall> ||
                           std::is_same_v<T, Formula::Exists>)
          return formula_term_free(n.body);
        else
          return false;
      },
      f->node);
}

void translation_suite(Criterion& c) {
  Theory th = izf_r_minus();
  std::vector<TermPtr> terms = fixtures::corpus_terms();
  c.require(terms.size() >= 20, "corpus has fewer than 20 terms");
  for (const TermPtr& t : terms) {
    FormulaPtr d = define_term(th, t);
    bool ok = formula_term_free(d);
    NameSet expected = free_fo_vars(t);
    expected.insert(fresh_name("x", free_fo_vars(t)));
    ok = ok && free_fo_vars(d) == expected;
    c.require(ok, "defining formula defective for " + print_term(t));
  }

  ClassPredicate T{"h", member(fovar("h"), fovar("p"))};
  c.require(alpha_equal(relativize_term(omega(), T), omega()),
            "omega is not a fixed point of relativization");
  for (const TermPtr& t : terms) {
    TermPtr rel = relativize_term(t, T);
    const auto* src = std::get_if<SetTerm::Ctor>(&t->node);
    if (!src) {
      c.require(alpha_equal(rel, t), "variable changed by relativization");
      continue;
    }
    const auto* dst = std::get_if<SetTerm::Ctor>(&rel->node);
    if (src->name == "power") {
      // Cut down by separation on the class.
      bool ok = dst && dst->name == "sep" && dst->params.size() == 1 &&
                alpha_equal(dst->params[0].body,
                            T.apply(fovar(dst->params[0].binders[0])));
      c.require(ok, "power relativization lacks the separation guard");
    } else if (src->name == "repl") {
      bool ok = dst && dst->name == "repl" &&
                std::holds_alternative<Formula::And>(
                    dst->params[0].body->node);
      if (ok) {
        const auto& guard =
            std::get<Formula::And>(dst->params[0].body->node).left;
        ok = alpha_equal(guard, T.apply(fovar(dst->params[0].binders[1])));
      }
      c.require(ok, "replacement relativization lacks the output guard");
    } else {
      c.require(dst && dst->name == src->name,
                "relativization changed the head constructor of " +
                    print_term(t));
    }
  }
}

void parse_print_round_trip(Criterion& c) {
  Theory th = izf_r_minus();
  ParseEnv env;
  env.theory = &th;
  for (const TermPtr& t : fixtures::corpus_terms())
    c.require(alpha_equal(parse_term(print_term(t), env), t),
              "term round-trip failed: " + print_term(t));
  for (const FormulaPtr& f : fixtures::corpus_formulas())
    c.require(alpha_equal(parse_formula(print_formula(f), env), f),
              "formula round-trip failed: " + print_formula(f));
  for (const auto& entry : fixtures::izf_corpus())
    c.require(alpha_equal(parse_proof(print_proof(entry.proof), env),
                          entry.proof),
              "proof round-trip failed: " + entry.name);
  Theory nw = nonwf_theory();
  ParseEnv nenv;
  nenv.theory = &nw;
  for (const ProofPtr& p :
       {fixtures::nonwf_O(), fixtures::nonwf_N(), fixtures::nonwf_M()})
    c.require(alpha_equal(parse_proof(print_proof(p), nenv), p),
              "circular-sets proof round-trip failed");
}

}  // namespace

int main() {
  run(1, "generated axiom and induction proofs check against their formulas",
      axiom_round_trips, 1000);
  run(2, "looping separation proof: types synthesize, lazy value, full cycle",
      looping_separation_fixture, 1000);
  run(3, "circular-sets proofs check and cycle under lazy reduction",
      circular_sets_fixture, 1000);
  run(4, "numeral, disjunct and witness extraction with re-checking proofs",
      extraction_suite, 5000);
  run(5, "subject reduction, progress, canonical forms, substitution lemma",
      metatheory_properties, 60000);
  run(6, "every corpus proof normalizes within the default fuel",
      corpus_normalization, 0);
  run(7, "term definability and class relativization invariants",
      translation_suite, 1000);
  run(8, "printing then parsing is the identity on the corpus",
      parse_print_round_trip, 0);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
