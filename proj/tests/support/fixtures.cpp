#include "support/fixtures.hpp"

#include "lz/checker.hpp"
#include "lz/extraction.hpp"

namespace lz::fixtures {

using namespace mk;

// ---- Crabbe ---------------------------------------------------------------

CtorInstance crabbe_inst() {
  FormulaPtr circular =
      implies(member(fovar("x"), fovar("x")), bottom());
  return CtorInstance{"sep",
                      {FormulaParam{{"x"}, circular}},
                      {numeral(0)}};
}

TermPtr crabbe_t() {
  CtorInstance inst = crabbe_inst();
  return ctor(inst.name, inst.params, inst.args);
}

FormulaPtr crabbe_N_type() {
  TermPtr t = crabbe_t();
  return implies(member(t, t), bottom());
}

FormulaPtr crabbe_M_type() {
  return implies(member(crabbe_t(), numeral(0)), bottom());
}

ProofPtr crabbe_N() {
  TermPtr t = crabbe_t();
  // y : t in t; axprop gives t in 0 /\ (t in t -> false); snd then applies.
  return lam("y", member(t, t),
             app(snd(ax_prop(crabbe_inst(), t, var("y"))), var("y")));
}

ProofPtr crabbe_M() {
  TermPtr t = crabbe_t();
  ProofPtr n = crabbe_N();
  return lam("x", member(t, numeral(0)),
             app(n, ax_rep(crabbe_inst(), t, proof_pair(var("x"), n))));
}

// ---- nonwf ----------------------------------------------------------------

CtorInstance c_inst() { return CtorInstance{"c", {}, {}}; }
CtorInstance d_inst() { return CtorInstance{"d", {}, {}}; }

FormulaPtr nonwf_N_type() { return member(constant("d"), constant("c")); }
FormulaPtr nonwf_M_type() { return member(constant("d"), constant("d")); }

ProofPtr nonwf_O() {
  TermPtr d = constant("d");
  return lam("x", member(d, d),
             app(snd(ax_prop(d_inst(), d, var("x"))), var("x")));
}

ProofPtr nonwf_N() {
  TermPtr c = constant("c");
  TermPtr d = constant("d");
  TermPtr e = fovar("e");
  // e in d -> e in c: membership in d yields e in c /\ (e in e -> e in e).
  ProofPtr fwd = lam("x", member(e, d),
                     fst(ax_prop(d_inst(), e, var("x"))));
  // e in c -> e in d: rebuild the d-membership from e in c and a trivial
  // implication.
  ProofPtr trivial = lam("y", member(e, e), var("y"));
  ProofPtr bwd =
      lam("x", member(e, c),
          ax_rep(d_inst(), e, proof_pair(var("x"), trivial)));
  ProofPtr d_eq_c = fo_lam("e", proof_pair(fwd, bwd));
  return ax_rep(c_inst(), d, d_eq_c);
}

ProofPtr nonwf_M() {
  TermPtr d = constant("d");
  ProofPtr o = nonwf_O();
  return app(o, ax_rep(d_inst(), d, proof_pair(nonwf_N(), o)));
}

// ---- numeral oracle -------------------------------------------------------

CtorInstance omega_inst() { return CtorInstance{"omega", {}, {}}; }

ProofPtr hand_refl(const TermPtr& t) {
  NameSet avoid = free_fo_vars(t);
  std::string z = fresh_name("z", avoid);
  FormulaPtr in_t = member(fovar(z), t);
  return fo_lam(z, proof_pair(lam("w", in_t, var("w")),
                              lam("w", in_t, var("w"))));
}

ProofPtr numeral_in_omega(long long k) {
  if (k == 0)
    return ax_rep(omega_inst(), numeral(0), inl(hand_refl(numeral(0))));
  // numeral(k) = S(numeral(k-1)) syntactically, so the successor equation
  // is reflexivity.
  ProofPtr body = inr(witness(
      numeral(k - 1),
      proof_pair(numeral_in_omega(k - 1), hand_refl(numeral(k)))));
  return ax_rep(omega_inst(), numeral(k), body);
}

// ---- corpus ---------------------------------------------------------------

std::vector<CorpusEntry> izf_corpus() {
  Theory th = izf_r_minus();
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, ProofPtr p, FormulaPtr f) {
    out.push_back({std::move(name), std::move(p), std::move(f)});
  };

  // Axiom proofs for all constructors.
  FormulaParam sep_param{{"q"}, member(fovar("q"), omega())};
  FormulaParam repl_param2{{"q", "r"}, eq(fovar("r"), fovar("q"))};
  for (const auto& name :
       {std::string("empty"), std::string("pair"), std::string("omega"),
        std::string("union"), std::string("power")}) {
    add("axiom_" + name, axiom_proof(th, name, {}),
        check_axiom_instance(th, name, {}));
  }
  add("axiom_sep", axiom_proof(th, "sep", {sep_param}),
      check_axiom_instance(th, "sep", {sep_param}));
  add("axiom_repl", axiom_proof(th, "repl", {repl_param2}),
      check_axiom_instance(th, "repl", {repl_param2}));

  // Induction axioms.
  FormulaPtr schema1 =
      disj(member(fovar("a"), omega()),
           implies(member(fovar("a"), omega()), bottom()));
  add("induction_closed", induction_proof(th, "a", {}, schema1),
      induction_axiom_formula("a", {}, schema1));
  FormulaPtr schema2 = member(fovar("a"), fovar("p"));
  add("induction_param", induction_proof(th, "a", {"p"}, schema2),
      induction_axiom_formula("a", {"p"}, schema2));

  // An applied ind proving forall a. a in omega -> a in omega.
  {
    TermPtr a = fovar("a");
    FormulaPtr schema = implies(member(a, omega()), member(a, omega()));
    TermPtr c = fovar("c");
    FormulaPtr hyp = forall(
        "b", implies(member(fovar("b"), c),
                     implies(member(fovar("b"), omega()),
                             member(fovar("b"), omega()))));
    ProofPtr body = fo_lam(
        "c", lam("h", hyp, lam("w", member(c, omega()), var("w"))));
    ProofPtr used = ind("a", {}, schema, {}, body);
    add("ind_applied", used, forall("a", schema));
    add("ind_instantiated", fo_app(used, numeral(0)),
        implies(member(numeral(0), omega()), member(numeral(0), omega())));
  }

  // Equality proofs.
  add("refl_empty", eq_refl_proof(empty()), eq(empty(), empty()));
  add("refl_omega", hand_refl(omega()), eq(omega(), omega()));
  {
    ProofPtr p = eq_refl_proof(numeral(1));
    ProofPtr q = hand_refl(numeral(1));
    add("trans_one",
        eq_transitivity_proof(numeral(1), numeral(1), numeral(1), p, q),
        eq(numeral(1), numeral(1)));
  }

  // Numerals.
  for (long long k = 0; k <= 3; ++k)
    add("numeral_" + std::to_string(k), numeral_in_omega(k),
        member(numeral(k), omega()));

  // Structural constructors.
  FormulaPtr ee = eq(empty(), empty());
  ProofPtr refl0 = eq_refl_proof(empty());
  add("beta", app(lam("h", ee, var("h")), refl0), ee);
  add("fo_beta", fo_app(fo_lam("a", hand_refl(fovar("a"))), omega()),
      eq(omega(), omega()));
  add("fst_pair", fst(proof_pair(refl0, numeral_in_omega(0))), ee);
  add("snd_pair", snd(proof_pair(numeral_in_omega(0), refl0)), ee);
  add("inl_ascribed", ascribe(inl(refl0), disj(ee, bottom())),
      disj(ee, bottom()));
  add("inr_ascribed", ascribe(inr(refl0), disj(bottom(), ee)),
      disj(bottom(), ee));
  add("case_branch",
      case_of(ascribe(inl(refl0), disj(ee, bottom())), "x", ee, var("x"),
              "y", bottom(), magic(var("y"))),
      ee);
  {
    FormulaPtr body_at = [&] {
      return eq(fovar("a"), empty());
    }();
    FormulaPtr goal = exists("y", eq(fovar("y"), empty()));
    ProofPtr head = ascribe(witness(empty(), refl0), goal);
    add("let_witness",
        let_in("a", "x", body_at, head, witness(fovar("a"), var("x"))),
        goal);
  }
  add("witness_ascribed",
      ascribe(witness(empty(), refl0), exists("y", eq(fovar("y"), empty()))),
      exists("y", eq(fovar("y"), empty())));

  // Crabbe.
  add("crabbe_N", crabbe_N(), crabbe_N_type());
  add("crabbe_M", crabbe_M(), crabbe_M_type());

  return out;
}

std::vector<TermPtr> corpus_terms() {
  TermPtr a = fovar("a");
  TermPtr b = fovar("b");
  std::vector<TermPtr> out = {
      a,
      empty(),
      omega(),
      numeral(0),
      numeral(1),
      numeral(2),
      numeral(3),
      pair(empty(), omega()),
      pair(a, b),
      union_of(omega()),
      union_of(pair(a, a)),
      power(empty()),
      power(power(omega())),
      succ(succ(empty())),
      succ(a),
      sep("x", implies(member(fovar("x"), fovar("x")), bottom()), numeral(0)),
      sep("x", member(fovar("x"), a), omega()),
      sep("x", eq(fovar("x"), empty()), power(omega())),
      repl("x", "y", eq(fovar("y"), fovar("x")), omega()),
      repl("x", "y", member(fovar("y"), sep("z", bottom(), fovar("x"))),
           pair(empty(), empty())),
      union_of(sep("x", exists("y", member(fovar("x"), fovar("y"))), omega())),
      power(sep("x", forall("y", implies(member(fovar("y"), fovar("x")),
                                         bottom())),
                omega())),
      crabbe_t(),
  };
  return out;
}

std::vector<FormulaPtr> corpus_formulas() {
  TermPtr a = fovar("a");
  TermPtr b = fovar("b");
  std::vector<FormulaPtr> out = {
      bottom(),
      member(a, omega()),
      eq(a, b),
      eq(empty(), omega()),
      conj(member(a, b), member(b, a)),
      disj(bottom(), eq(a, a)),
      implies(member(a, b), implies(member(b, a), bottom())),
      forall("x", implies(member(fovar("x"), a), member(fovar("x"), b))),
      exists("x", conj(member(fovar("x"), omega()), eq(fovar("x"), a))),
      neg(member(a, a)),
      iff(member(a, b), member(b, a)),
      exists_unique("x", member(fovar("x"), a)),
      bounded_forall("x", omega(), eq(fovar("x"), fovar("x"))),
      bounded_exists("x", a, member(fovar("x"), b)),
      crabbe_N_type(),
      crabbe_M_type(),
      forall("x", disj(member(fovar("x"), a),
                       implies(member(fovar("x"), a), bottom()))),
      implies(conj(bottom(), bottom()), disj(bottom(), bottom())),
      eq(succ(a), numeral(2)),
      member(sep("x", bottom(), omega()), power(omega())),
  };
  return out;
}

}  // namespace lz::fixtures
