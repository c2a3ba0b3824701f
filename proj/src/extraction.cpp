#include "lz/extraction.hpp"

namespace lz {

namespace {

// Extraction needs a proof derivable in the empty context; free first-order
// variables are permitted (they are closed off with the empty set where it
// matters), free proof variables are not.
void require_closed(const ProofPtr& proof, const char* what) {
  FreeVars fv = free_variables(proof);
  if (!fv.proof.empty())
    throw ExtractionError(std::string(what) +
                          ": proof must be closed, but proof variable '" +
                          *fv.proof.begin() + "' occurs free");
}

void require_checks(const Theory& theory, const ProofPtr& proof,
                    const FormulaPtr& goal, const std::string& stage) {
  if (auto err = check(theory, Context{}, proof, goal))
    throw ExtractionError(stage + ": " + err->message);
}

// Evaluates to a lazy value with ascriptions peeled, or throws.
ProofPtr run_to_value(const ProofPtr& proof, std::uint64_t fuel,
                      const std::string& stage) {
  EvalResult r = evaluate(proof, EvalOptions{fuel});
  if (auto* n = std::get_if<EvalResult::Normalized>(&r.result))
    return n->value;
  if (std::holds_alternative<EvalResult::FuelExhausted>(r.result))
    throw ExtractionError(stage + ": fuel exhausted after " +
                          std::to_string(fuel) + " steps");
  const auto& stuck = std::get<EvalResult::StuckTerm>(r.result);
  throw ExtractionError(stage + ": reduction stuck (" + stuck.reason + ")");
}

[[noreturn]] void kernel_bug(const std::string& stage,
                             const std::string& detail) {
  throw ExtractionError(stage + ": malformed canonical form (" + detail +
                        "); this indicates an ill-typed input or a kernel bug");
}

}  // namespace

Disjunct extract_disjunct(const Theory& theory, const ProofPtr& proof,
                          const FormulaPtr& goal, std::uint64_t fuel) {
  require_closed(proof, "extract_disjunct");
  auto* disj = std::get_if<Formula::Or>(&goal->node);
  if (!disj)
    throw ExtractionError("extract_disjunct: goal is not a disjunction");
  require_checks(theory, proof, goal, "extract_disjunct: input");

  ProofPtr value = run_to_value(proof, fuel, "extract_disjunct");
  if (auto* l = std::get_if<ProofTerm::Inl>(&value->node)) {
    require_checks(theory, l->arg, disj->left,
                   "extract_disjunct: left subproof");
    return Disjunct{Disjunct::Side::Left, l->arg, disj->left};
  }
  if (auto* r = std::get_if<ProofTerm::Inr>(&value->node)) {
    require_checks(theory, r->arg, disj->right,
                   "extract_disjunct: right subproof");
    return Disjunct{Disjunct::Side::Right, r->arg, disj->right};
  }
  kernel_bug("extract_disjunct", "value of a disjunction is not an injection");
}

WitnessResult extract_witness(const Theory& theory, const ProofPtr& proof,
                              const FormulaPtr& goal, std::uint64_t fuel) {
  require_closed(proof, "extract_witness");
  auto* ex = std::get_if<Formula::Exists>(&goal->node);
  if (!ex) throw ExtractionError("extract_witness: goal is not existential");
  require_checks(theory, proof, goal, "extract_witness: input");

  ProofPtr value = run_to_value(proof, fuel, "extract_witness");
  auto* w = std::get_if<ProofTerm::Witness>(&value->node);
  if (!w) kernel_bug("extract_witness", "value of an existential is not a witness pair");

  // Close any free first-order variables of the witness term with the empty
  // set, in both the term and the subproof.
  TermPtr term = w->witness;
  ProofPtr sub = w->body;
  FoSubst closing;
  for (const auto& v : free_fo_vars(term)) closing.emplace(v, mk::empty());
  if (!closing.empty()) {
    term = subst_fo_many(term, closing);
    sub = subst_fo_many(sub, closing);
  }
  FormulaPtr instantiated = subst_fo(ex->body, ex->var, term);
  require_checks(theory, sub, instantiated, "extract_witness: subproof");
  return WitnessResult{term, sub};
}

NumeralWitness extract_numeral(const Theory& theory, const ProofPtr& proof,
                               std::uint64_t fuel) {
  const std::string stage = "extract_numeral";
  require_closed(proof, stage.c_str());
  SynthesisResult synth = synthesize(theory, Context{}, proof);
  auto* ty = std::get_if<FormulaPtr>(&synth);
  if (!ty)
    throw ExtractionError(stage + ": input does not synthesize: " +
                          std::get<CheckError>(synth).message);
  auto* memb = std::get_if<Formula::Member>(&(*ty)->node);
  if (!memb || !alpha_equal(memb->set, mk::omega()))
    throw ExtractionError(stage + ": input is not a membership in omega");

  NumeralWitness out;
  ProofPtr current = proof;
  TermPtr t = memb->element;
  while (true) {
    out.chain.push_back(t);
    FormulaPtr membership = mk::member(t, mk::omega());
    require_checks(theory, current, membership, stage + ": membership step");
    ProofPtr value = run_to_value(current, fuel, stage);
    auto* rep = std::get_if<ProofTerm::AxRep>(&value->node);
    if (!rep || rep->ctor.name != "omega")
      kernel_bug(stage, "membership value is not an omega introduction");
    if (!alpha_equal(rep->member, t))
      kernel_bug(stage, "omega introduction is for a different element");

    // rep->body proves t = 0 \/ exists b. b in omega /\ t = S(b).
    FormulaPtr disj = phi_a(theory, rep->ctor, t);
    require_checks(theory, rep->body, disj, stage + ": disjunction step");
    ProofPtr dval = run_to_value(rep->body, fuel, stage);
    if (auto* l = std::get_if<ProofTerm::Inl>(&dval->node)) {
      require_checks(theory, l->arg, eq(t, numeral(0)),
                     stage + ": terminal equation");
      out.equation_proofs.push_back(l->arg);
      out.value = out.chain.size() - 1;
      return out;
    }
    auto* r = std::get_if<ProofTerm::Inr>(&dval->node);
    if (!r) kernel_bug(stage, "disjunction value is not an injection");
    ProofPtr wval = run_to_value(r->arg, fuel, stage);
    auto* w = std::get_if<ProofTerm::Witness>(&wval->node);
    if (!w) kernel_bug(stage, "successor case is not a witness pair");
    TermPtr prev = w->witness;
    FormulaPtr both = mk::conj(mk::member(prev, mk::omega()), eq(t, succ(prev)));
    require_checks(theory, w->body, both, stage + ": successor step");
    ProofPtr pval = run_to_value(w->body, fuel, stage);
    auto* pair = std::get_if<ProofTerm::Pair>(&pval->node);
    if (!pair) kernel_bug(stage, "successor body is not a pair");
    require_checks(theory, pair->second, eq(t, succ(prev)),
                   stage + ": successor equation");
    out.equation_proofs.push_back(pair->second);
    current = pair->first;
    t = prev;
  }
}

ProofPtr axiom_proof(const Theory& theory, const std::string& ctor_name,
                     const std::vector<FormulaParam>& params) {
  const AxiomDescriptor* d = theory.find(ctor_name);
  if (!d) throw TheoryError("unknown constructor '" + ctor_name + "'");

  NameSet param_fv;
  for (const auto& p : params) {
    NameSet fv = free_fo_vars(p.body);
    for (const auto& b : p.binders) fv.erase(b);
    param_fv.insert(fv.begin(), fv.end());
  }

  NameSet avoid = param_fv;
  std::vector<std::string> arg_names;
  std::vector<TermPtr> arg_terms;
  for (const auto& a : d->arg_vars) {
    std::string name = fresh_name(a, avoid);
    avoid.insert(name);
    arg_names.push_back(name);
    arg_terms.push_back(mk::fovar(name));
  }
  std::string member = fresh_name(d->member_var, avoid);
  TermPtr mv = mk::fovar(member);

  CtorInstance inst{ctor_name, params, arg_terms};
  validate_instance(theory, inst);
  FormulaPtr prop = phi_a(theory, inst, mv);
  FormulaPtr membership = member_of_instance(inst, mv);

  ProofPtr forward =
      mk::lam("x", membership, mk::ax_prop(inst, mv, mk::var("x")));
  ProofPtr backward = mk::lam("x", prop, mk::ax_rep(inst, mv, mk::var("x")));
  ProofPtr out = mk::fo_lam(member, mk::proof_pair(forward, backward));
  for (auto it = arg_names.rbegin(); it != arg_names.rend(); ++it)
    out = mk::fo_lam(*it, out);
  for (auto it = param_fv.rbegin(); it != param_fv.rend(); ++it)
    out = mk::fo_lam(*it, out);
  return out;
}

ProofPtr induction_proof(const Theory& theory, const std::string& schema_var,
                         const std::vector<std::string>& schema_params,
                         const FormulaPtr& schema) {
  if (!theory.has_induction)
    throw TheoryError("theory '" + theory.name + "' has no epsilon-induction");

  NameSet avoid = free_fo_vars(schema);
  avoid.insert(schema_var);
  avoid.insert(schema_params.begin(), schema_params.end());
  std::string b = fresh_name("b", avoid);
  TermPtr bv = mk::fovar(b);
  FormulaPtr at_b = subst_fo(schema, schema_var, bv);
  FormulaPtr premise = mk::forall(
      schema_var,
      mk::implies(
          mk::forall(b, mk::implies(mk::member(bv, mk::fovar(schema_var)),
                                    at_b)),
          schema));

  std::vector<TermPtr> args;
  for (const auto& p : schema_params) args.push_back(mk::fovar(p));
  ProofPtr out = mk::lam(
      "x", premise,
      mk::ind(schema_var, schema_params, schema, args, mk::var("x")));
  for (auto it = schema_params.rbegin(); it != schema_params.rend(); ++it)
    out = mk::fo_lam(*it, out);
  return out;
}

ProofPtr eq_refl_proof(const TermPtr& t) {
  NameSet avoid = free_fo_vars(t);
  std::string z = fresh_name("z", avoid);
  FormulaPtr in_t = mk::member(mk::fovar(z), t);
  ProofPtr identity = mk::lam("x", in_t, mk::var("x"));
  ProofPtr identity2 = mk::lam("x", in_t, mk::var("x"));
  return mk::fo_lam(z, mk::proof_pair(identity, identity2));
}

ProofPtr eq_transitivity_proof(const TermPtr& t, const TermPtr& u,
                               const TermPtr& s, const ProofPtr& p,
                               const ProofPtr& q) {
  NameSet avoid = free_fo_vars(t);
  for (const auto& term : {u, s}) {
    NameSet fv = free_fo_vars(term);
    avoid.insert(fv.begin(), fv.end());
  }
  for (const auto& pr : {p, q}) {
    NameSet fv = free_fo_vars(pr);
    avoid.insert(fv.begin(), fv.end());
  }
  std::string z = fresh_name("z", avoid);
  TermPtr zv = mk::fovar(z);
  ProofPtr forward = mk::lam(
      "x", mk::member(zv, t),
      mk::app(mk::fst(mk::fo_app(q, zv)),
              mk::app(mk::fst(mk::fo_app(p, zv)), mk::var("x"))));
  ProofPtr backward = mk::lam(
      "x", mk::member(zv, s),
      mk::app(mk::snd(mk::fo_app(p, zv)),
              mk::app(mk::snd(mk::fo_app(q, zv)), mk::var("x"))));
  return mk::fo_lam(z, mk::proof_pair(forward, backward));
}

}  // namespace lz
