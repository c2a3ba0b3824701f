#include "lz/checker.hpp"

#include <algorithm>

namespace lz {

bool Context::bind(const std::string& var, FormulaPtr formula) {
  if (contains(var)) return false;
  entries_.emplace_back(var, std::move(formula));
  return true;
}

Context Context::extended(const std::string& var, FormulaPtr formula) const {
  Context out = *this;
  out.bind(var, std::move(formula));
  return out;
}

const FormulaPtr* Context::lookup(const std::string& var) const {
  for (const auto& [name, formula] : entries_)
    if (name == var) return &formula;
  return nullptr;
}

NameSet Context::domain() const {
  NameSet out;
  for (const auto& [name, formula] : entries_) out.insert(name);
  return out;
}

NameSet Context::range_fo_vars() const {
  NameSet out;
  for (const auto& [name, formula] : entries_) {
    NameSet fv = free_fo_vars(formula);
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

std::string to_string(CheckErrorKind kind) {
  switch (kind) {
    case CheckErrorKind::UnboundVariable:
      return "unbound-variable";
    case CheckErrorKind::TypeMismatch:
      return "type-mismatch";
    case CheckErrorKind::NotSynthesizable:
      return "not-synthesizable";
    case CheckErrorKind::SideConditionViolated:
      return "side-condition-violated";
    case CheckErrorKind::Arity:
      return "arity";
    case CheckErrorKind::UnknownCtor:
      return "unknown-ctor";
    case CheckErrorKind::InductionUnavailable:
      return "induction-unavailable";
  }
  return "?";
}

namespace {

using Path = std::vector<int>;

Path child(const Path& p, int i) {
  Path out = p;
  out.push_back(i);
  return out;
}

CheckError make_error(CheckErrorKind kind, Path path, std::string message,
                      FormulaPtr expected = nullptr,
                      FormulaPtr actual = nullptr) {
  return CheckError{kind, std::move(path), std::move(message),
                    std::move(expected), std::move(actual)};
}

struct Checker {
  const Theory& theory;

  // Renames a proof binder away from the context domain; freshened binders
  // keep the typing rules' side conditions satisfied.
  std::pair<std::string, ProofPtr> fresh_proof_binder(const Context& ctx,
                                                      const std::string& var,
                                                      const ProofPtr& body) {
    if (!ctx.contains(var)) return {var, body};
    NameSet avoid = ctx.domain();
    FreeVars fv = free_variables(body);
    avoid.insert(fv.proof.begin(), fv.proof.end());
    std::string renamed = fresh_name(var, avoid);
    return {renamed, subst_proof(body, var, mk::var(renamed))};
  }

  CheckError theory_error(const CtorInstance& inst, const Path& path,
                          const TheoryError& e) {
    CheckErrorKind kind = theory.find(inst.name) ? CheckErrorKind::Arity
                                                 : CheckErrorKind::UnknownCtor;
    return make_error(kind, path, e.what());
  }

  SynthesisResult synth(const Context& ctx, const ProofPtr& proof,
                        const Path& path) {
    return std::visit(
        [&](const auto& n) -> SynthesisResult {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ProofTerm::Var>) {
            if (const FormulaPtr* f = ctx.lookup(n.name)) return *f;
            return make_error(CheckErrorKind::UnboundVariable, path,
                              "unbound proof variable '" + n.name + "'");
          } else if constexpr (std::is_same_v<T, ProofTerm::App>) {
            SynthesisResult fn = synth(ctx, n.fn, child(path, 0));
            if (auto* e = std::get_if<CheckError>(&fn)) return *e;
            FormulaPtr fn_type = std::get<FormulaPtr>(fn);
            auto* imp = std::get_if<Formula::Implies>(&fn_type->node);
            if (!imp)
              return make_error(CheckErrorKind::TypeMismatch, child(path, 0),
                                "application head is not an implication",
                                nullptr, fn_type);
            if (auto e = chk(ctx, n.arg, imp->lhs, child(path, 1))) return *e;
            return imp->rhs;
          } else if constexpr (std::is_same_v<T, ProofTerm::FoApp>) {
            SynthesisResult fn = synth(ctx, n.fn, child(path, 0));
            if (auto* e = std::get_if<CheckError>(&fn)) return *e;
            FormulaPtr fn_type = std::get<FormulaPtr>(fn);
            auto* all = std::get_if<Formula::Forall>(&fn_type->node);
            if (!all)
              return make_error(CheckErrorKind::TypeMismatch, child(path, 0),
                                "first-order application head is not a "
                                "universal formula",
                                nullptr, fn_type);
            return subst_fo(all->body, all->var, n.arg);
          } else if constexpr (std::is_same_v<T, ProofTerm::Lam>) {
            auto [var, body] = fresh_proof_binder(ctx, n.var, n.body);
            SynthesisResult r =
                synth(ctx.extended(var, n.ann), body, child(path, 0));
            if (auto* e = std::get_if<CheckError>(&r)) return *e;
            return mk::implies(n.ann, std::get<FormulaPtr>(r));
          } else if constexpr (std::is_same_v<T, ProofTerm::FoLam>) {
            std::string var = n.var;
            ProofPtr body = n.body;
            NameSet range_fv = ctx.range_fo_vars();
            if (range_fv.count(var)) {
              NameSet avoid = range_fv;
              NameSet bfv = free_fo_vars(body);
              avoid.insert(bfv.begin(), bfv.end());
              var = fresh_name(var, avoid);
              body = subst_fo(body, n.var, mk::fovar(var));
            }
            SynthesisResult r = synth(ctx, body, child(path, 0));
            if (auto* e = std::get_if<CheckError>(&r)) return *e;
            return mk::forall(var, std::get<FormulaPtr>(r));
          } else if constexpr (std::is_same_v<T, ProofTerm::Pair>) {
            SynthesisResult l = synth(ctx, n.first, child(path, 0));
            if (auto* e = std::get_if<CheckError>(&l)) return *e;
            SynthesisResult r = synth(ctx, n.second, child(path, 1));
            if (auto* e = std::get_if<CheckError>(&r)) return *e;
            return mk::conj(std::get<FormulaPtr>(l), std::get<FormulaPtr>(r));
          } else if constexpr (std::is_same_v<T, ProofTerm::Fst> ||
                               std::is_same_v<T, ProofTerm::Snd>) {
            SynthesisResult r = synth(ctx, n.arg, child(path, 0));
            if (auto* e = std::get_if<CheckError>(&r)) return *e;
            FormulaPtr t = std::get<FormulaPtr>(r);
            auto* conj = std::get_if<Formula::And>(&t->node);
            if (!conj)
              return make_error(CheckErrorKind::TypeMismatch, child(path, 0),
                                "projection argument is not a conjunction",
                                nullptr, t);
            if constexpr (std::is_same_v<T, ProofTerm::Fst>)
              return conj->left;
            else
              return conj->right;
          } else if constexpr (std::is_same_v<T, ProofTerm::Case>) {
            FormulaPtr scrut_goal = mk::disj(n.left_ann, n.right_ann);
            if (auto e = chk(ctx, n.scrutinee, scrut_goal, child(path, 0)))
              return *e;
            auto [lv, lb] = fresh_proof_binder(ctx, n.left_var, n.left_body);
            SynthesisResult l =
                synth(ctx.extended(lv, n.left_ann), lb, child(path, 1));
            if (auto* e = std::get_if<CheckError>(&l)) return *e;
            auto [rv, rb] = fresh_proof_binder(ctx, n.right_var, n.right_body);
            SynthesisResult r =
                synth(ctx.extended(rv, n.right_ann), rb, child(path, 2));
            if (auto* e = std::get_if<CheckError>(&r)) return *e;
            FormulaPtr lt = std::get<FormulaPtr>(l);
            FormulaPtr rt = std::get<FormulaPtr>(r);
            if (!alpha_equal(lt, rt))
              return make_error(CheckErrorKind::TypeMismatch, child(path, 2),
                                "case branches synthesize different formulas",
                                lt, rt);
            return lt;
          } else if constexpr (std::is_same_v<T, ProofTerm::Witness> ||
                               std::is_same_v<T, ProofTerm::Inl> ||
                               std::is_same_v<T, ProofTerm::Inr> ||
                               std::is_same_v<T, ProofTerm::Magic>) {
            return make_error(CheckErrorKind::NotSynthesizable, path,
                              "term requires a checking goal");
          } else if constexpr (std::is_same_v<T, ProofTerm::Let>) {
            std::string fo_var = n.fo_var;
            FormulaPtr ann = n.ann;
            ProofPtr body = n.body;
            NameSet range_fv = ctx.range_fo_vars();
            if (range_fv.count(fo_var)) {
              NameSet avoid = range_fv;
              NameSet afv = free_fo_vars(ann);
              NameSet bfv = free_fo_vars(body);
              avoid.insert(afv.begin(), afv.end());
              avoid.insert(bfv.begin(), bfv.end());
              std::string renamed = fresh_name(fo_var, avoid);
              ann = subst_fo(ann, fo_var, mk::fovar(renamed));
              body = subst_fo(body, fo_var, mk::fovar(renamed));
              fo_var = renamed;
            }
            if (auto e = chk(ctx, n.head, mk::exists(fo_var, ann),
                             child(path, 0)))
              return *e;
            auto [pv, pb] = fresh_proof_binder(ctx, n.proof_var, body);
            SynthesisResult r =
                synth(ctx.extended(pv, ann), pb, child(path, 1));
            if (auto* e = std::get_if<CheckError>(&r)) return *e;
            FormulaPtr result = std::get<FormulaPtr>(r);
            if (free_fo_vars(result).count(fo_var))
              return make_error(
                  CheckErrorKind::SideConditionViolated, child(path, 1),
                  "let-bound first-order variable '" + fo_var +
                      "' escapes into the result formula",
                  nullptr, result);
            return result;
          } else if constexpr (std::is_same_v<T, ProofTerm::AxRep>) {
            FormulaPtr prop;
            try {
              prop = phi_a(theory, n.ctor, n.member);
            } catch (const TheoryError& e) {
              return theory_error(n.ctor, path, e);
            }
            if (auto e = chk(ctx, n.body, prop, child(path, 0))) return *e;
            return member_of_instance(n.ctor, n.member);
          } else if constexpr (std::is_same_v<T, ProofTerm::AxProp>) {
            FormulaPtr prop;
            try {
              prop = phi_a(theory, n.ctor, n.member);
            } catch (const TheoryError& e) {
              return theory_error(n.ctor, path, e);
            }
            if (auto e = chk(ctx, n.body, member_of_instance(n.ctor, n.member),
                             child(path, 0)))
              return *e;
            return prop;
          } else if constexpr (std::is_same_v<T, ProofTerm::Ind>) {
            if (!theory.has_induction)
              return make_error(CheckErrorKind::InductionUnavailable, path,
                                "theory '" + theory.name +
                                    "' has no epsilon-induction");
            if (n.args.size() != n.schema_params.size())
              return make_error(CheckErrorKind::Arity, path,
                                "ind instance expects " +
                                    std::to_string(n.schema_params.size()) +
                                    " argument(s), got " +
                                    std::to_string(n.args.size()));
            FoSubst params;
            for (size_t i = 0; i < n.args.size(); ++i)
              params.emplace(n.schema_params[i], n.args[i]);
            auto instantiate = [&](const TermPtr& at) {
              FoSubst sub = params;
              sub[n.schema_var] = at;
              return subst_fo_many(n.schema, sub);
            };
            NameSet avoid = free_fo_vars(n.schema);
            for (const auto& a : n.args) {
              NameSet fv = free_fo_vars(a);
              avoid.insert(fv.begin(), fv.end());
            }
            std::string c = fresh_name("c", avoid);
            avoid.insert(c);
            std::string b = fresh_name("b", avoid);
            TermPtr cv = mk::fovar(c);
            TermPtr bv = mk::fovar(b);
            FormulaPtr premise = mk::forall(
                c, mk::implies(mk::forall(b, mk::implies(mk::member(bv, cv),
                                                         instantiate(bv))),
                               instantiate(cv)));
            if (auto e = chk(ctx, n.body, premise, child(path, 0))) return *e;
            std::string a = fresh_name(n.schema_var, avoid);
            return mk::forall(a, instantiate(mk::fovar(a)));
          } else {
            static_assert(std::is_same_v<T, ProofTerm::Ascribe>);
            if (auto e = chk(ctx, n.body, n.ann, child(path, 0))) return *e;
            return n.ann;
          }
        },
        proof->node);
  }

  std::optional<CheckError> chk(const Context& ctx, const ProofPtr& proof,
                                const FormulaPtr& goal, const Path& path) {
    return std::visit(
        [&](const auto& n) -> std::optional<CheckError> {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ProofTerm::Inl>) {
            auto* disj = std::get_if<Formula::Or>(&goal->node);
            if (!disj)
              return make_error(CheckErrorKind::TypeMismatch, path,
                                "inl against a non-disjunction goal", goal);
            return chk(ctx, n.arg, disj->left, child(path, 0));
          } else if constexpr (std::is_same_v<T, ProofTerm::Inr>) {
            auto* disj = std::get_if<Formula::Or>(&goal->node);
            if (!disj)
              return make_error(CheckErrorKind::TypeMismatch, path,
                                "inr against a non-disjunction goal", goal);
            return chk(ctx, n.arg, disj->right, child(path, 0));
          } else if constexpr (std::is_same_v<T, ProofTerm::Witness>) {
            auto* ex = std::get_if<Formula::Exists>(&goal->node);
            if (!ex)
              return make_error(CheckErrorKind::TypeMismatch, path,
                                "witness against a non-existential goal", goal);
            return chk(ctx, n.body, subst_fo(ex->body, ex->var, n.witness),
                       child(path, 0));
          } else if constexpr (std::is_same_v<T, ProofTerm::Magic>) {
            return chk(ctx, n.arg, mk::bottom(), child(path, 0));
          } else if constexpr (std::is_same_v<T, ProofTerm::Lam>) {
            auto* imp = std::get_if<Formula::Implies>(&goal->node);
            if (!imp)
              return synth_against(ctx, proof, goal, path);
            if (!alpha_equal(n.ann, imp->lhs))
              return make_error(CheckErrorKind::TypeMismatch, path,
                                "lambda annotation differs from the goal's "
                                "antecedent",
                                imp->lhs, n.ann);
            auto [var, body] = fresh_proof_binder(ctx, n.var, n.body);
            return chk(ctx.extended(var, n.ann), body, imp->rhs,
                       child(path, 0));
          } else if constexpr (std::is_same_v<T, ProofTerm::FoLam>) {
            auto* all = std::get_if<Formula::Forall>(&goal->node);
            if (!all) return synth_against(ctx, proof, goal, path);
            NameSet avoid = ctx.range_fo_vars();
            NameSet bfv = free_fo_vars(n.body);
            avoid.insert(bfv.begin(), bfv.end());
            NameSet gfv = free_fo_vars(all->body);
            avoid.insert(gfv.begin(), gfv.end());
            std::string var = fresh_name(n.var, avoid);
            ProofPtr body =
                var == n.var ? n.body : subst_fo(n.body, n.var, mk::fovar(var));
            return chk(ctx, body, subst_fo(all->body, all->var, mk::fovar(var)),
                       child(path, 0));
          } else if constexpr (std::is_same_v<T, ProofTerm::Pair>) {
            auto* conj = std::get_if<Formula::And>(&goal->node);
            if (!conj) return synth_against(ctx, proof, goal, path);
            if (auto e = chk(ctx, n.first, conj->left, child(path, 0)))
              return e;
            return chk(ctx, n.second, conj->right, child(path, 1));
          } else if constexpr (std::is_same_v<T, ProofTerm::Case>) {
            FormulaPtr scrut_goal = mk::disj(n.left_ann, n.right_ann);
            if (auto e = chk(ctx, n.scrutinee, scrut_goal, child(path, 0)))
              return e;
            auto [lv, lb] = fresh_proof_binder(ctx, n.left_var, n.left_body);
            if (auto e =
                    chk(ctx.extended(lv, n.left_ann), lb, goal, child(path, 1)))
              return e;
            auto [rv, rb] = fresh_proof_binder(ctx, n.right_var, n.right_body);
            return chk(ctx.extended(rv, n.right_ann), rb, goal, child(path, 2));
          } else if constexpr (std::is_same_v<T, ProofTerm::Let>) {
            std::string fo_var = n.fo_var;
            FormulaPtr ann = n.ann;
            ProofPtr body = n.body;
            NameSet avoid = ctx.range_fo_vars();
            NameSet gfv = free_fo_vars(goal);
            avoid.insert(gfv.begin(), gfv.end());
            if (avoid.count(fo_var)) {
              NameSet all = avoid;
              NameSet afv = free_fo_vars(ann);
              NameSet bfv = free_fo_vars(body);
              all.insert(afv.begin(), afv.end());
              all.insert(bfv.begin(), bfv.end());
              std::string renamed = fresh_name(fo_var, all);
              ann = subst_fo(ann, fo_var, mk::fovar(renamed));
              body = subst_fo(body, fo_var, mk::fovar(renamed));
              fo_var = renamed;
            }
            if (auto e = chk(ctx, n.head, mk::exists(fo_var, ann),
                             child(path, 0)))
              return e;
            auto [pv, pb] = fresh_proof_binder(ctx, n.proof_var, body);
            return chk(ctx.extended(pv, ann), pb, goal, child(path, 1));
          } else if constexpr (std::is_same_v<T, ProofTerm::Ascribe>) {
            if (auto e = chk(ctx, n.body, n.ann, child(path, 0))) return e;
            if (!alpha_equal(n.ann, goal))
              return make_error(CheckErrorKind::TypeMismatch, path,
                                "ascription differs from the goal", goal,
                                n.ann);
            return std::nullopt;
          } else {
            return synth_against(ctx, proof, goal, path);
          }
        },
        proof->node);
  }

  std::optional<CheckError> synth_against(const Context& ctx,
                                          const ProofPtr& proof,
                                          const FormulaPtr& goal,
                                          const Path& path) {
    SynthesisResult r = synth(ctx, proof, path);
    if (auto* e = std::get_if<CheckError>(&r)) return *e;
    FormulaPtr actual = std::get<FormulaPtr>(r);
    if (!alpha_equal(actual, goal))
      return make_error(CheckErrorKind::TypeMismatch, path,
                        "synthesized formula differs from the goal", goal,
                        actual);
    return std::nullopt;
  }
};

}  // namespace

SynthesisResult synthesize(const Theory& theory, const Context& ctx,
                           const ProofPtr& proof) {
  Checker checker{theory};
  return checker.synth(ctx, proof, {});
}

std::optional<CheckError> check(const Theory& theory, const Context& ctx,
                                const ProofPtr& proof, const FormulaPtr& goal) {
  Checker checker{theory};
  return checker.chk(ctx, proof, goal, {});
}

FormulaPtr check_axiom_instance(const Theory& theory,
                                const std::string& ctor_name,
                                const std::vector<FormulaParam>& params) {
  const AxiomDescriptor* d = theory.find(ctor_name);
  if (!d) throw TheoryError("unknown constructor '" + ctor_name + "'");

  // Schema parameters of the carried formula, universally closed outermost.
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

  CtorInstance inst{ctor_name, params, arg_terms};
  FormulaPtr prop = phi_a(theory, inst, mk::fovar(member));
  FormulaPtr membership = member_of_instance(inst, mk::fovar(member));
  FormulaPtr core =
      mk::conj(mk::implies(membership, prop), mk::implies(prop, membership));

  FormulaPtr out = mk::forall(member, core);
  for (auto it = arg_names.rbegin(); it != arg_names.rend(); ++it)
    out = mk::forall(*it, out);
  for (auto it = param_fv.rbegin(); it != param_fv.rend(); ++it)
    out = mk::forall(*it, out);
  return out;
}

FormulaPtr induction_axiom_formula(const std::string& schema_var,
                                   const std::vector<std::string>& schema_params,
                                   const FormulaPtr& schema) {
  NameSet avoid = free_fo_vars(schema);
  avoid.insert(schema_var);
  avoid.insert(schema_params.begin(), schema_params.end());
  std::string b = fresh_name("b", avoid);
  TermPtr bv = mk::fovar(b);
  FormulaPtr at_b = subst_fo(schema, schema_var, bv);
  FormulaPtr step = mk::forall(
      schema_var,
      mk::implies(mk::forall(b, mk::implies(mk::member(bv, mk::fovar(schema_var)),
                                            at_b)),
                  schema));
  FormulaPtr out =
      mk::implies(step, mk::forall(schema_var, schema));
  for (auto it = schema_params.rbegin(); it != schema_params.rend(); ++it)
    out = mk::forall(*it, out);
  return out;
}

}  // namespace lz
