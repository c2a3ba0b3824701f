#include "lz/meta.hpp"

namespace lz {

ClassPredicate trivial_class() {
  return ClassPredicate{"x", eq(mk::fovar("x"), mk::fovar("x"))};
}

namespace {

// ---- term definability ----------------------------------------------------

FormulaPtr def_at(const Theory& theory, const TermPtr& term,
                  const std::string& x);
FormulaPtr elim(const Theory& theory, const FormulaPtr& f);

TermPtr replace_term(const TermPtr& t, const TermPtr& target,
                     const TermPtr& replacement, const NameSet& target_fv,
                     const std::string& repl_name);
FormulaPtr replace_term(const FormulaPtr& f, const TermPtr& target,
                        const TermPtr& replacement, const NameSet& target_fv,
                        const std::string& repl_name);

TermPtr replace_term(const TermPtr& t, const TermPtr& target,
                     const TermPtr& replacement, const NameSet& target_fv,
                     const std::string& repl_name) {
  if (alpha_equal(t, target)) return replacement;
  auto* c = std::get_if<SetTerm::Ctor>(&t->node);
  if (!c) return t;
  std::vector<FormulaParam> params;
  for (const auto& p : c->params)
    params.push_back(FormulaParam{
        p.binders,
        replace_term(p.body, target, replacement, target_fv, repl_name)});
  std::vector<TermPtr> args;
  for (const auto& a : c->args)
    args.push_back(replace_term(a, target, replacement, target_fv, repl_name));
  return mk::ctor(c->name, std::move(params), std::move(args));
}

FormulaPtr replace_term(const FormulaPtr& f, const TermPtr& target,
                        const TermPtr& replacement, const NameSet& target_fv,
                        const std::string& repl_name) {
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Bottom> ||
                      std::is_same_v<T, Formula::Hole>) {
          return f;
        } else if constexpr (std::is_same_v<T, Formula::Member>) {
          return mk::member(
              replace_term(n.element, target, replacement, target_fv,
                           repl_name),
              replace_term(n.set, target, replacement, target_fv, repl_name));
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          return mk::conj(
              replace_term(n.left, target, replacement, target_fv, repl_name),
              replace_term(n.right, target, replacement, target_fv,
                           repl_name));
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          return mk::disj(
              replace_term(n.left, target, replacement, target_fv, repl_name),
              replace_term(n.right, target, replacement, target_fv,
                           repl_name));
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          return mk::implies(
              replace_term(n.lhs, target, replacement, target_fv, repl_name),
              replace_term(n.rhs, target, replacement, target_fv, repl_name));
        } else {
          static_assert(std::is_same_v<T, Formula::Forall> ||
                        std::is_same_v<T, Formula::Exists>);
          // A binder capturing a free variable of the target makes inner
          // syntactic matches refer to the bound variable, not the target.
          if (target_fv.count(n.var)) return f;
          std::string var = n.var;
          FormulaPtr body = n.body;
          if (var == repl_name) {
            NameSet avoid = free_fo_vars(body);
            avoid.insert(repl_name);
            avoid.insert(target_fv.begin(), target_fv.end());
            std::string renamed = fresh_name(var, avoid);
            body = subst_fo(body, var, mk::fovar(renamed));
            var = renamed;
          }
          body = replace_term(body, target, replacement, target_fv, repl_name);
          if constexpr (std::is_same_v<T, Formula::Forall>)
            return mk::forall(var, body);
          else
            return mk::exists(var, body);
        }
      },
      f->node);
}

bool is_fovar(const TermPtr& t) {
  return std::holds_alternative<SetTerm::FoVar>(t->node);
}

// Rewrites one membership atom into a term-free formula, introducing an
// existential with the defining formula for every composite side.
FormulaPtr elim_member(const Theory& theory, const Formula::Member& m) {
  NameSet avoid = free_fo_vars(m.element);
  NameSet set_fv = free_fo_vars(m.set);
  avoid.insert(set_fv.begin(), set_fv.end());

  std::vector<std::pair<std::string, TermPtr>> introduced;
  auto side = [&](const TermPtr& t) -> TermPtr {
    if (is_fovar(t)) return t;
    std::string v = fresh_name("x", avoid);
    avoid.insert(v);
    introduced.emplace_back(v, t);
    return mk::fovar(v);
  };
  TermPtr e = side(m.element);
  TermPtr s = side(m.set);
  FormulaPtr out = mk::member(e, s);
  for (auto it = introduced.rbegin(); it != introduced.rend(); ++it)
    out = mk::exists(it->first,
                     mk::conj(def_at(theory, it->second, it->first), out));
  return out;
}

FormulaPtr elim(const Theory& theory, const FormulaPtr& f) {
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Bottom> ||
                      std::is_same_v<T, Formula::Hole>) {
          return f;
        } else if constexpr (std::is_same_v<T, Formula::Member>) {
          return elim_member(theory, n);
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          return mk::conj(elim(theory, n.left), elim(theory, n.right));
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          return mk::disj(elim(theory, n.left), elim(theory, n.right));
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          return mk::implies(elim(theory, n.lhs), elim(theory, n.rhs));
        } else if constexpr (std::is_same_v<T, Formula::Forall>) {
          return mk::forall(n.var, elim(theory, n.body));
        } else {
          static_assert(std::is_same_v<T, Formula::Exists>);
          return mk::exists(n.var, elim(theory, n.body));
        }
      },
      f->node);
}

FormulaPtr def_at(const Theory& theory, const TermPtr& term,
                  const std::string& x) {
  if (auto* v = std::get_if<SetTerm::FoVar>(&term->node))
    return eq(mk::fovar(x), mk::fovar(v->name));

  const auto& inst = std::get<SetTerm::Ctor>(term->node);
  NameSet used = free_fo_vars(term);
  used.insert(x);

  std::vector<std::string> arg_names;
  std::vector<TermPtr> arg_vars;
  for (size_t i = 0; i < inst.args.size(); ++i) {
    std::string v = fresh_name("x", used);
    used.insert(v);
    arg_names.push_back(v);
    arg_vars.push_back(mk::fovar(v));
  }
  CtorInstance abstracted{inst.name, inst.params, arg_vars};
  std::string c = fresh_name("c", used);

  FormulaPtr body = phi_a(theory, abstracted, mk::fovar(c));
  // Self-referential constructors (omega's fixed-point clause, circular
  // constants) mention the term itself; those occurrences become the hole.
  body = replace_term(body, term, mk::fovar(x), free_fo_vars(term), x);

  FormulaPtr core = mk::forall(
      c, iff(mk::member(mk::fovar(c), mk::fovar(x)), body));
  core = elim(theory, core);
  for (size_t i = inst.args.size(); i-- > 0;)
    core = mk::exists(
        arg_names[i],
        mk::conj(def_at(theory, inst.args[i], arg_names[i]), core));
  return core;
}

}  // namespace

FormulaPtr define_term(const Theory& theory, const TermPtr& term,
                       const std::string& hole) {
  std::string x = fresh_name(hole, free_fo_vars(term));
  return def_at(theory, term, x);
}

FormulaPtr eliminate_terms(const Theory& theory, const FormulaPtr& formula) {
  return elim(theory, formula);
}

// ---- relativization -------------------------------------------------------

namespace {

// Renames a carried-formula binder when it would capture a parameter of T.
void avoid_params(std::string& var, FormulaPtr& body, const NameSet& params) {
  if (!params.count(var)) return;
  NameSet avoid = free_fo_vars(body);
  avoid.insert(params.begin(), params.end());
  std::string renamed = fresh_name(var, avoid);
  body = subst_fo(body, var, mk::fovar(renamed));
  var = renamed;
}

}  // namespace

TermPtr relativize_term(const TermPtr& term, const ClassPredicate& T) {
  if (is_fovar(term)) return term;
  const auto& c = std::get<SetTerm::Ctor>(term->node);
  NameSet params = T.parameters();

  std::vector<TermPtr> args;
  for (const auto& a : c.args) args.push_back(relativize_term(a, T));

  if (c.name == "power") {
    TermPtr inner = mk::ctor("power", {}, args);
    NameSet avoid = params;
    NameSet fv = free_fo_vars(inner);
    avoid.insert(fv.begin(), fv.end());
    avoid.insert(T.hole);
    std::string b = fresh_name("x", avoid);
    return mk::sep(b, T.apply(mk::fovar(b)), inner);
  }
  if (c.name == "sep") {
    std::string binder = c.params[0].binders[0];
    FormulaPtr body = c.params[0].body;
    avoid_params(binder, body, params);
    return mk::sep(binder, relativize_formula(body, T), args[0]);
  }
  if (c.name == "repl") {
    std::string in = c.params[0].binders[0];
    std::string out = c.params[0].binders[1];
    FormulaPtr body = c.params[0].body;
    avoid_params(in, body, params);
    avoid_params(out, body, params);
    FormulaPtr guarded =
        mk::conj(T.apply(mk::fovar(out)), relativize_formula(body, T));
    return mk::repl(in, out, guarded, args[0]);
  }

  // Variables aside, everything else (empty, omega, pair, union, theory
  // constants) relativizes pointwise.
  std::vector<FormulaParam> rel_params;
  for (const auto& p : c.params) {
    FormulaParam q = p;
    FormulaPtr body = q.body;
    for (auto& b : q.binders) avoid_params(b, body, params);
    q.body = relativize_formula(body, T);
    rel_params.push_back(std::move(q));
  }
  return mk::ctor(c.name, std::move(rel_params), std::move(args));
}

FormulaPtr relativize_formula(const FormulaPtr& formula,
                              const ClassPredicate& T) {
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using FT = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<FT, Formula::Bottom> ||
                      std::is_same_v<FT, Formula::Hole>) {
          return formula;
        } else if constexpr (std::is_same_v<FT, Formula::Member>) {
          return mk::member(relativize_term(n.element, T),
                            relativize_term(n.set, T));
        } else if constexpr (std::is_same_v<FT, Formula::And>) {
          return mk::conj(relativize_formula(n.left, T),
                          relativize_formula(n.right, T));
        } else if constexpr (std::is_same_v<FT, Formula::Or>) {
          return mk::disj(relativize_formula(n.left, T),
                          relativize_formula(n.right, T));
        } else if constexpr (std::is_same_v<FT, Formula::Implies>) {
          return mk::implies(relativize_formula(n.lhs, T),
                             relativize_formula(n.rhs, T));
        } else {
          static_assert(std::is_same_v<FT, Formula::Forall> ||
                        std::is_same_v<FT, Formula::Exists>);
          std::string var = n.var;
          FormulaPtr body = n.body;
          avoid_params(var, body, T.parameters());
          FormulaPtr guard = T.apply(mk::fovar(var));
          FormulaPtr rel = relativize_formula(body, T);
          if constexpr (std::is_same_v<FT, Formula::Forall>)
            return mk::forall(var, mk::implies(guard, rel));
          else
            return mk::exists(var, mk::conj(guard, rel));
        }
      },
      formula->node);
}

}  // namespace lz
