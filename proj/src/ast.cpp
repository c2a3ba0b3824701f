#include "lz/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace lz {

// ---- construction helpers -------------------------------------------------

namespace mk {

TermPtr fovar(std::string name) {
  return std::make_shared<SetTerm>(SetTerm{SetTerm::FoVar{std::move(name)}});
}

TermPtr ctor(std::string name, std::vector<FormulaParam> params,
             std::vector<TermPtr> args) {
  return std::make_shared<SetTerm>(SetTerm{
      SetTerm::Ctor{std::move(name), std::move(params), std::move(args)}});
}

TermPtr constant(std::string name) { return ctor(std::move(name), {}, {}); }

TermPtr empty() { return constant("empty"); }
TermPtr omega() { return constant("omega"); }

TermPtr pair(TermPtr a, TermPtr b) {
  return ctor("pair", {}, {std::move(a), std::move(b)});
}

TermPtr union_of(TermPtr a) { return ctor("union", {}, {std::move(a)}); }
TermPtr power(TermPtr a) { return ctor("power", {}, {std::move(a)}); }

TermPtr sep(std::string binder, FormulaPtr body, TermPtr of) {
  return ctor("sep", {FormulaParam{{std::move(binder)}, std::move(body)}},
              {std::move(of)});
}

TermPtr repl(std::string in_binder, std::string out_binder, FormulaPtr body,
             TermPtr of) {
  return ctor(
      "repl",
      {FormulaParam{{std::move(in_binder), std::move(out_binder)}, std::move(body)}},
      {std::move(of)});
}

FormulaPtr bottom() {
  return std::make_shared<Formula>(Formula{Formula::Bottom{}});
}

FormulaPtr member(TermPtr element, TermPtr set) {
  return std::make_shared<Formula>(
      Formula{Formula::Member{std::move(element), std::move(set)}});
}

FormulaPtr conj(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{Formula::And{std::move(l), std::move(r)}});
}

FormulaPtr disj(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{Formula::Or{std::move(l), std::move(r)}});
}

FormulaPtr implies(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{Formula::Implies{std::move(l), std::move(r)}});
}

FormulaPtr forall(std::string var, FormulaPtr body) {
  return std::make_shared<Formula>(
      Formula{Formula::Forall{std::move(var), std::move(body)}});
}

FormulaPtr exists(std::string var, FormulaPtr body) {
  return std::make_shared<Formula>(
      Formula{Formula::Exists{std::move(var), std::move(body)}});
}

FormulaPtr hole(std::vector<TermPtr> args) {
  return std::make_shared<Formula>(Formula{Formula::Hole{std::move(args)}});
}

ProofPtr var(std::string name) {
  return std::make_shared<ProofTerm>(ProofTerm{ProofTerm::Var{std::move(name)}});
}

ProofPtr app(ProofPtr fn, ProofPtr arg) {
  return std::make_shared<ProofTerm>(
      ProofTerm{ProofTerm::App{std::move(fn), std::move(arg)}});
}

ProofPtr fo_app(ProofPtr fn, TermPtr arg) {
  return std::make_shared<ProofTerm>(
      ProofTerm{ProofTerm::FoApp{std::move(fn), std::move(arg)}});
}

ProofPtr lam(std::string var, FormulaPtr ann, ProofPtr body) {
  return std::make_shared<ProofTerm>(
      ProofTerm{ProofTerm::Lam{std::move(var), std::move(ann), std::move(body)}});
}

ProofPtr fo_lam(std::string var, ProofPtr body) {
  return std::make_shared<ProofTerm>(
      ProofTerm{ProofTerm::FoLam{std::move(var), std::move(body)}});
}

ProofPtr proof_pair(ProofPtr first, ProofPtr second) {
  return std::make_shared<ProofTerm>(
      ProofTerm{ProofTerm::Pair{std::move(first), std::move(second)}});
}

ProofPtr fst(ProofPtr arg) {
  return std::make_shared<ProofTerm>(ProofTerm{ProofTerm::Fst{std::move(arg)}});
}

ProofPtr snd(ProofPtr arg) {
  return std::make_shared<ProofTerm>(ProofTerm{ProofTerm::Snd{std::move(arg)}});
}

ProofPtr inl(ProofPtr arg) {
  return std::make_shared<ProofTerm>(ProofTerm{ProofTerm::Inl{std::move(arg)}});
}

ProofPtr inr(ProofPtr arg) {
  return std::make_shared<ProofTerm>(ProofTerm{ProofTerm::Inr{std::move(arg)}});
}

ProofPtr case_of(ProofPtr scrutinee, std::string lv, FormulaPtr la, ProofPtr lb,
                 std::string rv, FormulaPtr ra, ProofPtr rb) {
  return std::make_shared<ProofTerm>(ProofTerm{
      ProofTerm::Case{std::move(scrutinee), std::move(lv), std::move(la),
                      std::move(lb), std::move(rv), std::move(ra), std::move(rb)}});
}

ProofPtr witness(TermPtr t, ProofPtr body) {
  return std::make_shared<ProofTerm>(
      ProofTerm{ProofTerm::Witness{std::move(t), std::move(body)}});
}

ProofPtr let_in(std::string fo_var, std::string proof_var, FormulaPtr ann,
                ProofPtr head, ProofPtr body) {
  return std::make_shared<ProofTerm>(
      ProofTerm{ProofTerm::Let{std::move(fo_var), std::move(proof_var),
                               std::move(ann), std::move(head), std::move(body)}});
}

ProofPtr magic(ProofPtr arg) {
  return std::make_shared<ProofTerm>(ProofTerm{ProofTerm::Magic{std::move(arg)}});
}

ProofPtr ax_rep(CtorInstance ctor, TermPtr member, ProofPtr body) {
  return std::make_shared<ProofTerm>(ProofTerm{
      ProofTerm::AxRep{std::move(ctor), std::move(member), std::move(body)}});
}

ProofPtr ax_prop(CtorInstance ctor, TermPtr member, ProofPtr body) {
  return std::make_shared<ProofTerm>(ProofTerm{
      ProofTerm::AxProp{std::move(ctor), std::move(member), std::move(body)}});
}

ProofPtr ind(std::string schema_var, std::vector<std::string> schema_params,
             FormulaPtr schema, std::vector<TermPtr> args, ProofPtr body) {
  return std::make_shared<ProofTerm>(ProofTerm{
      ProofTerm::Ind{std::move(schema_var), std::move(schema_params),
                     std::move(schema), std::move(args), std::move(body)}});
}

ProofPtr ascribe(ProofPtr body, FormulaPtr ann) {
  return std::make_shared<ProofTerm>(
      ProofTerm{ProofTerm::Ascribe{std::move(body), std::move(ann)}});
}

}  // namespace mk

// ---- free variables -------------------------------------------------------

namespace {

struct FvCollector {
  NameSet fo;
  NameSet proof;
  // Currently bound names; occurrences of these are not free.
  NameSet bound_fo;
  NameSet bound_proof;

  void term(const TermPtr& t) {
    if (auto* v = std::get_if<SetTerm::FoVar>(&t->node)) {
      if (!bound_fo.count(v->name)) fo.insert(v->name);
      return;
    }
    const auto& c = std::get<SetTerm::Ctor>(t->node);
    for (const auto& p : c.params) param(p);
    for (const auto& a : c.args) term(a);
  }

  void param(const FormulaParam& p) {
    std::vector<std::string> shadowed;
    for (const auto& b : p.binders)
      if (bound_fo.insert(b).second) shadowed.push_back(b);
    formula(p.body);
    for (const auto& b : shadowed) bound_fo.erase(b);
  }

  void with_fo(const std::string& name, auto&& fn) {
    bool added = bound_fo.insert(name).second;
    fn();
    if (added) bound_fo.erase(name);
  }

  void with_proof(const std::string& name, auto&& fn) {
    bool added = bound_proof.insert(name).second;
    fn();
    if (added) bound_proof.erase(name);
  }

  void formula(const FormulaPtr& f) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Formula::Bottom>) {
          } else if constexpr (std::is_same_v<T, Formula::Member>) {
            term(n.element);
            term(n.set);
          } else if constexpr (std::is_same_v<T, Formula::And>) {
            formula(n.left);
            formula(n.right);
          } else if constexpr (std::is_same_v<T, Formula::Or>) {
            formula(n.left);
            formula(n.right);
          } else if constexpr (std::is_same_v<T, Formula::Implies>) {
            formula(n.lhs);
            formula(n.rhs);
          } else if constexpr (std::is_same_v<T, Formula::Forall>) {
            with_fo(n.var, [&] { formula(n.body); });
          } else if constexpr (std::is_same_v<T, Formula::Exists>) {
            with_fo(n.var, [&] { formula(n.body); });
          } else if constexpr (std::is_same_v<T, Formula::Hole>) {
            for (const auto& a : n.args) term(a);
          }
        },
        f->node);
  }

  void ctor_instance(const CtorInstance& c) {
    for (const auto& p : c.params) param(p);
    for (const auto& a : c.args) term(a);
  }

  void proof_term(const ProofPtr& p) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ProofTerm::Var>) {
            if (!bound_proof.count(n.name)) proof.insert(n.name);
          } else if constexpr (std::is_same_v<T, ProofTerm::App>) {
            proof_term(n.fn);
            proof_term(n.arg);
          } else if constexpr (std::is_same_v<T, ProofTerm::FoApp>) {
            proof_term(n.fn);
            term(n.arg);
          } else if constexpr (std::is_same_v<T, ProofTerm::Lam>) {
            formula(n.ann);
            with_proof(n.var, [&] { proof_term(n.body); });
          } else if constexpr (std::is_same_v<T, ProofTerm::FoLam>) {
            with_fo(n.var, [&] { proof_term(n.body); });
          } else if constexpr (std::is_same_v<T, ProofTerm::Pair>) {
            proof_term(n.first);
            proof_term(n.second);
          } else if constexpr (std::is_same_v<T, ProofTerm::Fst> ||
                               std::is_same_v<T, ProofTerm::Snd> ||
                               std::is_same_v<T, ProofTerm::Inl> ||
                               std::is_same_v<T, ProofTerm::Inr> ||
                               std::is_same_v<T, ProofTerm::Magic>) {
            proof_term(n.arg);
          } else if constexpr (std::is_same_v<T, ProofTerm::Case>) {
            proof_term(n.scrutinee);
            formula(n.left_ann);
            with_proof(n.left_var, [&] { proof_term(n.left_body); });
            formula(n.right_ann);
            with_proof(n.right_var, [&] { proof_term(n.right_body); });
          } else if constexpr (std::is_same_v<T, ProofTerm::Witness>) {
            term(n.witness);
            proof_term(n.body);
          } else if constexpr (std::is_same_v<T, ProofTerm::Let>) {
            proof_term(n.head);
            with_fo(n.fo_var, [&] {
              formula(n.ann);
              with_proof(n.proof_var, [&] { proof_term(n.body); });
            });
          } else if constexpr (std::is_same_v<T, ProofTerm::AxRep> ||
                               std::is_same_v<T, ProofTerm::AxProp>) {
            ctor_instance(n.ctor);
            term(n.member);
            proof_term(n.body);
          } else if constexpr (std::is_same_v<T, ProofTerm::Ind>) {
            std::vector<std::string> shadowed;
            if (bound_fo.insert(n.schema_var).second)
              shadowed.push_back(n.schema_var);
            for (const auto& b : n.schema_params)
              if (bound_fo.insert(b).second) shadowed.push_back(b);
            formula(n.schema);
            for (const auto& b : shadowed) bound_fo.erase(b);
            for (const auto& a : n.args) term(a);
            proof_term(n.body);
          } else if constexpr (std::is_same_v<T, ProofTerm::Ascribe>) {
            proof_term(n.body);
            formula(n.ann);
          }
        },
        p->node);
  }
};

}  // namespace

FreeVars free_variables(const TermPtr& t) {
  FvCollector c;
  c.term(t);
  return {std::move(c.fo), std::move(c.proof)};
}

FreeVars free_variables(const FormulaPtr& f) {
  FvCollector c;
  c.formula(f);
  return {std::move(c.fo), std::move(c.proof)};
}

FreeVars free_variables(const ProofPtr& p) {
  FvCollector c;
  c.proof_term(p);
  return {std::move(c.fo), std::move(c.proof)};
}

NameSet free_fo_vars(const TermPtr& t) { return free_variables(t).fo; }
NameSet free_fo_vars(const FormulaPtr& f) { return free_variables(f).fo; }
NameSet free_fo_vars(const ProofPtr& p) { return free_variables(p).fo; }

std::string fresh_name(const std::string& base, const NameSet& used) {
  if (!used.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

// ---- substitution ---------------------------------------------------------

namespace {

NameSet subst_range_fv(const FoSubst& sub) {
  NameSet out;
  for (const auto& [k, v] : sub) {
    NameSet fv = free_fo_vars(v);
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

// Prepares a substitution for descending under fo binders. Binders that would
// capture a free variable of the substituted terms are renamed; the renaming
// rides along in the returned substitution. `binders` is updated in place.
FoSubst under_binders(std::vector<std::string>& binders, const FoSubst& sub,
                      const NameSet& body_fv) {
  FoSubst pruned;
  for (const auto& [k, v] : sub) {
    if (std::find(binders.begin(), binders.end(), k) != binders.end()) continue;
    if (!body_fv.count(k)) continue;
    pruned.emplace(k, v);
  }
  if (pruned.empty()) return pruned;
  NameSet avoid = subst_range_fv(pruned);
  for (const auto& f : body_fv) avoid.insert(f);
  for (const auto& b : binders) avoid.insert(b);
  for (auto& b : binders) {
    if (!subst_range_fv(pruned).count(b)) continue;
    std::string renamed = fresh_name(b, avoid);
    avoid.insert(renamed);
    pruned[b] = mk::fovar(renamed);
    b = renamed;
  }
  return pruned;
}

TermPtr substT(const TermPtr& t, const FoSubst& sub);
FormulaPtr substF(const FormulaPtr& f, const FoSubst& sub);
ProofPtr substP(const ProofPtr& p, const FoSubst& sub);

FormulaParam substParam(const FormulaParam& p, const FoSubst& sub) {
  FormulaParam out = p;
  FoSubst inner = under_binders(out.binders, sub, free_fo_vars(p.body));
  out.body = substF(p.body, inner);
  return out;
}

CtorInstance substCtor(const CtorInstance& c, const FoSubst& sub) {
  CtorInstance out;
  out.name = c.name;
  for (const auto& p : c.params) out.params.push_back(substParam(p, sub));
  for (const auto& a : c.args) out.args.push_back(substT(a, sub));
  return out;
}

TermPtr substT(const TermPtr& t, const FoSubst& sub) {
  if (sub.empty()) return t;
  if (auto* v = std::get_if<SetTerm::FoVar>(&t->node)) {
    auto it = sub.find(v->name);
    return it == sub.end() ? t : it->second;
  }
  const auto& c = std::get<SetTerm::Ctor>(t->node);
  return std::make_shared<SetTerm>(SetTerm{substCtor(c, sub)});
}

FormulaPtr substF(const FormulaPtr& f, const FoSubst& sub) {
  if (sub.empty()) return f;
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Bottom>) {
          return f;
        } else if constexpr (std::is_same_v<T, Formula::Member>) {
          return mk::member(substT(n.element, sub), substT(n.set, sub));
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          return mk::conj(substF(n.left, sub), substF(n.right, sub));
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          return mk::disj(substF(n.left, sub), substF(n.right, sub));
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          return mk::implies(substF(n.lhs, sub), substF(n.rhs, sub));
        } else if constexpr (std::is_same_v<T, Formula::Forall>) {
          std::vector<std::string> binders{n.var};
          FoSubst inner = under_binders(binders, sub, free_fo_vars(n.body));
          return mk::forall(binders[0], substF(n.body, inner));
        } else if constexpr (std::is_same_v<T, Formula::Exists>) {
          std::vector<std::string> binders{n.var};
          FoSubst inner = under_binders(binders, sub, free_fo_vars(n.body));
          return mk::exists(binders[0], substF(n.body, inner));
        } else {
          static_assert(std::is_same_v<T, Formula::Hole>);
          std::vector<TermPtr> args;
          for (const auto& a : n.args) args.push_back(substT(a, sub));
          return mk::hole(std::move(args));
        }
      },
      f->node);
}

ProofPtr substP(const ProofPtr& p, const FoSubst& sub) {
  if (sub.empty()) return p;
  return std::visit(
      [&](const auto& n) -> ProofPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ProofTerm::Var>) {
          return p;
        } else if constexpr (std::is_same_v<T, ProofTerm::App>) {
          return mk::app(substP(n.fn, sub), substP(n.arg, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::FoApp>) {
          return mk::fo_app(substP(n.fn, sub), substT(n.arg, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::Lam>) {
          return mk::lam(n.var, substF(n.ann, sub), substP(n.body, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::FoLam>) {
          std::vector<std::string> binders{n.var};
          FoSubst inner = under_binders(binders, sub, free_fo_vars(n.body));
          return mk::fo_lam(binders[0], substP(n.body, inner));
        } else if constexpr (std::is_same_v<T, ProofTerm::Pair>) {
          return mk::proof_pair(substP(n.first, sub), substP(n.second, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::Fst>) {
          return mk::fst(substP(n.arg, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::Snd>) {
          return mk::snd(substP(n.arg, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::Inl>) {
          return mk::inl(substP(n.arg, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::Inr>) {
          return mk::inr(substP(n.arg, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::Case>) {
          return mk::case_of(substP(n.scrutinee, sub), n.left_var,
                             substF(n.left_ann, sub), substP(n.left_body, sub),
                             n.right_var, substF(n.right_ann, sub),
                             substP(n.right_body, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::Witness>) {
          return mk::witness(substT(n.witness, sub), substP(n.body, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::Let>) {
          ProofPtr head = substP(n.head, sub);
          std::vector<std::string> binders{n.fo_var};
          NameSet scope_fv = free_fo_vars(n.ann);
          NameSet body_fv = free_fo_vars(n.body);
          scope_fv.insert(body_fv.begin(), body_fv.end());
          FoSubst inner = under_binders(binders, sub, scope_fv);
          return mk::let_in(binders[0], n.proof_var, substF(n.ann, inner),
                            std::move(head), substP(n.body, inner));
        } else if constexpr (std::is_same_v<T, ProofTerm::Magic>) {
          return mk::magic(substP(n.arg, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::AxRep>) {
          return mk::ax_rep(substCtor(n.ctor, sub), substT(n.member, sub),
                            substP(n.body, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::AxProp>) {
          return mk::ax_prop(substCtor(n.ctor, sub), substT(n.member, sub),
                             substP(n.body, sub));
        } else if constexpr (std::is_same_v<T, ProofTerm::Ind>) {
          std::vector<std::string> binders{n.schema_var};
          binders.insert(binders.end(), n.schema_params.begin(),
                         n.schema_params.end());
          FoSubst inner = under_binders(binders, sub, free_fo_vars(n.schema));
          std::vector<TermPtr> args;
          for (const auto& a : n.args) args.push_back(substT(a, sub));
          return mk::ind(binders[0],
                         {binders.begin() + 1, binders.end()},
                         substF(n.schema, inner), std::move(args),
                         substP(n.body, sub));
        } else {
          static_assert(std::is_same_v<T, ProofTerm::Ascribe>);
          return mk::ascribe(substP(n.body, sub), substF(n.ann, sub));
        }
      },
      p->node);
}

}  // namespace

TermPtr subst_fo(const TermPtr& t, const std::string& var, const TermPtr& s) {
  return substT(t, {{var, s}});
}
FormulaPtr subst_fo(const FormulaPtr& f, const std::string& var,
                    const TermPtr& s) {
  return substF(f, {{var, s}});
}
ProofPtr subst_fo(const ProofPtr& p, const std::string& var, const TermPtr& s) {
  return substP(p, {{var, s}});
}

TermPtr subst_fo_many(const TermPtr& t, const FoSubst& sub) {
  return substT(t, sub);
}
FormulaPtr subst_fo_many(const FormulaPtr& f, const FoSubst& sub) {
  return substF(f, sub);
}
ProofPtr subst_fo_many(const ProofPtr& p, const FoSubst& sub) {
  return substP(p, sub);
}

// ---- proof substitution ---------------------------------------------------

namespace {

struct ProofSubst {
  std::string var;
  ProofPtr replacement;
  NameSet repl_fo;
  NameSet repl_proof;
};

ProofPtr substPP(const ProofPtr& p, const ProofSubst& s);

// Descend under a proof binder: shadowing stops the substitution; a binder
// that would capture a free proof variable of the replacement is renamed.
struct ProofBinderScope {
  std::string name;
  ProofPtr body;
  bool shadowed = false;
};

ProofBinderScope enter_proof_binder(const std::string& binder,
                                    const ProofPtr& body,
                                    const ProofSubst& s) {
  if (binder == s.var) return {binder, body, true};
  if (!s.repl_proof.count(binder)) return {binder, body, false};
  FreeVars fv = free_variables(body);
  NameSet avoid = s.repl_proof;
  avoid.insert(fv.proof.begin(), fv.proof.end());
  avoid.insert(s.var);
  std::string renamed = fresh_name(binder, avoid);
  ProofPtr renamed_body = substPP(
      body, ProofSubst{binder, mk::var(renamed), {}, {renamed}});
  return {renamed, renamed_body, false};
}

// Descend under a first-order binder; renames it when it would capture a free
// first-order variable of the replacement proof term. `rename` applies the
// renaming to everything the binder scopes over.
std::string enter_fo_binder(const std::string& binder, const ProofSubst& s,
                            auto&& scope_fv, auto&& rename) {
  if (!s.repl_fo.count(binder)) return binder;
  NameSet avoid = s.repl_fo;
  NameSet fv = scope_fv();
  avoid.insert(fv.begin(), fv.end());
  std::string renamed = fresh_name(binder, avoid);
  rename(binder, renamed);
  return renamed;
}

ProofPtr substPP(const ProofPtr& p, const ProofSubst& s) {
  return std::visit(
      [&](const auto& n) -> ProofPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ProofTerm::Var>) {
          return n.name == s.var ? s.replacement : p;
        } else if constexpr (std::is_same_v<T, ProofTerm::App>) {
          return mk::app(substPP(n.fn, s), substPP(n.arg, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::FoApp>) {
          return mk::fo_app(substPP(n.fn, s), n.arg);
        } else if constexpr (std::is_same_v<T, ProofTerm::Lam>) {
          auto scope = enter_proof_binder(n.var, n.body, s);
          return mk::lam(scope.name, n.ann,
                         scope.shadowed ? scope.body : substPP(scope.body, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::FoLam>) {
          ProofPtr body = n.body;
          std::string binder = enter_fo_binder(
              n.var, s, [&] { return free_fo_vars(body); },
              [&](const std::string& from, const std::string& to) {
                body = subst_fo(body, from, mk::fovar(to));
              });
          return mk::fo_lam(binder, substPP(body, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::Pair>) {
          return mk::proof_pair(substPP(n.first, s), substPP(n.second, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::Fst>) {
          return mk::fst(substPP(n.arg, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::Snd>) {
          return mk::snd(substPP(n.arg, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::Inl>) {
          return mk::inl(substPP(n.arg, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::Inr>) {
          return mk::inr(substPP(n.arg, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::Case>) {
          auto left = enter_proof_binder(n.left_var, n.left_body, s);
          auto right = enter_proof_binder(n.right_var, n.right_body, s);
          return mk::case_of(
              substPP(n.scrutinee, s), left.name, n.left_ann,
              left.shadowed ? left.body : substPP(left.body, s), right.name,
              n.right_ann, right.shadowed ? right.body : substPP(right.body, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::Witness>) {
          return mk::witness(n.witness, substPP(n.body, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::Let>) {
          ProofPtr head = substPP(n.head, s);
          FormulaPtr ann = n.ann;
          ProofPtr body = n.body;
          std::string fo_binder = enter_fo_binder(
              n.fo_var, s,
              [&] {
                NameSet fv = free_fo_vars(ann);
                NameSet bfv = free_fo_vars(body);
                fv.insert(bfv.begin(), bfv.end());
                return fv;
              },
              [&](const std::string& from, const std::string& to) {
                ann = subst_fo(ann, from, mk::fovar(to));
                body = subst_fo(body, from, mk::fovar(to));
              });
          auto scope = enter_proof_binder(n.proof_var, body, s);
          return mk::let_in(fo_binder, scope.name, ann, std::move(head),
                            scope.shadowed ? scope.body
                                           : substPP(scope.body, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::Magic>) {
          return mk::magic(substPP(n.arg, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::AxRep>) {
          return mk::ax_rep(n.ctor, n.member, substPP(n.body, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::AxProp>) {
          return mk::ax_prop(n.ctor, n.member, substPP(n.body, s));
        } else if constexpr (std::is_same_v<T, ProofTerm::Ind>) {
          return mk::ind(n.schema_var, n.schema_params, n.schema, n.args,
                         substPP(n.body, s));
        } else {
          static_assert(std::is_same_v<T, ProofTerm::Ascribe>);
          return mk::ascribe(substPP(n.body, s), n.ann);
        }
      },
      p->node);
}

}  // namespace

ProofPtr subst_proof(const ProofPtr& p, const std::string& var,
                     const ProofPtr& replacement) {
  FreeVars fv = free_variables(replacement);
  return substPP(p, ProofSubst{var, replacement, std::move(fv.fo),
                               std::move(fv.proof)});
}

// ---- alpha keys -----------------------------------------------------------

namespace {

struct KeyBuilder {
  std::string out;
  std::map<std::string, std::vector<int>> fo;  // name -> stack of levels
  std::map<std::string, std::vector<int>> pf;
  int fo_depth = 0;
  int pf_depth = 0;

  struct FoScope {
    KeyBuilder& kb;
    std::vector<std::string> names;
    FoScope(KeyBuilder& kb, std::vector<std::string> ns)
        : kb(kb), names(std::move(ns)) {
      for (const auto& n : names) kb.fo[n].push_back(kb.fo_depth++);
    }
    ~FoScope() {
      for (auto it = names.rbegin(); it != names.rend(); ++it) {
        kb.fo[*it].pop_back();
        --kb.fo_depth;
      }
    }
  };

  struct PfScope {
    KeyBuilder& kb;
    std::string name;
    PfScope(KeyBuilder& kb, std::string n) : kb(kb), name(std::move(n)) {
      kb.pf[name].push_back(kb.pf_depth++);
    }
    ~PfScope() {
      kb.pf[name].pop_back();
      --kb.pf_depth;
    }
  };

  void fo_var(const std::string& name) {
    auto it = fo.find(name);
    if (it != fo.end() && !it->second.empty())
      out += "b" + std::to_string(it->second.back());
    else
      out += "f:" + name + ";";
  }

  void pf_var(const std::string& name) {
    auto it = pf.find(name);
    if (it != pf.end() && !it->second.empty())
      out += "p" + std::to_string(it->second.back());
    else
      out += "q:" + name + ";";
  }

  void term(const TermPtr& t) {
    if (auto* v = std::get_if<SetTerm::FoVar>(&t->node)) {
      fo_var(v->name);
      return;
    }
    const auto& c = std::get<SetTerm::Ctor>(t->node);
    out += "(C:" + c.name + ";";
    for (const auto& p : c.params) param(p);
    for (const auto& a : c.args) term(a);
    out += ")";
  }

  void param(const FormulaParam& p) {
    out += "[" + std::to_string(p.binders.size());
    FoScope scope(*this, p.binders);
    formula(p.body);
    out += "]";
  }

  void formula(const FormulaPtr& f) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Formula::Bottom>) {
            out += "_";
          } else if constexpr (std::is_same_v<T, Formula::Member>) {
            out += "(in ";
            term(n.element);
            term(n.set);
            out += ")";
          } else if constexpr (std::is_same_v<T, Formula::And>) {
            out += "(& ";
            formula(n.left);
            formula(n.right);
            out += ")";
          } else if constexpr (std::is_same_v<T, Formula::Or>) {
            out += "(| ";
            formula(n.left);
            formula(n.right);
            out += ")";
          } else if constexpr (std::is_same_v<T, Formula::Implies>) {
            out += "(> ";
            formula(n.lhs);
            formula(n.rhs);
            out += ")";
          } else if constexpr (std::is_same_v<T, Formula::Forall>) {
            out += "(A ";
            FoScope scope(*this, {n.var});
            formula(n.body);
            out += ")";
          } else if constexpr (std::is_same_v<T, Formula::Exists>) {
            out += "(E ";
            FoScope scope(*this, {n.var});
            formula(n.body);
            out += ")";
          } else if constexpr (std::is_same_v<T, Formula::Hole>) {
            out += "(H ";
            for (const auto& a : n.args) term(a);
            out += ")";
          }
        },
        f->node);
  }

  void ctor_instance(const CtorInstance& c) {
    out += "{" + c.name + ";";
    for (const auto& p : c.params) param(p);
    for (const auto& a : c.args) term(a);
    out += "}";
  }

  void proof_term(const ProofPtr& p) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ProofTerm::Var>) {
            pf_var(n.name);
          } else if constexpr (std::is_same_v<T, ProofTerm::App>) {
            out += "(@ ";
            proof_term(n.fn);
            proof_term(n.arg);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::FoApp>) {
            out += "(@T ";
            proof_term(n.fn);
            term(n.arg);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Lam>) {
            out += "(L ";
            formula(n.ann);
            PfScope scope(*this, n.var);
            proof_term(n.body);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::FoLam>) {
            out += "(LT ";
            FoScope scope(*this, {n.var});
            proof_term(n.body);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Pair>) {
            out += "(P ";
            proof_term(n.first);
            proof_term(n.second);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Fst>) {
            out += "(f ";
            proof_term(n.arg);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Snd>) {
            out += "(s ";
            proof_term(n.arg);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Inl>) {
            out += "(l ";
            proof_term(n.arg);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Inr>) {
            out += "(r ";
            proof_term(n.arg);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Case>) {
            out += "(c ";
            proof_term(n.scrutinee);
            formula(n.left_ann);
            {
              PfScope scope(*this, n.left_var);
              proof_term(n.left_body);
            }
            formula(n.right_ann);
            {
              PfScope scope(*this, n.right_var);
              proof_term(n.right_body);
            }
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Witness>) {
            out += "(w ";
            term(n.witness);
            proof_term(n.body);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Let>) {
            out += "(let ";
            proof_term(n.head);
            FoScope fo_scope(*this, {n.fo_var});
            formula(n.ann);
            PfScope pf_scope(*this, n.proof_var);
            proof_term(n.body);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Magic>) {
            out += "(m ";
            proof_term(n.arg);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::AxRep>) {
            out += "(R ";
            ctor_instance(n.ctor);
            term(n.member);
            proof_term(n.body);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::AxProp>) {
            out += "(Q ";
            ctor_instance(n.ctor);
            term(n.member);
            proof_term(n.body);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Ind>) {
            out += "(I ";
            {
              std::vector<std::string> binders{n.schema_var};
              binders.insert(binders.end(), n.schema_params.begin(),
                             n.schema_params.end());
              out += std::to_string(binders.size());
              FoScope scope(*this, binders);
              formula(n.schema);
            }
            for (const auto& a : n.args) term(a);
            proof_term(n.body);
            out += ")";
          } else if constexpr (std::is_same_v<T, ProofTerm::Ascribe>) {
            out += "(: ";
            proof_term(n.body);
            formula(n.ann);
            out += ")";
          }
        },
        p->node);
  }
};

}  // namespace

std::string alpha_key(const TermPtr& t) {
  KeyBuilder kb;
  kb.term(t);
  return std::move(kb.out);
}

std::string alpha_key(const FormulaPtr& f) {
  KeyBuilder kb;
  kb.formula(f);
  return std::move(kb.out);
}

std::string alpha_key(const ProofPtr& p) {
  KeyBuilder kb;
  kb.proof_term(p);
  return std::move(kb.out);
}

bool alpha_equal(const TermPtr& l, const TermPtr& r) {
  return alpha_key(l) == alpha_key(r);
}
bool alpha_equal(const FormulaPtr& l, const FormulaPtr& r) {
  return alpha_key(l) == alpha_key(r);
}
bool alpha_equal(const ProofPtr& l, const ProofPtr& r) {
  return alpha_key(l) == alpha_key(r);
}

// ---- abbreviations --------------------------------------------------------

FormulaPtr eq(const TermPtr& t, const TermPtr& u) {
  NameSet used = free_fo_vars(t);
  NameSet ufv = free_fo_vars(u);
  used.insert(ufv.begin(), ufv.end());
  std::string z = fresh_name("z", used);
  TermPtr zv = mk::fovar(z);
  return mk::forall(
      z, mk::conj(mk::implies(mk::member(zv, t), mk::member(zv, u)),
                  mk::implies(mk::member(zv, u), mk::member(zv, t))));
}

FormulaPtr iff(const FormulaPtr& l, const FormulaPtr& r) {
  return mk::conj(mk::implies(l, r), mk::implies(r, l));
}

FormulaPtr neg(const FormulaPtr& f) { return mk::implies(f, mk::bottom()); }

FormulaPtr exists_unique(const std::string& var, const FormulaPtr& body) {
  NameSet used = free_fo_vars(body);
  used.insert(var);
  std::string e = fresh_name("e", used);
  FormulaPtr at_e = subst_fo(body, var, mk::fovar(e));
  return mk::exists(
      var, mk::conj(body, mk::forall(e, mk::implies(at_e, eq(mk::fovar(e),
                                                             mk::fovar(var))))));
}

FormulaPtr bounded_forall(const std::string& var, const TermPtr& bound,
                          const FormulaPtr& body) {
  return mk::forall(var, mk::implies(mk::member(mk::fovar(var), bound), body));
}

FormulaPtr bounded_exists(const std::string& var, const TermPtr& bound,
                          const FormulaPtr& body) {
  return mk::exists(var, mk::conj(mk::member(mk::fovar(var), bound), body));
}

TermPtr succ(const TermPtr& t) {
  return mk::union_of(mk::pair(t, mk::pair(t, t)));
}

TermPtr numeral(long long n) {
  if (n < 0) throw std::invalid_argument("numeral: negative argument");
  TermPtr out = mk::empty();
  for (long long i = 0; i < n; ++i) out = succ(out);
  return out;
}

}  // namespace lz
