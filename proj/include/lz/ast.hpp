#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace lz {

struct SetTerm;
struct Formula;
struct ProofTerm;

using TermPtr = std::shared_ptr<const SetTerm>;
using FormulaPtr = std::shared_ptr<const Formula>;
using ProofPtr = std::shared_ptr<const ProofTerm>;

using NameSet = std::set<std::string>;

// A formula carried by a comprehension constructor (Sep binds one variable,
// Repl binds two), together with its bound variable names.
struct FormulaParam {
  std::vector<std::string> binders;
  FormulaPtr body;
};

struct SetTerm {
  struct FoVar {
    std::string name;
  };
  // Covers 0-ary constants (empty, omega, theory constants) as well as
  // pairing, union, power and the Sep/Repl comprehension terms.
  struct Ctor {
    std::string name;
    std::vector<FormulaParam> params;
    std::vector<TermPtr> args;
  };
  std::variant<FoVar, Ctor> node;
};

// A constructor instance as carried by axRep/axProp proof terms: the
// constructor name, its formula parameters and its term arguments.
using CtorInstance = SetTerm::Ctor;

struct Formula {
  struct Bottom {};
  struct Member {
    TermPtr element;
    TermPtr set;
  };
  struct And {
    FormulaPtr left;
    FormulaPtr right;
  };
  struct Or {
    FormulaPtr left;
    FormulaPtr right;
  };
  struct Implies {
    FormulaPtr lhs;
    FormulaPtr rhs;
  };
  struct Forall {
    std::string var;
    FormulaPtr body;
  };
  struct Exists {
    std::string var;
    FormulaPtr body;
  };
  // Placeholder for the carried formula inside an axiom schema. Never occurs
  // in formulas seen by the checker or the reducer; only theory schemas use it.
  struct Hole {
    std::vector<TermPtr> args;
  };
  std::variant<Bottom, Member, And, Or, Implies, Forall, Exists, Hole> node;
};

struct ProofTerm {
  struct Var {
    std::string name;
  };
  struct App {
    ProofPtr fn;
    ProofPtr arg;
  };
  struct FoApp {
    ProofPtr fn;
    TermPtr arg;
  };
  struct Lam {
    std::string var;
    FormulaPtr ann;
    ProofPtr body;
  };
  struct FoLam {
    std::string var;
    ProofPtr body;
  };
  struct Pair {
    ProofPtr first;
    ProofPtr second;
  };
  struct Fst {
    ProofPtr arg;
  };
  struct Snd {
    ProofPtr arg;
  };
  struct Inl {
    ProofPtr arg;
  };
  struct Inr {
    ProofPtr arg;
  };
  struct Case {
    ProofPtr scrutinee;
    std::string left_var;
    FormulaPtr left_ann;
    ProofPtr left_body;
    std::string right_var;
    FormulaPtr right_ann;
    ProofPtr right_body;
  };
  struct Witness {
    TermPtr witness;
    ProofPtr body;
  };
  // let [a, x : ann] := head in body; a is bound in ann and body, x in body.
  struct Let {
    std::string fo_var;
    std::string proof_var;
    FormulaPtr ann;
    ProofPtr head;
    ProofPtr body;
  };
  struct Magic {
    ProofPtr arg;
  };
  struct AxRep {
    CtorInstance ctor;
    TermPtr member;
    ProofPtr body;
  };
  struct AxProp {
    CtorInstance ctor;
    TermPtr member;
    ProofPtr body;
  };
  // ind over the schema phi(schema_var, schema_params...); schema_var and
  // schema_params are bound inside schema only; args instantiate the params.
  struct Ind {
    std::string schema_var;
    std::vector<std::string> schema_params;
    FormulaPtr schema;
    std::vector<TermPtr> args;
    ProofPtr body;
  };
  // Checker directive; transparent to reduction.
  struct Ascribe {
    ProofPtr body;
    FormulaPtr ann;
  };
  std::variant<Var, App, FoApp, Lam, FoLam, Pair, Fst, Snd, Inl, Inr, Case,
               Witness, Let, Magic, AxRep, AxProp, Ind, Ascribe>
      node;
};

// ---- construction helpers -------------------------------------------------

namespace mk {

TermPtr fovar(std::string name);
TermPtr ctor(std::string name, std::vector<FormulaParam> params,
             std::vector<TermPtr> args);
TermPtr constant(std::string name);
TermPtr empty();
TermPtr omega();
TermPtr pair(TermPtr a, TermPtr b);
TermPtr union_of(TermPtr a);
TermPtr power(TermPtr a);
TermPtr sep(std::string binder, FormulaPtr body, TermPtr of);
TermPtr repl(std::string in_binder, std::string out_binder, FormulaPtr body,
             TermPtr of);

FormulaPtr bottom();
FormulaPtr member(TermPtr element, TermPtr set);
FormulaPtr conj(FormulaPtr l, FormulaPtr r);
FormulaPtr disj(FormulaPtr l, FormulaPtr r);
FormulaPtr implies(FormulaPtr l, FormulaPtr r);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr hole(std::vector<TermPtr> args);

ProofPtr var(std::string name);
ProofPtr app(ProofPtr fn, ProofPtr arg);
ProofPtr fo_app(ProofPtr fn, TermPtr arg);
ProofPtr lam(std::string var, FormulaPtr ann, ProofPtr body);
ProofPtr fo_lam(std::string var, ProofPtr body);
ProofPtr proof_pair(ProofPtr first, ProofPtr second);
ProofPtr fst(ProofPtr arg);
ProofPtr snd(ProofPtr arg);
ProofPtr inl(ProofPtr arg);
ProofPtr inr(ProofPtr arg);
ProofPtr case_of(ProofPtr scrutinee, std::string lv, FormulaPtr la, ProofPtr lb,
                 std::string rv, FormulaPtr ra, ProofPtr rb);
ProofPtr witness(TermPtr t, ProofPtr body);
ProofPtr let_in(std::string fo_var, std::string proof_var, FormulaPtr ann,
                ProofPtr head, ProofPtr body);
ProofPtr magic(ProofPtr arg);
ProofPtr ax_rep(CtorInstance ctor, TermPtr member, ProofPtr body);
ProofPtr ax_prop(CtorInstance ctor, TermPtr member, ProofPtr body);
ProofPtr ind(std::string schema_var, std::vector<std::string> schema_params,
             FormulaPtr schema, std::vector<TermPtr> args, ProofPtr body);
ProofPtr ascribe(ProofPtr body, FormulaPtr ann);

}  // namespace mk

// ---- variables ------------------------------------------------------------

// First-order and proof variables live in disjoint namespaces.
struct FreeVars {
  NameSet fo;
  NameSet proof;
};

FreeVars free_variables(const TermPtr& t);
FreeVars free_variables(const FormulaPtr& f);
FreeVars free_variables(const ProofPtr& p);

NameSet free_fo_vars(const TermPtr& t);
NameSet free_fo_vars(const FormulaPtr& f);
NameSet free_fo_vars(const ProofPtr& p);

// Deterministic: returns base if unused, otherwise base1, base2, ...
std::string fresh_name(const std::string& base, const NameSet& used);

// ---- substitution ---------------------------------------------------------

using FoSubst = std::map<std::string, TermPtr>;

TermPtr subst_fo(const TermPtr& t, const std::string& var, const TermPtr& s);
FormulaPtr subst_fo(const FormulaPtr& f, const std::string& var,
                    const TermPtr& s);
ProofPtr subst_fo(const ProofPtr& p, const std::string& var, const TermPtr& s);

// Simultaneous capture-avoiding first-order substitution.
TermPtr subst_fo_many(const TermPtr& t, const FoSubst& sub);
FormulaPtr subst_fo_many(const FormulaPtr& f, const FoSubst& sub);
ProofPtr subst_fo_many(const ProofPtr& p, const FoSubst& sub);

ProofPtr subst_proof(const ProofPtr& p, const std::string& var,
                     const ProofPtr& replacement);

// ---- alpha-equivalence ----------------------------------------------------

// Canonical serialization: two objects are alpha-equivalent iff their keys
// are equal. Bound variables are numbered by binding order.
std::string alpha_key(const TermPtr& t);
std::string alpha_key(const FormulaPtr& f);
std::string alpha_key(const ProofPtr& p);

bool alpha_equal(const TermPtr& l, const TermPtr& r);
bool alpha_equal(const FormulaPtr& l, const FormulaPtr& r);
bool alpha_equal(const ProofPtr& l, const ProofPtr& r);

// ---- abbreviations --------------------------------------------------------
// All abbreviations expand eagerly; the checker and reducer only ever see the
// seven core formula constructors.

// forall z. (z in t -> z in u) /\ (z in u -> z in t), z fresh.
FormulaPtr eq(const TermPtr& t, const TermPtr& u);
// (l -> r) /\ (r -> l)
FormulaPtr iff(const FormulaPtr& l, const FormulaPtr& r);
// f -> bottom
FormulaPtr neg(const FormulaPtr& f);
// exists var. body /\ forall e. body[var:=e] -> e = var, e fresh.
FormulaPtr exists_unique(const std::string& var, const FormulaPtr& body);
// forall var. var in bound -> body
FormulaPtr bounded_forall(const std::string& var, const TermPtr& bound,
                          const FormulaPtr& body);
// exists var. var in bound /\ body
FormulaPtr bounded_exists(const std::string& var, const TermPtr& bound,
                          const FormulaPtr& body);
// union {t, {t, t}}
TermPtr succ(const TermPtr& t);
// numeral(0) = empty; numeral(n+1) = succ(numeral(n)). Throws
// std::invalid_argument for negative n.
TermPtr numeral(long long n);

}  // namespace lz
