#include "lz/theory.hpp"

#include <algorithm>

namespace lz {

const AxiomDescriptor* Theory::find(const std::string& ctor_name) const {
  for (const auto& d : descriptors)
    if (d.name == ctor_name) return &d;
  return nullptr;
}

int binder_count(ParamSpec spec) {
  switch (spec) {
    case ParamSpec::None:
      return 0;
    case ParamSpec::OneBinder:
      return 1;
    case ParamSpec::TwoBinder:
      return 2;
  }
  return 0;
}

Theory izf_r_minus() {
  using namespace mk;
  Theory th;
  th.name = "izf-r-minus";
  th.has_induction = true;

  auto c = fovar("c");
  auto a = fovar("a");
  auto b = fovar("b");
  auto x = fovar("x");

  // EMPTY: c in empty <-> bottom
  th.descriptors.push_back({"empty", 0, ParamSpec::None, "c", {}, bottom()});

  // PAIR: c in {a, b} <-> c = a \/ c = b
  th.descriptors.push_back(
      {"pair", 2, ParamSpec::None, "c", {"a", "b"}, disj(eq(c, a), eq(c, b))});

  // INF: c in omega <-> c = 0 \/ exists b in omega. c = S(b)
  th.descriptors.push_back(
      {"omega", 0, ParamSpec::None, "c", {},
       disj(eq(c, numeral(0)), bounded_exists("b", omega(), eq(c, succ(b))))});

  // SEP: c in {x in a | phi(x)} <-> c in a /\ phi(c)
  th.descriptors.push_back({"sep", 1, ParamSpec::OneBinder, "c", {"a"},
                            conj(member(c, a), hole({c}))});

  // UNION: c in union a <-> exists b in a. c in b
  th.descriptors.push_back({"union", 1, ParamSpec::None, "c", {"a"},
                            bounded_exists("b", a, member(c, b))});

  // POWER: c in P(a) <-> forall b. b in c -> b in a
  th.descriptors.push_back(
      {"power", 1, ParamSpec::None, "c", {"a"},
       forall("b", implies(member(b, c), member(b, a)))});

  // REPL: c in R_phi(a) <->
  //   (forall x in a. exists! y. phi(x, y)) /\ (exists x in a. phi(x, c))
  th.descriptors.push_back(
      {"repl", 1, ParamSpec::TwoBinder, "c", {"a"},
       conj(bounded_forall("x", a, exists_unique("y", hole({x, fovar("y")}))),
            bounded_exists("x", a, hole({x, c})))});

  return th;
}

Theory nonwf_theory() {
  using namespace mk;
  Theory th;
  th.name = "nonwf";
  th.has_induction = false;

  auto a = fovar("a");
  // (C) forall a. a in c <-> a = c
  th.descriptors.push_back(
      {"c", 0, ParamSpec::None, "a", {}, eq(a, constant("c"))});
  // (D) forall a. a in d <-> a in c /\ (a in a -> a in a)
  // The conjunction reading matches the dProp typing in the counterexample.
  th.descriptors.push_back(
      {"d", 0, ParamSpec::None, "a", {},
       conj(member(a, constant("c")),
            implies(member(a, a), member(a, a)))});
  return th;
}

void validate_instance(const Theory& theory, const CtorInstance& inst) {
  const AxiomDescriptor* d = theory.find(inst.name);
  if (!d)
    throw TheoryError("unknown constructor '" + inst.name + "' in theory '" +
                      theory.name + "'");
  if (static_cast<int>(inst.args.size()) != d->term_arity)
    throw TheoryError("constructor '" + inst.name + "' expects " +
                      std::to_string(d->term_arity) + " argument(s), got " +
                      std::to_string(inst.args.size()));
  int binders = binder_count(d->param_spec);
  if (binders == 0) {
    if (!inst.params.empty())
      throw TheoryError("constructor '" + inst.name +
                        "' takes no formula parameter");
  } else {
    if (inst.params.size() != 1 ||
        static_cast<int>(inst.params[0].binders.size()) != binders)
      throw TheoryError("constructor '" + inst.name +
                        "' expects one formula parameter binding " +
                        std::to_string(binders) + " variable(s)");
  }
}

namespace {

// Replaces every Formula::Hole with the carried formula instantiated at the
// hole's arguments, renaming binders that would capture a free variable of
// the carried formula.
FormulaPtr splice_hole(const FormulaPtr& f, const FormulaParam& carried,
                       const NameSet& carried_fv) {
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Bottom> ||
                      std::is_same_v<T, Formula::Member>) {
          return f;
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          return mk::conj(splice_hole(n.left, carried, carried_fv),
                          splice_hole(n.right, carried, carried_fv));
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          return mk::disj(splice_hole(n.left, carried, carried_fv),
                          splice_hole(n.right, carried, carried_fv));
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          return mk::implies(splice_hole(n.lhs, carried, carried_fv),
                             splice_hole(n.rhs, carried, carried_fv));
        } else if constexpr (std::is_same_v<T, Formula::Forall> ||
                             std::is_same_v<T, Formula::Exists>) {
          std::string var = n.var;
          FormulaPtr body = n.body;
          if (carried_fv.count(var)) {
            NameSet avoid = carried_fv;
            NameSet bfv = free_fo_vars(body);
            avoid.insert(bfv.begin(), bfv.end());
            std::string renamed = fresh_name(var, avoid);
            body = subst_fo(body, var, mk::fovar(renamed));
            var = renamed;
          }
          body = splice_hole(body, carried, carried_fv);
          if constexpr (std::is_same_v<T, Formula::Forall>)
            return mk::forall(var, body);
          else
            return mk::exists(var, body);
        } else {
          static_assert(std::is_same_v<T, Formula::Hole>);
          if (n.args.size() != carried.binders.size())
            throw TheoryError("schema hole arity mismatch");
          FoSubst sub;
          for (size_t i = 0; i < n.args.size(); ++i)
            sub.emplace(carried.binders[i], n.args[i]);
          return subst_fo_many(carried.body, sub);
        }
      },
      f->node);
}

}  // namespace

FormulaPtr phi_a(const Theory& theory, const CtorInstance& inst,
                 const TermPtr& member) {
  validate_instance(theory, inst);
  const AxiomDescriptor* d = theory.find(inst.name);
  FoSubst sub;
  sub.emplace(d->member_var, member);
  for (size_t i = 0; i < d->arg_vars.size(); ++i)
    sub.emplace(d->arg_vars[i], inst.args[i]);
  FormulaPtr instantiated = subst_fo_many(d->schema, sub);
  if (d->param_spec == ParamSpec::None) return instantiated;
  const FormulaParam& carried = inst.params[0];
  NameSet carried_fv = free_fo_vars(carried.body);
  for (const auto& b : carried.binders) carried_fv.erase(b);
  return splice_hole(instantiated, carried, carried_fv);
}

FormulaPtr member_of_instance(const CtorInstance& inst, const TermPtr& member) {
  return mk::member(member, std::make_shared<SetTerm>(SetTerm{inst}));
}

namespace {

bool contains_hole(const FormulaPtr& f, int& max_arity) {
  bool found = false;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Hole>) {
          found = true;
          max_arity = std::max(max_arity, static_cast<int>(n.args.size()));
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          found |= contains_hole(n.left, max_arity);
          found |= contains_hole(n.right, max_arity);
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          found |= contains_hole(n.left, max_arity);
          found |= contains_hole(n.right, max_arity);
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          found |= contains_hole(n.lhs, max_arity);
          found |= contains_hole(n.rhs, max_arity);
        } else if constexpr (std::is_same_v<T, Formula::Forall> ||
                             std::is_same_v<T, Formula::Exists>) {
          found |= contains_hole(n.body, max_arity);
        }
      },
      f->node);
  return found;
}

bool hole_arities_ok(const FormulaPtr& f, int expected) {
  bool ok = true;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Hole>) {
          ok = static_cast<int>(n.args.size()) == expected;
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          ok = hole_arities_ok(n.left, expected) &&
               hole_arities_ok(n.right, expected);
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          ok = hole_arities_ok(n.left, expected) &&
               hole_arities_ok(n.right, expected);
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          ok = hole_arities_ok(n.lhs, expected) &&
               hole_arities_ok(n.rhs, expected);
        } else if constexpr (std::is_same_v<T, Formula::Forall> ||
                             std::is_same_v<T, Formula::Exists>) {
          ok = hole_arities_ok(n.body, expected);
        }
      },
      f->node);
  return ok;
}

}  // namespace

std::vector<std::string> validate_theory(const Theory& theory) {
  std::vector<std::string> errors;
  NameSet seen;
  for (const auto& d : theory.descriptors) {
    if (!seen.insert(d.name).second)
      errors.push_back("duplicate constructor name '" + d.name + "'");
    if (d.term_arity < 0)
      errors.push_back("constructor '" + d.name + "' has negative arity");
    if (static_cast<int>(d.arg_vars.size()) != std::max(d.term_arity, 0))
      errors.push_back("constructor '" + d.name +
                       "': argument hole count does not match arity");
    if (!d.schema) {
      errors.push_back("constructor '" + d.name + "' has no schema");
      continue;
    }
    NameSet allowed;
    allowed.insert(d.member_var);
    for (const auto& a : d.arg_vars) allowed.insert(a);
    for (const auto& fv : free_fo_vars(d.schema))
      if (!allowed.count(fv))
        errors.push_back("constructor '" + d.name +
                         "': schema mentions undeclared hole '" + fv + "'");
    int hole_arity = 0;
    bool has_hole = contains_hole(d.schema, hole_arity);
    int expected = binder_count(d.param_spec);
    if (expected == 0 && has_hole)
      errors.push_back("constructor '" + d.name +
                       "': schema has a formula hole but declares none");
    if (expected > 0) {
      if (!has_hole)
        errors.push_back("constructor '" + d.name +
                         "': declares a formula parameter the schema never uses");
      else if (!hole_arities_ok(d.schema, expected))
        errors.push_back("constructor '" + d.name +
                         "': formula hole arity does not match the declared " +
                         "binder count");
    }
  }
  return errors;
}

}  // namespace lz
