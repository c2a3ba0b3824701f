#include "lz/reducer.hpp"

#include <deque>
#include <optional>

namespace lz {

namespace {

const ProofPtr& peel(const ProofPtr& p) {
  const ProofPtr* cur = &p;
  while (auto* asc = std::get_if<ProofTerm::Ascribe>(&(*cur)->node))
    cur = &asc->body;
  return *cur;
}

bool same_instance(const CtorInstance& l, const TermPtr& lm,
                   const CtorInstance& r, const TermPtr& rm) {
  TermPtr lt = std::make_shared<SetTerm>(SetTerm{l});
  TermPtr rt = std::make_shared<SetTerm>(SetTerm{r});
  return alpha_equal(lt, rt) && alpha_equal(lm, rm);
}

ProofPtr unfold_ind(const ProofPtr& ind_term, const ProofTerm::Ind& n) {
  FreeVars fv = free_variables(ind_term);
  NameSet avoid_fo = fv.fo;
  std::string c = fresh_name("c", avoid_fo);
  avoid_fo.insert(c);
  std::string b = fresh_name("b", avoid_fo);
  std::string x = fresh_name("x", fv.proof);
  TermPtr cv = mk::fovar(c);
  TermPtr bv = mk::fovar(b);
  ProofPtr recur = mk::fo_lam(
      b, mk::lam(x, mk::member(bv, cv), mk::fo_app(ind_term, bv)));
  return mk::fo_lam(c, mk::app(mk::fo_app(n.body, cv), recur));
}

// Root contraction when the relevant subterm is already in canonical
// position; nullopt when no base rule fires at the root.
std::optional<ProofPtr> try_base(const ProofPtr& term) {
  return std::visit(
      [&](const auto& n) -> std::optional<ProofPtr> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ProofTerm::App>) {
          if (auto* lam = std::get_if<ProofTerm::Lam>(&peel(n.fn)->node))
            return subst_proof(lam->body, lam->var, n.arg);
        } else if constexpr (std::is_same_v<T, ProofTerm::FoApp>) {
          if (auto* lam = std::get_if<ProofTerm::FoLam>(&peel(n.fn)->node))
            return subst_fo(lam->body, lam->var, n.arg);
        } else if constexpr (std::is_same_v<T, ProofTerm::Fst>) {
          if (auto* pair = std::get_if<ProofTerm::Pair>(&peel(n.arg)->node))
            return pair->first;
        } else if constexpr (std::is_same_v<T, ProofTerm::Snd>) {
          if (auto* pair = std::get_if<ProofTerm::Pair>(&peel(n.arg)->node))
            return pair->second;
        } else if constexpr (std::is_same_v<T, ProofTerm::Case>) {
          if (auto* inl = std::get_if<ProofTerm::Inl>(&peel(n.scrutinee)->node))
            return subst_proof(n.left_body, n.left_var, inl->arg);
          if (auto* inr = std::get_if<ProofTerm::Inr>(&peel(n.scrutinee)->node))
            return subst_proof(n.right_body, n.right_var, inr->arg);
        } else if constexpr (std::is_same_v<T, ProofTerm::Let>) {
          if (auto* w = std::get_if<ProofTerm::Witness>(&peel(n.head)->node))
            return subst_proof(subst_fo(n.body, n.fo_var, w->witness),
                               n.proof_var, w->body);
        } else if constexpr (std::is_same_v<T, ProofTerm::AxProp>) {
          if (auto* rep = std::get_if<ProofTerm::AxRep>(&peel(n.body)->node))
            if (same_instance(n.ctor, n.member, rep->ctor, rep->member))
              return rep->body;
        } else if constexpr (std::is_same_v<T, ProofTerm::Ind>) {
          return unfold_ind(term, n);
        }
        return std::nullopt;
      },
      term->node);
}

StepOutcome stepped(ProofPtr t) {
  return StepOutcome{StepOutcome::Stepped{std::move(t)}};
}
StepOutcome value() { return StepOutcome{StepOutcome::Value{}}; }
StepOutcome stuck(std::string reason) {
  return StepOutcome{StepOutcome::Stuck{std::move(reason)}};
}

// Lazy strategy on ascription-free terms.
StepOutcome lazy_step(const ProofPtr& term) {
  if (auto contracted = try_base(term)) return stepped(std::move(*contracted));
  return std::visit(
      [&](const auto& n) -> StepOutcome {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ProofTerm::Var>) {
          return stuck("free proof variable '" + n.name + "'");
        } else if constexpr (std::is_same_v<T, ProofTerm::Lam> ||
                             std::is_same_v<T, ProofTerm::FoLam> ||
                             std::is_same_v<T, ProofTerm::Inl> ||
                             std::is_same_v<T, ProofTerm::Inr> ||
                             std::is_same_v<T, ProofTerm::Witness> ||
                             std::is_same_v<T, ProofTerm::Pair> ||
                             std::is_same_v<T, ProofTerm::AxRep>) {
          return value();
        } else if constexpr (std::is_same_v<T, ProofTerm::App>) {
          StepOutcome r = lazy_step(n.fn);
          if (r.stepped()) return stepped(mk::app(r.term(), n.arg));
          if (r.value()) return stuck("application head is not a function");
          return r;
        } else if constexpr (std::is_same_v<T, ProofTerm::FoApp>) {
          StepOutcome r = lazy_step(n.fn);
          if (r.stepped()) return stepped(mk::fo_app(r.term(), n.arg));
          if (r.value())
            return stuck("first-order application head is not an abstraction");
          return r;
        } else if constexpr (std::is_same_v<T, ProofTerm::Fst>) {
          StepOutcome r = lazy_step(n.arg);
          if (r.stepped()) return stepped(mk::fst(r.term()));
          if (r.value()) return stuck("fst of a non-pair value");
          return r;
        } else if constexpr (std::is_same_v<T, ProofTerm::Snd>) {
          StepOutcome r = lazy_step(n.arg);
          if (r.stepped()) return stepped(mk::snd(r.term()));
          if (r.value()) return stuck("snd of a non-pair value");
          return r;
        } else if constexpr (std::is_same_v<T, ProofTerm::Case>) {
          StepOutcome r = lazy_step(n.scrutinee);
          if (r.stepped())
            return stepped(mk::case_of(r.term(), n.left_var, n.left_ann,
                                       n.left_body, n.right_var, n.right_ann,
                                       n.right_body));
          if (r.value()) return stuck("case scrutinee is not an injection");
          return r;
        } else if constexpr (std::is_same_v<T, ProofTerm::Let>) {
          StepOutcome r = lazy_step(n.head);
          if (r.stepped())
            return stepped(mk::let_in(n.fo_var, n.proof_var, n.ann, r.term(),
                                      n.body));
          if (r.value()) return stuck("let head is not a witness");
          return r;
        } else if constexpr (std::is_same_v<T, ProofTerm::Magic>) {
          StepOutcome r = lazy_step(n.arg);
          if (r.stepped()) return stepped(mk::magic(r.term()));
          if (r.value()) return stuck("magic applied to a value");
          return r;
        } else if constexpr (std::is_same_v<T, ProofTerm::AxProp>) {
          StepOutcome r = lazy_step(n.body);
          if (r.stepped())
            return stepped(mk::ax_prop(n.ctor, n.member, r.term()));
          if (r.value())
            return stuck("axProp body is not the matching axRep");
          return r;
        } else if constexpr (std::is_same_v<T, ProofTerm::Ind>) {
          // Handled by try_base; ind terms always reduce.
          return stuck("unreachable: ind did not unfold");
        } else {
          static_assert(std::is_same_v<T, ProofTerm::Ascribe>);
          return lazy_step(n.body);
        }
      },
      term->node);
}

// Leftmost-outermost, descending under binders.
std::optional<ProofPtr> full_reduce(const ProofPtr& term) {
  if (auto contracted = try_base(term)) return contracted;
  return std::visit(
      [&](const auto& n) -> std::optional<ProofPtr> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ProofTerm::Var>) {
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::App>) {
          if (auto r = full_reduce(n.fn)) return mk::app(*r, n.arg);
          if (auto r = full_reduce(n.arg)) return mk::app(n.fn, *r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::FoApp>) {
          if (auto r = full_reduce(n.fn)) return mk::fo_app(*r, n.arg);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::Lam>) {
          if (auto r = full_reduce(n.body)) return mk::lam(n.var, n.ann, *r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::FoLam>) {
          if (auto r = full_reduce(n.body)) return mk::fo_lam(n.var, *r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::Pair>) {
          if (auto r = full_reduce(n.first)) return mk::proof_pair(*r, n.second);
          if (auto r = full_reduce(n.second)) return mk::proof_pair(n.first, *r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::Fst>) {
          if (auto r = full_reduce(n.arg)) return mk::fst(*r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::Snd>) {
          if (auto r = full_reduce(n.arg)) return mk::snd(*r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::Inl>) {
          if (auto r = full_reduce(n.arg)) return mk::inl(*r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::Inr>) {
          if (auto r = full_reduce(n.arg)) return mk::inr(*r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::Case>) {
          if (auto r = full_reduce(n.scrutinee))
            return mk::case_of(*r, n.left_var, n.left_ann, n.left_body,
                               n.right_var, n.right_ann, n.right_body);
          if (auto r = full_reduce(n.left_body))
            return mk::case_of(n.scrutinee, n.left_var, n.left_ann, *r,
                               n.right_var, n.right_ann, n.right_body);
          if (auto r = full_reduce(n.right_body))
            return mk::case_of(n.scrutinee, n.left_var, n.left_ann,
                               n.left_body, n.right_var, n.right_ann, *r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::Witness>) {
          if (auto r = full_reduce(n.body)) return mk::witness(n.witness, *r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::Let>) {
          if (auto r = full_reduce(n.head))
            return mk::let_in(n.fo_var, n.proof_var, n.ann, *r, n.body);
          if (auto r = full_reduce(n.body))
            return mk::let_in(n.fo_var, n.proof_var, n.ann, n.head, *r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::Magic>) {
          if (auto r = full_reduce(n.arg)) return mk::magic(*r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::AxRep>) {
          if (auto r = full_reduce(n.body))
            return mk::ax_rep(n.ctor, n.member, *r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::AxProp>) {
          if (auto r = full_reduce(n.body))
            return mk::ax_prop(n.ctor, n.member, *r);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, ProofTerm::Ind>) {
          return std::nullopt;  // try_base already fired
        } else {
          static_assert(std::is_same_v<T, ProofTerm::Ascribe>);
          return full_reduce(n.body);
        }
      },
      term->node);
}

}  // namespace

bool is_value(const ProofPtr& term) {
  const ProofPtr& p = peel(term);
  return std::visit(
      [](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        return std::is_same_v<T, ProofTerm::Lam> ||
               std::is_same_v<T, ProofTerm::FoLam> ||
               std::is_same_v<T, ProofTerm::Inl> ||
               std::is_same_v<T, ProofTerm::Inr> ||
               std::is_same_v<T, ProofTerm::Witness> ||
               std::is_same_v<T, ProofTerm::Pair> ||
               std::is_same_v<T, ProofTerm::AxRep>;
      },
      p->node);
}

ProofPtr erase_ascriptions(const ProofPtr& term) {
  return std::visit(
      [&](const auto& n) -> ProofPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ProofTerm::Var>) {
          return term;
        } else if constexpr (std::is_same_v<T, ProofTerm::App>) {
          return mk::app(erase_ascriptions(n.fn), erase_ascriptions(n.arg));
        } else if constexpr (std::is_same_v<T, ProofTerm::FoApp>) {
          return mk::fo_app(erase_ascriptions(n.fn), n.arg);
        } else if constexpr (std::is_same_v<T, ProofTerm::Lam>) {
          return mk::lam(n.var, n.ann, erase_ascriptions(n.body));
        } else if constexpr (std::is_same_v<T, ProofTerm::FoLam>) {
          return mk::fo_lam(n.var, erase_ascriptions(n.body));
        } else if constexpr (std::is_same_v<T, ProofTerm::Pair>) {
          return mk::proof_pair(erase_ascriptions(n.first),
                                erase_ascriptions(n.second));
        } else if constexpr (std::is_same_v<T, ProofTerm::Fst>) {
          return mk::fst(erase_ascriptions(n.arg));
        } else if constexpr (std::is_same_v<T, ProofTerm::Snd>) {
          return mk::snd(erase_ascriptions(n.arg));
        } else if constexpr (std::is_same_v<T, ProofTerm::Inl>) {
          return mk::inl(erase_ascriptions(n.arg));
        } else if constexpr (std::is_same_v<T, ProofTerm::Inr>) {
          return mk::inr(erase_ascriptions(n.arg));
        } else if constexpr (std::is_same_v<T, ProofTerm::Case>) {
          return mk::case_of(erase_ascriptions(n.scrutinee), n.left_var,
                             n.left_ann, erase_ascriptions(n.left_body),
                             n.right_var, n.right_ann,
                             erase_ascriptions(n.right_body));
        } else if constexpr (std::is_same_v<T, ProofTerm::Witness>) {
          return mk::witness(n.witness, erase_ascriptions(n.body));
        } else if constexpr (std::is_same_v<T, ProofTerm::Let>) {
          return mk::let_in(n.fo_var, n.proof_var, n.ann,
                            erase_ascriptions(n.head),
                            erase_ascriptions(n.body));
        } else if constexpr (std::is_same_v<T, ProofTerm::Magic>) {
          return mk::magic(erase_ascriptions(n.arg));
        } else if constexpr (std::is_same_v<T, ProofTerm::AxRep>) {
          return mk::ax_rep(n.ctor, n.member, erase_ascriptions(n.body));
        } else if constexpr (std::is_same_v<T, ProofTerm::AxProp>) {
          return mk::ax_prop(n.ctor, n.member, erase_ascriptions(n.body));
        } else if constexpr (std::is_same_v<T, ProofTerm::Ind>) {
          return mk::ind(n.schema_var, n.schema_params, n.schema, n.args,
                         erase_ascriptions(n.body));
        } else {
          static_assert(std::is_same_v<T, ProofTerm::Ascribe>);
          return erase_ascriptions(n.body);
        }
      },
      term->node);
}

StepOutcome step(const ProofPtr& term) {
  return lazy_step(erase_ascriptions(term));
}

StepOutcome full_step(const ProofPtr& term) {
  ProofPtr erased = erase_ascriptions(term);
  if (auto r = full_reduce(erased)) return stepped(std::move(*r));
  return value();
}

namespace {

struct Seen {
  std::string key;
  std::uint64_t index;
  ProofPtr term;
};

}  // namespace

EvalResult evaluate(const ProofPtr& term, const EvalOptions& options) {
  ProofPtr current = erase_ascriptions(term);
  std::deque<Seen> window;
  std::uint64_t steps = 0;
  while (true) {
    if (options.detect_cycles) {
      std::string key = alpha_key(current);
      for (const Seen& s : window)
        if (s.key == key)
          return EvalResult{
              EvalResult::CycleDetected{steps - s.index, current, s.index}};
      window.push_back(Seen{std::move(key), steps, current});
      if (window.size() > options.cycle_window) window.pop_front();
    }
    StepOutcome out = options.strategy == Strategy::Lazy ? lazy_step(current)
                                                         : full_step(current);
    if (out.value()) return EvalResult{EvalResult::Normalized{current, steps}};
    if (out.stuck())
      return EvalResult{EvalResult::StuckTerm{
          current, steps, std::get<StepOutcome::Stuck>(out.outcome).reason}};
    if (steps >= options.fuel)
      return EvalResult{EvalResult::FuelExhausted{current, steps}};
    current = out.term();
    ++steps;
  }
}

std::vector<ProofPtr> trace(const ProofPtr& term, const EvalOptions& options) {
  std::vector<ProofPtr> out;
  ProofPtr current = erase_ascriptions(term);
  out.push_back(current);
  for (std::uint64_t i = 0; i < options.fuel; ++i) {
    StepOutcome step_out = options.strategy == Strategy::Lazy
                               ? lazy_step(current)
                               : full_step(current);
    if (!step_out.stepped()) break;
    current = step_out.term();
    out.push_back(current);
  }
  return out;
}

}  // namespace lz
