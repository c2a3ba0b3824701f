#include "lz/printer.hpp"

#include <sstream>

namespace lz {

namespace {

// ---- sugar detection ------------------------------------------------------

const SetTerm::Ctor* as_ctor(const TermPtr& t, const char* name) {
  auto* c = std::get_if<SetTerm::Ctor>(&t->node);
  if (c && c->name == name) return c;
  return nullptr;
}

// union {t, {t, t}}  =>  S(t)
bool match_succ(const TermPtr& t, TermPtr& inner) {
  auto* u = as_ctor(t, "union");
  if (!u || u->args.size() != 1) return false;
  auto* outer = as_ctor(u->args[0], "pair");
  if (!outer || outer->args.size() != 2) return false;
  auto* singleton = as_ctor(outer->args[1], "pair");
  if (!singleton || singleton->args.size() != 2) return false;
  if (!alpha_equal(outer->args[0], singleton->args[0]) ||
      !alpha_equal(outer->args[0], singleton->args[1]))
    return false;
  inner = outer->args[0];
  return true;
}

bool is_var_named(const TermPtr& t, const std::string& name) {
  auto* v = std::get_if<SetTerm::FoVar>(&t->node);
  return v && v->name == name;
}

// forall z. (z in t -> z in u) /\ (z in u -> z in t), z not free in t, u
// =>  t = u
bool match_eq(const FormulaPtr& f, TermPtr& t, TermPtr& u) {
  auto* fa = std::get_if<Formula::Forall>(&f->node);
  if (!fa) return false;
  auto* both = std::get_if<Formula::And>(&fa->body->node);
  if (!both) return false;
  auto* fwd = std::get_if<Formula::Implies>(&both->left->node);
  auto* bwd = std::get_if<Formula::Implies>(&both->right->node);
  if (!fwd || !bwd) return false;
  auto* m1 = std::get_if<Formula::Member>(&fwd->lhs->node);
  auto* m2 = std::get_if<Formula::Member>(&fwd->rhs->node);
  auto* m3 = std::get_if<Formula::Member>(&bwd->lhs->node);
  auto* m4 = std::get_if<Formula::Member>(&bwd->rhs->node);
  if (!m1 || !m2 || !m3 || !m4) return false;
  const std::string& z = fa->var;
  if (!is_var_named(m1->element, z) || !is_var_named(m2->element, z) ||
      !is_var_named(m3->element, z) || !is_var_named(m4->element, z))
    return false;
  if (!alpha_equal(m1->set, m4->set) || !alpha_equal(m2->set, m3->set))
    return false;
  if (free_fo_vars(m1->set).count(z) || free_fo_vars(m2->set).count(z))
    return false;
  t = m1->set;
  u = m2->set;
  return true;
}

// ---- rendering ------------------------------------------------------------

void render_term(std::ostream& os, const TermPtr& t);
void render_formula(std::ostream& os, const FormulaPtr& f, int min_level);
void render_proof(std::ostream& os, const ProofPtr& p, int min_level);

void render_param(std::ostream& os, const FormulaParam& p) {
  os << '[';
  for (size_t i = 0; i < p.binders.size(); ++i)
    os << (i ? " " : "") << p.binders[i];
  os << " : ";
  render_formula(os, p.body, 1);
  os << ']';
}

void render_term(std::ostream& os, const TermPtr& t) {
  TermPtr inner;
  if (match_succ(t, inner)) {
    os << "S(";
    render_term(os, inner);
    os << ')';
    return;
  }
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SetTerm::FoVar>) {
          os << n.name;
        } else {
          if (n.name == "empty") {
            os << "empty";
          } else if (n.name == "omega") {
            os << "omega";
          } else if (n.name == "pair") {
            os << '{';
            render_term(os, n.args[0]);
            os << ", ";
            render_term(os, n.args[1]);
            os << '}';
          } else if (n.name == "union") {
            os << "union ";
            render_term(os, n.args[0]);
          } else if (n.name == "power") {
            os << "pow ";
            render_term(os, n.args[0]);
          } else if (n.name == "sep" || n.name == "repl") {
            os << n.name;
            render_param(os, n.params[0]);
            os << '(';
            render_term(os, n.args[0]);
            os << ')';
          } else {
            // Theory constant or other nullary constructor.
            os << n.name;
          }
        }
      },
      t->node);
}

// Levels: 1 quantifiers and ->; 2 \/; 3 /\; 4 atoms.
void render_formula(std::ostream& os, const FormulaPtr& f, int min_level) {
  TermPtr t, u;
  if (match_eq(f, t, u)) {
    render_term(os, t);
    os << " = ";
    render_term(os, u);
    return;
  }
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        auto paren = [&](int level, auto body) {
          if (level < min_level) {
            os << '(';
            body();
            os << ')';
          } else {
            body();
          }
        };
        if constexpr (std::is_same_v<T, Formula::Bottom>) {
          os << "false";
        } else if constexpr (std::is_same_v<T, Formula::Member>) {
          render_term(os, n.element);
          os << " in ";
          render_term(os, n.set);
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          paren(3, [&] {
            render_formula(os, n.left, 3);
            os << " /\\ ";
            render_formula(os, n.right, 4);
          });
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          paren(2, [&] {
            render_formula(os, n.left, 2);
            os << " \\/ ";
            render_formula(os, n.right, 3);
          });
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          paren(1, [&] {
            render_formula(os, n.lhs, 2);
            os << " -> ";
            render_formula(os, n.rhs, 1);
          });
        } else if constexpr (std::is_same_v<T, Formula::Forall> ||
                             std::is_same_v<T, Formula::Exists>) {
          paren(1, [&] {
            os << (std::is_same_v<T, Formula::Forall> ? "forall " : "exists ")
               << n.var << ". ";
            render_formula(os, n.body, 1);
          });
        } else {
          static_assert(std::is_same_v<T, Formula::Hole>);
          os << "?(";
          for (size_t i = 0; i < n.args.size(); ++i) {
            if (i) os << ", ";
            render_term(os, n.args[i]);
          }
          os << ')';
        }
      },
      f->node);
}

void render_instance(std::ostream& os, const char* kw, const CtorInstance& c,
                     const TermPtr& member, const ProofPtr& body) {
  os << kw << '{' << c.name;
  if (!c.params.empty()) render_param(os, c.params[0]);
  os << "}(";
  render_term(os, member);
  if (!c.args.empty()) {
    os << "; ";
    for (size_t i = 0; i < c.args.size(); ++i) {
      if (i) os << ", ";
      render_term(os, c.args[i]);
    }
  }
  os << ")(";
  render_proof(os, body, 0);
  os << ')';
}

// Levels: 0 fun/let/case; 1 application; 2 fst/snd/inl/inr/magic; 3 atoms.
void render_proof(std::ostream& os, const ProofPtr& p, int min_level) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        auto paren = [&](int level, auto body) {
          if (level < min_level) {
            os << '(';
            body();
            os << ')';
          } else {
            body();
          }
        };
        auto prefix = [&](const char* kw, const ProofPtr& arg) {
          paren(2, [&] {
            os << kw << ' ';
            render_proof(os, arg, 2);
          });
        };
        if constexpr (std::is_same_v<T, ProofTerm::Var>) {
          os << n.name;
        } else if constexpr (std::is_same_v<T, ProofTerm::App>) {
          paren(1, [&] {
            render_proof(os, n.fn, 1);
            os << ' ';
            render_proof(os, n.arg, 2);
          });
        } else if constexpr (std::is_same_v<T, ProofTerm::FoApp>) {
          paren(1, [&] {
            render_proof(os, n.fn, 1);
            os << " @ ";
            render_term(os, n.arg);
          });
        } else if constexpr (std::is_same_v<T, ProofTerm::Lam>) {
          paren(0, [&] {
            os << "fun (" << n.var << " : ";
            render_formula(os, n.ann, 1);
            os << ") => ";
            render_proof(os, n.body, 0);
          });
        } else if constexpr (std::is_same_v<T, ProofTerm::FoLam>) {
          paren(0, [&] {
            os << "fun " << n.var << " => ";
            render_proof(os, n.body, 0);
          });
        } else if constexpr (std::is_same_v<T, ProofTerm::Pair>) {
          os << '<';
          render_proof(os, n.first, 0);
          os << ", ";
          render_proof(os, n.second, 0);
          os << '>';
        } else if constexpr (std::is_same_v<T, ProofTerm::Fst>) {
          prefix("fst", n.arg);
        } else if constexpr (std::is_same_v<T, ProofTerm::Snd>) {
          prefix("snd", n.arg);
        } else if constexpr (std::is_same_v<T, ProofTerm::Inl>) {
          prefix("inl", n.arg);
        } else if constexpr (std::is_same_v<T, ProofTerm::Inr>) {
          prefix("inr", n.arg);
        } else if constexpr (std::is_same_v<T, ProofTerm::Magic>) {
          prefix("magic", n.arg);
        } else if constexpr (std::is_same_v<T, ProofTerm::Case>) {
          paren(0, [&] {
            os << "case ";
            render_proof(os, n.scrutinee, 1);
            os << " of { inl (" << n.left_var << " : ";
            render_formula(os, n.left_ann, 1);
            os << ") => ";
            render_proof(os, n.left_body, 0);
            os << " | inr (" << n.right_var << " : ";
            render_formula(os, n.right_ann, 1);
            os << ") => ";
            render_proof(os, n.right_body, 0);
            os << " }";
          });
        } else if constexpr (std::is_same_v<T, ProofTerm::Witness>) {
          os << '[';
          render_term(os, n.witness);
          os << ", ";
          render_proof(os, n.body, 0);
          os << ']';
        } else if constexpr (std::is_same_v<T, ProofTerm::Let>) {
          paren(0, [&] {
            os << "let [" << n.fo_var << ", " << n.proof_var << " : ";
            render_formula(os, n.ann, 1);
            os << "] := ";
            render_proof(os, n.head, 0);
            os << " in ";
            render_proof(os, n.body, 0);
          });
        } else if constexpr (std::is_same_v<T, ProofTerm::AxRep>) {
          render_instance(os, "axrep", n.ctor, n.member, n.body);
        } else if constexpr (std::is_same_v<T, ProofTerm::AxProp>) {
          render_instance(os, "axprop", n.ctor, n.member, n.body);
        } else if constexpr (std::is_same_v<T, ProofTerm::Ind>) {
          os << "ind[" << n.schema_var << " : ";
          render_formula(os, n.schema, 1);
          os << "](";
          // Arguments print in first-occurrence order of the schema's free
          // variables, which is how the parser re-associates them.
          std::vector<std::string> order = ordered_free_fo_vars(n.schema);
          bool first = true;
          auto emit = [&](size_t i) {
            if (!first) os << ", ";
            first = false;
            render_term(os, n.args[i]);
          };
          std::vector<bool> done(n.args.size(), false);
          for (const auto& v : order) {
            for (size_t i = 0; i < n.schema_params.size(); ++i)
              if (!done[i] && n.schema_params[i] == v && v != n.schema_var) {
                done[i] = true;
                emit(i);
                break;
              }
          }
          for (size_t i = 0; i < n.args.size(); ++i)
            if (!done[i]) emit(i);
          os << ")(";
          render_proof(os, n.body, 0);
          os << ')';
        } else {
          static_assert(std::is_same_v<T, ProofTerm::Ascribe>);
          os << '(';
          render_proof(os, n.body, 0);
          os << " : ";
          render_formula(os, n.ann, 1);
          os << ')';
        }
      },
      p->node);
}

void ordered_fv_term(const TermPtr& t, const NameSet& bound,
                     std::vector<std::string>& out, NameSet& seen);
void ordered_fv_formula(const FormulaPtr& f, const NameSet& bound,
                        std::vector<std::string>& out, NameSet& seen);

void ordered_fv_term(const TermPtr& t, const NameSet& bound,
                     std::vector<std::string>& out, NameSet& seen) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SetTerm::FoVar>) {
          if (!bound.count(n.name) && seen.insert(n.name).second)
            out.push_back(n.name);
        } else {
          for (const auto& p : n.params) {
            NameSet inner = bound;
            inner.insert(p.binders.begin(), p.binders.end());
            ordered_fv_formula(p.body, inner, out, seen);
          }
          for (const auto& a : n.args) ordered_fv_term(a, bound, out, seen);
        }
      },
      t->node);
}

void ordered_fv_formula(const FormulaPtr& f, const NameSet& bound,
                        std::vector<std::string>& out, NameSet& seen) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Bottom>) {
        } else if constexpr (std::is_same_v<T, Formula::Member>) {
          ordered_fv_term(n.element, bound, out, seen);
          ordered_fv_term(n.set, bound, out, seen);
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          ordered_fv_formula(n.left, bound, out, seen);
          ordered_fv_formula(n.right, bound, out, seen);
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          ordered_fv_formula(n.left, bound, out, seen);
          ordered_fv_formula(n.right, bound, out, seen);
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          ordered_fv_formula(n.lhs, bound, out, seen);
          ordered_fv_formula(n.rhs, bound, out, seen);
        } else if constexpr (std::is_same_v<T, Formula::Forall> ||
                             std::is_same_v<T, Formula::Exists>) {
          NameSet inner = bound;
          inner.insert(n.var);
          ordered_fv_formula(n.body, inner, out, seen);
        } else {
          static_assert(std::is_same_v<T, Formula::Hole>);
          for (const auto& a : n.args) ordered_fv_term(a, bound, out, seen);
        }
      },
      f->node);
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::ostringstream os;
  render_term(os, t);
  return os.str();
}

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream os;
  render_formula(os, f, 1);
  return os.str();
}

std::string print_proof(const ProofPtr& p) {
  std::ostringstream os;
  render_proof(os, p, 0);
  return os.str();
}

std::vector<std::string> ordered_free_fo_vars(const FormulaPtr& f) {
  std::vector<std::string> out;
  NameSet seen;
  ordered_fv_formula(f, {}, out, seen);
  return out;
}

}  // namespace lz
