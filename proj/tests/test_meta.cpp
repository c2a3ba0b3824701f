#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lz/meta.hpp"
#include "support/fixtures.hpp"

using namespace lz;
using namespace lz::mk;

namespace {

bool term_free(const FormulaPtr& f);

bool term_is_var(const TermPtr& t) {
  return std::holds_alternative<SetTerm::FoVar>(t->node);
}

bool term_free(const FormulaPtr& f) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Bottom>) {
          return true;
        } else if constexpr (std::is_same_v<T, Formula::Member>) {
          return term_is_var(n.element) && term_is_var(n.set);
        } else if constexpr (std::is_same_v<T, Formula::And> ||
                             std::is_same_v<T, Formula::Or>) {
          return term_free(n.left) && term_free(n.right);
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          return term_free(n.lhs) && term_free(n.rhs);
        } else if constexpr (std::is_same_v<T, Formula::Forall> ||
                             std::is_same_v<T, Formula::Exists>) {
          return term_free(n.body);
        } else {
          return false;  // Hole never belongs in a defining formula.
        }
      },
      f->node);
}

}  // namespace

TEST_CASE("a variable's defining formula is an equality with the hole") {
  Theory th = izf_r_minus();
  CHECK(alpha_equal(define_term(th, fovar("a")),
                    eq(fovar("x"), fovar("a"))));
  // The hole is freshened away from the term's own variables.
  FormulaPtr d = define_term(th, fovar("x"));
  NameSet fv = free_fo_vars(d);
  CHECK(fv.count("x"));
  CHECK(fv.size() == 2);
}

TEST_CASE("union of a variable gets the expected two-layer definition") {
  Theory th = izf_r_minus();
  FormulaPtr d = define_term(th, union_of(fovar("a")));
  FormulaPtr expected = exists(
      "u",
      conj(eq(fovar("u"), fovar("a")),
           forall("c", iff(member(fovar("c"), fovar("x")),
                           bounded_exists("b", fovar("u"),
                                          member(fovar("c"), fovar("b")))))));
  CHECK(alpha_equal(d, expected));
}

TEST_CASE("pair arguments are defined left to right") {
  Theory th = izf_r_minus();
  FormulaPtr d = define_term(th, pair(fovar("a"), fovar("b")));
  FormulaPtr inner = forall(
      "c", iff(member(fovar("c"), fovar("x")),
               disj(eq(fovar("c"), fovar("p")), eq(fovar("c"), fovar("q")))));
  FormulaPtr expected =
      exists("p", conj(eq(fovar("p"), fovar("a")),
                       exists("q", conj(eq(fovar("q"), fovar("b")), inner))));
  CHECK(alpha_equal(d, expected));
}

TEST_CASE("defining formulas are term-free with the right free variables") {
  Theory th = izf_r_minus();
  for (const TermPtr& t : fixtures::corpus_terms()) {
    CAPTURE(alpha_key(t));
    FormulaPtr d = define_term(th, t);
    CHECK(term_free(d));
    NameSet expected = free_fo_vars(t);
    expected.insert(fresh_name("x", free_fo_vars(t)));
    CHECK(free_fo_vars(d) == expected);
  }
}

TEST_CASE("self-referential constructors use the fixed-point form") {
  // omega's schema mentions omega itself; the defining formula must close
  // that loop through the hole instead of keeping the constant.
  Theory th = izf_r_minus();
  FormulaPtr d = define_term(th, omega());
  CHECK(term_free(d));
  CHECK(free_fo_vars(d) == NameSet{"x"});
  CHECK(std::get_if<Formula::Forall>(&d->node) != nullptr);

  // Same for the circular constants: c's members are exactly c itself.
  Theory nw = nonwf_theory();
  FormulaPtr dc = define_term(nw, constant("c"));
  CHECK(term_free(dc));
  CHECK(free_fo_vars(dc) == NameSet{"x"});
  FormulaPtr expected =
      forall("m", iff(member(fovar("m"), fovar("x")),
                      eq(fovar("m"), fovar("x"))));
  CHECK(alpha_equal(dc, expected));
}

TEST_CASE("term elimination introduces definitions for composite sides") {
  Theory th = izf_r_minus();
  FormulaPtr f = member(empty(), fovar("a"));
  FormulaPtr expected = exists(
      "e", conj(forall("c", iff(member(fovar("c"), fovar("e")), bottom())),
                member(fovar("e"), fovar("a"))));
  CHECK(alpha_equal(eliminate_terms(th, f), expected));
  // Atoms between variables are left alone; connectives are homomorphic.
  FormulaPtr g = implies(member(fovar("a"), fovar("b")), bottom());
  CHECK(alpha_equal(eliminate_terms(th, g), g));
  for (const FormulaPtr& h : fixtures::corpus_formulas()) {
    CAPTURE(alpha_key(h));
    CHECK(term_free(eliminate_terms(th, h)));
  }
}

TEST_CASE("the trivial class accepts everything and has no parameters") {
  ClassPredicate T = trivial_class();
  CHECK(T.parameters().empty());
  CHECK(alpha_equal(T.apply(omega()), eq(omega(), omega())));
}

TEST_CASE("basic constructors relativize pointwise") {
  ClassPredicate T{"h", member(fovar("h"), fovar("p"))};
  CHECK(alpha_equal(relativize_term(fovar("a"), T), fovar("a")));
  CHECK(alpha_equal(relativize_term(empty(), T), empty()));
  CHECK(alpha_equal(relativize_term(omega(), T), omega()));
  TermPtr pr = pair(fovar("a"), union_of(fovar("b")));
  CHECK(alpha_equal(relativize_term(pr, T), pr));
}

TEST_CASE("power sets are cut down by separation on the class") {
  ClassPredicate T{"h", member(fovar("h"), fovar("p"))};
  TermPtr rel = relativize_term(power(empty()), T);
  TermPtr expected =
      sep("b", member(fovar("b"), fovar("p")), power(empty()));
  CHECK(alpha_equal(rel, expected));
  // Nested: the argument itself is relativized first.
  TermPtr nested = relativize_term(power(power(empty())), T);
  TermPtr inner = sep("b", member(fovar("b"), fovar("p")), power(empty()));
  CHECK(alpha_equal(
      nested, sep("b", member(fovar("b"), fovar("p")), power(inner))));
}

TEST_CASE("comprehension bodies are relativized, replacement is guarded") {
  ClassPredicate T{"h", member(fovar("h"), fovar("p"))};
  TermPtr s = sep("y", exists("z", member(fovar("z"), fovar("y"))),
                  fovar("a"));
  TermPtr s_rel = relativize_term(s, T);
  TermPtr s_expected =
      sep("y",
          exists("z", conj(member(fovar("z"), fovar("p")),
                           member(fovar("z"), fovar("y")))),
          fovar("a"));
  CHECK(alpha_equal(s_rel, s_expected));

  TermPtr r = repl("u", "v", member(fovar("v"), fovar("u")), fovar("a"));
  TermPtr r_rel = relativize_term(r, T);
  TermPtr r_expected =
      repl("u", "v",
           conj(member(fovar("v"), fovar("p")),
                member(fovar("v"), fovar("u"))),
           fovar("a"));
  CHECK(alpha_equal(r_rel, r_expected));
}

TEST_CASE("quantifiers acquire guards of the matching polarity") {
  ClassPredicate T{"h", member(fovar("h"), fovar("p"))};
  FormulaPtr all = forall("a", member(fovar("a"), omega()));
  CHECK(alpha_equal(relativize_formula(all, T),
                    forall("a", implies(member(fovar("a"), fovar("p")),
                                        member(fovar("a"), omega())))));
  FormulaPtr some = exists("a", member(fovar("a"), omega()));
  CHECK(alpha_equal(relativize_formula(some, T),
                    exists("a", conj(member(fovar("a"), fovar("p")),
                                     member(fovar("a"), omega())))));
  // Atoms and bottom are fixed points.
  CHECK(alpha_equal(relativize_formula(bottom(), T), bottom()));
  FormulaPtr atom = member(fovar("a"), fovar("b"));
  CHECK(alpha_equal(relativize_formula(atom, T), atom));
}

TEST_CASE("binders colliding with class parameters are renamed") {
  ClassPredicate T{"h", member(fovar("h"), fovar("a"))};
  FormulaPtr f = forall("a", member(fovar("a"), omega()));
  FormulaPtr rel = relativize_formula(f, T);
  FormulaPtr expected = forall(
      "b", implies(member(fovar("b"), fovar("a")),
                   member(fovar("b"), omega())));
  CHECK(alpha_equal(rel, expected));
}

TEST_CASE("relativization keeps the original free variables") {
  ClassPredicate T{"h", member(fovar("h"), fovar("p"))};
  NameSet params = T.parameters();
  for (const FormulaPtr& f : fixtures::corpus_formulas()) {
    CAPTURE(alpha_key(f));
    NameSet before = free_fo_vars(f);
    NameSet after = free_fo_vars(relativize_formula(f, T));
    for (const auto& v : before) CHECK(after.count(v));
    for (const auto& v : after)
      CHECK((before.count(v) || params.count(v)));
  }
  for (const TermPtr& t : fixtures::corpus_terms()) {
    CAPTURE(alpha_key(t));
    NameSet before = free_fo_vars(t);
    NameSet after = free_fo_vars(relativize_term(t, T));
    for (const auto& v : before) CHECK(after.count(v));
    for (const auto& v : after)
      CHECK((before.count(v) || params.count(v)));
  }
  // The trivial class never changes the free variables at all.
  ClassPredicate triv = trivial_class();
  for (const FormulaPtr& f : fixtures::corpus_formulas())
    CHECK(free_fo_vars(relativize_formula(f, triv)) == free_fo_vars(f));
}
