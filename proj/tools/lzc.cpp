// lzc — batch front end for the proof kernel: checking scripts, evaluating
// proofs, extracting computational content, and emitting generated proofs.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lz/checker.hpp"
#include "lz/extraction.hpp"
#include "lz/meta.hpp"
#include "lz/parser.hpp"
#include "lz/printer.hpp"
#include "lz/reducer.hpp"
#include "lz/script.hpp"
#include "lz/theory.hpp"

using namespace lz;

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ProofScript load_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open script '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::filesystem::path p(path);
  std::string base = p.has_parent_path() ? p.parent_path().string() : ".";
  return parse_script(buf.str(), base);
}

const Definition& find_def(const ProofScript& script, const std::string& name,
                           Definition::Kind kind, const char* what) {
  const Definition* d = script.find(name);
  if (!d) throw CliError("no definition named '" + name + "'");
  if (d->kind != kind)
    throw CliError("definition '" + name + "' is not a " + what);
  return *d;
}

void add_error(Report::Record& rec, const CheckError& e) {
  rec.add("result", "error");
  rec.add("error-kind", to_string(e.kind));
  std::string path;
  for (int i : e.path) path += (path.empty() ? "" : ".") + std::to_string(i);
  rec.add("error-path", path.empty() ? "(root)" : path);
  rec.add("error-message", e.message);
  if (e.expected) rec.add("expected", print_formula(e.expected));
  if (e.actual) rec.add("actual", print_formula(e.actual));
}

// ---- subcommand bodies ----------------------------------------------------

void cmd_check(const std::string& path, Report& report) {
  ProofScript script = load_script(path);
  for (const auto& j : script.judgments) {
    Report::Record& rec = report.fresh();
    const Definition& d =
        find_def(script, j.name, Definition::Kind::Proof, "proof");
    if (j.mode == Judgment::Mode::Check) {
      rec.add("judgment", "check " + j.name);
      rec.add("goal", print_formula(j.goal));
      auto err = check(script.theory, Context{}, d.proof, j.goal);
      if (!err) {
        rec.add("result", "ok");
      } else {
        add_error(rec, *err);
        report.fail();
      }
    } else {
      rec.add("judgment", "synth " + j.name);
      SynthesisResult r = synthesize(script.theory, Context{}, d.proof);
      if (auto* f = std::get_if<FormulaPtr>(&r)) {
        rec.add("result", "ok");
        rec.add("formula", print_formula(*f));
      } else {
        add_error(rec, std::get<CheckError>(r));
        report.fail();
      }
    }
  }
  if (script.judgments.empty()) {
    Report::Record& rec = report.fresh();
    rec.add("judgment", "(none)");
    rec.add("result", "ok");
  }
}

void describe_eval(Report::Record& rec, const EvalResult& r, bool show_term) {
  if (auto* n = std::get_if<EvalResult::Normalized>(&r.result)) {
    rec.add("result", "normalized");
    rec.add("steps", std::to_string(n->steps));
    if (show_term) rec.add("value", print_proof(n->value));
  } else if (auto* f = std::get_if<EvalResult::FuelExhausted>(&r.result)) {
    rec.add("result", "fuel-exhausted");
    rec.add("steps", std::to_string(f->steps));
    if (show_term) rec.add("last-term", print_proof(f->last_term));
  } else if (auto* c = std::get_if<EvalResult::CycleDetected>(&r.result)) {
    rec.add("result", "cycle");
    rec.add("period", std::to_string(c->period));
    rec.add("steps-to-entry", std::to_string(c->steps_to_entry));
    if (show_term) rec.add("witness", print_proof(c->witness));
  } else {
    auto& s = std::get<EvalResult::StuckTerm>(r.result);
    rec.add("result", "stuck");
    rec.add("steps", std::to_string(s.steps));
    rec.add("reason", s.reason);
    if (show_term) rec.add("term", print_proof(s.term));
  }
}

void cmd_eval(const std::string& path, const std::string& name,
              const EvalOptions& opts, bool do_trace, Report& report) {
  ProofScript script = load_script(path);
  const Definition& d =
      find_def(script, name, Definition::Kind::Proof, "proof");
  Report::Record& rec = report.fresh();
  rec.add("eval", name);
  rec.add("strategy", opts.strategy == Strategy::Full ? "full" : "lazy");
  rec.add("fuel", std::to_string(opts.fuel));
  if (do_trace) {
    std::vector<ProofPtr> tr = trace(d.proof, opts);
    for (size_t i = 0; i < tr.size(); ++i)
      rec.add("step-" + std::to_string(i), print_proof(tr[i]));
  }
  EvalResult r = evaluate(d.proof, opts);
  describe_eval(rec, r, /*show_term=*/true);
  if (std::holds_alternative<EvalResult::StuckTerm>(r.result)) report.fail();
}

FormulaPtr synthesized_goal(const ProofScript& script, const Definition& d) {
  SynthesisResult r = synthesize(script.theory, Context{}, d.proof);
  if (auto* f = std::get_if<FormulaPtr>(&r)) return *f;
  throw CliError("'" + d.name + "' does not typecheck: " +
                 std::get<CheckError>(r).message);
}

void cmd_extract(const std::string& what, const std::string& path,
                 const std::string& name, std::uint64_t fuel,
                 Report& report) {
  ProofScript script = load_script(path);
  const Definition& d =
      find_def(script, name, Definition::Kind::Proof, "proof");
  Report::Record& rec = report.fresh();
  rec.add("extract-" + what, name);
  FormulaPtr goal = synthesized_goal(script, d);
  rec.add("formula", print_formula(goal));
  if (what == "disjunct") {
    Disjunct r = extract_disjunct(script.theory, d.proof, goal, fuel);
    rec.add("side", r.side == Disjunct::Side::Left ? "left" : "right");
    rec.add("disjunct", print_formula(r.formula));
    rec.add("subproof", print_proof(r.subproof));
  } else if (what == "witness") {
    WitnessResult r = extract_witness(script.theory, d.proof, goal, fuel);
    rec.add("witness", print_term(r.term));
    rec.add("subproof", print_proof(r.subproof));
  } else {
    NumeralWitness r = extract_numeral(script.theory, d.proof, fuel);
    rec.add("n", std::to_string(r.value));
    std::string chain;
    for (const TermPtr& t : r.chain)
      chain += (chain.empty() ? "" : ", ") + print_term(t);
    rec.add("chain", chain);
    rec.add("chain-length", std::to_string(r.chain.size()));
  }
}

Theory theory_from_selector(const std::string& selector) {
  if (selector == "izf-r-minus") return izf_r_minus();
  if (selector == "nonwf") return nonwf_theory();
  std::ifstream in(selector);
  if (!in) throw CliError("cannot open theory file '" + selector + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str(),
                      std::filesystem::path(selector).stem().string());
}

// Accepts `name`, `name[binders : phi]`, or `ind[a : phi]`.
void cmd_axiom(const std::string& spec, const std::string& selector,
               Report& report) {
  Theory th = theory_from_selector(selector);
  ParseEnv env;
  env.theory = &th;

  std::string ctor = spec;
  std::vector<FormulaParam> params;
  std::string schema_var;
  FormulaPtr schema;
  size_t bracket = spec.find('[');
  if (bracket != std::string::npos) {
    if (spec.back() != ']')
      throw CliError("malformed constructor spec '" + spec + "'");
    ctor = spec.substr(0, bracket);
    std::string inside = spec.substr(bracket + 1,
                                     spec.size() - bracket - 2);
    size_t colon = inside.find(':');
    if (colon == std::string::npos)
      throw CliError("expected ':' in '" + spec + "'");
    std::istringstream binder_in(inside.substr(0, colon));
    std::vector<std::string> binders;
    std::string b;
    while (binder_in >> b) binders.push_back(b);
    if (binders.empty())
      throw CliError("expected binder names in '" + spec + "'");
    FormulaPtr body = parse_formula(inside.substr(colon + 1), env);
    if (ctor == "ind") {
      schema_var = binders[0];
      schema = body;
    } else {
      params.push_back(FormulaParam{std::move(binders), body});
    }
  }

  Report::Record& rec = report.fresh();
  if (ctor == "ind") {
    std::vector<std::string> sp;
    for (const auto& v : ordered_free_fo_vars(schema))
      if (v != schema_var) sp.push_back(v);
    rec.add("axiom", "induction on " + print_formula(schema));
    ProofPtr proof = induction_proof(th, schema_var, sp, schema);
    FormulaPtr formula = induction_axiom_formula(schema_var, sp, schema);
    rec.add("formula", print_formula(formula));
    rec.add("proof", print_proof(proof));
    auto err = check(th, Context{}, proof, formula);
    rec.add("checks", err ? "no" : "yes");
    if (err) report.fail();
    return;
  }
  rec.add("axiom", ctor);
  ProofPtr proof = axiom_proof(th, ctor, params);
  FormulaPtr formula = check_axiom_instance(th, ctor, params);
  rec.add("formula", print_formula(formula));
  rec.add("proof", print_proof(proof));
  auto err = check(th, Context{}, proof, formula);
  rec.add("checks", err ? "no" : "yes");
  if (err) report.fail();
}

void cmd_relativize(const std::string& kind, const std::string& path,
                    const std::string& name, const std::string& pred,
                    Report& report) {
  ProofScript script = load_script(path);
  const Definition& p =
      find_def(script, pred, Definition::Kind::Formula, "formula");
  // The class is the predicate formula with hole variable `x`.
  ClassPredicate T{"x", p.formula};
  Report::Record& rec = report.fresh();
  rec.add("relativize", name);
  rec.add("class", print_formula(p.formula));
  if (kind == "formula") {
    const Definition& d =
        find_def(script, name, Definition::Kind::Formula, "formula");
    rec.add("input", print_formula(d.formula));
    rec.add("output", print_formula(relativize_formula(d.formula, T)));
  } else {
    const Definition& d =
        find_def(script, name, Definition::Kind::Term, "term");
    rec.add("input", print_term(d.term));
    rec.add("output", print_term(relativize_term(d.term, T)));
  }
}

void cmd_define_term(const std::string& path, const std::string& name,
                     Report& report) {
  ProofScript script = load_script(path);
  const Definition& d =
      find_def(script, name, Definition::Kind::Term, "term");
  Report::Record& rec = report.fresh();
  rec.add("define-term", name);
  rec.add("input", print_term(d.term));
  rec.add("output", print_formula(define_term(script.theory, d.term)));
}

// ---- demos ----------------------------------------------------------------

void demo_assert(Report& report, Report::Record& rec, const std::string& key,
                 bool ok) {
  rec.add(key, ok ? "ok" : "FAILED");
  if (!ok) report.fail();
}

void cmd_demo_crabbe(Report& report) {
  const std::string src =
      "def t := sep[x : x in x -> false](0)\n"
      "def N := fun (y : t in t) =>\n"
      "  snd (axprop{sep[x : x in x -> false]}(t; 0)(y)) y\n"
      "def M := fun (x : t in 0) =>\n"
      "  N (axrep{sep[x : x in x -> false]}(t; 0)(<x, N>))\n"
      "synth N\n"
      "synth M\n";
  ProofScript script = parse_script(src);
  TermPtr t = script.find("t")->term;
  ProofPtr m = script.find("M")->proof;

  Report::Record& rec = report.fresh();
  rec.add("demo", "looping separation membership");
  SynthesisResult sn =
      synthesize(script.theory, Context{}, script.find("N")->proof);
  FormulaPtr n_type =
      mk::implies(mk::member(t, t), mk::bottom());
  demo_assert(report, rec, "N synthesizes t in t -> false",
              std::holds_alternative<FormulaPtr>(sn) &&
                  alpha_equal(std::get<FormulaPtr>(sn), n_type));
  SynthesisResult sm = synthesize(script.theory, Context{}, m);
  FormulaPtr m_type =
      mk::implies(mk::member(t, mk::empty()), mk::bottom());
  demo_assert(report, rec, "M synthesizes t in 0 -> false",
              std::holds_alternative<FormulaPtr>(sm) &&
                  alpha_equal(std::get<FormulaPtr>(sm), m_type));

  EvalResult lazy = evaluate(m);
  auto* n = std::get_if<EvalResult::Normalized>(&lazy.result);
  demo_assert(report, rec, "lazy evaluation is a value in 0 steps",
              n != nullptr && n->steps == 0);

  EvalOptions full;
  full.strategy = Strategy::Full;
  full.detect_cycles = true;
  full.fuel = 10;
  EvalResult loop = evaluate(m, full);
  auto* cyc = std::get_if<EvalResult::CycleDetected>(&loop.result);
  demo_assert(report, rec, "full reduction cycles with period 3",
              cyc != nullptr && cyc->period == 3);
  if (cyc) rec.add("cycle-witness", print_proof(cyc->witness));
}

void cmd_demo_nonwf(Report& report) {
  using namespace mk;
  Theory th = nonwf_theory();
  TermPtr c = constant("c");
  TermPtr d = constant("d");
  CtorInstance ci{"c", {}, {}};
  CtorInstance di{"d", {}, {}};

  // O : d in d -> d in d, via the second conjunct of d's membership formula.
  ProofPtr O = lam("x", member(d, d),
                   app(snd(ax_prop(di, d, var("x"))), var("x")));
  // N : d in c, from a proof that d = c.
  TermPtr e = fovar("e");
  ProofPtr fwd =
      lam("x", member(e, d), fst(ax_prop(di, e, var("x"))));
  ProofPtr trivial = lam("y", member(e, e), var("y"));
  ProofPtr bwd = lam("x", member(e, c),
                     ax_rep(di, e, proof_pair(var("x"), trivial)));
  ProofPtr N = ax_rep(ci, d, fo_lam("e", proof_pair(fwd, bwd)));
  // M : d in d, the looping proof.
  ProofPtr M = app(O, ax_rep(di, d, proof_pair(N, O)));

  Report::Record& rec = report.fresh();
  rec.add("demo", "circular sets without induction");
  demo_assert(report, rec, "N checks at d in c",
              !check(th, Context{}, N, member(d, c)).has_value());
  demo_assert(report, rec, "M checks at d in d",
              !check(th, Context{}, M, member(d, d)).has_value());

  EvalOptions opts;
  opts.detect_cycles = true;
  opts.fuel = 100;
  EvalResult r = evaluate(M, opts);
  auto* cyc = std::get_if<EvalResult::CycleDetected>(&r.result);
  demo_assert(report, rec, "lazy evaluation cycles with period 3",
              cyc != nullptr && cyc->period == 3);
  if (cyc) {
    rec.add("steps-to-entry", std::to_string(cyc->steps_to_entry));
    rec.add("cycle-witness", print_proof(cyc->witness));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lzc - proof kernel front end"};
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}));

  std::string script_path, name, pred, kind, which, selector = "izf-r-minus";
  std::uint64_t fuel = 1'000'000;
  bool full = false, cycles = false, do_trace = false;

  CLI::App* c_check = app.add_subcommand("check", "Run a script's judgments");
  c_check->add_option("script", script_path, "Proof script")->required();

  CLI::App* c_eval = app.add_subcommand("eval", "Evaluate a named proof");
  c_eval->add_option("script", script_path, "Proof script")->required();
  c_eval->add_option("name", name, "Proof definition")->required();
  c_eval->add_option("--fuel", fuel, "Maximum step count")
      ->envname("LZ_FUEL");
  c_eval->add_flag("--full", full, "Reduce under binders");
  c_eval->add_flag("--detect-cycles", cycles, "Report recurring terms");
  c_eval->add_flag("--trace", do_trace, "Print every intermediate term");

  std::vector<std::pair<std::string, CLI::App*>> extracts;
  for (const char* w : {"disjunct", "witness", "numeral"}) {
    CLI::App* sub = app.add_subcommand(
        std::string("extract-") + w,
        std::string("Extract a ") + w + " from a named proof");
    sub->add_option("script", script_path, "Proof script")->required();
    sub->add_option("name", name, "Proof definition")->required();
    sub->add_option("--fuel", fuel, "Maximum step count")->envname("LZ_FUEL");
    extracts.emplace_back(w, sub);
  }

  CLI::App* c_axiom =
      app.add_subcommand("axiom", "Emit the generated proof of an axiom");
  c_axiom
      ->add_option("ctor", name,
                   "Constructor name, `name[binders : phi]`, or "
                   "`ind[a : phi]`")
      ->required();
  c_axiom->add_option("--theory", selector,
                      "izf-r-minus, nonwf, or a theory file");

  CLI::App* c_rel =
      app.add_subcommand("relativize", "Restrict a definition to a class");
  c_rel->add_option("kind", kind, "formula or term")
      ->required()
      ->check(CLI::IsMember({"formula", "term"}));
  c_rel->add_option("script", script_path, "Proof script")->required();
  c_rel->add_option("name", name, "Definition to relativize")->required();
  c_rel->add_option("--pred", pred, "Formula definition naming the class")
      ->required();

  CLI::App* c_def = app.add_subcommand(
      "define-term", "Term-free defining formula of a term definition");
  c_def->add_option("script", script_path, "Proof script")->required();
  c_def->add_option("name", name, "Term definition")->required();

  CLI::App* c_demo = app.add_subcommand("demo", "Run a built-in fixture");
  c_demo->add_option("which", which, "crabbe or nonwf")
      ->required()
      ->check(CLI::IsMember({"crabbe", "nonwf"}));

  CLI11_PARSE(app, argc, argv);

  Report report;
  try {
    if (c_check->parsed()) {
      cmd_check(script_path, report);
    } else if (c_eval->parsed()) {
      EvalOptions opts;
      opts.fuel = fuel;
      opts.detect_cycles = cycles;
      opts.strategy = full ? Strategy::Full : Strategy::Lazy;
      cmd_eval(script_path, name, opts, do_trace, report);
    } else if (c_axiom->parsed()) {
      cmd_axiom(name, selector, report);
    } else if (c_rel->parsed()) {
      cmd_relativize(kind, script_path, name, pred, report);
    } else if (c_def->parsed()) {
      cmd_define_term(script_path, name, report);
    } else if (c_demo->parsed()) {
      if (which == "crabbe")
        cmd_demo_crabbe(report);
      else
        cmd_demo_nonwf(report);
    } else {
      for (const auto& [w, sub] : extracts)
        if (sub->parsed()) cmd_extract(w, script_path, name, fuel, report);
    }
  } catch (const std::exception& e) {
    Report::Record& rec = report.fresh();
    rec.add("error", e.what());
    report.fail();
  }

  std::cout << (format == "machine" ? report.render_machine()
                                    : report.render_human());
  return report.ok ? 0 : 1;
}
