#include "lz/parser.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "lz/printer.hpp"

namespace lz {

namespace {

// ---- lexer ----------------------------------------------------------------

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

const NameSet& reserved_words() {
  static const NameSet words = {
      "false", "in",    "forall", "exists", "empty",  "omega", "union",
      "pow",   "sep",   "repl",   "S",      "fun",    "fst",   "snd",
      "inl",   "inr",   "case",   "of",     "let",    "magic", "axrep",
      "axprop", "ind",  "def",    "check",  "synth",  "theory", "axiom",
      "induction", "on", "off"};
  return words;
}

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip();
      if (pos_ >= src_.size()) {
        out.push_back({Token::Kind::End, "", line_, col_});
        return out;
      }
      int line = line_, col = col_;
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_' || src_[pos_] == '\''))
          word.push_back(advance());
        out.push_back({Token::Kind::Ident, word, line, col});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])))
          num.push_back(advance());
        out.push_back({Token::Kind::Number, num, line, col});
        continue;
      }
      std::string sym;
      auto two = [&](const char* s) {
        if (pos_ + 1 < src_.size() && src_[pos_] == s[0] &&
            src_[pos_ + 1] == s[1]) {
          sym = s;
          advance();
          advance();
          return true;
        }
        return false;
      };
      if (two(":=") || two("=>") || two("->") || two("/\\") || two("\\/")) {
        out.push_back({Token::Kind::Symbol, sym, line, col});
        continue;
      }
      if (std::string("(){}[]<>,;:.|@=?").find(c) != std::string::npos) {
        sym.push_back(advance());
        out.push_back({Token::Kind::Symbol, sym, line, col});
        continue;
      }
      throw ParseError(line, col, std::string("unexpected character '") + c +
                                      "'");
    }
  }

  // Rest of the current line, trimmed (for theory selectors).
  static std::string rest_of_line(const std::string& src, int line) {
    std::istringstream is(src);
    std::string l;
    for (int i = 0; i < line && std::getline(is, l); ++i) {
    }
    return l;
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ---- parser ---------------------------------------------------------------

// Exception-safe registration of a lexically bound variable name; bound
// names shadow script definitions and theory constants.
class Scope {
 public:
  Scope(std::map<std::string, int>& bound, std::string name)
      : bound_(bound), name_(std::move(name)) {
    ++bound_[name_];
  }
  ~Scope() {
    auto it = bound_.find(name_);
    if (--it->second == 0) bound_.erase(it);
  }
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  std::map<std::string, int>& bound_;
  std::string name_;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseEnv& env,
         bool allow_holes = false)
      : tokens_(std::move(tokens)), env_(env), allow_holes_(allow_holes) {}

  TermPtr term() { return parse_term_level(); }
  FormulaPtr formula() { return parse_formula_level(); }
  ProofPtr proof() { return parse_proof_level(); }

  void expect_end() {
    if (!at_end())
      throw error("unexpected trailing input '" + peek().text + "'");
  }

  bool at_end() const { return peek().kind == Token::Kind::End; }
  const Token& peek() const { return tokens_[pos_]; }
  size_t position() const { return pos_; }
  void rewind(size_t pos) { pos_ = pos; }

  bool at_word(const char* w) const {
    return peek().kind == Token::Kind::Ident && peek().text == w;
  }
  bool at_symbol(const char* s) const {
    return peek().kind == Token::Kind::Symbol && peek().text == s;
  }
  bool eat_word(const char* w) {
    if (!at_word(w)) return false;
    ++pos_;
    return true;
  }
  bool eat_symbol(const char* s) {
    if (!at_symbol(s)) return false;
    ++pos_;
    return true;
  }
  void expect_symbol(const char* s) {
    if (!eat_symbol(s)) throw error(std::string("expected '") + s + "'");
  }
  void expect_word(const char* w) {
    if (!eat_word(w)) throw error(std::string("expected '") + w + "'");
  }

  // An identifier usable as a variable or definition name.
  std::string name() {
    if (peek().kind != Token::Kind::Ident)
      throw error("expected an identifier");
    if (reserved_words().count(peek().text))
      throw error("'" + peek().text + "' is a reserved word");
    return tokens_[pos_++].text;
  }

  // Any identifier, reserved or not (constructor names in axrep braces).
  std::string any_ident() {
    if (peek().kind != Token::Kind::Ident)
      throw error("expected an identifier");
    return tokens_[pos_++].text;
  }

  ParseError error(const std::string& message) const {
    return ParseError(peek().line, peek().col, message);
  }

  // ---- terms ----
  TermPtr parse_term_level() {
    if (eat_word("union")) return mk::union_of(parse_term_level());
    if (eat_word("pow")) return mk::power(parse_term_level());
    return parse_term_atom();
  }

  TermPtr parse_term_atom() {
    if (eat_word("empty")) return mk::empty();
    if (eat_word("omega")) return mk::omega();
    if (peek().kind == Token::Kind::Number) {
      long long n = std::stoll(tokens_[pos_++].text);
      return numeral(n);
    }
    if (eat_word("S")) {
      expect_symbol("(");
      TermPtr t = parse_term_level();
      expect_symbol(")");
      return succ(t);
    }
    if (eat_symbol("{")) {
      TermPtr a = parse_term_level();
      expect_symbol(",");
      TermPtr b = parse_term_level();
      expect_symbol("}");
      return mk::pair(a, b);
    }
    if (eat_word("sep")) {
      expect_symbol("[");
      std::string x = name();
      expect_symbol(":");
      FormulaPtr phi;
      {
        Scope s(bound_fo_, x);
        phi = parse_formula_level();
      }
      expect_symbol("]");
      expect_symbol("(");
      TermPtr of = parse_term_level();
      expect_symbol(")");
      return mk::sep(x, phi, of);
    }
    if (eat_word("repl")) {
      expect_symbol("[");
      std::string x = name();
      std::string y = name();
      expect_symbol(":");
      FormulaPtr phi;
      {
        Scope sx(bound_fo_, x);
        Scope sy(bound_fo_, y);
        phi = parse_formula_level();
      }
      expect_symbol("]");
      expect_symbol("(");
      TermPtr of = parse_term_level();
      expect_symbol(")");
      return mk::repl(x, y, phi, of);
    }
    if (eat_symbol("(")) {
      TermPtr t = parse_term_level();
      expect_symbol(")");
      return t;
    }
    std::string id = name();
    if (!bound_fo_.count(id)) {
      auto it = env_.terms.find(id);
      if (it != env_.terms.end()) return it->second;
      if (env_.theory) {
        const AxiomDescriptor* d = env_.theory->find(id);
        if (d && d->term_arity == 0 && d->param_spec == ParamSpec::None)
          return mk::constant(id);
      }
    }
    return mk::fovar(id);
  }

  // ---- formulas ----
  // Quantifiers and -> at the bottom; -> right-associative, quantifier
  // scope maximal.
  FormulaPtr parse_formula_level() {
    if (eat_word("forall")) {
      std::string v = name();
      expect_symbol(".");
      Scope s(bound_fo_, v);
      return mk::forall(v, parse_formula_level());
    }
    if (eat_word("exists")) {
      std::string v = name();
      expect_symbol(".");
      Scope s(bound_fo_, v);
      return mk::exists(v, parse_formula_level());
    }
    FormulaPtr lhs = parse_or();
    if (eat_symbol("->")) return mk::implies(lhs, parse_formula_level());
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr l = parse_and();
    while (eat_symbol("\\/")) l = mk::disj(l, parse_and());
    return l;
  }

  FormulaPtr parse_and() {
    FormulaPtr l = parse_formula_atom();
    while (eat_symbol("/\\")) l = mk::conj(l, parse_formula_atom());
    return l;
  }

  FormulaPtr parse_formula_atom() {
    if (eat_word("false")) return mk::bottom();
    if (allow_holes_ && eat_symbol("?")) {
      expect_symbol("(");
      std::vector<TermPtr> args;
      if (!at_symbol(")")) {
        args.push_back(parse_term_level());
        while (eat_symbol(",")) args.push_back(parse_term_level());
      }
      expect_symbol(")");
      return mk::hole(std::move(args));
    }
    if (at_symbol("(")) {
      size_t start = position();
      ++pos_;
      try {
        FormulaPtr f = parse_formula_level();
        expect_symbol(")");
        // A parenthesized formula may still be the left side of a
        // relation if it was really a term; terms and formulas cannot
        // both follow '(' ambiguously except via this backtrack.
        if (!at_symbol("=") && !at_word("in")) return f;
      } catch (const ParseError&) {
      }
      rewind(start);
    }
    if (peek().kind == Token::Kind::Ident &&
        env_.formulas.count(peek().text) && !bound_fo_.count(peek().text)) {
      return env_.formulas.at(tokens_[pos_++].text);
    }
    TermPtr t = parse_term_level();
    if (eat_word("in")) return mk::member(t, parse_term_level());
    if (eat_symbol("=")) return eq(t, parse_term_level());
    throw error("expected 'in' or '=' after a term in a formula");
  }

  // ---- proofs ----
  ProofPtr parse_proof_level() {
    if (eat_word("fun")) {
      if (eat_symbol("(")) {
        std::string x = name();
        expect_symbol(":");
        FormulaPtr ann = parse_formula_level();
        expect_symbol(")");
        expect_symbol("=>");
        Scope s(bound_proof_, x);
        return mk::lam(x, ann, parse_proof_level());
      }
      std::string a = name();
      expect_symbol("=>");
      Scope s(bound_fo_, a);
      return mk::fo_lam(a, parse_proof_level());
    }
    if (eat_word("let")) {
      expect_symbol("[");
      std::string a = name();
      expect_symbol(",");
      std::string x = name();
      expect_symbol(":");
      FormulaPtr ann;
      {
        Scope sa(bound_fo_, a);
        ann = parse_formula_level();
      }
      expect_symbol("]");
      expect_symbol(":=");
      ProofPtr head = parse_proof_level();
      expect_word("in");
      Scope sa(bound_fo_, a);
      Scope sx(bound_proof_, x);
      ProofPtr body = parse_proof_level();
      return mk::let_in(a, x, ann, head, body);
    }
    if (eat_word("case")) {
      ProofPtr scrutinee = parse_app();
      expect_word("of");
      expect_symbol("{");
      expect_word("inl");
      expect_symbol("(");
      std::string lv = name();
      expect_symbol(":");
      FormulaPtr la = parse_formula_level();
      expect_symbol(")");
      expect_symbol("=>");
      ProofPtr lb;
      {
        Scope s(bound_proof_, lv);
        lb = parse_proof_level();
      }
      expect_symbol("|");
      expect_word("inr");
      expect_symbol("(");
      std::string rv = name();
      expect_symbol(":");
      FormulaPtr ra = parse_formula_level();
      expect_symbol(")");
      expect_symbol("=>");
      ProofPtr rb;
      {
        Scope s(bound_proof_, rv);
        rb = parse_proof_level();
      }
      expect_symbol("}");
      return mk::case_of(scrutinee, lv, la, lb, rv, ra, rb);
    }
    return parse_app();
  }

  bool starts_proof_operand() const {
    if (at_symbol("<") || at_symbol("[") || at_symbol("(")) return true;
    if (peek().kind != Token::Kind::Ident) return false;
    const std::string& w = peek().text;
    if (!reserved_words().count(w)) return true;
    return w == "fst" || w == "snd" || w == "inl" || w == "inr" ||
           w == "magic" || w == "axrep" || w == "axprop" || w == "ind";
  }

  ProofPtr parse_app() {
    ProofPtr head = parse_prefix();
    while (true) {
      if (eat_symbol("@")) {
        head = mk::fo_app(head, parse_term_level());
      } else if (starts_proof_operand()) {
        head = mk::app(head, parse_prefix());
      } else {
        return head;
      }
    }
  }

  ProofPtr parse_prefix() {
    if (eat_word("fst")) return mk::fst(parse_prefix());
    if (eat_word("snd")) return mk::snd(parse_prefix());
    if (eat_word("inl")) return mk::inl(parse_prefix());
    if (eat_word("inr")) return mk::inr(parse_prefix());
    if (eat_word("magic")) return mk::magic(parse_prefix());
    return parse_proof_atom();
  }

  // axrep{ctor[binders : phi]}(member; args)(body)
  ProofPtr parse_instance(bool is_rep) {
    expect_symbol("{");
    std::string ctor_name = any_ident();
    std::vector<FormulaParam> params;
    if (eat_symbol("[")) {
      std::vector<std::string> binders;
      binders.push_back(name());
      while (!at_symbol(":")) binders.push_back(name());
      expect_symbol(":");
      FormulaPtr body;
      {
        std::vector<std::unique_ptr<Scope>> scopes;
        for (const auto& b : binders)
          scopes.push_back(std::make_unique<Scope>(bound_fo_, b));
        body = parse_formula_level();
      }
      expect_symbol("]");
      params.push_back(FormulaParam{std::move(binders), body});
    }
    expect_symbol("}");
    expect_symbol("(");
    TermPtr member = parse_term_level();
    std::vector<TermPtr> args;
    if (eat_symbol(";")) {
      if (!at_symbol(")")) {
        args.push_back(parse_term_level());
        while (eat_symbol(",")) args.push_back(parse_term_level());
      }
    }
    expect_symbol(")");
    expect_symbol("(");
    ProofPtr body = parse_proof_level();
    expect_symbol(")");
    CtorInstance inst{ctor_name, std::move(params), std::move(args)};
    if (env_.theory) validate_instance(*env_.theory, inst);
    return is_rep ? mk::ax_rep(std::move(inst), member, body)
                  : mk::ax_prop(std::move(inst), member, body);
  }

  ProofPtr parse_proof_atom() {
    if (eat_word("axrep")) return parse_instance(true);
    if (eat_word("axprop")) return parse_instance(false);
    if (eat_word("ind")) {
      expect_symbol("[");
      std::string schema_var = name();
      expect_symbol(":");
      FormulaPtr schema;
      {
        Scope s(bound_fo_, schema_var);
        schema = parse_formula_level();
      }
      expect_symbol("]");
      std::vector<std::string> params;
      for (const auto& v : ordered_free_fo_vars(schema))
        if (v != schema_var) params.push_back(v);
      expect_symbol("(");
      std::vector<TermPtr> args;
      if (!at_symbol(")")) {
        args.push_back(parse_term_level());
        while (eat_symbol(",")) args.push_back(parse_term_level());
      }
      expect_symbol(")");
      if (args.size() != params.size())
        throw error("ind schema has " + std::to_string(params.size()) +
                    " parameter(s) but " + std::to_string(args.size()) +
                    " argument(s) were given");
      expect_symbol("(");
      ProofPtr body = parse_proof_level();
      expect_symbol(")");
      return mk::ind(schema_var, params, schema, args, body);
    }
    if (eat_symbol("<")) {
      ProofPtr a = parse_proof_level();
      expect_symbol(",");
      ProofPtr b = parse_proof_level();
      expect_symbol(">");
      return mk::proof_pair(a, b);
    }
    if (eat_symbol("[")) {
      TermPtr t = parse_term_level();
      expect_symbol(",");
      ProofPtr body = parse_proof_level();
      expect_symbol("]");
      return mk::witness(t, body);
    }
    if (eat_symbol("(")) {
      ProofPtr inner = parse_proof_level();
      if (eat_symbol(":")) {
        FormulaPtr ann = parse_formula_level();
        expect_symbol(")");
        return mk::ascribe(inner, ann);
      }
      expect_symbol(")");
      return inner;
    }
    std::string id = name();
    if (!bound_proof_.count(id)) {
      auto it = env_.proofs.find(id);
      if (it != env_.proofs.end()) return it->second;
    }
    return mk::var(id);
  }

 private:
  std::vector<Token> tokens_;
  const ParseEnv& env_;
  bool allow_holes_;
  size_t pos_ = 0;
  // Reference counts of lexically bound first-order / proof variables.
  std::map<std::string, int> bound_fo_;
  std::map<std::string, int> bound_proof_;
};

}  // namespace

TermPtr parse_term(const std::string& source, const ParseEnv& env) {
  Parser p(Lexer(source).run(), env);
  TermPtr t = p.term();
  p.expect_end();
  return t;
}

FormulaPtr parse_formula(const std::string& source, const ParseEnv& env) {
  Parser p(Lexer(source).run(), env);
  FormulaPtr f = p.formula();
  p.expect_end();
  return f;
}

ProofPtr parse_proof(const std::string& source, const ParseEnv& env) {
  Parser p(Lexer(source).run(), env);
  ProofPtr pr = p.proof();
  p.expect_end();
  return pr;
}

namespace {

int max_hole_arity(const FormulaPtr& f) {
  int arity = -1;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Hole>) {
          arity = std::max(arity, static_cast<int>(n.args.size()));
        } else if constexpr (std::is_same_v<T, Formula::And> ||
                             std::is_same_v<T, Formula::Or>) {
          arity = std::max(max_hole_arity(n.left), max_hole_arity(n.right));
        } else if constexpr (std::is_same_v<T, Formula::Implies>) {
          arity = std::max(max_hole_arity(n.lhs), max_hole_arity(n.rhs));
        } else if constexpr (std::is_same_v<T, Formula::Forall> ||
                             std::is_same_v<T, Formula::Exists>) {
          arity = max_hole_arity(n.body);
        }
      },
      f->node);
  return arity;
}

}  // namespace

Theory parse_theory(const std::string& source, const std::string& name) {
  Theory th;
  th.name = name;
  th.has_induction = false;
  ParseEnv env;
  Parser p(Lexer(source).run(), env, /*allow_holes=*/true);
  while (!p.at_end()) {
    if (p.eat_word("induction")) {
      if (p.eat_word("on"))
        th.has_induction = true;
      else if (p.eat_word("off"))
        th.has_induction = false;
      else
        throw p.error("expected 'on' or 'off'");
      continue;
    }
    p.expect_word("axiom");
    std::string ctor = p.any_ident();
    p.expect_symbol("[");
    std::vector<std::string> vars;
    vars.push_back(p.name());
    while (!p.at_symbol(":")) vars.push_back(p.name());
    p.expect_symbol(":");
    FormulaPtr schema = p.formula();
    p.expect_symbol("]");
    p.expect_symbol("(");
    if (p.peek().kind != Token::Kind::Number)
      throw p.error("expected the constructor arity");
    int arity = std::stoi(p.peek().text);
    p.rewind(p.position() + 1);
    p.expect_symbol(")");
    if (static_cast<int>(vars.size()) != arity + 1)
      throw p.error("axiom '" + ctor + "' declares " +
                    std::to_string(vars.size()) +
                    " variable(s); expected member + " +
                    std::to_string(arity) + " argument(s)");
    int holes = max_hole_arity(schema);
    ParamSpec spec = holes <= 0 ? ParamSpec::None
                     : holes == 1 ? ParamSpec::OneBinder
                                  : ParamSpec::TwoBinder;
    if (holes > 2) throw p.error("formula holes bind at most two variables");
    AxiomDescriptor d;
    d.name = ctor;
    d.term_arity = arity;
    d.param_spec = spec;
    d.member_var = vars[0];
    d.arg_vars.assign(vars.begin() + 1, vars.end());
    d.schema = schema;
    th.descriptors.push_back(std::move(d));
  }
  std::vector<std::string> errors = validate_theory(th);
  if (!errors.empty()) {
    std::string joined;
    for (const auto& e : errors) joined += (joined.empty() ? "" : "; ") + e;
    throw ParseError(1, 1, "invalid theory '" + name + "': " + joined);
  }
  return th;
}

const Definition* ProofScript::find(const std::string& name) const {
  for (const auto& d : defs)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

Theory select_theory(const std::string& selector, const std::string& base_dir) {
  if (selector == "izf-r-minus") return izf_r_minus();
  if (selector == "nonwf") return nonwf_theory();
  std::filesystem::path path(selector);
  if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
  std::ifstream in(path);
  if (!in)
    throw ParseError(1, 1, "cannot open theory file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str(), path.stem().string());
}

}  // namespace

ProofScript parse_script(const std::string& source,
                         const std::string& base_dir) {
  ProofScript script;
  script.theory_selector = "izf-r-minus";

  // The theory selector is line-based (names may contain '-' or '/', which
  // the lexer rejects), so it is read and blanked out before lexing.
  std::string lex_source = source;
  {
    std::istringstream is(source);
    std::string line;
    size_t offset = 0;
    while (std::getline(is, line)) {
      size_t start = line.find_first_not_of(" \t");
      if (start == std::string::npos || line[start] == '#') {
        offset += line.size() + 1;
        continue;
      }
      if (line.compare(start, 7, "theory ") == 0) {
        std::string rest = line.substr(start + 7);
        size_t b = rest.find_first_not_of(" \t");
        size_t e = rest.find_last_not_of(" \t\r");
        if (b == std::string::npos)
          throw ParseError(1, 1, "missing theory selector");
        script.theory_selector = rest.substr(b, e - b + 1);
        for (size_t i = offset;
             i < offset + line.size() && i < lex_source.size(); ++i)
          lex_source[i] = ' ';
      }
      break;  // only a leading declaration counts
    }
  }
  script.theory = select_theory(script.theory_selector, base_dir);
  script.env.theory = &script.theory;

  Parser p(Lexer(lex_source).run(), script.env);

  NameSet names;
  while (!p.at_end()) {
    if (p.eat_word("def")) {
      std::string name = p.name();
      if (!names.insert(name).second)
        throw p.error("duplicate definition '" + name + "'");
      p.expect_symbol(":=");

      // The kind of a definition body is inferred: formula, then set term,
      // then proof term. A candidate parse must stop at the next
      // declaration keyword.
      size_t start = p.position();
      auto at_boundary = [&] {
        return p.at_end() || p.at_word("def") || p.at_word("check") ||
               p.at_word("synth");
      };
      Definition d;
      d.name = name;
      bool done = false;
      size_t best_pos = start;
      std::string best_err = "definition body does not parse";
      auto attempt = [&](Definition::Kind kind) {
        if (done) return;
        p.rewind(start);
        try {
          switch (kind) {
            case Definition::Kind::Formula:
              d.formula = p.formula();
              break;
            case Definition::Kind::Term:
              d.term = p.term();
              break;
            case Definition::Kind::Proof:
              d.proof = p.proof();
              break;
          }
          if (!at_boundary()) throw p.error("unexpected trailing input");
          d.kind = kind;
          done = true;
        } catch (const ParseError& e) {
          if (p.position() >= best_pos) {
            best_pos = p.position();
            best_err = e.what();
          }
        }
      };
      attempt(Definition::Kind::Formula);
      attempt(Definition::Kind::Term);
      attempt(Definition::Kind::Proof);
      if (!done) throw ParseError(p.peek().line, p.peek().col, best_err);

      switch (d.kind) {
        case Definition::Kind::Formula:
          script.env.formulas.emplace(name, d.formula);
          break;
        case Definition::Kind::Term:
          script.env.terms.emplace(name, d.term);
          break;
        case Definition::Kind::Proof:
          script.env.proofs.emplace(name, d.proof);
          break;
      }
      script.defs.push_back(std::move(d));
    } else if (p.eat_word("check")) {
      std::string name = p.name();
      p.expect_symbol(":");
      FormulaPtr goal = p.formula();
      script.judgments.push_back({Judgment::Mode::Check, name, goal});
    } else if (p.eat_word("synth")) {
      std::string name = p.name();
      script.judgments.push_back({Judgment::Mode::Synth, name, nullptr});
    } else {
      throw p.error("expected 'def', 'check' or 'synth'");
    }
  }
  for (const auto& j : script.judgments)
    if (!script.env.proofs.count(j.name))
      throw ParseError(1, 1, "judgment references unknown proof '" + j.name +
                                 "'");
  return script;
}

}  // namespace lz
