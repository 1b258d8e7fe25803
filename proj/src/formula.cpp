#include "nlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace nlogic {

FormulaPtr Formula::mk_var(int i) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Var;
  f->var = i;
  return f;
}

FormulaPtr Formula::mk(FKind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}

FormulaPtr Formula::mk(FKind k, FormulaPtr x, FormulaPtr y) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->a = std::move(x);
  f->b = std::move(y);
  return f;
}

int VarTable::intern(const std::string& name) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  names.push_back(name);
  return static_cast<int>(names.size()) - 1;
}

int VarTable::find(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

struct Token {
  enum Kind { Ident, Top, Bot, Unit, Amp, Pipe, Star, Arrow, LArrow, LPar, RPar, Turnstile, End };
  Kind kind;
  std::string text;
  size_t pos;
};

struct Lexer {
  const std::string& s;
  size_t i = 0;
  explicit Lexer(const std::string& text) : s(text) {}

  Token next() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    if (i >= s.size()) return {Token::End, "", start};
    char c = s[i];
    if (c == '(') return ++i, Token{Token::LPar, "(", start};
    if (c == ')') return ++i, Token{Token::RPar, ")", start};
    if (c == '&') return ++i, Token{Token::Amp, "&", start};
    if (c == '*') return ++i, Token{Token::Star, "*", start};
    if (c == '|') {
      if (i + 1 < s.size() && s[i + 1] == '-') return i += 2, Token{Token::Turnstile, "|-", start};
      return ++i, Token{Token::Pipe, "|", start};
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>')
      return i += 2, Token{Token::Arrow, "->", start};
    if (c == '<' && i + 1 < s.size() && s[i + 1] == '-')
      return i += 2, Token{Token::LArrow, "<-", start};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string word = s.substr(i, j - i);
      i = j;
      if (word == "top") return {Token::Top, word, start};
      if (word == "bot") return {Token::Bot, word, start};
      if (word == "t") return {Token::Unit, word, start};
      return {Token::Ident, word, start};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }
};

struct Parser {
  Lexer lex;
  VarTable& vars;
  Token tok;
  Parser(const std::string& text, VarTable& v) : lex(text), vars(v) { tok = lex.next(); }

  void advance() { tok = lex.next(); }

  FormulaPtr atom() {
    switch (tok.kind) {
      case Token::Top: advance(); return Formula::mk(FKind::Top);
      case Token::Bot: advance(); return Formula::mk(FKind::Bot);
      case Token::Unit: advance(); return Formula::mk(FKind::Unit);
      case Token::Ident: {
        int v = vars.intern(tok.text);
        advance();
        return Formula::mk_var(v);
      }
      case Token::LPar: {
        advance();
        auto f = implication();
        if (tok.kind != Token::RPar) throw ParseError("expected ')'", tok.pos);
        advance();
        return f;
      }
      default: throw ParseError("expected a formula", tok.pos);
    }
  }

  FormulaPtr product() {
    auto f = atom();
    while (tok.kind == Token::Star) {
      advance();
      f = Formula::mk(FKind::Prod, f, atom());
    }
    return f;
  }

  FormulaPtr junction() {
    auto f = product();
    while (tok.kind == Token::Amp || tok.kind == Token::Pipe) {
      bool conj = tok.kind == Token::Amp;
      advance();
      f = Formula::mk(conj ? FKind::And : FKind::Or, f, product());
    }
    return f;
  }

  FormulaPtr implication() {
    auto f = junction();
    if (tok.kind == Token::Arrow) {
      advance();
      return Formula::mk(FKind::Imp, f, implication());  // right-associative
    }
    while (tok.kind == Token::LArrow) {
      advance();
      f = Formula::mk(FKind::Limp, f, junction());  // left-associative
    }
    return f;
  }
};

int level(FKind k) {
  switch (k) {
    case FKind::Imp:
    case FKind::Limp: return 0;
    case FKind::And:
    case FKind::Or: return 1;
    case FKind::Prod: return 2;
    default: return 3;
  }
}

void print_rec(const FormulaPtr& f, const VarTable& vars, int outer, std::string& out) {
  int lv = level(f->kind);
  bool paren = lv < outer || (lv == outer && lv == 0);
  if (paren) out += "(";
  switch (f->kind) {
    case FKind::Var: out += vars.names[f->var]; break;
    case FKind::Top: out += "top"; break;
    case FKind::Bot: out += "bot"; break;
    case FKind::Unit: out += "t"; break;
    case FKind::And:
    case FKind::Or:
    case FKind::Prod:
    case FKind::Imp:
    case FKind::Limp: {
      const char* op = f->kind == FKind::And    ? " & "
                       : f->kind == FKind::Or   ? " | "
                       : f->kind == FKind::Prod ? " * "
                       : f->kind == FKind::Imp  ? " -> "
                                                : " <- ";
      // Children print one level up so mixed chains re-parenthesize.
      print_rec(f->a, vars, f->kind == FKind::Imp ? lv + 1 : lv, out);
      out += op;
      print_rec(f->b, vars, f->kind == FKind::Imp ? lv : lv + 1, out);
      break;
    }
  }
  if (paren) out += ")";
}

}  // namespace

FormulaPtr parse_formula(const std::string& text, VarTable& vars) {
  Parser p(text, vars);
  auto f = p.implication();
  if (p.tok.kind != Token::End) throw ParseError("trailing input", p.tok.pos);
  return f;
}

Sequent parse_sequent(const std::string& text, VarTable& vars) {
  Parser p(text, vars);
  auto lhs = p.implication();
  if (p.tok.kind != Token::Turnstile) throw ParseError("expected '|-'", p.tok.pos);
  p.advance();
  auto rhs = p.implication();
  if (p.tok.kind != Token::End) throw ParseError("trailing input", p.tok.pos);
  return {lhs, rhs};
}

std::string print_formula(const FormulaPtr& f, const VarTable& vars) {
  std::string out;
  print_rec(f, vars, -1, out);
  return out;
}

std::string print_sequent(const Sequent& s, const VarTable& vars) {
  return print_formula(s.lhs, vars) + " |- " + print_formula(s.rhs, vars);
}

bool equal(const FormulaPtr& x, const FormulaPtr& y) {
  if (x->kind != y->kind || x->var != y->var) return false;
  if (x->a && (!y->a || !equal(x->a, y->a))) return false;
  if (x->b && (!y->b || !equal(x->b, y->b))) return false;
  return (x->a == nullptr) == (y->a == nullptr) && (x->b == nullptr) == (y->b == nullptr);
}

int formula_depth(const FormulaPtr& f) {
  int d = 0;
  if (f->a) d = std::max(d, 1 + formula_depth(f->a));
  if (f->b) d = std::max(d, 1 + formula_depth(f->b));
  return d;
}

std::vector<int> formula_vars(const FormulaPtr& f) {
  std::set<int> seen;
  std::vector<FormulaPtr> stack = {f};
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    if (cur->kind == FKind::Var) seen.insert(cur->var);
    if (cur->a) stack.push_back(cur->a);
    if (cur->b) stack.push_back(cur->b);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace nlogic
