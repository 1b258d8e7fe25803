#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlogic {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Object-language formulas:
//   φ ::= p | top | bot | t | φ & φ | φ "|" φ | φ * φ | φ -> φ | φ <- φ
// with  *  binding tighter than  &,|  which bind tighter than  ->,<-.
// -> is right-associative, <- left-associative. ψ <- φ is "ψ given φ"
// (the left residual of *).
enum class FKind { Var, Top, Bot, Unit, And, Or, Imp, Limp, Prod };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FKind kind;
  int var = -1;  // Var
  FormulaPtr a, b;

  static FormulaPtr mk_var(int i);
  static FormulaPtr mk(FKind k);
  static FormulaPtr mk(FKind k, FormulaPtr x, FormulaPtr y);
};

struct Sequent {
  FormulaPtr lhs, rhs;
};

// Variable names are interned globally in order of first appearance; the
// table maps names to indices used by valuations and by the translations.
struct VarTable {
  std::vector<std::string> names;
  int intern(const std::string& name);
  int find(const std::string& name) const;  // -1 when absent
};

FormulaPtr parse_formula(const std::string& text, VarTable& vars);
Sequent parse_sequent(const std::string& text, VarTable& vars);
std::string print_formula(const FormulaPtr& f, const VarTable& vars);
std::string print_sequent(const Sequent& s, const VarTable& vars);

bool equal(const FormulaPtr& x, const FormulaPtr& y);
int formula_depth(const FormulaPtr& f);
std::vector<int> formula_vars(const FormulaPtr& f);

}  // namespace nlogic
