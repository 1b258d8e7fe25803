#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlogic/formula.hpp"
#include "nlogic/frame.hpp"
#include "nlogic/modal.hpp"
#include "nlogic/translate.hpp"

namespace nlogic {

// Object-language model: stable valuation per propositional variable.
// Loading a valuation closes non-stable inputs (with a note).
struct ObjectModel {
  const SortedFrame* frame = nullptr;
  std::map<int, Bits> val;  // var -> stable subset of W1
  std::vector<std::string> notes;

  void set(int var, Bits subset);  // closes and records a note when needed
  Bits get(int var) const;         // unset variables read as the least stable set
};

struct Extent {
  Bits extent = 0;     // ⊆ W1
  Bits co_extent = 0;  // ⊆ W∂, always the Galois image of extent
};

Extent eval_object(const ObjectModel& m, const FormulaPtr& f);

struct SequentCheck {
  bool holds = true;
  int witness = -1;  // sort-1 point in lhs extent missing from rhs extent
};

SequentCheck check_sequent(const ObjectModel& m, const Sequent& s);

struct ValidityResult {
  bool valid = true;
  std::map<int, Bits> counter_valuation;
  int witness = -1;
  long long assignments = 0;
};

// Quantifies check_sequent over every assignment of enumerated stable sets to
// the sequent's variables. Throws SearchSpaceTooLarge past the bound.
ValidityResult check_validity(const SortedFrame& f, const Sequent& s, int max_vars = 8,
                              long long max_assignments = 1000000);

// Sorted modal model: arbitrary subsets per sorted variable.
struct SortedModel {
  const SortedFrame* frame = nullptr;
  std::map<int, Bits> val1, valD;

  Bits get(int var, Sort s) const;
};

Bits eval_sorted(const SortedModel& m, const MTermPtr& t);

// Full abstraction of the translation: the object model induced by
// V̄(p) = V1(P_p)'' gives ⟦φ•⟧ = ⟦φ⟧ = ⟦(φ∘)'⟧ = ⟦(φ•)''⟧ and the co-extent
// analogues, and the three sequent readings agree.
struct FullAbstractionReport {
  bool extents_ok = true, coextents_ok = true, sequents_ok = true;
  std::string detail;
};

FullAbstractionReport check_full_abstraction(const SortedFrame& f, const FormulaPtr& phi,
                                             const SortedModel& sorted_val);
FullAbstractionReport check_full_abstraction_sequent(const SortedFrame& f, const Sequent& s,
                                                     const SortedModel& sorted_val);

// Valuation file format: one `p1: x0 x2` line per variable.
ObjectModel load_valuation(const SortedFrame& f, const std::string& text, VarTable& vars);

}  // namespace nlogic
