#pragma once

#include "nlogic/fo.hpp"
#include "nlogic/formula.hpp"
#include "nlogic/modal.hpp"

namespace nlogic {

// Implication translation style: TRight uses the ▷-form
// (φ⊸ψ)• = (φ•▷ψ∘)', Residual uses (φ⊸ψ)• = φ•⊸ψ• (only meaningful on
// frames carrying the product relation).
enum class TransMode { TRight, Residual };

struct Translated {
  MTermPtr bullet;  // sort 1
  MTermPtr circ;    // sort ∂
};

Translated translate(const FormulaPtr& f, TransMode mode = TransMode::TRight);

struct SortedSequent {
  MTermPtr lhs, rhs;
  Sort sort;  // 1-sequent or ∂-sequent
};

SortedSequent translate_sequent(const Sequent& s, TransMode mode);     // φ• ⊢ ψ•
SortedSequent cotranslate_sequent(const Sequent& s, TransMode mode);   // ψ∘ ⊢∂ φ∘

// Standard translation of a sorted modal term at a chosen free point
// variable. Fresh individual variables are drawn from the supplied counter;
// predicate variable k of sort s appears as the Pred atom (k, s).
FoPtr standard_translation(const MTermPtr& t, int point_var, int& fresh);

// Universally closes all predicate variables and the free point variable.
FoPtr second_order_translation(const MTermPtr& t, Sort point_sort);

}  // namespace nlogic
