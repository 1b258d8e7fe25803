#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nlogic/frame.hpp"

namespace nlogic {

// Sorted first-order frame language. Terms are sorted individual variables;
// atoms are the frame relations, their Galois duals, the specialization
// orders, U-membership and second-order predicate applications (the latter
// only appear in guarded translations, never in finished correspondents).
enum class FoKind { True, False, Atom, Not, And, Or, Implies, Iff, Forall, Exists, ForallP };
enum class FoAtomKind { Leq, I, Gap, U, T, R, S, Tp, Rp, Sp, Pred, StableGuard };

struct Fo;
using FoPtr = std::shared_ptr<const Fo>;

struct Fo {
  FoKind kind = FoKind::True;
  // Atom payload
  FoAtomKind atom = FoAtomKind::Leq;
  std::vector<int> args;   // variable ids
  Sort atom_sort = Sort::One;  // for Leq (which sort's order); for Pred/StableGuard
  int pred = -1;               // predicate variable id for Pred/StableGuard/ForallP
  // Structure
  std::vector<FoPtr> kids;  // And / Or
  FoPtr a, b;               // Not(a), Implies(a,b), Iff(a,b)
  int bvar = -1;            // bound variable id (Forall/Exists)
  Sort bsort = Sort::One;
  FoPtr body;
};

FoPtr fo_true();
FoPtr fo_false();
FoPtr fo_atom(FoAtomKind k, std::vector<int> args, Sort s = Sort::One, int pred = -1);
FoPtr fo_not(FoPtr a);
FoPtr fo_and(std::vector<FoPtr> kids);
FoPtr fo_or(std::vector<FoPtr> kids);
FoPtr fo_implies(FoPtr a, FoPtr b);
FoPtr fo_iff(FoPtr a, FoPtr b);
FoPtr fo_forall(int var, Sort s, FoPtr body);
FoPtr fo_exists(int var, Sort s, FoPtr body);
FoPtr fo_forall_pred(int pred, Sort s, FoPtr body);

// Variable sorts are tracked externally by the builder; the printer derives
// display names from a per-sort pool in order of first occurrence.
std::string fo_print(const FoPtr& f);

// Constant folding, And/Or flattening, child sorting, canonical binder
// renaming. Output of fo_normalize printed with fo_print is the documented
// normal form used for golden comparisons.
FoPtr fo_normalize(const FoPtr& f);

bool fo_is_first_order(const FoPtr& f);  // no Pred/ForallP/StableGuard left
std::vector<char> fo_relations(const FoPtr& f);  // which of T,R,S,U,I appear

struct FoCheck {
  bool holds = true;
  std::string witness;
};

// Tarskian evaluation over a finite frame; formula must be closed and
// first-order. On failure the witness lists a falsifying assignment for the
// outermost universal prefix.
FoCheck fo_model_check(const SortedFrame& f, const FoPtr& formula);

}  // namespace nlogic
