#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlogic/fo.hpp"
#include "nlogic/formula.hpp"
#include "nlogic/frame_axioms.hpp"
#include "nlogic/modal.hpp"
#include "nlogic/semantics.hpp"
#include "nlogic/translate.hpp"

namespace nlogic {

// A system of formal inequalities: stability constraints Q''≤Q, change-of-
// variable constraints Q=P', and one main inequality with a sort tag.
struct StbConstraint {
  int var;
  Sort sort;
};

struct CvcConstraint {
  int qvar;   // fresh variable, same sort as P'
  int pvar;   // original variable
  Sort psort; // sort of P (Q lives in the opposite sort)
  Sort qsort() const { return opp(psort); }
};

struct InequalitySystem {
  std::vector<StbConstraint> stb;
  std::vector<CvcConstraint> cvc;
  MTermPtr lhs, rhs;
  Sort sort = Sort::One;

  bool constrained(int var, Sort s) const;
  std::string to_string() const;
};

InequalitySystem to_system(const SortedSequent& seq);

struct ReductionStep {
  std::string rule;
  std::string note;
  InequalitySystem before, after;
};

struct Reduction {
  bool ok = false;
  InequalitySystem system;
  std::vector<ReductionStep> trace;
  std::string failure;
};

// One deterministic rule application; position selects among the applicable
// spots in a fixed traversal order. Throws RuleNotApplicable.
InequalitySystem apply_rule(const InequalitySystem& sys, const std::string& rule_id,
                            int position = 0);

bool is_canonical_form(const InequalitySystem& sys);

// Bounded backtracking search over rule applications (R5 rewrites run to a
// fixpoint between structural moves).
Reduction reduce(const InequalitySystem& sys, int depth_limit = 64);

// Step 3: second-order guarded translation, stability guards included.
FoPtr guarded_translation(const InequalitySystem& sys);

struct CorrespondentResult {
  FoPtr formula;              // normalized, first-order
  std::string text;           // printed normal form
  bool used_del_instantiation = false;
  bool used_least_instantiation = false;  // a variable without antecedent witnesses
};

// Steps 4-6 for a system in canonical Sahlqvist form: pull antecedent
// existentials, instantiate each predicate by the principal upset of its
// witnesses, β-reduce, then simplify. Starred classes strengthen the right
// side by erasing even-depth double primes first; (M)-classes additionally
// absorb order-bounded witnesses into relation atoms.
CorrespondentResult compute_correspondent(const InequalitySystem& sys,
                                          const FrameClassSpec& cls);

enum class SidePolicy { Auto, Translate, Cotranslate };

struct CorrespondenceRun {
  bool ok = false;
  std::string error;
  std::string side;  // translate / cotranslate
  TransMode mode = TransMode::TRight;
  Reduction reduction;
  FoPtr guarded;
  CorrespondentResult result;
};

CorrespondenceRun correspond(const Sequent& seq, const std::string& class_id,
                             SidePolicy side = SidePolicy::Auto,
                             std::optional<TransMode> mode = std::nullopt,
                             int depth_limit = 64);

// Per-frame cross check: fo_model_check(correspondent) against brute-force
// sequent validity over stable valuations.
struct CorrespondenceDivergence {
  size_t frame_index;
  bool sequent_valid;
  bool correspondent_holds;
};

struct VerifyCorrespondenceReport {
  size_t frames_checked = 0;
  std::vector<CorrespondenceDivergence> divergences;
  bool ok() const { return divergences.empty(); }
};

VerifyCorrespondenceReport verify_correspondence(const std::vector<SortedFrame>& frames,
                                                 const Sequent& seq, const std::string& class_id,
                                                 const CorrespondenceRun& run);

// Empirical system equivalence on one frame: both main inequalities agree
// under every constraint-satisfying valuation of the variables involved.
bool systems_equivalent_on(const SortedFrame& f, const InequalitySystem& s1,
                           const InequalitySystem& s2);

}  // namespace nlogic
