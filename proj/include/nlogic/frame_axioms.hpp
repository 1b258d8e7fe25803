#pragma once

#include <string>
#include <vector>

#include "nlogic/frame.hpp"

namespace nlogic {

struct AxiomResult {
  std::string id;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct FrameClassReport {
  std::string class_id;
  std::vector<AxiomResult> axioms;
  bool all_pass() const {
    for (auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }
};

// Frame classes and the axioms each one names. A class may be "starred"
// (its unit/structural axioms are the strengthened no-closure forms) and may
// assume the relation-monotonicity axiom (M); the correspondence engine keys
// its simplifications off these two flags.
struct FrameClassSpec {
  std::string id;
  std::vector<char> relations;     // which of T,R,S the class mentions
  std::vector<std::string> axioms; // axiom ids, checked in order
  bool starred = false;
  bool monotone = false;
};

const std::vector<FrameClassSpec>& frame_classes();
const FrameClassSpec& frame_class(const std::string& id);

// Run one named axiom; known ids include F1(T),F1(R),F1(S), M(T),M(R),M(S),
// RES, U, Ustar, U1, U2, U*2, U_*2, F2, F2.1, F2.2, F3.1, F3.2, F3*.1, F3*.2,
// F3_*.1, F3_*.2, F3, F3a, F3b, quasi-serial, separated, classical,
// dist-section.
AxiomResult check_axiom(const SortedFrame& f, const std::string& id);

FrameClassReport check_frame_class(const SortedFrame& f, const std::string& class_id);

// Display form of an axiom as a first-order-style formula (used for report
// text and for the emitted correspondents of the residuation and unit rules).
std::string axiom_formula(const std::string& id);

}  // namespace nlogic
