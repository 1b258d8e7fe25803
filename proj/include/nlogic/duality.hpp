#pragma once

#include <string>
#include <vector>

#include "nlogic/algebra.hpp"
#include "nlogic/frame.hpp"

namespace nlogic {

enum class Signature { Poset, Semilattice, Lattice, Lambek };

Signature default_signature(const OrderedAlgebra& a);
std::string to_string(Signature s);
Signature signature_from_string(const std::string& s);

// The dual frame of a finite ordered algebra: sort-1 points are the filters,
// sort-∂ points the ideals, I is disjointness, U the filters containing the
// unit (or the top, for integral algebras without a declared unit), and
//   yTxv iff ∀a,b (a∈x ∧ b∈v → a→b ∈ y)
//   uRxz iff ∀a,b (a∈x ∧ b∈z → a∘b ∈ u)
//   ySvx iff ∀a,b (a∈x ∧ b∈v → b←a ∈ y).
struct CanonicalFrame {
  SortedFrame frame;
  std::vector<Bits> filters;  // contents, indexed like frame sort-1 points
  std::vector<Bits> ideals;
  std::vector<int> filter_gen, ideal_gen;  // -1 when not principal
  Signature signature = Signature::Poset;
  std::string u_policy;  // how U was chosen, echoed in report headers

  int filter_index(Bits f) const;
  int ideal_index(Bits i) const;
  Bits alpha(const OrderedAlgebra& a, int elem) const;  // {x : elem ∈ x} ⊆ W1
  Bits eta(const OrderedAlgebra& a, int elem) const;    // {y : elem ∈ y} ⊆ W∂
};

CanonicalFrame canonical_frame(const OrderedAlgebra& a, Signature sig, bool allow_empty = false);

struct CheckLine {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string title;
  std::vector<CheckLine> lines;
  bool all_pass() const {
    for (auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

// α is an order embedding and a homomorphism for ->, and for ∘/<-/∧/∨ when
// present: α(a→b) = α(a)⇒α(b), α(a∘b) = (α(a)⊙α(b))'', etc.
VerifyReport verify_embedding(const OrderedAlgebra& a, const CanonicalFrame& cf);

// Δ1-density of the stable-set completion plus the compactness biconditional
// Γx ⊆ {y}'  iff  x ∩ y ≠ ∅.
VerifyReport verify_canonical_extension(const OrderedAlgebra& a, const CanonicalFrame& cf);

// ⇒ agrees with the π-extension of ->:
//   Γx ⇒π {y}' = ⋁{α(a→b) : a∈x, b∈y}, and A⇒C = ⋂{Γx ⇒π {y}' : x∈A, C⫫y}.
VerifyReport verify_pi_extension(const OrderedAlgebra& a, const CanonicalFrame& cf);

// Frame-class membership of the canonical frame for the classes matching the
// algebra's signature.
VerifyReport verify_canonical_class(const OrderedAlgebra& a, const CanonicalFrame& cf);
std::vector<std::string> classes_for_signature(const OrderedAlgebra& a, Signature sig);

}  // namespace nlogic
