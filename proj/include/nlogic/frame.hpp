#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlogic/bits.hpp"

namespace nlogic {

enum class Sort { One, Del };  // 1 and ∂

inline Sort opp(Sort s) { return s == Sort::One ? Sort::Del : Sort::One; }
inline const char* sort_name(Sort s) { return s == Sort::One ? "1" : "d"; }

struct FrameError : std::runtime_error {
  std::string code;
  FrameError(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct GaloisSet {
  Sort sort = Sort::One;
  Bits members = 0;
  bool stable = false;
};

// A two-sorted polarity frame: carriers W1 and W∂, incidence relation I,
// optional distinguished stable set U and typed ternary relations
//   T ⊆ W∂ × (W1 × W∂),  R ⊆ W1 × (W1 × W1),  S ⊆ W∂ × (W∂ × W1).
// Relations are stored as dense section tables: t_sec[x][v] is a subset of
// W∂ (the output coordinate), and so on. The Galois relation is the
// complement of I.
struct SortedFrame {
  int n1 = 0, nD = 0;
  std::vector<std::string> names1, namesD;
  std::vector<Bits> irow;  // irow[x] over W∂
  std::vector<Bits> icol;  // icol[y] over W1

  bool has_u = false;
  Bits u = 0;

  bool has_t = false, has_r = false, has_s = false;
  std::vector<std::vector<Bits>> t_sec;  // [x∈W1][v∈W∂] → ⊆ W∂
  std::vector<std::vector<Bits>> r_sec;  // [x∈W1][z∈W1] → ⊆ W1
  std::vector<std::vector<Bits>> s_sec;  // [v∈W∂][x∈W1] → ⊆ W∂

  std::string class_tag;

  int size(Sort s) const { return s == Sort::One ? n1 : nD; }
  Bits full(Sort s) const { return mask(size(s)); }
  const std::vector<std::string>& names(Sort s) const {
    return s == Sort::One ? names1 : namesD;
  }

  void finish();  // recompute caches after carriers/relations are set

  bool incident(int x, int y) const { return has(irow[x], y); }   // xIy
  bool gapped(int x, int y) const { return !incident(x, y); }     // x⫫y

  // Galois maps, closure, stability.
  Bits prime(Sort of, Bits xs) const;           // result lives in opp(of)
  Bits closure(Sort of, Bits xs) const;         // double prime
  bool is_stable(Sort of, Bits xs) const { return closure(of, xs) == xs; }
  GaloisSet close(Sort of, Bits xs) const { return {of, closure(of, xs), true}; }

  // Specialization preorder u ≤ w  iff  {u}' ⊆ {w}'.
  bool leq(Sort of, int a, int b) const;
  Bits gamma(Sort of, int a) const;  // {w : a ≤ w} = closure of {a}
  bool separated() const;
  bool quasi_serial() const;
  bool classical() const;  // same carriers, I = identity

  std::vector<GaloisSet> stable_sets(Sort of, int bound = 14) const;

  // Relation access with presence checks.
  const std::vector<std::vector<Bits>>& sec(char rel) const;
  Bits dual_sec(char rel, int i, int j) const;  // Galois dual section (R'ij)

  // Sorted image operators from the relation tables.
  Bits im_tright(Bits xs1, Bits ysD) const;  // X ▷ Y ⊆ W∂
  Bits im_odot(Bits xs1, Bits zs1) const;    // X ⊙ Z ⊆ W1
  Bits im_tleft(Bits ysD, Bits xs1) const;   // Y ⊲ X ⊆ W∂

  // Single-sorted (stable-set) operators on sort 1.
  Bits ss_imp(Bits a, Bits c) const;   // A ⇒ C = (A ▷ C')'
  Bits ss_prod(Bits a, Bits f) const;  // A ⊙̄ F = (A ⊙ F)''
  Bits ss_limp(Bits c, Bits a) const;  // C ⇐ A = (C' ⊲ A)'

  // Upper-bound relation section {u : x≤u and z≤u} on sort 1.
  Bits upper_bound_sec(int x, int z) const;

 private:
  std::vector<Bits> spec_up1_, spec_upD_;  // gamma caches
};

}  // namespace nlogic
