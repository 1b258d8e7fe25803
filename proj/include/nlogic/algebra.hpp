#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlogic/bits.hpp"

namespace nlogic {

enum class AlgKind { Poset, MeetSemilattice, Lattice };

std::string to_string(AlgKind k);

struct AlgebraError : std::runtime_error {
  std::string code;  // AntisymmetryViolation, OperatorTypeViolation, ...
  AlgebraError(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// A finite bounded-above poset / semilattice / lattice with a residuated-style
// implication table, optionally a product and a left implication, and an
// optional unit element e with  a <= b  iff  e <= a->b.
struct OrderedAlgebra {
  std::vector<std::string> names;
  int n = 0;
  std::vector<Bits> up;    // up[a]   = { b : a <= b }
  std::vector<Bits> down;  // down[a] = { b : b <= a }
  AlgKind kind = AlgKind::Poset;         // as declared; drives the axiom set
  AlgKind actual_kind = AlgKind::Poset;  // strongest kind the carrier satisfies

  std::vector<std::vector<int>> imp;
  std::optional<std::vector<std::vector<int>>> prod;
  std::optional<std::vector<std::vector<int>>> limp;

  int unit = -1;  // -1 when absent
  int top = -1;
  int bottom = -1;

  // meet/join tables; entry -1 when the bound does not exist
  std::vector<std::vector<int>> meet;
  std::vector<std::vector<int>> join;

  bool leq(int a, int b) const { return has(up[a], b); }
  bool has_unit() const { return unit >= 0; }
  bool has_prod() const { return prod.has_value(); }
  bool has_limp() const { return limp.has_value(); }
  int element(const std::string& name) const;
  std::string describe() const;
};

// Raw, unchecked description as read from the text format.
struct RawAlgebra {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;  // cover or full pairs
  std::string kind = "poset";
  std::string unit;  // empty when absent
  std::vector<std::tuple<std::string, std::string, std::string>> imp, prod, limp;
};

RawAlgebra parse_algebra_text(const std::string& text);
OrderedAlgebra validate_algebra(const RawAlgebra& raw);
OrderedAlgebra load_algebra_file(const std::string& path);

// Filters (downward-directed upsets) and ideals (upward-directed downsets),
// listed in canonical order. Generators recorded for principal members.
struct DirectedSets {
  std::vector<Bits> members;
  std::vector<int> generator;  // -1 when not principal
};

bool is_filter(const OrderedAlgebra& a, Bits s, bool allow_empty = false);
bool is_ideal(const OrderedAlgebra& a, Bits s, bool allow_empty = false);
DirectedSets enumerate_filters(const OrderedAlgebra& a, bool allow_empty = false);
DirectedSets enumerate_ideals(const OrderedAlgebra& a, bool allow_empty = false);

// Point operators on filters/ideals.
//   tright(x, v) = down-closure of { a->b : a in x, b in v }   (an ideal)
//   tleft(v, x)  = down-closure of { b<-a : a in x, b in v }   (an ideal)
//   circ(x, z)   = up-closure   of { a∘b  : a in x, b in z }   (a filter)
Bits point_tright(const OrderedAlgebra& a, Bits filter_x, Bits ideal_v);
Bits point_tleft(const OrderedAlgebra& a, Bits ideal_v, Bits filter_x);
Bits point_circ(const OrderedAlgebra& a, Bits filter_x, Bits filter_z);

Bits principal_filter(const OrderedAlgebra& a, int e);
Bits principal_ideal(const OrderedAlgebra& a, int e);

int max_carrier();  // soft limit, NLOGIC_MAX_CARRIER overrides (default 12)

}  // namespace nlogic
