#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace nlogic {

// Finite subsets of a carrier with at most 64 points, one bit per point.
using Bits = std::uint64_t;

inline Bits bit(int i) { return Bits{1} << i; }
inline bool has(Bits s, int i) { return (s >> i) & 1; }
inline Bits mask(int n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }
inline int count(Bits s) { return std::popcount(s); }
inline bool subset(Bits a, Bits b) { return (a & ~b) == 0; }

inline std::vector<int> members(Bits s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

// Lexicographic order on ascending member lists. This is the canonical
// enumeration order used everywhere sets are listed in reports.
inline bool lex_less(Bits a, Bits b) {
  while (a || b) {
    if (!a) return true;
    if (!b) return false;
    int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

inline std::string set_to_string(Bits s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (int i : members(s)) {
    if (!first) out += ",";
    out += names[i];
    first = false;
  }
  return out + "}";
}

}  // namespace nlogic
