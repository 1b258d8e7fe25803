#include "nlogic/frame.hpp"

#include <algorithm>

namespace nlogic {

void SortedFrame::finish() {
  if (n1 <= 0 || nD <= 0) throw FrameError("EmptyCarrier", "both sorts must be nonempty");
  if (n1 > 64 || nD > 64) throw FrameError("CarrierTooLarge", "at most 64 points per sort");
  if (names1.empty())
    for (int i = 0; i < n1; ++i) names1.push_back("x" + std::to_string(i));
  if (namesD.empty())
    for (int i = 0; i < nD; ++i) namesD.push_back("y" + std::to_string(i));
  irow.resize(n1, 0);
  icol.assign(nD, 0);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < nD; ++y)
      if (has(irow[x], y)) icol[y] |= bit(x);

  spec_up1_.assign(n1, 0);
  for (int a = 0; a < n1; ++a) {
    Bits pa = prime(Sort::One, bit(a));
    for (int b = 0; b < n1; ++b)
      if (subset(pa, prime(Sort::One, bit(b)))) spec_up1_[a] |= bit(b);
  }
  spec_upD_.assign(nD, 0);
  for (int a = 0; a < nD; ++a) {
    Bits pa = prime(Sort::Del, bit(a));
    for (int b = 0; b < nD; ++b)
      if (subset(pa, prime(Sort::Del, bit(b)))) spec_upD_[a] |= bit(b);
  }
}

Bits SortedFrame::prime(Sort of, Bits xs) const {
  if (of == Sort::One) {
    Bits out = full(Sort::Del);
    for (int x : members(xs)) out &= ~irow[x];
    return out & full(Sort::Del);
  }
  Bits out = full(Sort::One);
  for (int y : members(xs)) out &= ~icol[y];
  return out & full(Sort::One);
}

Bits SortedFrame::closure(Sort of, Bits xs) const { return prime(opp(of), prime(of, xs)); }

bool SortedFrame::leq(Sort of, int a, int b) const {
  return of == Sort::One ? has(spec_up1_[a], b) : has(spec_upD_[a], b);
}

Bits SortedFrame::gamma(Sort of, int a) const {
  return of == Sort::One ? spec_up1_[a] : spec_upD_[a];
}

bool SortedFrame::separated() const {
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b)
      if (a != b && leq(Sort::One, a, b) && leq(Sort::One, b, a)) return false;
  for (int a = 0; a < nD; ++a)
    for (int b = 0; b < nD; ++b)
      if (a != b && leq(Sort::Del, a, b) && leq(Sort::Del, b, a)) return false;
  return true;
}

bool SortedFrame::quasi_serial() const {
  for (int x = 0; x < n1; ++x)
    if (!irow[x]) return false;
  for (int y = 0; y < nD; ++y)
    if (!icol[y]) return false;
  return true;
}

bool SortedFrame::classical() const {
  if (n1 != nD) return false;
  for (int x = 0; x < n1; ++x)
    if (irow[x] != bit(x)) return false;
  return true;
}

std::vector<GaloisSet> SortedFrame::stable_sets(Sort of, int bound) const {
  int n = size(of);
  if (n > bound)
    throw FrameError("CarrierTooLarge", "stable-set enumeration over " + std::to_string(n) +
                                            " points exceeds bound " + std::to_string(bound));
  std::vector<Bits> found;
  Bits fullm = full(of);
  for (Bits s = 0;; ++s) {
    if (closure(of, s) == s) found.push_back(s);
    if (s == fullm) break;
  }
  std::sort(found.begin(), found.end(), lex_less);
  std::vector<GaloisSet> out;
  out.reserve(found.size());
  for (Bits s : found) out.push_back({of, s, true});
  return out;
}

const std::vector<std::vector<Bits>>& SortedFrame::sec(char rel) const {
  switch (rel) {
    case 'T':
      if (!has_t) throw FrameError("MissingRelation", "frame has no T relation");
      return t_sec;
    case 'R':
      if (!has_r) throw FrameError("MissingRelation", "frame has no R relation");
      return r_sec;
    case 'S':
      if (!has_s) throw FrameError("MissingRelation", "frame has no S relation");
      return s_sec;
  }
  throw FrameError("MissingRelation", std::string("unknown relation ") + rel);
}

Bits SortedFrame::dual_sec(char rel, int i, int j) const {
  // Output coordinates: T and S sections live in W∂, R sections in W1.
  Sort out_sort = rel == 'R' ? Sort::One : Sort::Del;
  return prime(out_sort, sec(rel)[i][j]);
}

Bits SortedFrame::im_tright(Bits xs1, Bits ysD) const {
  Bits out = 0;
  for (int x : members(xs1))
    for (int v : members(ysD)) out |= sec('T')[x][v];
  return out;
}

Bits SortedFrame::im_odot(Bits xs1, Bits zs1) const {
  Bits out = 0;
  for (int x : members(xs1))
    for (int z : members(zs1)) out |= sec('R')[x][z];
  return out;
}

Bits SortedFrame::im_tleft(Bits ysD, Bits xs1) const {
  Bits out = 0;
  for (int v : members(ysD))
    for (int x : members(xs1)) out |= sec('S')[v][x];
  return out;
}

Bits SortedFrame::ss_imp(Bits a, Bits c) const {
  return prime(Sort::Del, im_tright(a, prime(Sort::One, c)));
}

Bits SortedFrame::ss_prod(Bits a, Bits f) const { return closure(Sort::One, im_odot(a, f)); }

Bits SortedFrame::ss_limp(Bits c, Bits a) const {
  return prime(Sort::Del, im_tleft(prime(Sort::One, c), a));
}

Bits SortedFrame::upper_bound_sec(int x, int z) const {
  return spec_up1_[x] & spec_up1_[z];
}

}  // namespace nlogic
