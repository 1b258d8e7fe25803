#pragma once

#include <cstdint>
#include <vector>

#include "nlogic/algebra.hpp"
#include "nlogic/frame.hpp"

namespace nlogic {

// Deterministic xorshift generator so every sampled family is reproducible.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// Classical frame of a finite unital magma: both carriers are the magma,
// I is the identity, R is the graph of the product, and T, S are the
// relations making the residuation equivalences hold definitionally.
SortedFrame magma_frame(const std::vector<std::vector<int>>& table, int unit);

// Every ≤3-element residuated unital partial-order groupoid, found by brute
// force over the bounded-above posets of that size; returned as algebras.
std::vector<OrderedAlgebra> small_residuated_algebras();

// Seeded family of frames satisfying the LK_* axioms, at most `max_points`
// points per sort: random unital magma frames plus the canonical frames of
// the small residuated algebras. Each returned frame is checker-verified.
std::vector<SortedFrame> sample_lk_frames(std::uint64_t seed, size_t count, int max_points = 3);

// Random frames (arbitrary I, T and optionally R/S, stable U) for the
// full-abstraction and property tests.
SortedFrame random_frame(Rng& rng, int max_per_sort, bool with_r, bool with_s);

}  // namespace nlogic
