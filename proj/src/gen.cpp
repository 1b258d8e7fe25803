#include "nlogic/gen.hpp"

#include <algorithm>
#include <set>

#include "nlogic/duality.hpp"
#include "nlogic/frame_axioms.hpp"
#include "nlogic/frame_io.hpp"

namespace nlogic {

SortedFrame magma_frame(const std::vector<std::vector<int>>& table, int unit) {
  int n = static_cast<int>(table.size());
  SortedFrame f;
  f.n1 = f.nD = n;
  for (int i = 0; i < n; ++i) {
    f.names1.push_back("m" + std::to_string(i));
    f.namesD.push_back("m" + std::to_string(i));
  }
  f.irow.assign(n, 0);
  for (int i = 0; i < n; ++i) f.irow[i] = bit(i);
  f.has_u = true;
  f.u = bit(unit);
  f.has_r = true;
  f.r_sec.assign(n, std::vector<Bits>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) f.r_sec[x][z] = bit(table[x][z]);
  // yTxv iff x·y = v ; ySvx iff y·x = v : exactly the relations whose Galois
  // duals satisfy the residuation equivalences on a classical frame.
  f.has_t = true;
  f.t_sec.assign(n, std::vector<Bits>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int v = 0; v < n; ++v)
      for (int y = 0; y < n; ++y)
        if (table[x][y] == v) f.t_sec[x][v] |= bit(y);
  f.has_s = true;
  f.s_sec.assign(n, std::vector<Bits>(n, 0));
  for (int v = 0; v < n; ++v)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (table[y][x] == v) f.s_sec[v][x] |= bit(y);
  f.class_tag = "LK_*";
  f.finish();
  return f;
}

namespace {

struct PosetShape {
  int n;
  std::vector<std::pair<int, int>> covers;  // a <= b
};

// The bounded-above posets with at most three elements (up to iso).
const std::vector<PosetShape>& small_posets() {
  static const std::vector<PosetShape> shapes = {
      {1, {}},
      {2, {{0, 1}}},
      {3, {{0, 1}, {1, 2}}},          // chain
      {3, {{0, 2}, {1, 2}}},          // two incomparable below a top
  };
  return shapes;
}

}  // namespace

std::vector<OrderedAlgebra> small_residuated_algebras() {
  std::vector<OrderedAlgebra> out;
  for (const auto& shape : small_posets()) {
    int n = shape.n;
    // Order matrices from the covers.
    std::vector<Bits> up(n);
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    for (auto& [a, b] : shape.covers) up[a] |= bit(b);
    for (bool ch = true; ch;) {
      ch = false;
      for (int i = 0; i < n; ++i)
        for (int j : members(up[i]))
          if ((up[i] | up[j]) != up[i]) {
            up[i] |= up[j];
            ch = true;
          }
    }
    auto leq = [&](int a, int b) { return has(up[a], b); };

    // All product tables; keep the residuated unital ones.
    std::vector<int> cells(n * n, 0);
    long long total = 1;
    for (int i = 0; i < n * n; ++i) total *= n;
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      for (int i = 0; i < n * n; ++i) {
        cells[i] = static_cast<int>(c % n);
        c /= n;
      }
      auto prod = [&](int a, int b) { return cells[a * n + b]; };
      int unit = -1;
      for (int e = 0; e < n && unit < 0; ++e) {
        bool id = true;
        for (int x = 0; x < n; ++x)
          if (prod(e, x) != x || prod(x, e) != x) id = false;
        if (id) unit = e;
      }
      if (unit < 0) continue;
      // Monotone in both arguments.
      bool mono = true;
      for (int a = 0; a < n && mono; ++a)
        for (int b = 0; b < n && mono; ++b)
          for (int a2 = 0; a2 < n && mono; ++a2)
            for (int b2 = 0; b2 < n && mono; ++b2)
              if (leq(a, a2) && leq(b, b2) && !leq(prod(a, b), prod(a2, b2))) mono = false;
      if (!mono) continue;
      // Residuals must exist: max{z : a∘z ≤ c} and max{z : z∘a ≤ c}.
      std::vector<std::vector<int>> imp(n, std::vector<int>(n, -1));
      std::vector<std::vector<int>> limp(n, std::vector<int>(n, -1));
      bool resid = true;
      for (int a = 0; a < n && resid; ++a)
        for (int c2 = 0; c2 < n && resid; ++c2) {
          Bits right = 0, left = 0;
          for (int z = 0; z < n; ++z) {
            if (leq(prod(a, z), c2)) right |= bit(z);
            if (leq(prod(z, a), c2)) left |= bit(z);
          }
          int rmax = -1, lmax = -1;
          for (int z : members(right)) {
            bool top_of = true;
            for (int w : members(right))
              if (!leq(w, z)) top_of = false;
            if (top_of) rmax = z;
          }
          for (int z : members(left)) {
            bool top_of = true;
            for (int w : members(left))
              if (!leq(w, z)) top_of = false;
            if (top_of) lmax = z;
          }
          if (rmax < 0 || lmax < 0) {
            resid = false;
          } else {
            imp[a][c2] = rmax;    // a -> c
            limp[c2][a] = lmax;   // c <- a
          }
        }
      if (!resid) continue;

      RawAlgebra raw;
      for (int i = 0; i < n; ++i) raw.elements.push_back("e" + std::to_string(i));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && leq(i, j)) raw.order.push_back({raw.elements[i], raw.elements[j]});
      raw.kind = "poset";
      raw.unit = raw.elements[unit];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          raw.imp.push_back({raw.elements[i], raw.elements[j], raw.elements[imp[i][j]]});
          raw.prod.push_back({raw.elements[i], raw.elements[j], raw.elements[prod(i, j)]});
          raw.limp.push_back({raw.elements[i], raw.elements[j], raw.elements[limp[i][j]]});
        }
      try {
        out.push_back(validate_algebra(raw));
      } catch (const AlgebraError&) {
        // tables that fail the axioms are simply skipped
      }
    }
  }
  return out;
}

std::vector<SortedFrame> sample_lk_frames(std::uint64_t seed, size_t count, int max_points) {
  std::vector<SortedFrame> out;
  std::set<std::string> seen;
  auto push = [&](SortedFrame f) {
    if (out.size() >= count) return;
    if (seen.insert(frame_to_text(f)).second) out.push_back(std::move(f));
  };

  // Canonical frames of the small residuated algebras first (deterministic).
  for (auto& alg : small_residuated_algebras()) {
    auto cf = canonical_frame(alg, Signature::Lambek);
    if (cf.frame.n1 <= max_points && cf.frame.nD <= max_points) push(std::move(cf.frame));
    if (out.size() >= count) return out;
  }

  // Then seeded random unital magma frames.
  Rng rng(seed);
  std::vector<std::vector<int>> table;
  for (long long draws = 0; out.size() < count && draws < 100000; ++draws) {
    int n = 1 + rng.below(max_points);
    int unit = rng.below(n);
    table.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == unit) table[i][j] = j;
        else if (j == unit) table[i][j] = i;
        else table[i][j] = rng.below(n);
      }
    push(magma_frame(table, unit));
  }
  if (out.size() < count)
    throw FrameError("SearchSpaceTooLarge",
                     "could not sample " + std::to_string(count) + " distinct frames");
  return out;
}

SortedFrame random_frame(Rng& rng, int max_per_sort, bool with_r, bool with_s) {
  SortedFrame f;
  f.n1 = 1 + rng.below(max_per_sort);
  f.nD = 1 + rng.below(max_per_sort);
  f.irow.assign(f.n1, 0);
  for (int x = 0; x < f.n1; ++x)
    for (int y = 0; y < f.nD; ++y)
      if (rng.below(2)) f.irow[x] |= bit(y);
  f.has_t = true;
  f.t_sec.assign(f.n1, std::vector<Bits>(f.nD, 0));
  for (int x = 0; x < f.n1; ++x)
    for (int v = 0; v < f.nD; ++v)
      for (int y = 0; y < f.nD; ++y)
        if (rng.below(2)) f.t_sec[x][v] |= bit(y);
  if (with_r) {
    f.has_r = true;
    f.r_sec.assign(f.n1, std::vector<Bits>(f.n1, 0));
    for (int x = 0; x < f.n1; ++x)
      for (int z = 0; z < f.n1; ++z)
        for (int u = 0; u < f.n1; ++u)
          if (rng.below(2)) f.r_sec[x][z] |= bit(u);
  }
  if (with_s) {
    f.has_s = true;
    f.s_sec.assign(f.nD, std::vector<Bits>(f.n1, 0));
    for (int v = 0; v < f.nD; ++v)
      for (int x = 0; x < f.n1; ++x)
        for (int y = 0; y < f.nD; ++y)
          if (rng.below(2)) f.s_sec[v][x] |= bit(y);
  }
  f.finish();
  f.has_u = true;
  Bits raw = 0;
  for (int x = 0; x < f.n1; ++x)
    if (rng.below(2)) raw |= bit(x);
  f.u = f.closure(Sort::One, raw);
  return f;
}

}  // namespace nlogic
