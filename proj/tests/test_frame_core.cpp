#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "nlogic/algebra.hpp"
#include "nlogic/duality.hpp"
#include "nlogic/frame_axioms.hpp"
#include "nlogic/frame_io.hpp"
#include "nlogic/gen.hpp"

using namespace nlogic;

namespace {

SortedFrame classical(int n) {
  SortedFrame f;
  f.n1 = f.nD = n;
  f.irow.assign(n, 0);
  for (int i = 0; i < n; ++i) f.irow[i] = bit(i);
  f.finish();
  return f;
}

// Independent closure oracle from the raw definitions.
Bits closure_oracle(const SortedFrame& f, Sort of, Bits xs) {
  int n_from = f.size(of), n_to = f.size(opp(of));
  Bits primed = 0;
  for (int y = 0; y < n_to; ++y) {
    bool all = true;
    for (int x = 0; x < n_from; ++x) {
      if (!has(xs, x)) continue;
      bool gap = of == Sort::One ? !f.incident(x, y) : !f.incident(y, x);
      if (!gap) all = false;
    }
    if (all) primed |= bit(y);
  }
  Bits out = 0;
  for (int x = 0; x < n_from; ++x) {
    bool all = true;
    for (int y = 0; y < n_to; ++y) {
      if (!has(primed, y)) continue;
      bool gap = of == Sort::One ? !f.incident(x, y) : !f.incident(y, x);
      if (!gap) all = false;
    }
    if (all) out |= bit(x);
  }
  return out;
}

CanonicalFrame chain2_canonical() {
  const char* text = R"(
elements: 0 1
order: 0<=1
kind: lattice
unit: 1
imp: (0,0)=1 (0,1)=1 (1,0)=0 (1,1)=1
)";
  auto a = validate_algebra(parse_algebra_text(text));
  return canonical_frame(a, Signature::Lattice);
}

}  // namespace

TEST_CASE("galois map of the empty set is the whole opposite carrier") {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    auto f = random_frame(rng, 4, false, false);
    CHECK(f.prime(Sort::One, 0) == f.full(Sort::Del));
    CHECK(f.prime(Sort::Del, 0) == f.full(Sort::One));
  }
}

TEST_CASE("classical frames: prime is complement, all subsets stable, discrete order") {
  auto f = classical(3);
  for (Bits s = 0; s <= f.full(Sort::One); ++s) {
    CHECK(f.prime(Sort::One, s) == (~s & f.full(Sort::Del)));
    CHECK(f.is_stable(Sort::One, s));
    if (s == f.full(Sort::One)) break;
  }
  CHECK(f.separated());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(f.leq(Sort::One, a, b) == (a == b));
  CHECK(f.stable_sets(Sort::One).size() == 8);
}

TEST_CASE("galois pair laws on random frames") {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    auto f = random_frame(rng, 4, false, false);
    for (Bits s = 0; s <= f.full(Sort::One); ++s) {
      Bits p = f.prime(Sort::One, s);
      CHECK(subset(s, f.closure(Sort::One, s)));
      CHECK(f.prime(Sort::Del, f.closure(Sort::Del, p)) == f.prime(Sort::Del, p));
      CHECK(f.closure(Sort::One, s) == closure_oracle(f, Sort::One, s));
      if (s == f.full(Sort::One)) break;
    }
    // antitone
    for (Bits s = 0; s < f.full(Sort::One); ++s)
      CHECK(subset(f.prime(Sort::One, f.full(Sort::One)), f.prime(Sort::One, s)));
  }
}

TEST_CASE("closure of a singleton is the specialization upset") {
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    auto f = random_frame(rng, 4, false, false);
    for (int u = 0; u < f.n1; ++u)
      CHECK(f.closure(Sort::One, bit(u)) == f.gamma(Sort::One, u));
  }
}

TEST_CASE("stable sets are closure fixpoints, intersection-closed, and upsets") {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    auto f = random_frame(rng, 4, false, false);
    auto st = f.stable_sets(Sort::One);
    for (auto& a : st) {
      CHECK(f.closure(Sort::One, a.members) == a.members);
      for (int u : members(a.members)) CHECK(subset(f.gamma(Sort::One, u), a.members));
      for (auto& b : st) {
        Bits meet = a.members & b.members;
        CHECK(f.closure(Sort::One, meet) == meet);
      }
    }
    // canonical order: strictly lex-increasing member lists
    for (size_t k = 1; k < st.size(); ++k) CHECK(lex_less(st[k - 1].members, st[k].members));
  }
}

TEST_CASE("stable-set enumeration respects the carrier bound") {
  SortedFrame f;
  f.n1 = 16;
  f.nD = 1;
  f.irow.assign(16, 0);
  f.finish();
  CHECK_THROWS_WITH_AS(f.stable_sets(Sort::One), doctest::Contains("CarrierTooLarge"),
                       FrameError);
}

TEST_CASE("frames with duplicate incidence rows are not separated") {
  SortedFrame f;
  f.n1 = 2;
  f.nD = 1;
  f.irow = {bit(0), bit(0)};
  f.finish();
  CHECK(!f.separated());
}

TEST_CASE("canonical 2-chain frame: galois image of the unit filter") {
  auto cf = chain2_canonical();
  const SortedFrame& f = cf.frame;
  // point F containing only the top element
  int x1 = cf.filter_index(bit(1));
  REQUIRE(x1 >= 0);
  // {x_1}' = the ideals containing 1, i.e. the whole-carrier ideal
  int whole = cf.ideal_index(bit(0) | bit(1));
  CHECK(f.prime(Sort::One, bit(x1)) == bit(whole));
  CHECK(f.separated());
  CHECK(f.stable_sets(Sort::One).size() == 2);
}

TEST_CASE("galois dual relation: complement on classical frames, empty sections to full") {
  std::vector<std::vector<int>> tbl = {{0, 1}, {1, 0}};  // Z2
  auto f = magma_frame(tbl, 0);
  for (int x = 0; x < f.n1; ++x)
    for (int z = 0; z < f.n1; ++z)
      CHECK(f.dual_sec('R', x, z) == (~f.sec('R')[x][z] & f.full(Sort::One)));
  SortedFrame g;
  g.n1 = g.nD = 2;
  g.irow = {bit(0), bit(1)};
  g.has_t = true;
  g.t_sec.assign(2, std::vector<Bits>(2, 0));  // all sections empty
  g.finish();
  CHECK(g.dual_sec('T', 0, 0) == g.full(Sort::One));
}

TEST_CASE("image operator: normality, sections, additivity") {
  SortedFrame f;
  f.n1 = 2;
  f.nD = 1;
  f.irow = {0, 0};
  f.has_t = true;
  f.t_sec.assign(2, std::vector<Bits>(1, 0));
  f.t_sec[0][0] = bit(0);  // T = {(y0 | x0, y0)}
  f.finish();
  CHECK(f.im_tright(0, bit(0)) == 0);
  CHECK(f.im_tright(bit(0), 0) == 0);
  CHECK(f.im_tright(bit(0), bit(0)) == bit(0));
  CHECK(f.im_tright(bit(1), bit(0)) == 0);
}

TEST_CASE("image operators distribute over unions in each argument") {
  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    auto f = random_frame(rng, 3, true, false);
    Bits full1 = f.full(Sort::One), fullD = f.full(Sort::Del);
    for (Bits a = 0; a <= full1; ++a) {
      for (Bits b = 0; b <= full1; ++b) {
        for (Bits c = 0; c <= fullD; ++c) {
          CHECK(f.im_tright(a | b, c) == (f.im_tright(a, c) | f.im_tright(b, c)));
          CHECK((f.im_odot(a | b, c & full1) ==
                 (f.im_odot(a, c & full1) | f.im_odot(b, c & full1))));
          if (c == fullD) break;
        }
        if (b == full1) break;
      }
      if (a == full1) break;
    }
  }
}

TEST_CASE("single-sorted implication: top absorbs, one-point classical product") {
  auto cf = chain2_canonical();
  const SortedFrame& f = cf.frame;
  auto st = f.stable_sets(Sort::One);
  for (auto& a : st) CHECK(f.ss_imp(a.members, f.full(Sort::One)) == f.full(Sort::One));

  std::vector<std::vector<int>> one = {{0}};
  auto m = magma_frame(one, 0);
  CHECK(m.ss_prod(bit(0), bit(0)) == bit(0));
}

TEST_CASE("canonical 2-chain: alpha(1) => alpha(0) equals alpha(1->0)") {
  const char* text = R"(
elements: 0 1
order: 0<=1
kind: lattice
unit: 1
imp: (0,0)=1 (0,1)=1 (1,0)=0 (1,1)=1
)";
  auto a = validate_algebra(parse_algebra_text(text));
  auto cf = canonical_frame(a, Signature::Lattice);
  CHECK(cf.frame.ss_imp(cf.alpha(a, 1), cf.alpha(a, 0)) == cf.alpha(a, 0));
}

TEST_CASE("PU class passes on the canonical 2-chain frame") {
  auto cf = chain2_canonical();
  auto report = check_frame_class(cf.frame, "PU");
  CHECK(report.all_pass());
}

TEST_CASE("a one-point frame with empty T fails the unit axiom with a witness") {
  SortedFrame f;
  f.n1 = f.nD = 1;
  f.irow = {bit(0)};  // I total: x I y, so x is not gapped from y
  f.has_t = true;
  f.t_sec.assign(1, std::vector<Bits>(1, 0));
  f.has_u = true;
  f.u = 0;  // empty U: the right side of (U) is vacuously true
  f.finish();
  auto res = check_axiom(f, "U");
  CHECK(!res.pass);
  CHECK(!res.witness.empty());
}

TEST_CASE("hand-built upward-closed relation violates (M) with a witness") {
  // two points with x1 < x0 (strictly), T-section larger at the smaller point
  SortedFrame f;
  f.n1 = 2;
  f.nD = 2;
  f.irow = {bit(0) | bit(1), bit(0)};  // {x0}'=∅, {x1}'={y1}: x0 ≤ x1
  f.has_t = true;
  f.t_sec.assign(2, std::vector<Bits>(2, 0));
  f.t_sec[1][0] = bit(0);  // section at the bigger x1 nonempty...
  f.t_sec[0][0] = 0;       // ...but empty at the smaller x0
  f.finish();
  REQUIRE(f.leq(Sort::One, 0, 1));
  auto res = check_axiom(f, "M(T)");
  CHECK(!res.pass);
  CHECK(!res.witness.empty());
}

TEST_CASE("frame files round-trip and reject unknown keys") {
  const char* text = R"(
sort1: x0 x1
sortD: y0
I: (x0,y0)
U: all
T: (y0|x0,y0) (y0|x1,y0)
)";
  auto f = parse_frame_text(text);
  CHECK(f.n1 == 2);
  CHECK(f.nD == 1);
  CHECK(f.has_u);
  CHECK(f.u == mask(2));
  auto g = parse_frame_text(frame_to_text(f));
  CHECK(frame_to_text(g) == frame_to_text(f));
  CHECK_THROWS_WITH_AS(parse_frame_text("sort1: a\nsortD: b\nbogus: 1\n"),
                       doctest::Contains("unknown key"), FrameError);
}

TEST_CASE("checking a class whose relations are missing reports MissingRelation") {
  SortedFrame f;
  f.n1 = f.nD = 1;
  f.irow = {0};
  f.finish();
  CHECK_THROWS_WITH_AS(check_frame_class(f, "PU"), doctest::Contains("MissingRelation"),
                       FrameError);
}

TEST_CASE("magma frames satisfy every LK_* axiom") {
  auto frames = sample_lk_frames(99, 25, 3);
  for (auto& f : frames) {
    auto report = check_frame_class(f, "LK_*");
    for (auto& ax : report.axioms) {
      INFO(ax.id, " ", ax.witness);
      CHECK(ax.pass);
    }
  }
}

TEST_CASE("residuation bridge holds on frames passing (RES)") {
  auto frames = sample_lk_frames(7, 10, 3);
  for (auto& f : frames) {
    auto st = f.stable_sets(Sort::One);
    for (auto& a : st)
      for (auto& b : st)
        for (auto& c : st) {
          bool p1 = subset(f.ss_prod(a.members, b.members), c.members);
          bool p2 = subset(b.members, f.ss_imp(a.members, c.members));
          bool p3 = subset(a.members, f.ss_limp(c.members, b.members));
          CHECK(p1 == p2);
          CHECK(p2 == p3);
        }
  }
}

TEST_CASE("semilattice and lattice section axioms hold on canonical frames") {
  const char* chain3 = R"(
elements: 0 a 1
order: 0<=a a<=1
kind: lattice
unit: 1
imp: (0,0)=1 (0,a)=1 (0,1)=1 (a,0)=0 (a,a)=1 (a,1)=1 (1,0)=0 (1,a)=a (1,1)=1
)";
  auto a = validate_algebra(parse_algebra_text(chain3));
  auto cf = canonical_frame(a, Signature::Lattice);
  CHECK(check_axiom(cf.frame, "F3").pass);
  CHECK(check_axiom(cf.frame, "F3a").pass);
  CHECK(check_axiom(cf.frame, "F3b").pass);
  CHECK(check_frame_class(cf.frame, "S").all_pass());
  CHECK(check_frame_class(cf.frame, "L").all_pass());
}

TEST_CASE("frames passing (F3) distribute => over meets in the consequent") {
  // canonical frames of the fixtures pass (F3); assert the induced law
  const char* diamond = R"(
elements: 0 a b 1
order: 0<=a 0<=b a<=1 b<=1
kind: lattice
unit: 1
imp: (0,0)=1 (0,a)=1 (0,b)=1 (0,1)=1
imp: (a,0)=b (a,a)=1 (a,b)=b (a,1)=1
imp: (b,0)=a (b,a)=a (b,b)=1 (b,1)=1
imp: (1,0)=0 (1,a)=a (1,b)=b (1,1)=1
)";
  auto a = validate_algebra(parse_algebra_text(diamond));
  auto cf = canonical_frame(a, Signature::Lattice);
  const SortedFrame& f = cf.frame;
  REQUIRE(check_axiom(f, "F3").pass);
  REQUIRE(check_axiom(f, "F3b").pass);
  auto st = f.stable_sets(Sort::One);
  for (auto& A : st)
    for (auto& C1 : st)
      for (auto& C2 : st) {
        CHECK(f.ss_imp(A.members, C1.members & C2.members) ==
              (f.ss_imp(A.members, C1.members) & f.ss_imp(A.members, C2.members)));
        Bits join = f.closure(Sort::One, A.members | C1.members);
        CHECK(f.ss_imp(join, C2.members) ==
              (f.ss_imp(A.members, C2.members) & f.ss_imp(C1.members, C2.members)));
      }
}

TEST_CASE("distributivity section test: classical frames pass trivially") {
  SortedFrame f;
  f.n1 = f.nD = 2;
  f.irow = {bit(0), bit(1)};
  f.finish();
  CHECK(check_axiom(f, "dist-section").pass);
}

TEST_CASE("quasi-serial frames close the empty set to itself") {
  Rng rng(91);
  int seen = 0;
  for (int i = 0; i < 60; ++i) {
    auto f = random_frame(rng, 4, false, false);
    bool qs = check_axiom(f, "quasi-serial").pass;
    CHECK(qs == f.quasi_serial());
    if (qs) {
      ++seen;
      CHECK(f.closure(Sort::One, 0) == 0);
      CHECK(f.closure(Sort::Del, 0) == 0);
    }
  }
  CHECK(seen > 0);
}
