#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "nlogic/algebra.hpp"

using namespace nlogic;

namespace {

const char* kBool2 = R"(
elements: 0 1
order: 0<=1
kind: lattice
unit: 1
imp: (0,0)=1 (0,1)=1 (1,0)=0 (1,1)=1
)";

const char* kChain3 = R"(
elements: 0 a 1
order: 0<=a a<=1
kind: lattice
unit: 1
imp: (0,0)=1 (0,a)=1 (0,1)=1 (a,0)=0 (a,a)=1 (a,1)=1 (1,0)=0 (1,a)=a (1,1)=1
)";

const char* kDiamond = R"(
elements: 0 a b 1
order: 0<=a 0<=b a<=1 b<=1
kind: lattice
unit: 1
imp: (0,0)=1 (0,a)=1 (0,b)=1 (0,1)=1
imp: (a,0)=b (a,a)=1 (a,b)=b (a,1)=1
imp: (b,0)=a (b,a)=a (b,b)=1 (b,1)=1
imp: (1,0)=0 (1,a)=a (1,b)=b (1,1)=1
)";

OrderedAlgebra alg(const char* text) { return validate_algebra(parse_algebra_text(text)); }

// Independent oracle: greatest c with c ∧ a <= b, from the order matrix alone.
int heyting_oracle(const OrderedAlgebra& a, int x, int y) {
  int best = -1;
  for (int c = 0; c < a.n; ++c) {
    int m = a.meet[c][x];
    if (m < 0 || !a.leq(m, y)) continue;
    if (best < 0 || a.leq(best, c)) best = c;
  }
  return best;
}

// Independent filter test straight from the definitions; shares no code with
// enumerate_filters.
bool filter_oracle(const OrderedAlgebra& a, Bits s) {
  if (!s) return false;
  for (int x : members(s))
    for (int y = 0; y < a.n; ++y)
      if (a.leq(x, y) && !has(s, y)) return false;
  for (int x : members(s))
    for (int y : members(s)) {
      bool found = false;
      for (int c : members(s))
        if (a.leq(c, x) && a.leq(c, y)) found = true;
      if (!found) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("two-element boolean algebra validates as a lattice with unit") {
  auto a = alg(kBool2);
  CHECK(a.kind == AlgKind::Lattice);
  CHECK(a.unit == 1);
  CHECK(a.top == 1);
  CHECK(a.bottom == 0);
}

TEST_CASE("three-chain heyting implication matches the brute-force residual") {
  auto a = alg(kChain3);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) CHECK(a.imp[x][y] == heyting_oracle(a, x, y));
}

TEST_CASE("diamond heyting implication matches the brute-force residual") {
  auto a = alg(kDiamond);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) CHECK(a.imp[x][y] == heyting_oracle(a, x, y));
}

TEST_CASE("antisymmetry violations are rejected") {
  const char* cyc = R"(
elements: a b
order: a<=b b<=a
kind: poset
imp: (a,a)=b (a,b)=b (b,a)=b (b,b)=b
)";
  CHECK_THROWS_WITH_AS(alg(cyc), doctest::Contains("AntisymmetryViolation"), AlgebraError);
}

TEST_CASE("unit axiom violations name a witness") {
  // Forcing a->0 = 1 in the 3-chain makes 1 <= a->0 while a is not <= 0.
  const char* bad = R"(
elements: 0 a 1
order: 0<=a a<=1
kind: lattice
unit: 1
imp: (0,0)=1 (0,a)=1 (0,1)=1 (a,0)=1 (a,a)=1 (a,1)=1 (1,0)=0 (1,a)=a (1,1)=1
)";
  CHECK_THROWS_AS(alg(bad), AlgebraError);
  try {
    alg(bad);
  } catch (const AlgebraError& e) {
    bool named = e.code == "UnitAxiomViolation" || e.code == "OperatorTypeViolation";
    CHECK(named);
  }
}

TEST_CASE("partial operation tables are rejected, not completed") {
  const char* partial = R"(
elements: 0 1
order: 0<=1
kind: lattice
imp: (0,0)=1 (1,1)=1
)";
  CHECK_THROWS_WITH_AS(alg(partial), doctest::Contains("partial"), AlgebraError);
}

TEST_CASE("filters of a 2-chain are the principal upsets plus the carrier") {
  auto a = alg(kBool2);
  auto fs = enumerate_filters(a);
  REQUIRE(fs.members.size() == 2);
  CHECK(fs.members[0] == (bit(0) | bit(1)));  // {0,1}
  CHECK(fs.members[1] == bit(1));             // {1}
  CHECK(fs.generator[0] == 0);
  CHECK(fs.generator[1] == 1);
}

TEST_CASE("filter and ideal counts on the 3-chain") {
  auto a = alg(kChain3);
  CHECK(enumerate_filters(a).members.size() == 3);
  CHECK(enumerate_ideals(a).members.size() == 3);
}

TEST_CASE("enumerated filters are exactly the oracle's filters") {
  for (const char* text : {kBool2, kChain3, kDiamond}) {
    auto a = alg(text);
    auto fs = enumerate_filters(a);
    size_t oracle_count = 0;
    for (Bits s = 0; s <= mask(a.n); ++s) {
      if (filter_oracle(a, s)) {
        ++oracle_count;
        CHECK(std::find(fs.members.begin(), fs.members.end(), s) != fs.members.end());
      }
      if (s == mask(a.n)) break;
    }
    CHECK(fs.members.size() == oracle_count);
  }
}

TEST_CASE("the diamond upset {a,b,1} is not a filter") {
  auto a = alg(kDiamond);
  Bits upset = bit(1) | bit(2) | bit(3);  // {a,b,1}
  CHECK(!is_filter(a, upset));
  auto fs = enumerate_filters(a);
  CHECK(fs.members.size() == 4);
  CHECK(std::find(fs.members.begin(), fs.members.end(), upset) == fs.members.end());
}

TEST_CASE("point operator on principal inputs gives the principal ideal of a->b") {
  for (const char* text : {kBool2, kChain3, kDiamond}) {
    auto a = alg(text);
    for (int ea = 0; ea < a.n; ++ea)
      for (int eb = 0; eb < a.n; ++eb) {
        Bits got = point_tright(a, principal_filter(a, ea), principal_ideal(a, eb));
        CHECK(got == principal_ideal(a, a.imp[ea][eb]));
      }
  }
}

TEST_CASE("2-chain: whole-filter against the zero ideal sweeps the carrier") {
  auto a = alg(kBool2);
  Bits x = bit(0) | bit(1);
  Bits v = bit(0);
  CHECK(point_tright(a, x, v) == (bit(0) | bit(1)));
}

TEST_CASE("point product is idempotent on the principal unit filter") {
  const char* lambek = R"(
elements: 0 1
order: 0<=1
kind: lattice
unit: 1
imp: (0,0)=1 (0,1)=1 (1,0)=0 (1,1)=1
prod: (0,0)=0 (0,1)=0 (1,0)=0 (1,1)=1
limp: (0,0)=1 (0,1)=0 (1,0)=1 (1,1)=1
)";
  auto a = alg(lambek);
  Bits x1 = principal_filter(a, 1);
  CHECK(point_circ(a, x1, x1) == x1);
}

TEST_CASE("tright outputs are ideals and the operator is monotone") {
  auto a = alg(kDiamond);
  auto fs = enumerate_filters(a);
  auto is = enumerate_ideals(a);
  for (Bits x : fs.members)
    for (Bits v : is.members) {
      Bits out = point_tright(a, x, v);
      CHECK(is_ideal(a, out));
      for (Bits x2 : fs.members)
        for (Bits v2 : is.members) {
          if (subset(x, x2) && subset(v, v2))
            CHECK(subset(out, point_tright(a, x2, v2)));
        }
    }
}

TEST_CASE("non-filter arguments are rejected") {
  auto a = alg(kChain3);
  CHECK_THROWS_WITH_AS(point_tright(a, bit(0), principal_ideal(a, 0)),
                       doctest::Contains("NotAFilter"), AlgebraError);
  CHECK_THROWS_WITH_AS(point_tright(a, principal_filter(a, 1), bit(2)),
                       doctest::Contains("NotAnIdeal"), AlgebraError);
}

TEST_CASE("filters on a chain count principal upsets, against the subset scan") {
  // chains of length 2..5 built on the fly
  for (int n = 2; n <= 5; ++n) {
    RawAlgebra raw;
    for (int i = 0; i < n; ++i) raw.elements.push_back("c" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) raw.order.push_back({raw.elements[i], raw.elements[i + 1]});
    raw.kind = "poset";
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        raw.imp.push_back({raw.elements[i], raw.elements[j], raw.elements[i <= j ? n - 1 : j]});
    auto a = validate_algebra(raw);
    auto fs = enumerate_filters(a);
    CHECK(fs.members.size() == static_cast<size_t>(n));  // every nonempty upset is principal
    size_t oracle = 0;
    for (Bits s = 1; s <= mask(n); ++s)
      if (filter_oracle(a, s)) ++oracle;
    CHECK(fs.members.size() == oracle);
  }
}

TEST_CASE("residuation violations are rejected") {
  // prod = join is not residuated with the boolean implication table
  const char* bad = R"(
elements: 0 1
order: 0<=1
kind: lattice
unit: 1
imp: (0,0)=1 (0,1)=1 (1,0)=0 (1,1)=1
prod: (0,0)=0 (0,1)=1 (1,0)=1 (1,1)=1
)";
  CHECK_THROWS_WITH_AS(alg(bad), doctest::Contains("ResiduationViolation"), AlgebraError);
  const char* limp_only = R"(
elements: 0 1
order: 0<=1
kind: lattice
imp: (0,0)=1 (0,1)=1 (1,0)=0 (1,1)=1
limp: (0,0)=1 (0,1)=0 (1,0)=1 (1,1)=1
)";
  CHECK_THROWS_WITH_AS(alg(limp_only), doctest::Contains("ResiduationViolation"), AlgebraError);
}
