#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "nlogic/formula.hpp"
#include "nlogic/gen.hpp"
#include "nlogic/modal.hpp"
#include "nlogic/translate.hpp"

using namespace nlogic;

TEST_CASE("parsing the basics") {
  VarTable vars;
  auto f = parse_formula("p1 -> p1", vars);
  CHECK(f->kind == FKind::Imp);
  CHECK(f->a->kind == FKind::Var);
  CHECK(f->a->var == f->b->var);

  auto s = parse_sequent("p1 * (p2 * p3) |- (p1 * p2) * p3", vars);
  CHECK(s.lhs->kind == FKind::Prod);
  CHECK(s.lhs->b->kind == FKind::Prod);
  CHECK(s.rhs->a->kind == FKind::Prod);

  auto w = parse_sequent("p |- t -> p", vars);
  CHECK(w.rhs->kind == FKind::Imp);
  CHECK(w.rhs->a->kind == FKind::Unit);
}

TEST_CASE("precedence: product binds tighter than junctions, which beat implications") {
  VarTable vars;
  auto f = parse_formula("p1 * p2 & p3 -> p4", vars);
  CHECK(f->kind == FKind::Imp);
  CHECK(f->a->kind == FKind::And);
  CHECK(f->a->a->kind == FKind::Prod);
  auto g = parse_formula("p1 -> p2 -> p3", vars);
  CHECK(g->b->kind == FKind::Imp);  // right-associative
}

TEST_CASE("parse errors carry a position") {
  VarTable vars;
  CHECK_THROWS_AS(parse_formula("p1 ->", vars), ParseError);
  CHECK_THROWS_AS(parse_formula("(p1", vars), ParseError);
  CHECK_THROWS_AS(parse_sequent("p1 p2", vars), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
  VarTable vars;
  const char* samples[] = {
      "p1 -> p2",      "p1 * (p2 * p3)",      "(p1 * p2) * p3", "p | q & r",
      "t -> (p <- q)", "top & bot | t * p1",  "p <- q <- r",    "p -> q -> r",
  };
  for (const char* s : samples) {
    auto f = parse_formula(s, vars);
    auto printed = print_formula(f, vars);
    auto g = parse_formula(printed, vars);
    CHECK(equal(f, g));
  }
}

TEST_CASE("random formulas round-trip") {
  VarTable vars;
  vars.intern("p1");
  vars.intern("p2");
  vars.intern("p3");
  Rng rng(5);
  std::function<FormulaPtr(int)> gen = [&](int d) -> FormulaPtr {
    int pick = rng.below(d == 0 ? 4 : 9);
    switch (pick) {
      case 0: return Formula::mk_var(rng.below(3));
      case 1: return Formula::mk(FKind::Top);
      case 2: return Formula::mk(FKind::Bot);
      case 3: return Formula::mk(FKind::Unit);
      case 4: return Formula::mk(FKind::And, gen(d - 1), gen(d - 1));
      case 5: return Formula::mk(FKind::Or, gen(d - 1), gen(d - 1));
      case 6: return Formula::mk(FKind::Imp, gen(d - 1), gen(d - 1));
      case 7: return Formula::mk(FKind::Limp, gen(d - 1), gen(d - 1));
      default: return Formula::mk(FKind::Prod, gen(d - 1), gen(d - 1));
    }
  };
  for (int i = 0; i < 200; ++i) {
    auto f = gen(4);
    auto g = parse_formula(print_formula(f, vars), vars);
    CHECK(equal(f, g));
  }
}

TEST_CASE("translation of t, implication, and top match the table") {
  VarTable vars;
  auto t = translate(parse_formula("t", vars));
  CHECK(t.bullet->kind == MKind::UConst);
  CHECK(t.circ->kind == MKind::Prime);
  CHECK(t.circ->a->kind == MKind::UConst);

  auto imp = translate(parse_formula("p1 -> p2", vars));
  // (p1 ⊸ p2)• = (P1'' ▷ P2')'
  REQUIRE(imp.bullet->kind == MKind::Prime);
  REQUIRE(imp.bullet->a->kind == MKind::TRight);
  CHECK(imp.bullet->a->a->kind == MKind::Prime);        // P1''
  CHECK(imp.bullet->a->a->a->kind == MKind::Prime);
  CHECK(imp.bullet->a->a->a->a->kind == MKind::Var);
  CHECK(imp.bullet->a->b->kind == MKind::Prime);        // P2'
  CHECK(imp.bullet->a->b->a->kind == MKind::Var);
  // (p1 ⊸ p2)∘ = (P1'' ▷ P2')''
  REQUIRE(imp.circ->kind == MKind::Prime);
  CHECK(mequal(imp.circ->a, imp.bullet));

  auto top = translate(parse_formula("top", vars));
  CHECK(top.bullet->kind == MKind::Top);
  REQUIRE(top.circ->kind == MKind::Prime);
  REQUIRE(top.circ->a->kind == MKind::Prime);
  CHECK(top.circ->a->a->kind == MKind::Bot);
}

TEST_CASE("translations are sort-correct and bullets are positive") {
  VarTable vars;
  Rng rng(9);
  std::function<FormulaPtr(int)> gen = [&](int d) -> FormulaPtr {
    int pick = rng.below(d == 0 ? 4 : 9);
    switch (pick) {
      case 0: return Formula::mk_var(rng.below(3));
      case 1: return Formula::mk(FKind::Top);
      case 2: return Formula::mk(FKind::Bot);
      case 3: return Formula::mk(FKind::Unit);
      case 4: return Formula::mk(FKind::And, gen(d - 1), gen(d - 1));
      case 5: return Formula::mk(FKind::Or, gen(d - 1), gen(d - 1));
      case 6: return Formula::mk(FKind::Imp, gen(d - 1), gen(d - 1));
      case 7: return Formula::mk(FKind::Limp, gen(d - 1), gen(d - 1));
      default: return Formula::mk(FKind::Prod, gen(d - 1), gen(d - 1));
    }
  };
  for (int i = 0; i < 100; ++i) {
    auto f = gen(3);
    for (auto mode : {TransMode::TRight, TransMode::Residual}) {
      auto tr = translate(f, mode);
      CHECK(tr.bullet->sort == Sort::One);
      CHECK(tr.circ->sort == Sort::Del);
      CHECK(sort_check(tr.bullet));
      CHECK(sort_check(tr.circ));
    }
  }
}

TEST_CASE("double-prime discipline: variables in bullet translations sit under primes") {
  VarTable vars;
  auto tr = translate(parse_formula("p1 & (p2 -> p1)", vars));
  for (auto& [v, s] : mvars(tr.bullet)) {
    auto occ = occurrences(tr.bullet, v, s);
    CHECK(!occ.bare);
  }
}

TEST_CASE("standard translation of the u constant and bottom") {
  int fresh = 1;
  auto st_u = standard_translation(muconst(), 0, fresh);
  CHECK(fo_print(fo_forall(0, Sort::One, st_u)) == "∀x(x∈U)");
  auto st_bot = standard_translation(mbot(Sort::Del), 0, fresh);
  CHECK(st_bot->kind == FoKind::False);
}

TEST_CASE("standard translation of a double-primed variable unfolds two prime clauses") {
  int fresh = 1;
  auto t = mprime(mprime(mvar(0, Sort::One)));
  auto st = standard_translation(t, 0, fresh);
  // ∀v(xIv → ¬ ∀z(zIv → ¬P(z))) before normalization
  REQUIRE(st->kind == FoKind::Forall);
  CHECK(st->bsort == Sort::Del);
  auto body = st->body;
  REQUIRE(body->kind == FoKind::Implies);
  CHECK(body->a->atom == FoAtomKind::I);
  REQUIRE(body->b->kind == FoKind::Not);
  CHECK(body->b->a->kind == FoKind::Forall);
}

TEST_CASE("second-order translation closes predicate variables") {
  VarTable vars;
  auto tr = translate(parse_formula("p1 -> p2", vars));
  auto so = second_order_translation(tr.bullet, Sort::One);
  CHECK(so->kind == FoKind::ForallP);
  CHECK(!fo_is_first_order(so));
}

TEST_CASE("fo printing styles") {
  // ∀x∀u∀z(xRuz → z≤x)
  auto f = fo_forall(0, Sort::One,
                     fo_forall(1, Sort::One,
                               fo_forall(2, Sort::One,
                                         fo_implies(fo_atom(FoAtomKind::R, {0, 1, 2}),
                                                    fo_atom(FoAtomKind::Leq, {2, 0})))));
  CHECK(fo_print(fo_normalize(f)) == "∀x∀u∀z(xRuz → z≤x)");
}
