#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "nlogic/acceptance.hpp"
#include "nlogic/correspond.hpp"
#include "nlogic/duality.hpp"
#include "nlogic/gen.hpp"

using namespace nlogic;

namespace {

Sequent seq(const char* text) {
  static VarTable vars;
  return parse_sequent(text, vars);
}

InequalitySystem sys_of(const char* text, const char* side, TransMode mode) {
  Sequent s = seq(text);
  return to_system(std::string(side) == "translate" ? translate_sequent(s, mode)
                                                    : cotranslate_sequent(s, mode));
}

}  // namespace

TEST_CASE("to_system: co-translation of p |- t -> p") {
  auto sys = sys_of("p |- t -> p", "cotranslate", TransMode::TRight);
  CHECK(sys.sort == Sort::Del);
  // (u ▷ P')'' ≤∂ P'
  REQUIRE(sys.lhs->kind == MKind::Prime);
  REQUIRE(sys.lhs->a->kind == MKind::Prime);
  CHECK(sys.lhs->a->a->kind == MKind::TRight);
  CHECK(sys.lhs->a->a->a->kind == MKind::UConst);
  CHECK(sys.rhs->kind == MKind::Prime);
  CHECK(sys.rhs->a->kind == MKind::Var);
}

TEST_CASE("to_system: weakening with the residual translation") {
  auto sys = sys_of("p |- q -> p", "translate", TransMode::Residual);
  CHECK(sys.sort == Sort::One);
  REQUIRE(sys.rhs->kind == MKind::RSpoon);
  CHECK(sys.lhs->kind == MKind::Prime);  // P''
  CHECK(sys.stb.empty());
  CHECK(sys.cvc.empty());
}

TEST_CASE("to_system: identity sequent wraps as a trivial inequality") {
  auto sys = sys_of("p -> q |- p -> q", "translate", TransMode::TRight);
  CHECK(mequal(sys.lhs, sys.rhs));
}

TEST_CASE("apply_rule: R7 then R4 on the weakening system") {
  auto sys = sys_of("p |- q -> p", "translate", TransMode::Residual);
  auto after7 = apply_rule(sys, "R7");
  REQUIRE(after7.lhs->kind == MKind::Odot);
  CHECK(after7.lhs->a->kind == MKind::Prime);  // Q''
  CHECK(after7.rhs->kind == MKind::Prime);     // P''

  auto after4 = apply_rule(after7, "R4");
  CHECK(after4.stb.size() == 2);
  CHECK(after4.lhs->kind == MKind::Odot);
  CHECK(after4.lhs->a->kind == MKind::Var);
  CHECK(after4.rhs->kind == MKind::Var);
  CHECK(is_canonical_form(after4));
}

TEST_CASE("apply_rule: R1 drops a guard for an absent variable, and only then") {
  auto sys = sys_of("p |- q -> p", "translate", TransMode::Residual);
  auto after = apply_rule(apply_rule(sys, "R7"), "R4");
  CHECK_THROWS_WITH_AS(apply_rule(after, "R1"), doctest::Contains("R1"), FrameError);
  auto padded = after;
  padded.stb.push_back({17, Sort::One});
  auto dropped = apply_rule(padded, "R1");
  CHECK(dropped.stb.size() == after.stb.size());
}

TEST_CASE("apply_rule: R4 refuses mixed occurrences") {
  auto sys = sys_of("p |- t -> p", "cotranslate", TransMode::TRight);
  CHECK_THROWS_WITH_AS(apply_rule(sys, "R4"), doctest::Contains("R4"), FrameError);
}

TEST_CASE("rule instances fired on the golden set preserve system equivalence (sampled)") {
  auto frames = sample_lk_frames(123, 10, 3);
  VarTable vars;
  for (const char* text : {"q * p |- p", "p |- p * p", "p1 * p2 |- p2 * p1"}) {
    auto run = correspond(parse_sequent(text, vars), "LK_*", SidePolicy::Translate);
    REQUIRE(run.ok);
    for (auto& st : run.reduction.trace)
      for (auto& f : frames) {
        INFO(st.rule, " on ", st.before.to_string());
        CHECK(systems_equivalent_on(f, st.before, st.after));
      }
  }
}

TEST_CASE("reduce: the left-unit co-translated system reaches canonical form") {
  auto sys = sys_of("p |- t -> p", "cotranslate", TransMode::TRight);
  auto red = reduce(sys);
  REQUIRE(red.ok);
  CHECK(red.system.cvc.size() == 1);
  CHECK(red.system.sort == Sort::Del);
  CHECK(is_canonical_form(red.system));
  // rule order: strip the closure, then change variables
  REQUIRE(red.trace.size() >= 2);
  CHECK(red.trace[0].rule == "R2");
  CHECK(red.trace[1].rule == "R6");
}

TEST_CASE("reduce: association premiss reduces through R4, R3, R7") {
  auto sys = sys_of("p2 * p3 |- p1 -> ((p1 * p2) * p3)", "translate", TransMode::Residual);
  auto red = reduce(sys);
  REQUIRE(red.ok);
  std::vector<std::string> rules;
  for (auto& st : red.trace) rules.push_back(st.rule);
  CHECK(std::find(rules.begin(), rules.end(), "R4") != rules.end());
  CHECK(std::find(rules.begin(), rules.end(), "R3") != rules.end());
  CHECK(std::find(rules.begin(), rules.end(), "R7") != rules.end());
  CHECK(red.system.stb.size() == 3);
  CHECK(is_canonical_form(red.system));
  // main: P1⊙(P2⊙P3) ≤ ((P1⊙P2)''⊙P3)''
  CHECK(red.system.lhs->kind == MKind::Odot);
  CHECK(red.system.rhs->kind == MKind::Prime);
}

TEST_CASE("reduce: an essentially negative left side is not Sahlqvist") {
  // (Q ▷ P')' ≤ P cannot be brought to canonical form
  InequalitySystem sys;
  sys.sort = Sort::One;
  sys.lhs = mprime(mtright(mvar(1, Sort::One), mprime(mvar(0, Sort::One))));
  sys.rhs = mvar(0, Sort::One);
  auto red = reduce(sys);
  CHECK(!red.ok);
  CHECK(red.failure.find("NotSahlqvist") != std::string::npos);
}

TEST_CASE("guarded translation: weakening shape with stability guards") {
  VarTable vars;
  auto run = correspond(parse_sequent("p |- q -> p", vars), "LK_*", SidePolicy::Translate);
  REQUIRE(run.ok);
  std::string g = fo_print(run.guarded);
  CHECK(g.find("t-INV(") != std::string::npos);
  CHECK(g.find("→") != std::string::npos);
  CHECK(!fo_is_first_order(run.guarded));
  // empty-guard system: identity on an unconstrained variable
  InequalitySystem sys;
  sys.sort = Sort::One;
  sys.lhs = mvar(0, Sort::One);
  sys.rhs = mvar(0, Sort::One);
  CHECK(fo_print(guarded_translation(sys)).find("t-INV") == std::string::npos);
}

TEST_CASE("correspondents: golden sequents produce first-order output") {
  VarTable vars;
  for (auto& row : golden_rows()) {
    if (row.input.rfind("axiom:", 0) == 0) continue;
    SidePolicy side = row.side == "translate"     ? SidePolicy::Translate
                      : row.side == "cotranslate" ? SidePolicy::Cotranslate
                                                  : SidePolicy::Auto;
    std::optional<TransMode> mode;
    if (row.mode == "table6") mode = TransMode::TRight;
    if (row.mode == "rspoon") mode = TransMode::Residual;
    auto run = correspond(parse_sequent(row.input, vars), row.cls, side, mode);
    INFO(row.name);
    REQUIRE(run.ok);
    CHECK(fo_is_first_order(run.result.formula));
  }
}

TEST_CASE("fo_model_check basics") {
  std::vector<std::vector<int>> z2 = {{0, 1}, {1, 0}};
  auto f = magma_frame(z2, 0);
  auto refl = fo_forall(0, Sort::One, fo_atom(FoAtomKind::Leq, {0, 0}, Sort::One));
  CHECK(fo_model_check(f, refl).holds);

  SortedFrame empty_r;
  empty_r.n1 = empty_r.nD = 1;
  empty_r.irow = {0};
  empty_r.has_r = true;
  empty_r.r_sec.assign(1, std::vector<Bits>(1, 0));
  empty_r.finish();
  auto contraction = fo_forall(0, Sort::One, fo_atom(FoAtomKind::R, {0, 0, 0}));
  auto chk = fo_model_check(empty_r, contraction);
  CHECK(!chk.holds);
  CHECK(!chk.witness.empty());
}

TEST_CASE("unit row holds on the canonical boolean lambek frame") {
  const char* kLambek2 = R"(
elements: 0 1
order: 0<=1
kind: lattice
unit: 1
imp: (0,0)=1 (0,1)=1 (1,0)=0 (1,1)=1
prod: (0,0)=0 (0,1)=0 (1,0)=0 (1,1)=1
limp: (0,0)=1 (0,1)=0 (1,0)=1 (1,1)=1
)";
  auto a = validate_algebra(parse_algebra_text(kLambek2));
  auto cf = canonical_frame(a, Signature::Lambek);
  VarTable vars;
  auto run = correspond(parse_sequent("t * p |- p", vars), "LK_*", SidePolicy::Translate);
  REQUIRE(run.ok);
  CHECK(fo_model_check(cf.frame, run.result.formula).holds);
  CHECK(check_validity(cf.frame, parse_sequent("t * p |- p", vars)).valid);
}

TEST_CASE("computed correspondents are equivalent to the published forms") {
  auto frames = sample_lk_frames(321, 60, 3);
  VarTable vars;
  struct Row {
    const char* input;
    FoPtr table_form;
  };
  auto v = [](int i) { return i; };
  std::vector<Row> rows;
  // weakening: ∀x∀u∀z(xRuz → z≤x)
  rows.push_back({"q * p |- p",
                  fo_forall(v(0), Sort::One,
                            fo_forall(v(1), Sort::One,
                                      fo_forall(v(2), Sort::One,
                                                fo_implies(fo_atom(FoAtomKind::R, {0, 1, 2}),
                                                           fo_atom(FoAtomKind::Leq, {2, 0},
                                                                   Sort::One)))))});
  // contraction: ∀x xRxx
  rows.push_back({"p |- p * p", fo_forall(0, Sort::One, fo_atom(FoAtomKind::R, {0, 0, 0}))});
  // exchange: ∀x∀u∀z(xRuz → xRzu)
  rows.push_back({"p1 * p2 |- p2 * p1",
                  fo_forall(0, Sort::One,
                            fo_forall(1, Sort::One,
                                      fo_forall(2, Sort::One,
                                                fo_implies(fo_atom(FoAtomKind::R, {0, 1, 2}),
                                                           fo_atom(FoAtomKind::R, {0, 2, 1})))))});
  // visser: ∀u∀x∀z(uRxz → x≤u ∧ z≤u)
  rows.push_back(
      {"p * q |- p & q",
       fo_forall(0, Sort::One,
                 fo_forall(1, Sort::One,
                           fo_forall(2, Sort::One,
                                     fo_implies(fo_atom(FoAtomKind::R, {0, 1, 2}),
                                                fo_and({fo_atom(FoAtomKind::Leq, {1, 0}, Sort::One),
                                                        fo_atom(FoAtomKind::Leq, {2, 0},
                                                                Sort::One)})))))});
  // left unit elimination: ∀x∀u∀z(u∈U ∧ xRuz → z≤x)
  rows.push_back(
      {"t * p |- p",
       fo_forall(0, Sort::One,
                 fo_forall(1, Sort::One,
                           fo_forall(2, Sort::One,
                                     fo_implies(fo_and({fo_atom(FoAtomKind::U, {1}),
                                                        fo_atom(FoAtomKind::R, {0, 1, 2})}),
                                                fo_atom(FoAtomKind::Leq, {2, 0}, Sort::One)))))});
  // left unit introduction: ∀x∃u(u∈U ∧ xRux)
  rows.push_back({"p |- t * p",
                  fo_forall(0, Sort::One,
                            fo_exists(1, Sort::One,
                                      fo_and({fo_atom(FoAtomKind::U, {1}),
                                              fo_atom(FoAtomKind::R, {0, 1, 0})})))});
  for (auto& row : rows) {
    auto run = correspond(parse_sequent(row.input, vars), "LK_*", SidePolicy::Translate);
    INFO(row.input);
    REQUIRE(run.ok);
    for (auto& f : frames)
      CHECK(fo_model_check(f, run.result.formula).holds ==
            fo_model_check(f, row.table_form).holds);
  }
}

TEST_CASE("verify_correspondence: exchange matches over sampled LK_* frames") {
  auto frames = sample_lk_frames(55, 40, 3);
  VarTable vars;
  auto s = parse_sequent("p1 * p2 |- p2 * p1", vars);
  auto run = correspond(s, "LK_*", SidePolicy::Translate);
  REQUIRE(run.ok);
  auto rep = verify_correspondence(frames, s, "LK_*", run);
  CHECK(rep.ok());
  CHECK(rep.frames_checked == frames.size());
}

TEST_CASE("verify_correspondence: contraction is false on a non-idempotent frame, both sides") {
  // x·x = e for the non-unit element: contraction fails
  std::vector<std::vector<int>> tbl = {{0, 1}, {1, 0}};
  auto f = magma_frame(tbl, 0);
  VarTable vars;
  auto s = parse_sequent("p |- p * p", vars);
  auto run = correspond(s, "LK_*", SidePolicy::Translate);
  REQUIRE(run.ok);
  CHECK(!fo_model_check(f, run.result.formula).holds);
  CHECK(!check_validity(f, s).valid);
  auto rep = verify_correspondence({f}, s, "LK_*", run);
  CHECK(rep.ok());
}

TEST_CASE("del-sorted minimal instantiation is flagged") {
  VarTable vars;
  auto run = correspond(parse_sequent("p |- t -> p", vars), "LK_*", SidePolicy::Cotranslate,
                        TransMode::TRight);
  REQUIRE(run.ok);
  CHECK(run.result.used_del_instantiation);
}

TEST_CASE("association correspondents match the composition-reading constraint") {
  // ∃u(xRz1u ∧ uRz2z3) iff ∃u(uRz1z2 ∧ xRuz3), directionwise
  auto frames = sample_lk_frames(654, 40, 3);
  VarTable vars;
  auto ltr_run = correspond(parse_sequent("p2 * p3 |- p1 -> ((p1 * p2) * p3)", vars), "LK_*",
                            SidePolicy::Translate, TransMode::Residual);
  auto rtl_run = correspond(parse_sequent("p1 * p2 |- (p1 * (p2 * p3)) <- p3", vars), "LK_*",
                            SidePolicy::Translate, TransMode::Residual);
  REQUIRE(ltr_run.ok);
  REQUIRE(rtl_run.ok);
  // left = ∃u(xRz1u ∧ uRz2z3), right = ∃u(uRz1z2 ∧ xRuz3)
  auto left = fo_exists(10, Sort::One,
                        fo_and({fo_atom(FoAtomKind::R, {0, 1, 10}),
                                fo_atom(FoAtomKind::R, {10, 2, 3})}));
  auto right = fo_exists(10, Sort::One,
                         fo_and({fo_atom(FoAtomKind::R, {10, 1, 2}),
                                 fo_atom(FoAtomKind::R, {0, 10, 3})}));
  auto close = [&](FoPtr body) {
    for (int v = 3; v >= 0; --v) body = fo_forall(v, Sort::One, body);
    return body;
  };
  auto ltr_table = close(fo_implies(left, right));
  auto rtl_table = close(fo_implies(right, left));
  for (auto& f : frames) {
    CHECK(fo_model_check(f, ltr_run.result.formula).holds ==
          fo_model_check(f, ltr_table).holds);
    CHECK(fo_model_check(f, rtl_run.result.formula).holds ==
          fo_model_check(f, rtl_table).holds);
  }
}

TEST_CASE("compute_correspondent rejects systems not in canonical form") {
  InequalitySystem sys;
  sys.sort = Sort::One;
  sys.lhs = mprime(mprime(mvar(0, Sort::One)));  // P'' on the left: not simple
  sys.rhs = mvar(0, Sort::One);
  CHECK_THROWS_WITH_AS(compute_correspondent(sys, frame_class("LK_*")),
                       doctest::Contains("NotInCanonicalForm"), FrameError);
}

TEST_CASE("fo_model_check reports missing relations") {
  SortedFrame f;
  f.n1 = f.nD = 1;
  f.irow = {0};
  f.finish();
  auto phi = fo_forall(0, Sort::One, fo_atom(FoAtomKind::R, {0, 0, 0}));
  CHECK_THROWS_WITH_AS(fo_model_check(f, phi), doctest::Contains("MissingRelation"), FrameError);
}

TEST_CASE("unit-row correspondents track validity when U is displaced off the unit") {
  // Magma frames keep F1/M/RES whatever U is; moving U off the real unit
  // exercises the false side of the unit rows.
  auto base = sample_lk_frames(777, 40, 3);
  VarTable vars;
  std::vector<std::pair<std::string, std::string>> rows = {
      {"left-unit-elim", "t * p |- p"},
      {"left-unit-intro", "p |- t * p"},
      {"t-imp-unit", "p |- t -> p"},
  };
  int false_sides = 0;
  for (auto& [name, text] : rows) {
    auto seq = parse_sequent(text, vars);
    auto run = correspond(seq, "LK_*", SidePolicy::Auto,
                          name == "t-imp-unit" ? std::optional<TransMode>(TransMode::TRight)
                                               : std::nullopt);
    REQUIRE(run.ok);
    for (auto& f0 : base) {
      for (int m = 0; m < f0.n1; ++m) {
        SortedFrame f = f0;
        f.u = bit(m);  // singletons are stable on classical frames
        bool valid = check_validity(f, seq).valid;
        bool fo = fo_model_check(f, run.result.formula).holds;
        INFO(name, " with U={point ", m, "}");
        CHECK(valid == fo);
        if (!valid) ++false_sides;
      }
    }
  }
  CHECK(false_sides > 0);  // the family genuinely exercises failures
}

TEST_CASE("translation- and cotranslation-side correspondents agree frame by frame") {
  VarTable vars;
  auto seq = parse_sequent("p |- t -> p", vars);
  auto via_translate =
      correspond(seq, "PUl", SidePolicy::Translate, TransMode::TRight);
  auto via_cotranslate =
      correspond(seq, "PUl", SidePolicy::Cotranslate, TransMode::TRight);
  REQUIRE(via_translate.ok);
  REQUIRE(via_cotranslate.ok);
  CHECK(via_translate.result.text != via_cotranslate.result.text);  // different shapes
  Rng rng(888);
  for (int i = 0; i < 150; ++i) {
    auto f = random_frame(rng, 3, false, false);
    CHECK(fo_model_check(f, via_translate.result.formula).holds ==
          fo_model_check(f, via_cotranslate.result.formula).holds);
  }
}

TEST_CASE("bare unconstrained consequent variables are rejected") {
  InequalitySystem sys;
  sys.sort = Sort::One;
  sys.lhs = mvar(0, Sort::One);
  sys.rhs = modot(mvar(0, Sort::One), mvar(0, Sort::One));  // P ≤ P⊙P, no guard
  REQUIRE(is_canonical_form(sys));
  CHECK_THROWS_WITH_AS(compute_correspondent(sys, frame_class("LK_*")),
                       doctest::Contains("unprimed in the consequent"), FrameError);
}
