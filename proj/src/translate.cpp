#include "nlogic/translate.hpp"

namespace nlogic {

Translated translate(const FormulaPtr& f, TransMode mode) {
  switch (f->kind) {
    case FKind::Var: {
      auto p = mvar(f->var, Sort::One);
      return {mprime(mprime(p)), mprime(p)};
    }
    case FKind::Top: return {mtop(Sort::One), mprime(mprime(mbot(Sort::Del)))};
    case FKind::Bot: return {mprime(mprime(mbot(Sort::One))), mtop(Sort::Del)};
    case FKind::Unit: return {muconst(), mprime(muconst())};
    case FKind::And: {
      auto l = translate(f->a, mode), r = translate(f->b, mode);
      return {mmeet(l.bullet, r.bullet), mprime(mprime(mjoin(l.circ, r.circ)))};
    }
    case FKind::Or: {
      auto l = translate(f->a, mode), r = translate(f->b, mode);
      return {mprime(mprime(mjoin(l.bullet, r.bullet))), mmeet(l.circ, r.circ)};
    }
    case FKind::Imp: {
      auto l = translate(f->a, mode), r = translate(f->b, mode);
      if (mode == TransMode::Residual) {
        auto core = mrspoon(l.bullet, r.bullet);
        return {core, mprime(core)};
      }
      auto core = mtright(l.bullet, r.circ);
      return {mprime(core), mprime(mprime(core))};
    }
    case FKind::Limp: {
      auto l = translate(f->a, mode), r = translate(f->b, mode);  // f = a ⟜ b
      if (mode == TransMode::Residual) {
        auto core = mlspoon(l.bullet, r.bullet);
        return {core, mprime(core)};
      }
      auto core = mtleft(l.circ, r.bullet);
      return {mprime(core), mprime(mprime(core))};
    }
    case FKind::Prod: {
      auto l = translate(f->a, mode), r = translate(f->b, mode);
      auto core = modot(l.bullet, r.bullet);
      return {mprime(mprime(core)), mprime(core)};
    }
  }
  throw std::logic_error("translate: bad node");
}

SortedSequent translate_sequent(const Sequent& s, TransMode mode) {
  return {translate(s.lhs, mode).bullet, translate(s.rhs, mode).bullet, Sort::One};
}

SortedSequent cotranslate_sequent(const Sequent& s, TransMode mode) {
  return {translate(s.rhs, mode).circ, translate(s.lhs, mode).circ, Sort::Del};
}

namespace {

// Predicate ids pack the modal variable index and its sort.
int pred_id(int var, Sort s) { return var * 2 + (s == Sort::One ? 0 : 1); }

FoPtr st(const MTermPtr& t, int point, int& fresh) {
  switch (t->kind) {
    case MKind::Var:
      return fo_atom(FoAtomKind::Pred, {point}, t->sort, pred_id(t->var, t->sort));
    case MKind::Top: return fo_true();
    case MKind::Bot: return fo_false();
    case MKind::UConst: return fo_atom(FoAtomKind::U, {point});
    case MKind::Meet: return fo_and({st(t->a, point, fresh), st(t->b, point, fresh)});
    case MKind::Join: return fo_or({st(t->a, point, fresh), st(t->b, point, fresh)});
    case MKind::Prime: {
      int other = fresh++;
      auto inner = st(t->a, other, fresh);
      // u ⊨ β' iff ∀v(uIv → ¬ v⊨β); the I-atom takes its sort-1 point first.
      auto iatom = t->sort == Sort::One ? fo_atom(FoAtomKind::I, {point, other})
                                        : fo_atom(FoAtomKind::I, {other, point});
      return fo_forall(other, opp(t->sort), fo_implies(iatom, fo_not(inner)));
    }
    case MKind::TRight: {
      int x = fresh++, y = fresh++;
      auto body = fo_and({fo_atom(FoAtomKind::T, {point, x, y}), st(t->a, x, fresh),
                          st(t->b, y, fresh)});
      return fo_exists(x, Sort::One, fo_exists(y, Sort::Del, body));
    }
    case MKind::TLeft: {
      int y = fresh++, x = fresh++;
      auto body = fo_and({fo_atom(FoAtomKind::S, {point, y, x}), st(t->a, y, fresh),
                          st(t->b, x, fresh)});
      return fo_exists(y, Sort::Del, fo_exists(x, Sort::One, body));
    }
    case MKind::Odot: {
      int z1 = fresh++, z2 = fresh++;
      auto body = fo_and({fo_atom(FoAtomKind::R, {point, z1, z2}), st(t->a, z1, fresh),
                          st(t->b, z2, fresh)});
      return fo_exists(z1, Sort::One, fo_exists(z2, Sort::One, body));
    }
    case MKind::RSpoon: {
      // x ⊨ α⊸η iff ∀u,w,z(u⊨α ∧ x≤w ∧ zRuw → z⊨η)
      int u = fresh++, w = fresh++, z = fresh++;
      auto ante = fo_and({st(t->a, u, fresh), fo_atom(FoAtomKind::Leq, {point, w}, Sort::One),
                          fo_atom(FoAtomKind::R, {z, u, w})});
      auto body = fo_implies(ante, st(t->b, z, fresh));
      return fo_forall(u, Sort::One, fo_forall(w, Sort::One, fo_forall(z, Sort::One, body)));
    }
    case MKind::LSpoon: {
      // x ⊨ η⟜α iff ∀u,w,z(x≤w ∧ u⊨α ∧ zRwu → z⊨η)
      int u = fresh++, w = fresh++, z = fresh++;
      auto ante = fo_and({fo_atom(FoAtomKind::Leq, {point, w}, Sort::One), st(t->b, u, fresh),
                          fo_atom(FoAtomKind::R, {z, w, u})});
      auto body = fo_implies(ante, st(t->a, z, fresh));
      return fo_forall(u, Sort::One, fo_forall(w, Sort::One, fo_forall(z, Sort::One, body)));
    }
  }
  throw std::logic_error("standard_translation: bad node");
}

}  // namespace

FoPtr standard_translation(const MTermPtr& t, int point_var, int& fresh) {
  return st(t, point_var, fresh);
}

FoPtr second_order_translation(const MTermPtr& t, Sort point_sort) {
  int fresh = 1;
  int point = 0;
  auto body = st(t, point, fresh);
  FoPtr out = fo_forall(point, point_sort, body);
  auto vars = mvars(t);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    out = fo_forall_pred(pred_id(it->first, it->second), it->second, out);
  return out;
}

}  // namespace nlogic
