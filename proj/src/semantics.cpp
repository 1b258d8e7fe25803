#include "nlogic/semantics.hpp"

#include <algorithm>
#include <sstream>

namespace nlogic {

void ObjectModel::set(int var, Bits subset) {
  Bits closed = frame->closure(Sort::One, subset);
  if (closed != subset)
    notes.push_back("valuation for variable #" + std::to_string(var) +
                    " was not stable; closed it");
  val[var] = closed;
}

Bits ObjectModel::get(int var) const {
  auto it = val.find(var);
  if (it != val.end()) return it->second;
  return frame->closure(Sort::One, 0);
}

Extent eval_object(const ObjectModel& m, const FormulaPtr& f) {
  const SortedFrame& fr = *m.frame;
  auto from_extent = [&](Bits e) { return Extent{e, fr.prime(Sort::One, e)}; };
  auto from_coextent = [&](Bits c) { return Extent{fr.prime(Sort::Del, c), c}; };
  switch (f->kind) {
    case FKind::Var: return from_extent(m.get(f->var));
    case FKind::Top: return from_extent(fr.full(Sort::One));
    case FKind::Bot: return from_coextent(fr.full(Sort::Del));
    case FKind::Unit:
      // ⟦t⟧ is U itself; frames outside the unit classes may declare a
      // non-stable U, which the class checkers report.
      if (!fr.has_u) throw FrameError("MissingRelation", "t needs U");
      return from_extent(fr.u);
    case FKind::And: {
      auto l = eval_object(m, f->a), r = eval_object(m, f->b);
      return from_extent(l.extent & r.extent);
    }
    case FKind::Or: {
      auto l = eval_object(m, f->a), r = eval_object(m, f->b);
      return from_coextent(l.co_extent & r.co_extent);
    }
    case FKind::Imp: {
      auto l = eval_object(m, f->a), r = eval_object(m, f->b);
      Bits ext = 0;
      for (int x = 0; x < fr.n1; ++x) {
        bool in = true;
        for (int z : members(l.extent))
          for (int y : members(r.co_extent))
            if (!has(fr.dual_sec('T', z, y), x)) in = false;
        if (in) ext |= bit(x);
      }
      return from_extent(ext);
    }
    case FKind::Limp: {  // f = ψ ⟜ φ with a=ψ, b=φ
      auto l = eval_object(m, f->a), r = eval_object(m, f->b);
      Bits ext = 0;
      for (int x = 0; x < fr.n1; ++x) {
        bool in = true;
        for (int v : members(l.co_extent))
          for (int z : members(r.extent))
            if (!has(fr.dual_sec('S', v, z), x)) in = false;
        if (in) ext |= bit(x);
      }
      return from_extent(ext);
    }
    case FKind::Prod: {
      auto l = eval_object(m, f->a), r = eval_object(m, f->b);
      Bits co = 0;
      for (int v = 0; v < fr.nD; ++v) {
        bool in = true;
        for (int x : members(l.extent))
          for (int z : members(r.extent))
            if (!has(fr.dual_sec('R', x, z), v)) in = false;
        if (in) co |= bit(v);
      }
      return from_coextent(co);
    }
  }
  throw std::logic_error("eval_object: bad node");
}

SequentCheck check_sequent(const ObjectModel& m, const Sequent& s) {
  auto l = eval_object(m, s.lhs), r = eval_object(m, s.rhs);
  Bits gap = l.extent & ~r.extent;
  if (!gap) return {true, -1};
  return {false, members(gap)[0]};
}

ValidityResult check_validity(const SortedFrame& f, const Sequent& s, int max_vars,
                              long long max_assignments) {
  auto vars = formula_vars(s.lhs);
  for (int v : formula_vars(s.rhs))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  if (static_cast<int>(vars.size()) > max_vars)
    throw FrameError("SearchSpaceTooLarge",
                     "sequent has " + std::to_string(vars.size()) + " variables (bound " +
                         std::to_string(max_vars) + ")");
  auto stables = f.stable_sets(Sort::One);
  long long total = 1;
  for (size_t i = 0; i < vars.size(); ++i) {
    total *= static_cast<long long>(stables.size());
    if (total > max_assignments)
      throw FrameError("SearchSpaceTooLarge",
                       "more than " + std::to_string(max_assignments) + " stable valuations");
  }
  ValidityResult out;
  std::vector<size_t> pick(vars.size(), 0);
  while (true) {
    ObjectModel m;
    m.frame = &f;
    for (size_t i = 0; i < vars.size(); ++i) m.val[vars[i]] = stables[pick[i]].members;
    ++out.assignments;
    auto chk = check_sequent(m, s);
    if (!chk.holds) {
      out.valid = false;
      out.counter_valuation = m.val;
      out.witness = chk.witness;
      return out;
    }
    size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < stables.size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
    if (vars.empty()) break;
  }
  return out;
}

Bits SortedModel::get(int var, Sort s) const {
  const auto& m = s == Sort::One ? val1 : valD;
  auto it = m.find(var);
  return it == m.end() ? 0 : it->second;
}

Bits eval_sorted(const SortedModel& m, const MTermPtr& t) {
  const SortedFrame& fr = *m.frame;
  switch (t->kind) {
    case MKind::Var: return m.get(t->var, t->sort);
    case MKind::Top: return fr.full(t->sort);
    case MKind::Bot: return 0;
    case MKind::UConst:
      if (!fr.has_u) throw FrameError("MissingRelation", "u needs U");
      return fr.u;
    case MKind::Meet: return eval_sorted(m, t->a) & eval_sorted(m, t->b);
    case MKind::Join: return eval_sorted(m, t->a) | eval_sorted(m, t->b);
    case MKind::Prime: return fr.prime(t->a->sort, eval_sorted(m, t->a));
    case MKind::TRight: return fr.im_tright(eval_sorted(m, t->a), eval_sorted(m, t->b));
    case MKind::TLeft: return fr.im_tleft(eval_sorted(m, t->a), eval_sorted(m, t->b));
    case MKind::Odot: return fr.im_odot(eval_sorted(m, t->a), eval_sorted(m, t->b));
    case MKind::RSpoon: {
      Bits alpha = eval_sorted(m, t->a), eta = eval_sorted(m, t->b);
      Bits out = 0;
      for (int x = 0; x < fr.n1; ++x) {
        bool in = true;
        for (int u : members(alpha))
          for (int w = 0; w < fr.n1 && in; ++w) {
            if (!fr.leq(Sort::One, x, w)) continue;
            if (fr.sec('R')[u][w] & ~eta) in = false;
          }
        if (in) out |= bit(x);
      }
      return out;
    }
    case MKind::LSpoon: {
      Bits eta = eval_sorted(m, t->a), alpha = eval_sorted(m, t->b);
      Bits out = 0;
      for (int x = 0; x < fr.n1; ++x) {
        bool in = true;
        for (int u : members(alpha))
          for (int w = 0; w < fr.n1 && in; ++w) {
            if (!fr.leq(Sort::One, x, w)) continue;
            if (fr.sec('R')[w][u] & ~eta) in = false;
          }
        if (in) out |= bit(x);
      }
      return out;
    }
  }
  throw std::logic_error("eval_sorted: bad node");
}

namespace {

ObjectModel induced_object_model(const SortedFrame& f, const SortedModel& sv) {
  ObjectModel m;
  m.frame = &f;
  for (auto& [var, bits] : sv.val1) m.val[var] = f.closure(Sort::One, bits);
  return m;
}

}  // namespace

FullAbstractionReport check_full_abstraction(const SortedFrame& f, const FormulaPtr& phi,
                                             const SortedModel& sorted_val) {
  FullAbstractionReport r;
  auto tr = translate(phi, TransMode::TRight);
  ObjectModel n = induced_object_model(f, sorted_val);
  auto obj = eval_object(n, phi);
  Bits bullet = eval_sorted(sorted_val, tr.bullet);
  Bits circ = eval_sorted(sorted_val, tr.circ);
  Bits circ_prime = f.prime(Sort::Del, circ);
  Bits bullet_cl = f.closure(Sort::One, bullet);
  if (!(bullet == obj.extent && circ_prime == obj.extent && bullet_cl == obj.extent)) {
    r.extents_ok = false;
    std::ostringstream os;
    os << "extents differ: ⟦φ•⟧=" << bullet << " ⟦φ⟧=" << obj.extent << " ⟦(φ∘)'⟧=" << circ_prime
       << " ⟦(φ•)''⟧=" << bullet_cl;
    r.detail = os.str();
  }
  Bits bullet_prime = f.prime(Sort::One, bullet);
  Bits circ_cl = f.closure(Sort::Del, circ);
  if (!(circ == obj.co_extent && bullet_prime == obj.co_extent && circ_cl == obj.co_extent)) {
    r.coextents_ok = false;
    r.detail += " co-extents differ";
  }
  return r;
}

FullAbstractionReport check_full_abstraction_sequent(const SortedFrame& f, const Sequent& s,
                                                     const SortedModel& sorted_val) {
  FullAbstractionReport r = check_full_abstraction(f, s.lhs, sorted_val);
  auto r2 = check_full_abstraction(f, s.rhs, sorted_val);
  r.extents_ok = r.extents_ok && r2.extents_ok;
  r.coextents_ok = r.coextents_ok && r2.coextents_ok;
  auto trl = translate(s.lhs, TransMode::TRight), trr = translate(s.rhs, TransMode::TRight);
  ObjectModel n = induced_object_model(f, sorted_val);
  bool object_side = check_sequent(n, s).holds;
  bool bullet_side =
      subset(eval_sorted(sorted_val, trl.bullet), eval_sorted(sorted_val, trr.bullet));
  bool circ_side =
      subset(eval_sorted(sorted_val, trr.circ), eval_sorted(sorted_val, trl.circ));
  if (object_side != bullet_side || object_side != circ_side) {
    r.sequents_ok = false;
    r.detail += " sequent readings diverge";
  }
  return r;
}

ObjectModel load_valuation(const SortedFrame& f, const std::string& text, VarTable& vars) {
  ObjectModel m;
  m.frame = &f;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head.back() != ':')
      throw FrameError("ParseError",
                       "valuation line " + std::to_string(lineno) + ": want 'p1: x0 x1'");
    head.pop_back();
    int var = vars.intern(head);
    Bits bits = 0;
    std::string w;
    while (ls >> w) {
      int idx = -1;
      for (int i = 0; i < f.n1; ++i)
        if (f.names1[i] == w) idx = i;
      if (idx < 0)
        throw FrameError("ParseError", "valuation line " + std::to_string(lineno) +
                                           ": unknown sort-1 point '" + w + "'");
      bits |= bit(idx);
    }
    m.set(var, bits);
  }
  return m;
}

}  // namespace nlogic
