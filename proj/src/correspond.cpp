#include "nlogic/correspond.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace nlogic {

namespace {

int pred_id(int var, Sort s) { return var * 2 + (s == Sort::One ? 0 : 1); }

struct RuleError : FrameError {
  explicit RuleError(const std::string& msg) : FrameError("RuleNotApplicable", msg) {}
};

}  // namespace

bool InequalitySystem::constrained(int var, Sort s) const {
  for (auto& c : stb)
    if (c.var == var && c.sort == s) return true;
  for (auto& c : cvc)
    if (c.qvar == var && c.qsort() == s) return true;
  return false;
}

std::string InequalitySystem::to_string() const {
  std::ostringstream os;
  os << "⟨";
  bool first = true;
  for (auto& c : stb) {
    if (!first) os << ", ";
    os << mprint_var(c.var, c.sort) << "''≤" << mprint_var(c.var, c.sort);
    first = false;
  }
  for (auto& c : cvc) {
    if (!first) os << ", ";
    os << mprint_var(c.qvar, c.qsort()) << "=" << mprint_var(c.pvar, c.psort) << "'";
    first = false;
  }
  os << (first ? "" : " ") << "∣ " << mprint(lhs) << " ≤_" << sort_name(sort) << " "
     << mprint(rhs) << "⟩";
  return os.str();
}

InequalitySystem to_system(const SortedSequent& seq) {
  InequalitySystem sys;
  sys.lhs = seq.lhs;
  sys.rhs = seq.rhs;
  sys.sort = seq.sort;
  return sys;
}

namespace {

// --- term predicates -------------------------------------------------------

bool is_double_prime(const MTermPtr& t) {
  return t->kind == MKind::Prime && t->a->kind == MKind::Prime;
}

// Does the term denote a Galois set in every model satisfying the system's
// constraints? Primed terms and ⊤ always do; constrained variables do by
// their guards; intersections of such do; the residual implications of such
// do on the frame classes this engine targets (checked empirically by the
// rule-soundness suite).
bool denotes_galois(const MTermPtr& t, const InequalitySystem& sys) {
  switch (t->kind) {
    case MKind::Prime:
    case MKind::Top: return true;
    case MKind::Var: return sys.constrained(t->var, t->sort);
    case MKind::Meet: return denotes_galois(t->a, sys) && denotes_galois(t->b, sys);
    case MKind::RSpoon:
    case MKind::LSpoon: return denotes_galois(t->a, sys) && denotes_galois(t->b, sys);
    default: return false;
  }
}

// --- R5 rewrite pass --------------------------------------------------------

struct Rewrite {
  MTermPtr term;
  std::string rule;
};

std::optional<Rewrite> rewrite_here(const MTermPtr& t, const InequalitySystem& sys) {
  // R5.1  ξ''' → ξ'
  if (t->kind == MKind::Prime && t->a->kind == MKind::Prime && t->a->a->kind == MKind::Prime)
    return Rewrite{t->a->a, "R5.1"};
  // R5.2  (η∩ζ)'' → η∩ζ for Galois η,ζ ; (η∪ζ)' → η'∩ζ'
  if (is_double_prime(t) && t->a->a->kind == MKind::Meet &&
      denotes_galois(t->a->a->a, sys) && denotes_galois(t->a->a->b, sys))
    return Rewrite{t->a->a, "R5.2"};
  if (t->kind == MKind::Prime && t->a->kind == MKind::Join)
    return Rewrite{mmeet(mprime(t->a->a), mprime(t->a->b)), "R5.2"};
  // R5.3  P⊸Q → (P▷Q')' for constrained P,Q
  if (t->kind == MKind::RSpoon && t->a->kind == MKind::Var && t->b->kind == MKind::Var &&
      sys.constrained(t->a->var, Sort::One) && sys.constrained(t->b->var, Sort::One))
    return Rewrite{mprime(mtright(t->a, mprime(t->b))), "R5.3"};
  // R5.4  P2⊸(P1⊸Q) → P1⊙P2⊸Q for variables
  if (t->kind == MKind::RSpoon && t->a->kind == MKind::Var && t->b->kind == MKind::RSpoon &&
      t->b->a->kind == MKind::Var && t->b->b->kind == MKind::Var)
    return Rewrite{mrspoon(modot(t->b->a, t->a), t->b->b), "R5.4"};
  // R5.5  Q⟜P → (Q'⊲P)' for constrained P,Q
  if (t->kind == MKind::LSpoon && t->a->kind == MKind::Var && t->b->kind == MKind::Var &&
      sys.constrained(t->a->var, Sort::One) && sys.constrained(t->b->var, Sort::One))
    return Rewrite{mprime(mtleft(mprime(t->a), t->b)), "R5.5"};
  // R5.6  (Q⟜P2)⟜P1 → Q⟜(P1⊙P2) for variables
  if (t->kind == MKind::LSpoon && t->a->kind == MKind::LSpoon && t->b->kind == MKind::Var &&
      t->a->a->kind == MKind::Var && t->a->b->kind == MKind::Var)
    return Rewrite{mlspoon(t->a->a, modot(t->b, t->a->b)), "R5.6"};
  return std::nullopt;
}

std::optional<Rewrite> rewrite_first(const MTermPtr& t, const InequalitySystem& sys) {
  if (auto r = rewrite_here(t, sys)) return r;
  if (t->a) {
    if (auto r = rewrite_first(t->a, sys)) {
      auto copy = std::make_shared<MTerm>(*t);
      copy->a = r->term;
      return Rewrite{copy, r->rule};
    }
  }
  if (t->b) {
    if (auto r = rewrite_first(t->b, sys)) {
      auto copy = std::make_shared<MTerm>(*t);
      copy->b = r->term;
      return Rewrite{copy, r->rule};
    }
  }
  return std::nullopt;
}

// Replace every doubly-primed occurrence P'' of a variable by P.
MTermPtr strip_dd_var(const MTermPtr& t, int var, Sort s) {
  if (is_double_prime(t) && t->a->a->kind == MKind::Var && t->a->a->var == var &&
      t->a->a->sort == s)
    return t->a->a;
  if (!t->a && !t->b) return t;
  auto copy = std::make_shared<MTerm>(*t);
  if (t->a) copy->a = strip_dd_var(t->a, var, s);
  if (t->b) copy->b = strip_dd_var(t->b, var, s);
  return copy;
}

// Replace every occurrence of P' by the fresh variable Q.
MTermPtr replace_primed_var(const MTermPtr& t, int var, Sort s, int qvar) {
  if (t->kind == MKind::Prime && t->a->kind == MKind::Var && t->a->var == var &&
      t->a->sort == s)
    return mvar(qvar, opp(s));
  if (!t->a && !t->b) return t;
  auto copy = std::make_shared<MTerm>(*t);
  if (t->a) copy->a = replace_primed_var(t->a, var, s, qvar);
  if (t->b) copy->b = replace_primed_var(t->b, var, s, qvar);
  return copy;
}

int max_var_id(const InequalitySystem& sys) {
  int m = -1;
  for (auto& [v, s] : mvars(sys.lhs)) m = std::max(m, v);
  for (auto& [v, s] : mvars(sys.rhs)) m = std::max(m, v);
  for (auto& c : sys.stb) m = std::max(m, c.var);
  for (auto& c : sys.cvc) m = std::max(m, std::max(c.qvar, c.pvar));
  return m;
}

std::vector<std::pair<int, Sort>> main_vars(const InequalitySystem& sys) {
  auto vars = mvars(sys.lhs);
  for (auto& v : mvars(sys.rhs))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  return vars;
}

VarOcc occ_in_main(const InequalitySystem& sys, int var, Sort s) {
  VarOcc l = occurrences(sys.lhs, var, s);
  VarOcc r = occurrences(sys.rhs, var, s);
  VarOcc o;
  o.bare = l.bare || r.bare;
  o.single_primed = l.single_primed || r.single_primed;
  o.double_primed = l.double_primed || r.double_primed;
  o.deeper = l.deeper || r.deeper;
  o.occurrences = l.occurrences + r.occurrences;
  return o;
}

}  // namespace

InequalitySystem apply_rule(const InequalitySystem& sys, const std::string& rule_id,
                            int position) {
  if (rule_id == "R1") {
    InequalitySystem out = sys;
    auto vars = main_vars(sys);
    auto present = [&](int var, Sort s) {
      return std::find(vars.begin(), vars.end(), std::make_pair(var, s)) != vars.end();
    };
    size_t before = out.stb.size() + out.cvc.size();
    std::erase_if(out.stb, [&](const StbConstraint& c) { return !present(c.var, c.sort); });
    std::erase_if(out.cvc, [&](const CvcConstraint& c) { return !present(c.qvar, c.qsort()); });
    if (out.stb.size() + out.cvc.size() == before)
      throw RuleError("R1: no constraint for an absent variable");
    return out;
  }
  if (rule_id == "R2" || rule_id == "R3") {
    if (!is_double_prime(sys.lhs)) throw RuleError(rule_id + ": left side is not doubly primed");
    if (!denotes_galois(sys.rhs, sys))
      throw RuleError(rule_id + ": right side is not Galois in context");
    InequalitySystem out = sys;
    out.lhs = sys.lhs->a->a;
    return out;
  }
  if (rule_id == "R4") {
    InequalitySystem out = sys;
    bool any = false;
    for (auto& [v, s] : main_vars(sys)) {
      VarOcc o = occ_in_main(sys, v, s);
      if (o.occurrences > 0 && o.double_primed && !o.bare && !o.single_primed && !o.deeper) {
        out.lhs = strip_dd_var(out.lhs, v, s);
        out.rhs = strip_dd_var(out.rhs, v, s);
        if (!out.constrained(v, s)) out.stb.push_back({v, s});
        any = true;
      }
    }
    if (!any) throw RuleError("R4: no uniformly doubly-primed variable");
    return out;
  }
  if (rule_id == "R5") {
    auto sl = rewrite_first(sys.lhs, sys);
    if (sl) {
      InequalitySystem out = sys;
      out.lhs = sl->term;
      return out;
    }
    auto sr = rewrite_first(sys.rhs, sys);
    if (sr) {
      InequalitySystem out = sys;
      out.rhs = sr->term;
      return out;
    }
    throw RuleError("R5: no rewrite applies");
  }
  if (rule_id == "R6") {
    auto vars = main_vars(sys);
    int k = 0;
    for (auto& [v, s] : vars) {
      VarOcc o = occ_in_main(sys, v, s);
      if (o.occurrences > 0 && o.single_primed && !o.bare && !o.double_primed && !o.deeper) {
        if (k++ < position) continue;
        InequalitySystem out = sys;
        int q = max_var_id(sys) + 1;
        out.lhs = replace_primed_var(out.lhs, v, s, q);
        out.rhs = replace_primed_var(out.rhs, v, s, q);
        out.cvc.push_back({q, v, s});
        return out;
      }
    }
    throw RuleError("R6: no variable occurring only single-primed");
  }
  if (rule_id == "R7") {
    if (sys.sort != Sort::One) throw RuleError("R7: needs a 1-sequent");
    InequalitySystem out = sys;
    if (sys.rhs->kind == MKind::RSpoon) {
      out.lhs = modot(sys.rhs->a, sys.lhs);
      out.rhs = sys.rhs->b;
      return out;
    }
    if (sys.rhs->kind == MKind::LSpoon) {
      out.lhs = modot(sys.lhs, sys.rhs->b);
      out.rhs = sys.rhs->a;
      return out;
    }
    throw RuleError("R7: right side is not a residual implication");
  }
  throw FrameError("UnknownRule", rule_id);
}

namespace {

bool lhs_grammar_ok(const MTermPtr& t) {
  switch (t->kind) {
    case MKind::Var:
    case MKind::Top:
    case MKind::Bot:
    case MKind::UConst: return true;
    case MKind::Meet:
    case MKind::TRight:
    case MKind::TLeft:
    case MKind::Odot: return lhs_grammar_ok(t->a) && lhs_grammar_ok(t->b);
    default: return false;
  }
}

}  // namespace

bool is_canonical_form(const InequalitySystem& sys) {
  if (!lhs_grammar_ok(sys.lhs)) return false;
  if (!positive(sys.rhs)) return false;
  auto check = [&](int var, Sort s) {
    VarOcc o = occ_in_main(sys, var, s);
    return !(o.single_primed || o.double_primed || o.deeper);
  };
  for (auto& c : sys.stb)
    if (!check(c.var, c.sort)) return false;
  for (auto& c : sys.cvc)
    if (!check(c.qvar, c.qsort())) return false;
  return true;
}

namespace {

struct Searcher {
  int depth_limit;
  std::set<std::string> visited;
  std::vector<ReductionStep> best_trace;

  bool dfs(InequalitySystem sys, std::vector<ReductionStep>& trace, Reduction& out, int depth) {
    // R5 rewrites run to a fixpoint first.
    while (true) {
      InequalitySystem next = sys;
      std::string rule;
      if (auto r = rewrite_first(sys.lhs, sys)) {
        next.lhs = r->term;
        rule = r->rule;
      } else if (auto r2 = rewrite_first(sys.rhs, sys)) {
        next.rhs = r2->term;
        rule = r2->rule;
      } else {
        break;
      }
      trace.push_back({rule, "", sys, next});
      sys = next;
    }
    if (is_canonical_form(sys)) {
      // Tidy away constraints for variables that have disappeared.
      try {
        InequalitySystem tidy = apply_rule(sys, "R1");
        trace.push_back({"R1", "", sys, tidy});
        sys = tidy;
      } catch (const RuleError&) {
      }
      out.ok = true;
      out.system = sys;
      out.trace = trace;
      return true;
    }
    if (depth >= depth_limit) return false;
    std::string key = sys.to_string();
    if (!visited.insert(key).second) return false;
    if (trace.size() > best_trace.size()) best_trace = trace;

    static const char* order[] = {"R7", "R4", "R2", "R6"};
    for (const char* rule : order) {
      // R6 may have several candidate variables; others are deterministic.
      int max_pos = std::string(rule) == "R6" ? 4 : 1;
      for (int pos = 0; pos < max_pos; ++pos) {
        InequalitySystem next;
        std::string rule_id = rule;
        try {
          next = apply_rule(sys, rule, pos);
        } catch (const RuleError&) {
          continue;
        }
        if (rule_id == "R2") {
          // R2 proper strips against an intersection of primed terms; all
          // other Galois-in-context right sides are logged as R3.
          auto literal_primed = [](const MTermPtr& t) {
            if (t->kind == MKind::Prime) return true;
            if (t->kind == MKind::Meet) {
              std::vector<MTermPtr> todo = {t};
              while (!todo.empty()) {
                auto cur = todo.back();
                todo.pop_back();
                if (cur->kind == MKind::Meet) {
                  todo.push_back(cur->a);
                  todo.push_back(cur->b);
                } else if (cur->kind != MKind::Prime) {
                  return false;
                }
              }
              return true;
            }
            return false;
          };
          if (!literal_primed(sys.rhs)) rule_id = "R3";
        }
        trace.push_back({rule_id, "", sys, next});
        if (dfs(next, trace, out, depth + 1)) return true;
        trace.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

Reduction reduce(const InequalitySystem& sys, int depth_limit) {
  Reduction out;
  Searcher searcher{depth_limit, {}, {}};
  std::vector<ReductionStep> trace;
  if (searcher.dfs(sys, trace, out, 0)) return out;
  out.ok = false;
  out.failure = "NotSahlqvist: no reduction to canonical Sahlqvist form";
  out.trace = searcher.best_trace;
  out.system = sys;
  return out;
}

FoPtr guarded_translation(const InequalitySystem& sys) {
  int fresh = 1;
  FoPtr ante = standard_translation(sys.lhs, 0, fresh);
  FoPtr cons = standard_translation(sys.rhs, 0, fresh);
  std::vector<FoPtr> guard_atoms;
  std::vector<std::pair<int, Sort>> quantified;
  for (auto& c : sys.stb) {
    guard_atoms.push_back(fo_atom(FoAtomKind::StableGuard, {}, c.sort, pred_id(c.var, c.sort)));
    quantified.push_back({c.var, c.sort});
  }
  for (auto& c : sys.cvc) {
    guard_atoms.push_back(
        fo_atom(FoAtomKind::StableGuard, {}, c.qsort(), pred_id(c.qvar, c.qsort())));
    quantified.push_back({c.qvar, c.qsort()});
  }
  for (auto& v : main_vars(sys))
    if (std::find(quantified.begin(), quantified.end(), v) == quantified.end())
      quantified.push_back(v);
  guard_atoms.push_back(ante);
  FoPtr body = fo_implies(fo_and(guard_atoms), cons);
  FoPtr out = fo_forall(0, sys.sort, body);
  for (auto it = quantified.rbegin(); it != quantified.rend(); ++it)
    out = fo_forall_pred(pred_id(it->first, it->second), it->second, out);
  return out;
}

namespace {

// Erase double primes at positively-occurring positions of the right side:
// the starred frame classes validate the strengthened, closure-free forms.
MTermPtr drop_even_closures(const MTermPtr& t, int depth) {
  if (is_double_prime(t) && depth % 2 == 0) return drop_even_closures(t->a->a, depth);
  auto copy = std::make_shared<MTerm>(*t);
  switch (t->kind) {
    case MKind::Prime: copy->a = drop_even_closures(t->a, depth + 1); break;
    case MKind::RSpoon:
      copy->a = drop_even_closures(t->a, depth + 1);
      copy->b = drop_even_closures(t->b, depth);
      break;
    case MKind::LSpoon:
      copy->a = drop_even_closures(t->a, depth);
      copy->b = drop_even_closures(t->b, depth + 1);
      break;
    default:
      if (t->a) copy->a = drop_even_closures(t->a, depth);
      if (t->b) copy->b = drop_even_closures(t->b, depth);
      break;
  }
  return copy;
}

struct Antecedent {
  std::vector<std::pair<int, Sort>> binders;
  std::vector<FoPtr> atoms;
  std::map<int, std::vector<int>> witnesses;  // pred id -> point vars
  bool bottom = false;
};

void extract_antecedent(const MTermPtr& t, int point, int& fresh, Antecedent& out) {
  switch (t->kind) {
    case MKind::Var:
      out.witnesses[pred_id(t->var, t->sort)].push_back(point);
      return;
    case MKind::Top: return;
    case MKind::Bot: out.bottom = true; return;
    case MKind::UConst: out.atoms.push_back(fo_atom(FoAtomKind::U, {point})); return;
    case MKind::Meet:
      extract_antecedent(t->a, point, fresh, out);
      extract_antecedent(t->b, point, fresh, out);
      return;
    case MKind::TRight: {
      int x = fresh++, y = fresh++;
      out.binders.push_back({x, Sort::One});
      out.binders.push_back({y, Sort::Del});
      out.atoms.push_back(fo_atom(FoAtomKind::T, {point, x, y}));
      extract_antecedent(t->a, x, fresh, out);
      extract_antecedent(t->b, y, fresh, out);
      return;
    }
    case MKind::TLeft: {
      int y = fresh++, x = fresh++;
      out.binders.push_back({y, Sort::Del});
      out.binders.push_back({x, Sort::One});
      out.atoms.push_back(fo_atom(FoAtomKind::S, {point, y, x}));
      extract_antecedent(t->a, y, fresh, out);
      extract_antecedent(t->b, x, fresh, out);
      return;
    }
    case MKind::Odot: {
      int z1 = fresh++, z2 = fresh++;
      out.binders.push_back({z1, Sort::One});
      out.binders.push_back({z2, Sort::One});
      out.atoms.push_back(fo_atom(FoAtomKind::R, {point, z1, z2}));
      extract_antecedent(t->a, z1, fresh, out);
      extract_antecedent(t->b, z2, fresh, out);
      return;
    }
    default:
      throw FrameError("NotInCanonicalForm", "left side contains " + mprint(t));
  }
}

// Substitute the minimal closed-element instantiation for predicate atoms.
FoPtr instantiate(const FoPtr& f, const Antecedent& ante, CorrespondentResult& flags) {
  switch (f->kind) {
    case FoKind::Atom: {
      if (f->atom != FoAtomKind::Pred) return f;
      auto it = ante.witnesses.find(f->pred);
      if (it == ante.witnesses.end() || it->second.empty()) {
        // No antecedent occurrence: the least stable set, {s : s has an
        // empty I-row}, expressed directly.
        flags.used_least_instantiation = true;
        Sort s = f->atom_sort;
        int v = 1000000 + f->args[0];
        auto iatom = s == Sort::One ? fo_atom(FoAtomKind::I, {f->args[0], v})
                                    : fo_atom(FoAtomKind::I, {v, f->args[0]});
        return fo_forall(v, opp(s), fo_not(iatom));
      }
      if (f->atom_sort == Sort::Del) flags.used_del_instantiation = true;
      std::vector<FoPtr> parts;
      for (int w : it->second)
        parts.push_back(fo_atom(FoAtomKind::Leq, {w, f->args[0]}, f->atom_sort));
      return parts.size() == 1 ? parts[0] : fo_or(parts);
    }
    case FoKind::Not: return fo_not(instantiate(f->a, ante, flags));
    case FoKind::And:
    case FoKind::Or: {
      std::vector<FoPtr> kids;
      for (auto& k : f->kids) kids.push_back(instantiate(k, ante, flags));
      return f->kind == FoKind::And ? fo_and(kids) : fo_or(kids);
    }
    case FoKind::Implies: return fo_implies(instantiate(f->a, ante, flags),
                                            instantiate(f->b, ante, flags));
    case FoKind::Iff: return fo_iff(instantiate(f->a, ante, flags), instantiate(f->b, ante, flags));
    case FoKind::Forall: return fo_forall(f->bvar, f->bsort, instantiate(f->body, ante, flags));
    case FoKind::Exists: return fo_exists(f->bvar, f->bsort, instantiate(f->body, ante, flags));
    default: return f;
  }
}

bool fo_occurs(const FoPtr& f, int var) {
  if (f->kind == FoKind::Atom)
    return std::find(f->args.begin(), f->args.end(), var) != f->args.end();
  if (f->a && fo_occurs(f->a, var)) return true;
  if (f->b && fo_occurs(f->b, var)) return true;
  if (f->body && fo_occurs(f->body, var)) return true;
  for (auto& k : f->kids)
    if (fo_occurs(k, var)) return true;
  return false;
}

FoPtr fo_subst(const FoPtr& f, int from, int to) {
  switch (f->kind) {
    case FoKind::Atom: {
      auto g = std::make_shared<Fo>(*f);
      for (auto& a : g->args)
        if (a == from) a = to;
      return g;
    }
    case FoKind::Not: return fo_not(fo_subst(f->a, from, to));
    case FoKind::Implies: return fo_implies(fo_subst(f->a, from, to), fo_subst(f->b, from, to));
    case FoKind::Iff: return fo_iff(fo_subst(f->a, from, to), fo_subst(f->b, from, to));
    case FoKind::And:
    case FoKind::Or: {
      std::vector<FoPtr> kids;
      for (auto& k : f->kids) kids.push_back(fo_subst(k, from, to));
      return f->kind == FoKind::And ? fo_and(kids) : fo_or(kids);
    }
    case FoKind::Forall: return fo_forall(f->bvar, f->bsort, fo_subst(f->body, from, to));
    case FoKind::Exists: return fo_exists(f->bvar, f->bsort, fo_subst(f->body, from, to));
    default: return f;
  }
}

// All occurrences of var inside f sit in argument places of T/R/S atoms
// (the places axiom (M) makes decreasing).
bool only_decreasing_positions(const FoPtr& f, int var) {
  switch (f->kind) {
    case FoKind::Atom:
      switch (f->atom) {
        case FoAtomKind::T:
        case FoAtomKind::R:
        case FoAtomKind::S:
          return f->args[0] != var;
        default:
          return std::find(f->args.begin(), f->args.end(), var) == f->args.end();
      }
    case FoKind::Not: return !fo_occurs(f->a, var);  // negative context: be conservative
    case FoKind::Implies: return !fo_occurs(f->a, var) && only_decreasing_positions(f->b, var);
    case FoKind::Iff: return !fo_occurs(f->a, var) && !fo_occurs(f->b, var);
    case FoKind::And:
    case FoKind::Or: {
      for (auto& k : f->kids)
        if (!only_decreasing_positions(k, var)) return false;
      return true;
    }
    case FoKind::Forall:
    case FoKind::Exists: return only_decreasing_positions(f->body, var);
    default: return true;
  }
}

// Under (M): ∃v(t≤v ∧ Φ(v)) collapses to Φ(t) when every occurrence of v in
// Φ is in a decreasing argument place.
FoPtr absorb_witnesses(const FoPtr& f) {
  switch (f->kind) {
    case FoKind::Not: return fo_not(absorb_witnesses(f->a));
    case FoKind::Implies: return fo_implies(absorb_witnesses(f->a), absorb_witnesses(f->b));
    case FoKind::Iff: return fo_iff(absorb_witnesses(f->a), absorb_witnesses(f->b));
    case FoKind::And:
    case FoKind::Or: {
      std::vector<FoPtr> kids;
      for (auto& k : f->kids) kids.push_back(absorb_witnesses(k));
      return f->kind == FoKind::And ? fo_and(kids) : fo_or(kids);
    }
    case FoKind::Forall: return fo_forall(f->bvar, f->bsort, absorb_witnesses(f->body));
    case FoKind::Exists: {
      // Decompose the ∃-chain, absorb inside-out.
      std::vector<std::pair<int, Sort>> binders;
      FoPtr cur = f;
      while (cur->kind == FoKind::Exists) {
        binders.push_back({cur->bvar, cur->bsort});
        cur = cur->body;
      }
      FoPtr core = absorb_witnesses(cur);
      std::vector<FoPtr> atoms =
          core->kind == FoKind::And ? core->kids : std::vector<FoPtr>{core};
      bool changed = true;
      while (changed) {
        changed = false;
        for (size_t bi = 0; bi < binders.size() && !changed; ++bi) {
          auto [v, s] = binders[bi];
          int bound_at = -1, bound_from = -1;
          bool usable = true;
          for (size_t ai = 0; ai < atoms.size(); ++ai) {
            const FoPtr& a = atoms[ai];
            if (a->kind == FoKind::Atom && a->atom == FoAtomKind::Leq && a->atom_sort == s &&
                a->args[1] == v && a->args[0] != v) {
              if (bound_at >= 0) usable = false;  // two lower bounds: leave alone
              bound_at = static_cast<int>(ai);
              bound_from = a->args[0];
            } else if (!only_decreasing_positions(a, v)) {
              usable = false;
            }
          }
          // The witness must not be bound later in this same chain after v,
          // otherwise substitution would capture; witnesses here are either
          // antecedent variables (free in this scope) or earlier binders.
          if (usable && bound_at >= 0) {
            for (size_t bj = bi; bj < binders.size(); ++bj)
              if (binders[bj].first == bound_from) usable = false;
          }
          if (usable && bound_at >= 0) {
            std::vector<FoPtr> next;
            for (size_t ai = 0; ai < atoms.size(); ++ai) {
              if (static_cast<int>(ai) == bound_at) continue;
              next.push_back(fo_subst(atoms[ai], v, bound_from));
            }
            atoms = next;
            binders.erase(binders.begin() + bi);
            changed = true;
          }
        }
      }
      FoPtr body = atoms.size() == 1 ? atoms[0] : fo_and(atoms);
      if (atoms.empty()) body = fo_true();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = fo_exists(it->first, it->second, body);
      return body;
    }
    default: return f;
  }
}

}  // namespace

CorrespondentResult compute_correspondent(const InequalitySystem& sys,
                                          const FrameClassSpec& cls) {
  if (!is_canonical_form(sys))
    throw FrameError("NotInCanonicalForm", sys.to_string());
  CorrespondentResult out;
  MTermPtr rhs = cls.starred ? drop_even_closures(sys.rhs, 0) : sys.rhs;
  // The closed-element instantiation Γx is sound for a variable occurring
  // outside any prime chain in the consequent only when that variable is
  // constrained to a stable set. Systems built from sequent translations
  // always satisfy this; reject hand-built ones that do not.
  for (auto& [v, s] : mvars(rhs)) {
    if (sys.constrained(v, s)) continue;
    if (occurrences(rhs, v, s).bare)
      throw FrameError("NotInCanonicalForm",
                       "unconstrained variable " + mprint_var(v, s) +
                           " occurs unprimed in the consequent");
  }

  int fresh = 1;
  Antecedent ante;
  extract_antecedent(sys.lhs, 0, fresh, ante);

  FoPtr formula;
  if (ante.bottom) {
    formula = fo_true();
  } else {
    FoPtr cons = standard_translation(rhs, 0, fresh);
    cons = instantiate(cons, ante, out);
    FoPtr body = ante.atoms.empty() ? cons : fo_implies(fo_and(ante.atoms), cons);
    for (auto it = ante.binders.rbegin(); it != ante.binders.rend(); ++it)
      body = fo_forall(it->first, it->second, body);
    formula = fo_forall(0, sys.sort, body);
    if (cls.monotone) formula = absorb_witnesses(formula);
  }
  formula = fo_normalize(formula);
  if (!fo_is_first_order(formula))
    throw FrameError("NotInCanonicalForm", "residual predicate variables in output");
  out.formula = formula;
  out.text = fo_print(formula);
  return out;
}

CorrespondenceRun correspond(const Sequent& seq, const std::string& class_id, SidePolicy side,
                             std::optional<TransMode> mode, int depth_limit) {
  const FrameClassSpec& cls = frame_class(class_id);
  bool has_r = std::find(cls.relations.begin(), cls.relations.end(), 'R') != cls.relations.end();
  TransMode m = mode.value_or(has_r ? TransMode::Residual : TransMode::TRight);

  std::vector<std::pair<std::string, SortedSequent>> attempts;
  if (side != SidePolicy::Cotranslate)
    attempts.push_back({"translate", translate_sequent(seq, m)});
  if (side != SidePolicy::Translate)
    attempts.push_back({"cotranslate", cotranslate_sequent(seq, m)});

  CorrespondenceRun run;
  run.mode = m;
  for (auto& [name, ss] : attempts) {
    auto red = reduce(to_system(ss), depth_limit);
    if (red.ok) {
      run.ok = true;
      run.side = name;
      run.reduction = red;
      run.guarded = guarded_translation(red.system);
      run.result = compute_correspondent(red.system, cls);
      return run;
    }
    run.reduction = red;
    run.side = name;
  }
  run.ok = false;
  run.error = "NotSahlqvist: neither translation nor co-translation reduced";
  return run;
}

VerifyCorrespondenceReport verify_correspondence(const std::vector<SortedFrame>& frames,
                                                 const Sequent& seq, const std::string& class_id,
                                                 const CorrespondenceRun& run) {
  (void)class_id;
  VerifyCorrespondenceReport report;
  if (!run.ok) throw FrameError("NotSahlqvist", run.error);
  for (size_t i = 0; i < frames.size(); ++i) {
    bool valid = check_validity(frames[i], seq).valid;
    bool fo = fo_model_check(frames[i], run.result.formula).holds;
    ++report.frames_checked;
    if (valid != fo) report.divergences.push_back({i, valid, fo});
  }
  return report;
}

bool systems_equivalent_on(const SortedFrame& f, const InequalitySystem& s1,
                           const InequalitySystem& s2) {
  // The variables to quantify over: everything mentioned by either system.
  std::vector<std::pair<int, Sort>> vars;
  auto add = [&](int v, Sort s) {
    if (std::find(vars.begin(), vars.end(), std::make_pair(v, s)) == vars.end())
      vars.push_back({v, s});
  };
  for (auto* sys : {&s1, &s2}) {
    for (auto& [v, s] : main_vars(*sys)) add(v, s);
    for (auto& c : sys->stb) add(c.var, c.sort);
    for (auto& c : sys->cvc) {
      add(c.pvar, c.psort);
      add(c.qvar, c.qsort());
    }
  }
  // CVC targets are derived from their source variable, not chosen freely.
  std::map<std::pair<int, int>, std::pair<int, Sort>> derived;  // (q, qsort) -> (p, psort)
  for (auto* sys : {&s1, &s2})
    for (auto& c : sys->cvc)
      derived[{c.qvar, c.qsort() == Sort::One ? 0 : 1}] = {c.pvar, c.psort};
  auto is_stb = [&](int v, Sort s) {
    for (auto* sys : {&s1, &s2})
      for (auto& c : sys->stb)
        if (c.var == v && c.sort == s) return true;
    return false;
  };

  std::vector<std::pair<int, Sort>> free_vars;
  std::vector<std::vector<Bits>> domains;
  for (auto& [v, s] : vars) {
    if (derived.count({v, s == Sort::One ? 0 : 1})) continue;
    std::vector<Bits> dom;
    if (is_stb(v, s)) {
      for (auto& g : f.stable_sets(s)) dom.push_back(g.members);
    } else {
      Bits full = f.full(s);
      for (Bits x = 0;; ++x) {
        dom.push_back(x);
        if (x == full) break;
      }
    }
    free_vars.push_back({v, s});
    domains.push_back(dom);
  }

  std::vector<size_t> pick(free_vars.size(), 0);
  while (true) {
    SortedModel m;
    m.frame = &f;
    for (size_t i = 0; i < free_vars.size(); ++i) {
      auto [v, s] = free_vars[i];
      (s == Sort::One ? m.val1 : m.valD)[v] = domains[i][pick[i]];
    }
    for (auto& [q, src] : derived) {
      Bits pval = src.second == Sort::One ? m.val1.count(src.first) ? m.val1[src.first] : 0
                                           : m.valD.count(src.first) ? m.valD[src.first] : 0;
      Bits qval = f.prime(src.second, pval);
      (q.second == 0 ? m.val1 : m.valD)[q.first] = qval;
    }
    auto validates = [&](const InequalitySystem& sys) {
      return subset(eval_sorted(m, sys.lhs), eval_sorted(m, sys.rhs));
    };
    if (validates(s1) != validates(s2)) return false;
    size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < domains[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return true;
}

}  // namespace nlogic
