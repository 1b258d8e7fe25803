#include "nlogic/fo.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace nlogic {

namespace {
std::shared_ptr<Fo> node(FoKind k) {
  auto f = std::make_shared<Fo>();
  f->kind = k;
  return f;
}
}  // namespace

FoPtr fo_true() { return node(FoKind::True); }
FoPtr fo_false() { return node(FoKind::False); }

FoPtr fo_atom(FoAtomKind k, std::vector<int> args, Sort s, int pred) {
  auto f = node(FoKind::Atom);
  f->atom = k;
  f->args = std::move(args);
  f->atom_sort = s;
  f->pred = pred;
  return f;
}

FoPtr fo_not(FoPtr a) {
  auto f = node(FoKind::Not);
  f->a = std::move(a);
  return f;
}

FoPtr fo_and(std::vector<FoPtr> kids) {
  auto f = node(FoKind::And);
  f->kids = std::move(kids);
  return f;
}

FoPtr fo_or(std::vector<FoPtr> kids) {
  auto f = node(FoKind::Or);
  f->kids = std::move(kids);
  return f;
}

FoPtr fo_implies(FoPtr a, FoPtr b) {
  auto f = node(FoKind::Implies);
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

FoPtr fo_iff(FoPtr a, FoPtr b) {
  auto f = node(FoKind::Iff);
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

FoPtr fo_forall(int var, Sort s, FoPtr body) {
  auto f = node(FoKind::Forall);
  f->bvar = var;
  f->bsort = s;
  f->body = std::move(body);
  return f;
}

FoPtr fo_exists(int var, Sort s, FoPtr body) {
  auto f = node(FoKind::Exists);
  f->bvar = var;
  f->bsort = s;
  f->body = std::move(body);
  return f;
}

FoPtr fo_forall_pred(int pred, Sort s, FoPtr body) {
  auto f = node(FoKind::ForallP);
  f->pred = pred;
  f->bsort = s;
  f->body = std::move(body);
  return f;
}

namespace {

struct NameEnv {
  std::map<int, std::string> names;
  std::map<int, std::string> pred_names;
  int used1 = 0, usedD = 0, usedP = 0;

  static std::string pool_name(Sort s, int k) {
    static const char* pool1[] = {"x", "u", "z", "w"};
    static const char* poolD[] = {"y", "v"};
    if (s == Sort::One) {
      if (k < 4) return pool1[k];
      return std::string(pool1[k % 4]) + std::to_string(k / 4);
    }
    if (k < 2) return poolD[k];
    return std::string(poolD[k % 2]) + std::to_string(k / 2);
  }

  std::string bind(int var, Sort s) {
    std::string n = pool_name(s, s == Sort::One ? used1++ : usedD++);
    names[var] = n;
    return n;
  }
  std::string bind_pred(int pred) {
    std::string n = "P" + std::to_string(++usedP);
    pred_names[pred] = n;
    return n;
  }
  std::string of(int var) const {
    auto it = names.find(var);
    return it == names.end() ? "?v" + std::to_string(var) : it->second;
  }
  std::string of_pred(int pred) const {
    auto it = pred_names.find(pred);
    return it == pred_names.end() ? "?P" + std::to_string(pred) : it->second;
  }
};

bool atomic_like(const Fo& f) {
  return f.kind == FoKind::True || f.kind == FoKind::False || f.kind == FoKind::Atom ||
         f.kind == FoKind::Not || f.kind == FoKind::Forall || f.kind == FoKind::Exists ||
         f.kind == FoKind::ForallP;
}

std::string print_rec(const FoPtr& f, NameEnv& env, int outer_level);

std::string print_quant(const FoPtr& f, NameEnv& env) {
  std::string out;
  FoPtr cur = f;
  while (cur->kind == FoKind::Forall || cur->kind == FoKind::Exists ||
         cur->kind == FoKind::ForallP) {
    if (cur->kind == FoKind::ForallP) {
      out += "∀" + env.bind_pred(cur->pred);
    } else {
      out += (cur->kind == FoKind::Forall ? "∀" : "∃") + env.bind(cur->bvar, cur->bsort);
    }
    cur = cur->body;
  }
  out += "(" + print_rec(cur, env, 0) + ")";
  return out;
}

std::string print_atom(const Fo& f, NameEnv& env) {
  auto v = [&](int i) { return env.of(f.args[i]); };
  switch (f.atom) {
    case FoAtomKind::Leq: return v(0) + "≤" + v(1);
    case FoAtomKind::I: return v(0) + "I" + v(1);
    case FoAtomKind::Gap: return v(0) + "⫫" + v(1);
    case FoAtomKind::U: return v(0) + "∈U";
    case FoAtomKind::T: return v(0) + "T" + v(1) + v(2);
    case FoAtomKind::R: return v(0) + "R" + v(1) + v(2);
    case FoAtomKind::S: return v(0) + "S" + v(1) + v(2);
    case FoAtomKind::Tp: return v(0) + "T'" + v(1) + v(2);
    case FoAtomKind::Rp: return v(0) + "R'" + v(1) + v(2);
    case FoAtomKind::Sp: return v(0) + "S'" + v(1) + v(2);
    case FoAtomKind::Pred: return env.of_pred(f.pred) + "(" + v(0) + ")";
    case FoAtomKind::StableGuard: return "t-INV(" + env.of_pred(f.pred) + ")";
  }
  return "?";
}

// levels: 0 = iff/implies, 1 = or, 2 = and, 3 = atomic
std::string print_rec(const FoPtr& f, NameEnv& env, int outer_level) {
  switch (f->kind) {
    case FoKind::True: return "⊤";
    case FoKind::False: return "⊥";
    case FoKind::Atom: return print_atom(*f, env);
    case FoKind::Not: {
      const Fo& inner = *f->a;
      std::string s = print_rec(f->a, env, 3);
      if (!atomic_like(inner)) s = "(" + s + ")";
      return "¬" + s;
    }
    case FoKind::And: {
      std::string out;
      for (size_t i = 0; i < f->kids.size(); ++i) {
        if (i) out += " ∧ ";
        out += print_rec(f->kids[i], env, 2);
      }
      if (f->kids.empty()) return "⊤";
      return outer_level > 2 ? "(" + out + ")" : out;
    }
    case FoKind::Or: {
      std::string out;
      for (size_t i = 0; i < f->kids.size(); ++i) {
        if (i) out += " ∨ ";
        out += print_rec(f->kids[i], env, 1 + 1);
      }
      if (f->kids.empty()) return "⊥";
      return outer_level > 1 ? "(" + out + ")" : out;
    }
    case FoKind::Implies: {
      std::string out = print_rec(f->a, env, 1) + " → " + print_rec(f->b, env, 1);
      return outer_level > 0 ? "(" + out + ")" : out;
    }
    case FoKind::Iff: {
      std::string out = print_rec(f->a, env, 1) + " ↔ " + print_rec(f->b, env, 1);
      return outer_level > 0 ? "(" + out + ")" : out;
    }
    case FoKind::Forall:
    case FoKind::Exists:
    case FoKind::ForallP: return print_quant(f, env);
  }
  return "?";
}

}  // namespace

std::string fo_print(const FoPtr& f) {
  NameEnv env;
  if (f->kind == FoKind::Forall || f->kind == FoKind::Exists || f->kind == FoKind::ForallP) {
    return print_quant(f, env);
  }
  return print_rec(f, env, 0);
}

namespace {

FoPtr simplify(const FoPtr& f) {
  switch (f->kind) {
    case FoKind::True:
    case FoKind::False: return f;
    case FoKind::Atom:
      if (f->atom == FoAtomKind::Leq && f->args[0] == f->args[1]) return fo_true();
      return f;
    case FoKind::Not: {
      auto a = simplify(f->a);
      if (a->kind == FoKind::True) return fo_false();
      if (a->kind == FoKind::False) return fo_true();
      if (a->kind == FoKind::Not) return a->a;
      // ¬∀v(A → ¬B) reads better as ∃v(A ∧ B); this is the shape the
      // standard translation of a prime produces under negation.
      if (a->kind == FoKind::Forall && a->body->kind == FoKind::Implies &&
          a->body->b->kind == FoKind::Not)
        return fo_exists(a->bvar, a->bsort,
                         simplify(fo_and({a->body->a, a->body->b->a})));
      return fo_not(a);
    }
    case FoKind::And: {
      std::vector<FoPtr> kids;
      for (auto& k : f->kids) {
        auto s = simplify(k);
        if (s->kind == FoKind::False) return fo_false();
        if (s->kind == FoKind::True) continue;
        if (s->kind == FoKind::And) {
          kids.insert(kids.end(), s->kids.begin(), s->kids.end());
        } else {
          kids.push_back(s);
        }
      }
      if (kids.empty()) return fo_true();
      if (kids.size() == 1) return kids[0];
      return fo_and(kids);
    }
    case FoKind::Or: {
      std::vector<FoPtr> kids;
      for (auto& k : f->kids) {
        auto s = simplify(k);
        if (s->kind == FoKind::True) return fo_true();
        if (s->kind == FoKind::False) continue;
        if (s->kind == FoKind::Or) {
          kids.insert(kids.end(), s->kids.begin(), s->kids.end());
        } else {
          kids.push_back(s);
        }
      }
      if (kids.empty()) return fo_false();
      if (kids.size() == 1) return kids[0];
      return fo_or(kids);
    }
    case FoKind::Implies: {
      auto a = simplify(f->a), b = simplify(f->b);
      if (a->kind == FoKind::True) return b;
      if (a->kind == FoKind::False) return fo_true();
      if (b->kind == FoKind::True) return fo_true();
      return fo_implies(a, b);
    }
    case FoKind::Iff: {
      auto a = simplify(f->a), b = simplify(f->b);
      if (a->kind == FoKind::True) return b;
      if (b->kind == FoKind::True) return a;
      return fo_iff(a, b);
    }
    case FoKind::Forall: {
      auto b = simplify(f->body);
      if (b->kind == FoKind::True) return fo_true();
      return fo_forall(f->bvar, f->bsort, b);
    }
    case FoKind::Exists: {
      auto b = simplify(f->body);
      if (b->kind == FoKind::False) return fo_false();
      return fo_exists(f->bvar, f->bsort, b);
    }
    case FoKind::ForallP: {
      auto b = simplify(f->body);
      if (b->kind == FoKind::True) return fo_true();
      return fo_forall_pred(f->pred, f->bsort, b);
    }
  }
  return f;
}

// Sort And/Or children by their printed form (with a throwaway name env that
// keeps bound-variable ids visible but unrenamed).
std::string raw_key(const FoPtr& f);

FoPtr sort_children(const FoPtr& f) {
  switch (f->kind) {
    case FoKind::And:
    case FoKind::Or: {
      std::vector<FoPtr> kids;
      for (auto& k : f->kids) kids.push_back(sort_children(k));
      std::stable_sort(kids.begin(), kids.end(),
                       [](const FoPtr& a, const FoPtr& b) { return raw_key(a) < raw_key(b); });
      return f->kind == FoKind::And ? fo_and(kids) : fo_or(kids);
    }
    case FoKind::Not: return fo_not(sort_children(f->a));
    case FoKind::Implies: return fo_implies(sort_children(f->a), sort_children(f->b));
    case FoKind::Iff: return fo_iff(sort_children(f->a), sort_children(f->b));
    case FoKind::Forall: return fo_forall(f->bvar, f->bsort, sort_children(f->body));
    case FoKind::Exists: return fo_exists(f->bvar, f->bsort, sort_children(f->body));
    case FoKind::ForallP: return fo_forall_pred(f->pred, f->bsort, sort_children(f->body));
    default: return f;
  }
}

std::string raw_key(const FoPtr& f) {
  switch (f->kind) {
    case FoKind::True: return "T";
    case FoKind::False: return "F";
    case FoKind::Atom: {
      std::ostringstream os;
      os << "A" << static_cast<int>(f->atom) << ":" << f->pred;
      for (int a : f->args) os << "," << a;
      return os.str();
    }
    case FoKind::Not: return "N(" + raw_key(f->a) + ")";
    case FoKind::And:
    case FoKind::Or: {
      std::string out = f->kind == FoKind::And ? "C(" : "D(";
      for (auto& k : f->kids) out += raw_key(k) + ";";
      return out + ")";
    }
    case FoKind::Implies: return "I(" + raw_key(f->a) + ";" + raw_key(f->b) + ")";
    case FoKind::Iff: return "E(" + raw_key(f->a) + ";" + raw_key(f->b) + ")";
    case FoKind::Forall:
      return "Q" + std::to_string(f->bvar) + "(" + raw_key(f->body) + ")";
    case FoKind::Exists:
      return "X" + std::to_string(f->bvar) + "(" + raw_key(f->body) + ")";
    case FoKind::ForallP: return "P" + std::to_string(f->pred) + "(" + raw_key(f->body) + ")";
  }
  return "?";
}

// Rename bound variables to consecutive fresh ids in traversal order so the
// printer's pools see them in a stable order.
struct Renamer {
  int next = 0;
  std::map<int, int> map;
  FoPtr run(const FoPtr& f) {
    switch (f->kind) {
      case FoKind::Forall:
      case FoKind::Exists: {
        int fresh = next++;
        int old = f->bvar;
        auto saved = map.count(old) ? std::optional<int>(map[old]) : std::nullopt;
        map[old] = fresh;
        auto body = run(f->body);
        if (saved) map[old] = *saved;
        else map.erase(old);
        return f->kind == FoKind::Forall ? fo_forall(fresh, f->bsort, body)
                                         : fo_exists(fresh, f->bsort, body);
      }
      case FoKind::ForallP: return fo_forall_pred(f->pred, f->bsort, run(f->body));
      case FoKind::Not: return fo_not(run(f->a));
      case FoKind::Implies: return fo_implies(run(f->a), run(f->b));
      case FoKind::Iff: return fo_iff(run(f->a), run(f->b));
      case FoKind::And:
      case FoKind::Or: {
        std::vector<FoPtr> kids;
        for (auto& k : f->kids) kids.push_back(run(k));
        return f->kind == FoKind::And ? fo_and(kids) : fo_or(kids);
      }
      case FoKind::Atom: {
        auto g = std::make_shared<Fo>(*f);
        for (auto& a : g->args)
          if (map.count(a)) a = map[a];
        return g;
      }
      default: return f;
    }
  }
};

}  // namespace

FoPtr fo_normalize(const FoPtr& f) {
  auto s = simplify(f);
  s = sort_children(s);
  Renamer r;
  return r.run(s);
}

bool fo_is_first_order(const FoPtr& f) {
  switch (f->kind) {
    case FoKind::ForallP: return false;
    case FoKind::Atom:
      return f->atom != FoAtomKind::Pred && f->atom != FoAtomKind::StableGuard;
    case FoKind::Not: return fo_is_first_order(f->a);
    case FoKind::Implies:
    case FoKind::Iff: return fo_is_first_order(f->a) && fo_is_first_order(f->b);
    case FoKind::And:
    case FoKind::Or: {
      for (auto& k : f->kids)
        if (!fo_is_first_order(k)) return false;
      return true;
    }
    case FoKind::Forall:
    case FoKind::Exists: return fo_is_first_order(f->body);
    default: return true;
  }
}

std::vector<char> fo_relations(const FoPtr& f) {
  std::set<char> out;
  std::vector<FoPtr> stack = {f};
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    if (cur->kind == FoKind::Atom) {
      switch (cur->atom) {
        case FoAtomKind::T:
        case FoAtomKind::Tp: out.insert('T'); break;
        case FoAtomKind::R:
        case FoAtomKind::Rp: out.insert('R'); break;
        case FoAtomKind::S:
        case FoAtomKind::Sp: out.insert('S'); break;
        case FoAtomKind::U: out.insert('U'); break;
        case FoAtomKind::I:
        case FoAtomKind::Gap: out.insert('I'); break;
        default: break;
      }
    }
    if (cur->a) stack.push_back(cur->a);
    if (cur->b) stack.push_back(cur->b);
    if (cur->body) stack.push_back(cur->body);
    for (auto& k : cur->kids) stack.push_back(k);
  }
  return {out.begin(), out.end()};
}

namespace {

struct Evaluator {
  const SortedFrame& f;
  std::map<int, int> env;

  bool eval(const FoPtr& n) {
    switch (n->kind) {
      case FoKind::True: return true;
      case FoKind::False: return false;
      case FoKind::Not: return !eval(n->a);
      case FoKind::And:
        for (auto& k : n->kids)
          if (!eval(k)) return false;
        return true;
      case FoKind::Or:
        for (auto& k : n->kids)
          if (eval(k)) return true;
        return false;
      case FoKind::Implies: return !eval(n->a) || eval(n->b);
      case FoKind::Iff: return eval(n->a) == eval(n->b);
      case FoKind::Forall: {
        int limit = f.size(n->bsort);
        auto prev = env.find(n->bvar) != env.end() ? std::optional<int>(env[n->bvar])
                                                   : std::nullopt;
        bool ok = true;
        for (int p = 0; p < limit && ok; ++p) {
          env[n->bvar] = p;
          if (!eval(n->body)) ok = false;
        }
        if (prev) env[n->bvar] = *prev;
        else env.erase(n->bvar);
        return ok;
      }
      case FoKind::Exists: {
        int limit = f.size(n->bsort);
        auto prev = env.find(n->bvar) != env.end() ? std::optional<int>(env[n->bvar])
                                                   : std::nullopt;
        bool found = false;
        for (int p = 0; p < limit && !found; ++p) {
          env[n->bvar] = p;
          if (eval(n->body)) found = true;
        }
        if (prev) env[n->bvar] = *prev;
        else env.erase(n->bvar);
        return found;
      }
      case FoKind::ForallP:
        throw FrameError("NotFirstOrder", "second-order quantifier in fo_model_check");
      case FoKind::Atom: return atom(*n);
    }
    return false;
  }

  bool atom(const Fo& n) {
    auto v = [&](int i) {
      auto it = env.find(n.args[i]);
      if (it == env.end()) throw FrameError("OpenFormula", "free variable in fo_model_check");
      return it->second;
    };
    switch (n.atom) {
      case FoAtomKind::Leq: return f.leq(n.atom_sort, v(0), v(1));
      case FoAtomKind::I: return f.incident(v(0), v(1));
      case FoAtomKind::Gap: return f.gapped(v(0), v(1));
      case FoAtomKind::U:
        if (!f.has_u) throw FrameError("MissingRelation", "formula mentions U");
        return has(f.u, v(0));
      case FoAtomKind::T: return has(f.sec('T')[v(1)][v(2)], v(0));
      case FoAtomKind::R: return has(f.sec('R')[v(1)][v(2)], v(0));
      case FoAtomKind::S: return has(f.sec('S')[v(1)][v(2)], v(0));
      case FoAtomKind::Tp: return has(f.dual_sec('T', v(1), v(2)), v(0));
      case FoAtomKind::Rp: return has(f.dual_sec('R', v(1), v(2)), v(0));
      case FoAtomKind::Sp: return has(f.dual_sec('S', v(1), v(2)), v(0));
      case FoAtomKind::Pred:
      case FoAtomKind::StableGuard:
        throw FrameError("NotFirstOrder", "predicate variable in fo_model_check");
    }
    return false;
  }
};

}  // namespace

FoCheck fo_model_check(const SortedFrame& f, const FoPtr& formula) {
  Evaluator ev{f, {}};
  FoCheck out;
  out.holds = ev.eval(formula);
  if (!out.holds) {
    // Recover a falsifying assignment of the leading universal prefix.
    Evaluator wit{f, {}};
    FoPtr cur = formula;
    std::ostringstream os;
    bool first = true;
    while (cur->kind == FoKind::Forall) {
      int limit = f.size(cur->bsort);
      int found = -1;
      for (int p = 0; p < limit && found < 0; ++p) {
        wit.env[cur->bvar] = p;
        Evaluator probe = wit;
        if (!probe.eval(cur->body)) found = p;
      }
      if (found < 0) break;
      wit.env[cur->bvar] = found;
      if (!first) os << ", ";
      os << (cur->bsort == Sort::One ? f.names1[found] : f.namesD[found]);
      first = false;
      cur = cur->body;
    }
    out.witness = os.str();
  }
  return out;
}

}  // namespace nlogic
