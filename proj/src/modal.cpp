#include "nlogic/modal.hpp"

#include <algorithm>
#include <set>

namespace nlogic {

namespace {
MTermPtr node(MKind k, Sort s, MTermPtr a = nullptr, MTermPtr b = nullptr, int var = -1) {
  auto t = std::make_shared<MTerm>();
  t->kind = k;
  t->sort = s;
  t->a = std::move(a);
  t->b = std::move(b);
  t->var = var;
  return t;
}
}  // namespace

MTermPtr mvar(int i, Sort s) { return node(MKind::Var, s, nullptr, nullptr, i); }
MTermPtr mtop(Sort s) { return node(MKind::Top, s); }
MTermPtr mbot(Sort s) { return node(MKind::Bot, s); }
MTermPtr muconst() { return node(MKind::UConst, Sort::One); }

MTermPtr mmeet(MTermPtr a, MTermPtr b) {
  Sort s = a->sort;
  return node(MKind::Meet, s, std::move(a), std::move(b));
}
MTermPtr mjoin(MTermPtr a, MTermPtr b) {
  Sort s = a->sort;
  return node(MKind::Join, s, std::move(a), std::move(b));
}
MTermPtr mprime(MTermPtr a) {
  Sort s = opp(a->sort);
  return node(MKind::Prime, s, std::move(a));
}
MTermPtr mtright(MTermPtr a, MTermPtr b) {
  return node(MKind::TRight, Sort::Del, std::move(a), std::move(b));
}
MTermPtr mtleft(MTermPtr b, MTermPtr a) {
  return node(MKind::TLeft, Sort::Del, std::move(b), std::move(a));
}
MTermPtr modot(MTermPtr a, MTermPtr b) {
  return node(MKind::Odot, Sort::One, std::move(a), std::move(b));
}
MTermPtr mrspoon(MTermPtr a, MTermPtr b) {
  return node(MKind::RSpoon, Sort::One, std::move(a), std::move(b));
}
MTermPtr mlspoon(MTermPtr b, MTermPtr a) {
  return node(MKind::LSpoon, Sort::One, std::move(b), std::move(a));
}

bool mequal(const MTermPtr& x, const MTermPtr& y) {
  if (x.get() == y.get()) return true;
  if (x->kind != y->kind || x->sort != y->sort || x->var != y->var) return false;
  if ((x->a == nullptr) != (y->a == nullptr) || (x->b == nullptr) != (y->b == nullptr))
    return false;
  if (x->a && !mequal(x->a, y->a)) return false;
  if (x->b && !mequal(x->b, y->b)) return false;
  return true;
}

std::string mprint_var(int var, Sort s) {
  return (s == Sort::One ? "P" : "Q") + std::to_string(var + 1);
}

std::string mprint(const MTermPtr& t) {
  switch (t->kind) {
    case MKind::Var: return mprint_var(t->var, t->sort);
    case MKind::Top: return "⊤";
    case MKind::Bot: return "⊥";
    case MKind::UConst: return "u";
    case MKind::Meet: return "(" + mprint(t->a) + " ∩ " + mprint(t->b) + ")";
    case MKind::Join: return "(" + mprint(t->a) + " ∪ " + mprint(t->b) + ")";
    case MKind::Prime: {
      std::string inner = mprint(t->a);
      if (t->a->kind == MKind::Var || t->a->kind == MKind::Prime || t->a->kind == MKind::Top ||
          t->a->kind == MKind::Bot || t->a->kind == MKind::UConst)
        return inner + "'";
      return "(" + inner + ")'";
    }
    case MKind::TRight: return "(" + mprint(t->a) + " ▷ " + mprint(t->b) + ")";
    case MKind::TLeft: return "(" + mprint(t->a) + " ⊲ " + mprint(t->b) + ")";
    case MKind::Odot: return "(" + mprint(t->a) + " ⊙ " + mprint(t->b) + ")";
    case MKind::RSpoon: return "(" + mprint(t->a) + " ⊸ " + mprint(t->b) + ")";
    case MKind::LSpoon: return "(" + mprint(t->a) + " ⟜ " + mprint(t->b) + ")";
  }
  return "?";
}

bool sort_check(const MTermPtr& t) {
  switch (t->kind) {
    case MKind::Var:
    case MKind::Top:
    case MKind::Bot: return true;
    case MKind::UConst: return t->sort == Sort::One;
    case MKind::Meet:
    case MKind::Join:
      return sort_check(t->a) && sort_check(t->b) && t->a->sort == t->sort &&
             t->b->sort == t->sort;
    case MKind::Prime: return sort_check(t->a) && t->sort == opp(t->a->sort);
    case MKind::TRight:
      return sort_check(t->a) && sort_check(t->b) && t->sort == Sort::Del &&
             t->a->sort == Sort::One && t->b->sort == Sort::Del;
    case MKind::TLeft:
      return sort_check(t->a) && sort_check(t->b) && t->sort == Sort::Del &&
             t->a->sort == Sort::Del && t->b->sort == Sort::One;
    case MKind::Odot:
    case MKind::RSpoon:
    case MKind::LSpoon:
      return sort_check(t->a) && sort_check(t->b) && t->sort == Sort::One &&
             t->a->sort == Sort::One && t->b->sort == Sort::One;
  }
  return false;
}

namespace {
bool positive_rec(const MTermPtr& t, int primes) {
  switch (t->kind) {
    case MKind::Var: return primes % 2 == 0;
    case MKind::Top:
    case MKind::Bot:
    case MKind::UConst: return true;
    case MKind::Prime: return positive_rec(t->a, primes + 1);
    case MKind::RSpoon:
    case MKind::LSpoon:
      // antitone in the argument position
      return (t->kind == MKind::RSpoon
                  ? positive_rec(t->a, primes + 1) && positive_rec(t->b, primes)
                  : positive_rec(t->a, primes) && positive_rec(t->b, primes + 1));
    default: {
      bool ok = true;
      if (t->a) ok = ok && positive_rec(t->a, primes);
      if (t->b) ok = ok && positive_rec(t->b, primes);
      return ok;
    }
  }
}

void occ_rec(const MTermPtr& t, int var, Sort s, int primes, VarOcc& out) {
  if (t->kind == MKind::Var) {
    if (t->var == var && t->sort == s) {
      ++out.occurrences;
      if (primes == 0) out.bare = true;
      else if (primes == 1) out.single_primed = true;
      else if (primes == 2) out.double_primed = true;
      else out.deeper = true;
    }
    return;
  }
  if (t->kind == MKind::Prime) {
    occ_rec(t->a, var, s, primes + 1, out);
    return;
  }
  if (t->a) occ_rec(t->a, var, s, 0, out);
  if (t->b) occ_rec(t->b, var, s, 0, out);
}
}  // namespace

bool positive(const MTermPtr& t) { return positive_rec(t, 0); }

VarOcc occurrences(const MTermPtr& t, int var, Sort s) {
  VarOcc out;
  // Track only the immediate prime chain around each occurrence.
  occ_rec(t, var, s, 0, out);
  return out;
}

std::vector<std::pair<int, Sort>> mvars(const MTermPtr& t) {
  std::set<std::pair<int, int>> seen;
  std::vector<MTermPtr> stack = {t};
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    if (cur->kind == MKind::Var) seen.insert({cur->var, cur->sort == Sort::One ? 0 : 1});
    if (cur->a) stack.push_back(cur->a);
    if (cur->b) stack.push_back(cur->b);
  }
  std::vector<std::pair<int, Sort>> out;
  for (auto& [v, s] : seen) out.push_back({v, s == 0 ? Sort::One : Sort::Del});
  return out;
}

MTermPtr substitute_var(const MTermPtr& t, int var, Sort s, const MTermPtr& repl) {
  if (t->kind == MKind::Var) return t->var == var && t->sort == s ? repl : t;
  auto copy = std::make_shared<MTerm>(*t);
  if (t->a) copy->a = substitute_var(t->a, var, s, repl);
  if (t->b) copy->b = substitute_var(t->b, var, s, repl);
  return copy;
}

}  // namespace nlogic
