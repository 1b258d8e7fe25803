#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nlogic/frame.hpp"

namespace nlogic {

// Terms of the two-sorted companion modal language. Sort discipline:
//   sort 1:  P_i | top | bot | u | ∩ | ∪ | β' | α⊙α | α⊸α | α⟜α
//   sort ∂:  P^i | top | bot | ∩ | ∪ | α' | α▷β | β⊲α
// ⊸/⟜ are the residual implications of ⊙ (sort 1 on both sides).
enum class MKind { Var, Top, Bot, UConst, Meet, Join, Prime, TRight, TLeft, Odot, RSpoon, LSpoon };

struct MTerm;
using MTermPtr = std::shared_ptr<const MTerm>;

struct MTerm {
  MKind kind;
  Sort sort;
  int var = -1;
  MTermPtr a, b;
};

MTermPtr mvar(int i, Sort s);
MTermPtr mtop(Sort s);
MTermPtr mbot(Sort s);
MTermPtr muconst();
MTermPtr mmeet(MTermPtr a, MTermPtr b);
MTermPtr mjoin(MTermPtr a, MTermPtr b);
MTermPtr mprime(MTermPtr a);
MTermPtr mtright(MTermPtr a, MTermPtr b);  // α ▷ β : (1,∂) → ∂
MTermPtr mtleft(MTermPtr b, MTermPtr a);   // β ⊲ α : (∂,1) → ∂
MTermPtr modot(MTermPtr a, MTermPtr b);    // α ⊙ η : (1,1) → 1
MTermPtr mrspoon(MTermPtr a, MTermPtr b);  // α ⊸ η
MTermPtr mlspoon(MTermPtr b, MTermPtr a);  // η ⟜ α

bool mequal(const MTermPtr& x, const MTermPtr& y);
std::string mprint(const MTermPtr& t);
std::string mprint_var(int var, Sort s);  // P1 / Q^1 style

// Independent sort checker (walks the tree re-deriving every sort).
bool sort_check(const MTermPtr& t);

// Prime-depth parity: a variable occurs positively when under an even number
// of primes. positive(t) holds when every occurrence of every variable does.
bool positive(const MTermPtr& t);
// Occurrence shapes of one variable inside t.
struct VarOcc {
  bool bare = false;           // some occurrence not wrapped in a prime chain
  bool single_primed = false;  // some occurrence wrapped in exactly one prime
  bool double_primed = false;  // exactly two primes
  bool deeper = false;         // three or more
  int occurrences = 0;
};
VarOcc occurrences(const MTermPtr& t, int var, Sort s);
std::vector<std::pair<int, Sort>> mvars(const MTermPtr& t);

MTermPtr substitute_var(const MTermPtr& t, int var, Sort s, const MTermPtr& repl);

}  // namespace nlogic
