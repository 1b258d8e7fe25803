#include "nlogic/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace nlogic {

std::string to_string(AlgKind k) {
  switch (k) {
    case AlgKind::Poset: return "poset";
    case AlgKind::MeetSemilattice: return "meet-semilattice";
    case AlgKind::Lattice: return "lattice";
  }
  return "?";
}

int max_carrier() {
  if (const char* env = std::getenv("NLOGIC_MAX_CARRIER")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, 60);
  }
  return 12;
}

int OrderedAlgebra::element(const std::string& name) const {
  for (int i = 0; i < n; ++i)
    if (names[i] == name) return i;
  throw AlgebraError("UnknownElement", "no element named '" + name + "'");
}

std::string OrderedAlgebra::describe() const {
  std::ostringstream os;
  os << to_string(kind) << ", " << n << " elements";
  if (actual_kind != kind) os << " (carrier is a " << to_string(actual_kind) << ")";
  if (unit >= 0) os << ", unit " << names[unit];
  if (top >= 0) os << ", top " << names[top];
  if (bottom >= 0) os << ", bottom " << names[bottom];
  if (has_prod()) os << ", with product";
  if (has_limp()) os << ", with left implication";
  return os.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

RawAlgebra parse_algebra_text(const std::string& text) {
  RawAlgebra raw;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (split_ws(line).empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw AlgebraError("ParseError", "line " + std::to_string(lineno) + ": missing ':'");
    std::string key = line.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    std::string rest = line.substr(colon + 1);
    auto words = split_ws(rest);
    if (key == "elements") {
      raw.elements.insert(raw.elements.end(), words.begin(), words.end());
    } else if (key == "order") {
      for (auto& w : words) {
        auto p = w.find("<=");
        if (p == std::string::npos)
          throw AlgebraError("ParseError",
                             "line " + std::to_string(lineno) + ": order entry '" + w +
                                 "' (want a<=b)");
        raw.order.emplace_back(w.substr(0, p), w.substr(p + 2));
      }
    } else if (key == "kind") {
      if (words.size() != 1)
        throw AlgebraError("ParseError", "line " + std::to_string(lineno) + ": kind wants one word");
      raw.kind = words[0];
    } else if (key == "unit") {
      if (words.size() != 1)
        throw AlgebraError("ParseError", "line " + std::to_string(lineno) + ": unit wants one word");
      raw.unit = words[0];
    } else if (key == "imp" || key == "prod" || key == "limp") {
      auto* dst = key == "imp" ? &raw.imp : key == "prod" ? &raw.prod : &raw.limp;
      for (auto& w : words) {
        auto open = w.find('(');
        auto comma = w.find(',');
        auto close = w.find(')');
        auto eq = w.find('=');
        if (open != 0 || comma == std::string::npos || close == std::string::npos ||
            eq == std::string::npos || !(open < comma && comma < close && close < eq))
          throw AlgebraError("ParseError", "line " + std::to_string(lineno) + ": bad " + key +
                                               " entry '" + w + "' (want (a,b)=c)");
        dst->emplace_back(w.substr(1, comma - 1), w.substr(comma + 1, close - comma - 1),
                          w.substr(eq + 1));
      }
    } else {
      throw AlgebraError("ParseError",
                         "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return raw;
}

namespace {

std::vector<std::vector<int>> build_table(
    const OrderedAlgebra& a, const std::vector<std::tuple<std::string, std::string, std::string>>& entries,
    const std::map<std::string, int>& index, const std::string& opname) {
  int n = a.n;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (auto& [x, y, z] : entries) {
    auto find = [&](const std::string& nm) {
      auto it = index.find(nm);
      if (it == index.end())
        throw AlgebraError("ParseError", opname + " entry references unknown element '" + nm + "'");
      return it->second;
    };
    int i = find(x), j = find(y), k = find(z);
    if (t[i][j] >= 0 && t[i][j] != k)
      throw AlgebraError("OperatorTypeViolation",
                         opname + " table defines (" + x + "," + y + ") twice");
    t[i][j] = k;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t[i][j] < 0)
        throw AlgebraError("OperatorTypeViolation",
                           opname + " table is partial: missing (" + a.names[i] + "," +
                               a.names[j] + ")");
  return t;
}

}  // namespace

OrderedAlgebra validate_algebra(const RawAlgebra& raw) {
  OrderedAlgebra a;
  a.names = raw.elements;
  a.n = static_cast<int>(a.names.size());
  if (a.n == 0) throw AlgebraError("ParseError", "no elements declared");
  if (a.n > max_carrier())
    throw AlgebraError("CarrierTooLarge", "carrier size " + std::to_string(a.n) +
                                              " exceeds limit " + std::to_string(max_carrier()));
  std::map<std::string, int> index;
  for (int i = 0; i < a.n; ++i) {
    if (index.count(a.names[i]))
      throw AlgebraError("ParseError", "duplicate element '" + a.names[i] + "'");
    index[a.names[i]] = i;
  }

  // Reflexive-transitive closure of the declared pairs (covers are fine).
  a.up.assign(a.n, 0);
  for (int i = 0; i < a.n; ++i) a.up[i] = bit(i);
  for (auto& [x, y] : raw.order) {
    if (!index.count(x) || !index.count(y))
      throw AlgebraError("ParseError", "order references unknown element");
    a.up[index[x]] |= bit(index[y]);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < a.n; ++i)
      for (int j : members(a.up[i])) {
        Bits next = a.up[i] | a.up[j];
        if (next != a.up[i]) {
          a.up[i] = next;
          changed = true;
        }
      }
  }
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < i; ++j)
      if (a.leq(i, j) && a.leq(j, i))
        throw AlgebraError("AntisymmetryViolation",
                           a.names[i] + " <= " + a.names[j] + " and conversely");
  a.down.assign(a.n, 0);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (a.leq(j, i)) a.down[i] |= bit(j);

  // Bounds and meet/join tables.
  auto glb = [&](int x, int y) -> int {
    Bits lower = a.down[x] & a.down[y];
    for (int c : members(lower))
      if (subset(lower, a.down[c])) return c;
    return -1;
  };
  auto lub = [&](int x, int y) -> int {
    Bits upper = a.up[x] & a.up[y];
    for (int c : members(upper))
      if (subset(upper, a.up[c])) return c;
    return -1;
  };
  a.meet.assign(a.n, std::vector<int>(a.n, -1));
  a.join.assign(a.n, std::vector<int>(a.n, -1));
  bool all_meets = true, all_joins = true;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      a.meet[i][j] = glb(i, j);
      a.join[i][j] = lub(i, j);
      all_meets &= a.meet[i][j] >= 0;
      all_joins &= a.join[i][j] >= 0;
    }
  for (int i = 0; i < a.n; ++i) {
    if (count(a.down[i]) == a.n) a.top = i;
    if (count(a.up[i]) == a.n) a.bottom = i;
  }

  AlgKind actual = all_meets && all_joins ? AlgKind::Lattice
                   : all_meets           ? AlgKind::MeetSemilattice
                                         : AlgKind::Poset;
  AlgKind declared;
  if (raw.kind == "poset") declared = AlgKind::Poset;
  else if (raw.kind == "meet-semilattice" || raw.kind == "semilattice")
    declared = AlgKind::MeetSemilattice;
  else if (raw.kind == "lattice") declared = AlgKind::Lattice;
  else throw AlgebraError("ParseError", "unknown kind '" + raw.kind + "'");
  if (static_cast<int>(declared) > static_cast<int>(actual))
    throw AlgebraError("OperatorTypeViolation",
                       "declared kind " + raw.kind + " but carrier is only a " + to_string(actual));
  a.kind = declared;
  a.actual_kind = actual;

  a.imp = build_table(a, raw.imp, index, "imp");
  if (!raw.prod.empty()) a.prod = build_table(a, raw.prod, index, "prod");
  if (!raw.limp.empty()) a.limp = build_table(a, raw.limp, index, "limp");
  if (a.has_limp() && !a.has_prod())
    throw AlgebraError("ResiduationViolation", "limp declared without prod");

  // Tonicity of ->: antitone in the first argument, monotone in the second.
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int x2 = 0; x2 < a.n; ++x2) {
      if (!a.leq(x1, x2)) continue;
      for (int y = 0; y < a.n; ++y) {
        if (!a.leq(a.imp[x2][y], a.imp[x1][y]))
          throw AlgebraError("OperatorTypeViolation",
                             "antitonicity: " + a.names[x1] + "<=" + a.names[x2] + " but not " +
                                 a.names[x2] + "->" + a.names[y] + " <= " + a.names[x1] + "->" +
                                 a.names[y]);
        if (!a.leq(a.imp[y][x1], a.imp[y][x2]))
          throw AlgebraError("OperatorTypeViolation",
                             "monotonicity: " + a.names[x1] + "<=" + a.names[x2] + " but not " +
                                 a.names[y] + "->" + a.names[x1] + " <= " + a.names[y] + "->" +
                                 a.names[x2]);
      }
    }

  if (!raw.unit.empty()) {
    if (!index.count(raw.unit)) throw AlgebraError("ParseError", "unknown unit element");
    a.unit = index[raw.unit];
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y)
        if (a.leq(x, y) != a.leq(a.unit, a.imp[x][y]))
          throw AlgebraError("UnitAxiomViolation",
                             "a<=b iff e<=a->b fails at (" + a.names[x] + "," + a.names[y] + ")");
  }

  if (a.has_prod()) {
    auto& p = *a.prod;
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y)
        for (int c = 0; c < a.n; ++c) {
          if (a.leq(p[x][y], c) != a.leq(y, a.imp[x][c]))
            throw AlgebraError("ResiduationViolation",
                               "x∘y<=c iff y<=x->c fails at (" + a.names[x] + "," + a.names[y] +
                                   "," + a.names[c] + ")");
          if (a.has_limp() && a.leq(x, (*a.limp)[c][y]) != a.leq(p[x][y], c))
            throw AlgebraError("ResiduationViolation",
                               "x<=c<-y iff x∘y<=c fails at (" + a.names[x] + "," + a.names[y] +
                                   "," + a.names[c] + ")");
        }
    if (a.has_unit()) {
      for (int x = 0; x < a.n; ++x)
        if (p[a.unit][x] != x || p[x][a.unit] != x)
          throw AlgebraError("UnitAxiomViolation",
                             "unit is not a two-sided identity for ∘ at " + a.names[x]);
    }
  }

  // Distribution laws tied to the declared kind.
  if (a.kind != AlgKind::Poset) {
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y)
        for (int z = 0; z < a.n; ++z) {
          int m = a.meet[y][z];
          if (m >= 0 && a.imp[x][m] != a.meet[a.imp[x][y]][a.imp[x][z]])
            throw AlgebraError("OperatorTypeViolation",
                               "a->(b∧c)=(a->b)∧(a->c) fails at (" + a.names[x] + "," +
                                   a.names[y] + "," + a.names[z] + ")");
        }
  }
  if (a.kind == AlgKind::Lattice) {
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y)
        for (int z = 0; z < a.n; ++z) {
          int j = a.join[x][y];
          if (j >= 0 && a.imp[j][z] != a.meet[a.imp[x][z]][a.imp[y][z]])
            throw AlgebraError("OperatorTypeViolation",
                               "(a∨b)->c=(a->c)∧(b->c) fails at (" + a.names[x] + "," +
                                   a.names[y] + "," + a.names[z] + ")");
        }
  }
  return a;
}

OrderedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("IOError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return validate_algebra(parse_algebra_text(ss.str()));
}

bool is_filter(const OrderedAlgebra& a, Bits s, bool allow_empty) {
  if (!s) return allow_empty;
  for (int x : members(s))
    if (!subset(a.up[x], s)) return false;
  for (int x : members(s))
    for (int y : members(s)) {
      if ((a.down[x] & a.down[y] & s) == 0) return false;
    }
  return true;
}

bool is_ideal(const OrderedAlgebra& a, Bits s, bool allow_empty) {
  if (!s) return allow_empty;
  for (int x : members(s))
    if (!subset(a.down[x], s)) return false;
  for (int x : members(s))
    for (int y : members(s))
      if ((a.up[x] & a.up[y] & s) == 0) return false;
  return true;
}

namespace {
DirectedSets enumerate_directed(const OrderedAlgebra& a, bool filters, bool allow_empty) {
  DirectedSets out;
  Bits full = mask(a.n);
  for (Bits s = 0; s <= full; ++s) {
    bool ok = filters ? is_filter(a, s, allow_empty) : is_ideal(a, s, allow_empty);
    if (ok) out.members.push_back(s);
    if (s == full) break;
  }
  std::sort(out.members.begin(), out.members.end(), lex_less);
  out.generator.assign(out.members.size(), -1);
  for (size_t i = 0; i < out.members.size(); ++i) {
    Bits s = out.members[i];
    for (int g : members(s)) {
      Bits princ = filters ? a.up[g] : a.down[g];
      if (princ == s) out.generator[i] = g;
    }
  }
  return out;
}
}  // namespace

DirectedSets enumerate_filters(const OrderedAlgebra& a, bool allow_empty) {
  return enumerate_directed(a, true, allow_empty);
}
DirectedSets enumerate_ideals(const OrderedAlgebra& a, bool allow_empty) {
  return enumerate_directed(a, false, allow_empty);
}

Bits point_tright(const OrderedAlgebra& a, Bits filter_x, Bits ideal_v) {
  if (!is_filter(a, filter_x)) throw AlgebraError("NotAFilter", "tright needs a filter left argument");
  if (!is_ideal(a, ideal_v)) throw AlgebraError("NotAnIdeal", "tright needs an ideal right argument");
  Bits out = 0;
  for (int x : members(filter_x))
    for (int v : members(ideal_v)) out |= a.down[a.imp[x][v]];
  return out;
}

Bits point_tleft(const OrderedAlgebra& a, Bits ideal_v, Bits filter_x) {
  if (!a.has_limp()) throw AlgebraError("OperatorTypeViolation", "tleft needs limp");
  if (!is_ideal(a, ideal_v)) throw AlgebraError("NotAnIdeal", "tleft needs an ideal left argument");
  if (!is_filter(a, filter_x)) throw AlgebraError("NotAFilter", "tleft needs a filter right argument");
  Bits out = 0;
  for (int x : members(filter_x))
    for (int v : members(ideal_v)) out |= a.down[(*a.limp)[v][x]];
  return out;
}

Bits point_circ(const OrderedAlgebra& a, Bits filter_x, Bits filter_z) {
  if (!a.has_prod()) throw AlgebraError("OperatorTypeViolation", "circ needs prod");
  if (!is_filter(a, filter_x) || !is_filter(a, filter_z))
    throw AlgebraError("NotAFilter", "circ needs filter arguments");
  Bits out = 0;
  for (int x : members(filter_x))
    for (int z : members(filter_z)) out |= a.up[(*a.prod)[x][z]];
  return out;
}

Bits principal_filter(const OrderedAlgebra& a, int e) { return a.up[e]; }
Bits principal_ideal(const OrderedAlgebra& a, int e) { return a.down[e]; }

}  // namespace nlogic
