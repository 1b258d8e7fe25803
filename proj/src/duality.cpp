#include "nlogic/duality.hpp"

#include <algorithm>
#include <sstream>

#include "nlogic/frame_axioms.hpp"

namespace nlogic {

std::string to_string(Signature s) {
  switch (s) {
    case Signature::Poset: return "poset";
    case Signature::Semilattice: return "semilattice";
    case Signature::Lattice: return "lattice";
    case Signature::Lambek: return "lambek";
  }
  return "?";
}

Signature signature_from_string(const std::string& s) {
  if (s == "poset") return Signature::Poset;
  if (s == "semilattice") return Signature::Semilattice;
  if (s == "lattice") return Signature::Lattice;
  if (s == "lambek") return Signature::Lambek;
  throw FrameError("SignatureMismatch", "unknown signature '" + s + "'");
}

Signature default_signature(const OrderedAlgebra& a) {
  if (a.has_prod() && a.has_limp() && a.has_unit()) return Signature::Lambek;
  switch (a.kind) {
    case AlgKind::Poset: return Signature::Poset;
    case AlgKind::MeetSemilattice: return Signature::Semilattice;
    case AlgKind::Lattice: return Signature::Lattice;
  }
  return Signature::Poset;
}

int CanonicalFrame::filter_index(Bits f) const {
  for (size_t i = 0; i < filters.size(); ++i)
    if (filters[i] == f) return static_cast<int>(i);
  return -1;
}

int CanonicalFrame::ideal_index(Bits i) const {
  for (size_t k = 0; k < ideals.size(); ++k)
    if (ideals[k] == i) return static_cast<int>(k);
  return -1;
}

Bits CanonicalFrame::alpha(const OrderedAlgebra&, int elem) const {
  Bits out = 0;
  for (size_t i = 0; i < filters.size(); ++i)
    if (has(filters[i], elem)) out |= bit(static_cast<int>(i));
  return out;
}

Bits CanonicalFrame::eta(const OrderedAlgebra&, int elem) const {
  Bits out = 0;
  for (size_t i = 0; i < ideals.size(); ++i)
    if (has(ideals[i], elem)) out |= bit(static_cast<int>(i));
  return out;
}

CanonicalFrame canonical_frame(const OrderedAlgebra& a, Signature sig, bool allow_empty) {
  if (sig == Signature::Lambek && !(a.has_prod() && a.has_limp() && a.has_unit()))
    throw FrameError("SignatureMismatch", "lambek signature needs prod, limp and unit");
  CanonicalFrame cf;
  cf.signature = sig;
  auto fs = enumerate_filters(a, allow_empty);
  auto is = enumerate_ideals(a, allow_empty);
  cf.filters = fs.members;
  cf.ideals = is.members;
  cf.filter_gen = fs.generator;
  cf.ideal_gen = is.generator;
  int n1 = static_cast<int>(cf.filters.size());
  int nD = static_cast<int>(cf.ideals.size());
  if (n1 == 0 || nD == 0)
    throw FrameError("EmptyCarrier", "algebra has no filters or no ideals");
  if (n1 > 64 || nD > 64)
    throw FrameError("CarrierTooLarge", "too many filters/ideals for the frame representation");

  SortedFrame& f = cf.frame;
  f.n1 = n1;
  f.nD = nD;
  for (int i = 0; i < n1; ++i) f.names1.push_back("F" + std::to_string(i));
  for (int i = 0; i < nD; ++i) f.namesD.push_back("I" + std::to_string(i));
  f.irow.assign(n1, 0);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < nD; ++y)
      if ((cf.filters[x] & cf.ideals[y]) == 0) f.irow[x] |= bit(y);

  int e = -1;
  if (a.has_unit()) {
    e = a.unit;
    cf.u_policy = "U = Γx_e (filters containing the unit)";
  } else if (a.top >= 0) {
    e = a.top;
    cf.u_policy = "U = Γx_⊤ (integral reading: filters containing the top)";
  }
  if (e >= 0) {
    f.has_u = true;
    for (int x = 0; x < n1; ++x)
      if (has(cf.filters[x], e)) f.u |= bit(x);
  } else {
    cf.u_policy = "no unit and no top: U omitted";
  }

  f.has_t = true;
  f.t_sec.assign(n1, std::vector<Bits>(nD, 0));
  for (int x = 0; x < n1; ++x)
    for (int v = 0; v < nD; ++v)
      for (int y = 0; y < nD; ++y) {
        bool all = true;
        for (int ea : members(cf.filters[x]))
          for (int eb : members(cf.ideals[v]))
            if (!has(cf.ideals[y], a.imp[ea][eb])) all = false;
        if (all) f.t_sec[x][v] |= bit(y);
      }

  if (sig == Signature::Lambek) {
    f.has_r = true;
    f.r_sec.assign(n1, std::vector<Bits>(n1, 0));
    for (int x = 0; x < n1; ++x)
      for (int z = 0; z < n1; ++z)
        for (int u = 0; u < n1; ++u) {
          bool all = true;
          for (int ea : members(cf.filters[x]))
            for (int eb : members(cf.filters[z]))
              if (!has(cf.filters[u], (*a.prod)[ea][eb])) all = false;
          if (all) f.r_sec[x][z] |= bit(u);
        }
    f.has_s = true;
    f.s_sec.assign(nD, std::vector<Bits>(n1, 0));
    for (int v = 0; v < nD; ++v)
      for (int x = 0; x < n1; ++x)
        for (int y = 0; y < nD; ++y) {
          bool all = true;
          for (int ea : members(cf.filters[x]))
            for (int eb : members(cf.ideals[v]))
              if (!has(cf.ideals[y], (*a.limp)[eb][ea])) all = false;
          if (all) f.s_sec[v][x] |= bit(y);
        }
  }
  f.finish();
  return cf;
}

namespace {

std::string set1_str(const CanonicalFrame& cf, Bits s) {
  return set_to_string(s, cf.frame.names1);
}

void line(VerifyReport& r, const std::string& id, bool ok, const std::string& detail) {
  r.lines.push_back({id, ok, detail});
}

}  // namespace

VerifyReport verify_embedding(const OrderedAlgebra& a, const CanonicalFrame& cf) {
  VerifyReport r;
  r.title = "representation embedding";
  const SortedFrame& f = cf.frame;
  bool order_ok = true;
  std::string w;
  for (int x = 0; x < a.n && order_ok; ++x)
    for (int y = 0; y < a.n && order_ok; ++y) {
      bool lhs = a.leq(x, y);
      bool rhs = subset(cf.alpha(a, x), cf.alpha(a, y));
      if (lhs != rhs) {
        order_ok = false;
        w = "(" + a.names[x] + "," + a.names[y] + ")";
      }
    }
  line(r, "order-embedding", order_ok, w);

  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      Bits lhs = cf.alpha(a, a.imp[x][y]);
      Bits rhs = f.ss_imp(cf.alpha(a, x), cf.alpha(a, y));
      if (lhs != rhs)
        line(r, "alpha(a->b)=alpha(a)=>alpha(b)", false,
             "(" + a.names[x] + "," + a.names[y] + "): " + set1_str(cf, lhs) + " vs " +
                 set1_str(cf, rhs));
    }
  if (r.lines.size() == 1) line(r, "alpha(a->b)=alpha(a)=>alpha(b)", true, "");

  if (cf.signature == Signature::Lambek) {
    bool ok = true;
    std::string wit;
    for (int x = 0; x < a.n && ok; ++x)
      for (int y = 0; y < a.n && ok; ++y) {
        if (cf.alpha(a, (*a.prod)[x][y]) != f.ss_prod(cf.alpha(a, x), cf.alpha(a, y))) {
          ok = false;
          wit = "(" + a.names[x] + "," + a.names[y] + ")";
        }
      }
    line(r, "alpha(a∘b)=(alpha(a)⊙alpha(b))''", ok, wit);
    ok = true;
    wit.clear();
    for (int x = 0; x < a.n && ok; ++x)
      for (int y = 0; y < a.n && ok; ++y) {
        if (cf.alpha(a, (*a.limp)[y][x]) != f.ss_limp(cf.alpha(a, y), cf.alpha(a, x))) {
          ok = false;
          wit = "(" + a.names[y] + "<-" + a.names[x] + ")";
        }
      }
    line(r, "alpha(b<-a)=alpha(b)<=alpha(a)", ok, wit);
  }

  if (a.kind != AlgKind::Poset) {
    bool ok = true;
    std::string wit;
    for (int x = 0; x < a.n && ok; ++x)
      for (int y = 0; y < a.n && ok; ++y) {
        int m = a.meet[x][y];
        if (m >= 0 && cf.alpha(a, m) != (cf.alpha(a, x) & cf.alpha(a, y))) {
          ok = false;
          wit = "(" + a.names[x] + "," + a.names[y] + ")";
        }
      }
    line(r, "alpha(a∧b)=alpha(a)∩alpha(b)", ok, wit);
  }
  if (a.kind == AlgKind::Lattice) {
    bool ok = true;
    std::string wit;
    for (int x = 0; x < a.n && ok; ++x)
      for (int y = 0; y < a.n && ok; ++y) {
        int j = a.join[x][y];
        if (j >= 0 &&
            cf.alpha(a, j) != f.closure(Sort::One, cf.alpha(a, x) | cf.alpha(a, y))) {
          ok = false;
          wit = "(" + a.names[x] + "," + a.names[y] + ")";
        }
      }
    line(r, "alpha(a∨b)=(alpha(a)∪alpha(b))''", ok, wit);
  }

  // α and η are primes of one another on principal points.
  bool dual_ok = true;
  std::string wit;
  for (int x = 0; x < a.n && dual_ok; ++x) {
    if (f.prime(Sort::One, cf.alpha(a, x)) != cf.eta(a, x)) {
      dual_ok = false;
      wit = a.names[x];
    }
  }
  line(r, "alpha(a)'=eta(a)", dual_ok, wit);
  return r;
}

VerifyReport verify_canonical_extension(const OrderedAlgebra&, const CanonicalFrame& cf) {
  VerifyReport r;
  r.title = "canonical extension (Δ1-density and compactness)";
  const SortedFrame& f = cf.frame;
  auto stables = f.stable_sets(Sort::One);
  bool join_dense = true, meet_dense = true;
  std::string wj, wm;
  for (auto& g : stables) {
    Bits uni = 0;
    for (int x : members(g.members)) uni |= f.gamma(Sort::One, x);
    if (uni != g.members) {
      join_dense = false;
      wj = set1_str(cf, g.members);
    }
    Bits inter = f.full(Sort::One);
    for (int y = 0; y < f.nD; ++y) {
      bool all_gap = subset(g.members, f.prime(Sort::Del, bit(y)));
      if (all_gap) inter &= f.prime(Sort::Del, bit(y));
    }
    if (inter != g.members) {
      meet_dense = false;
      wm = set1_str(cf, g.members);
    }
  }
  line(r, "join-density: A=⋃{Γx : x∈A}", join_dense, wj);
  line(r, "meet-density: A=⋂{{y}' : A⫫y}", meet_dense, wm);

  bool compact = true;
  std::string wc;
  for (int x = 0; x < f.n1 && compact; ++x)
    for (int y = 0; y < f.nD && compact; ++y) {
      bool incl = subset(f.gamma(Sort::One, x), f.prime(Sort::Del, bit(y)));
      bool meets = (cf.filters[x] & cf.ideals[y]) != 0;
      if (incl != meets) {
        compact = false;
        wc = "(x,y)=(F" + std::to_string(x) + ",I" + std::to_string(y) + ")";
      }
    }
  line(r, "compactness: Γx⊆{y}' iff x∩y≠∅", compact, wc);
  return r;
}

VerifyReport verify_pi_extension(const OrderedAlgebra& a, const CanonicalFrame& cf) {
  VerifyReport r;
  r.title = "π-extension of implication";
  const SortedFrame& f = cf.frame;

  // pi(x, y) = ⋁{ α(a→b) : a∈x, b∈y }  as a stable set.
  auto pi = [&](int x, int y) {
    Bits uni = 0;
    for (int ea : members(cf.filters[x]))
      for (int eb : members(cf.ideals[y])) uni |= cf.alpha(a, a.imp[ea][eb]);
    return f.closure(Sort::One, uni);
  };

  bool principal_ok = true;
  std::string wp;
  for (int ea = 0; ea < a.n && principal_ok; ++ea)
    for (int eb = 0; eb < a.n && principal_ok; ++eb) {
      int x = cf.filter_index(principal_filter(a, ea));
      int y = cf.ideal_index(principal_ideal(a, eb));
      if (x < 0 || y < 0) continue;
      if (pi(x, y) != cf.alpha(a, a.imp[ea][eb])) {
        principal_ok = false;
        wp = "(" + a.names[ea] + "," + a.names[eb] + ")";
      }
    }
  line(r, "Γx_a ⇒π {y_b}' = alpha(a->b)", principal_ok, wp);

  bool closed_open_ok = true;
  std::string wco;
  for (int x = 0; x < f.n1 && closed_open_ok; ++x)
    for (int y = 0; y < f.nD && closed_open_ok; ++y) {
      Bits lhs = f.ss_imp(f.gamma(Sort::One, x), f.prime(Sort::Del, bit(y)));
      if (lhs != pi(x, y)) {
        closed_open_ok = false;
        wco = "(F" + std::to_string(x) + ",I" + std::to_string(y) + ")";
      }
    }
  line(r, "Γx ⇒ {y}' matches the closed/open π-form", closed_open_ok, wco);

  auto stables = f.stable_sets(Sort::One);
  bool stable_ok = true;
  std::string ws;
  for (auto& ga : stables) {
    for (auto& gc : stables) {
      Bits inter = f.full(Sort::One);
      for (int x : members(ga.members))
        for (int y = 0; y < f.nD; ++y)
          if (subset(gc.members, f.prime(Sort::Del, bit(y)))) inter &= pi(x, y);
      if (inter != f.ss_imp(ga.members, gc.members)) {
        stable_ok = false;
        ws = set1_str(cf, ga.members) + " ⇒ " + set1_str(cf, gc.members);
      }
    }
  }
  line(r, "A⇒C = ⋂{Γx ⇒π {y}' : x∈A, C⫫y}", stable_ok, ws);
  return r;
}

std::vector<std::string> classes_for_signature(const OrderedAlgebra& a, Signature sig) {
  switch (sig) {
    case Signature::Poset: {
      std::vector<std::string> out = {"PU"};
      if (a.has_unit()) {
        bool left_unital = true;
        for (int x = 0; x < a.n; ++x)
          if (a.imp[a.unit][x] != x) left_unital = false;
        if (left_unital) {
          out.push_back("PUl");
          out.push_back("PUl*");
          out.push_back("PUl_*");
        }
      }
      return out;
    }
    case Signature::Semilattice: return {"PU", "S"};
    case Signature::Lattice: return {"PU", "S", "L"};
    case Signature::Lambek: return {"LK", "LK*", "LK_*"};
  }
  return {};
}

VerifyReport verify_canonical_class(const OrderedAlgebra& a, const CanonicalFrame& cf) {
  VerifyReport r;
  r.title = "canonical frame class membership";
  for (auto& cls : classes_for_signature(a, cf.signature)) {
    auto report = check_frame_class(cf.frame, cls);
    for (auto& ax : report.axioms)
      line(r, cls + "/" + ax.id, ax.pass, ax.witness);
  }
  return r;
}

}  // namespace nlogic
