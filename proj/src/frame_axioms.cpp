#include "nlogic/frame_axioms.hpp"

#include <sstream>

namespace nlogic {

namespace {

std::string pt(const SortedFrame& f, Sort s, int i) { return f.names(s)[i]; }

AxiomResult pass(const std::string& id) { return {id, true, ""}; }
AxiomResult fail(const std::string& id, const std::string& w) { return {id, false, w}; }

AxiomResult check_f1(const SortedFrame& f, char rel) {
  std::string id = std::string("F1(") + rel + ")";
  const auto& sec = f.sec(rel);
  Sort out = rel == 'R' ? Sort::One : Sort::Del;
  for (size_t i = 0; i < sec.size(); ++i)
    for (size_t j = 0; j < sec[i].size(); ++j)
      if (!f.is_stable(out, sec[i][j])) {
        std::ostringstream w;
        w << rel << "-section at (" << i << "," << j << ") is not a Galois set";
        return fail(id, w.str());
      }
  return pass(id);
}

AxiomResult check_m(const SortedFrame& f, char rel) {
  std::string id = std::string("M(") + rel + ")";
  const auto& sec = f.sec(rel);
  // Sorts of the two argument places.
  Sort s1 = rel == 'S' ? Sort::Del : Sort::One;
  Sort s2 = rel == 'T' ? Sort::Del : rel == 'R' ? Sort::One : Sort::One;
  int n1 = f.size(s1), n2 = f.size(s2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      Bits out = sec[i][j];
      for (int i2 = 0; i2 < n1; ++i2)
        for (int j2 = 0; j2 < n2; ++j2) {
          if (!f.leq(s1, i2, i) || !f.leq(s2, j2, j)) continue;
          if (!subset(out, sec[i2][j2]))
            return fail(id, std::string(1, rel) + "-section at (" + std::to_string(i) + "," +
                                std::to_string(j) + ") not decreasing toward (" +
                                std::to_string(i2) + "," + std::to_string(j2) + ")");
        }
    }
  return pass(id);
}

AxiomResult check_res(const SortedFrame& f) {
  for (int x = 0; x < f.n1; ++x)
    for (int z = 0; z < f.n1; ++z)
      for (int v = 0; v < f.nD; ++v) {
        bool s = has(f.dual_sec('S', v, z), x);
        bool r = has(f.dual_sec('R', x, z), v);
        bool t = has(f.dual_sec('T', x, v), z);
        if (s != r || r != t) {
          std::ostringstream w;
          w << "(x,z,y)=(" << pt(f, Sort::One, x) << "," << pt(f, Sort::One, z) << ","
            << pt(f, Sort::Del, v) << "): xS'yz=" << s << " yR'xz=" << r << " zT'xy=" << t;
          return fail("RES", w.str());
        }
      }
  return pass("RES");
}

AxiomResult check_u(const SortedFrame& f, bool whole_carrier) {
  std::string id = whole_carrier ? "F2" : "U";
  Bits u = whole_carrier ? f.full(Sort::One) : f.u;
  if (!whole_carrier) {
    if (!f.has_u) return fail(id, "MissingRelation: frame declares no U");
    if (!f.is_stable(Sort::One, u)) return fail(id, "U is not a Galois stable set");
  }
  for (int x = 0; x < f.n1; ++x)
    for (int v = 0; v < f.nD; ++v) {
      bool gap = f.gapped(x, v);
      bool all = subset(u, f.dual_sec('T', x, v));
      if (gap != all) {
        std::ostringstream w;
        w << "(x,v)=(" << pt(f, Sort::One, x) << "," << pt(f, Sort::Del, v) << "): x⫫v=" << gap
          << " but ∀u∈U uT'xv=" << all;
        return fail(id, w.str());
      }
    }
  return pass(id);
}

AxiomResult check_ustar(const SortedFrame& f) {
  if (!f.has_u) return fail("Ustar", "MissingRelation: frame declares no U");
  if (!f.is_stable(Sort::One, f.u)) return fail("Ustar", "U is not a Galois stable set");
  return pass("Ustar");
}

AxiomResult check_u1(const SortedFrame& f) {
  if (!f.has_u) return fail("U1", "MissingRelation: frame declares no U");
  for (int x = 0; x < f.n1; ++x) {
    if (!has(f.u, x)) continue;
    for (int v = 0; v < f.nD; ++v)
      for (int y : members(f.sec('T')[x][v]))
        if (!f.leq(Sort::Del, v, y))
          return fail("U1", "(y,x,v)=(" + pt(f, Sort::Del, y) + "," + pt(f, Sort::One, x) + "," +
                                pt(f, Sort::Del, v) + ") with x∈U but not v≤y");
  }
  return pass("U1");
}

AxiomResult check_u2(const SortedFrame& f) {
  if (!f.has_u) return fail("U2", "MissingRelation: frame declares no U");
  for (int y = 0; y < f.nD; ++y)
    for (int x = 0; x < f.n1; ++x) {
      if (!f.incident(x, y)) continue;
      bool ok = false;
      for (int v = 0; v < f.nD && !ok; ++v) {
        if (!f.incident(x, v)) continue;
        for (int x1 : members(f.u))
          for (int v1 = 0; v1 < f.nD; ++v1)
            if (has(f.sec('T')[x1][v1], v) && f.leq(Sort::Del, y, v1)) ok = true;
      }
      if (!ok)
        return fail("U2", "(x,y)=(" + pt(f, Sort::One, x) + "," + pt(f, Sort::Del, y) + ")");
    }
  return pass("U2");
}

AxiomResult check_u2star(const SortedFrame& f) {
  if (!f.has_u) return fail("U*2", "MissingRelation: frame declares no U");
  for (int y = 0; y < f.nD; ++y) {
    bool ok = false;
    for (int x : members(f.u))
      for (int v = 0; v < f.nD; ++v)
        if (has(f.sec('T')[x][v], y) && f.leq(Sort::Del, y, v)) ok = true;
    if (!ok) return fail("U*2", "y=" + pt(f, Sort::Del, y));
  }
  return pass("U*2");
}

AxiomResult check_u2bottomstar(const SortedFrame& f) {
  if (!f.has_u) return fail("U_*2", "MissingRelation: frame declares no U");
  for (int y = 0; y < f.nD; ++y) {
    bool ok = false;
    for (int x : members(f.u))
      if (has(f.sec('T')[x][y], y)) ok = true;
    if (!ok) return fail("U_*2", "y=" + pt(f, Sort::Del, y));
  }
  return pass("U_*2");
}

AxiomResult check_f2i(const SortedFrame& f, int which) {
  std::string id = which == 1 ? "F2.1" : "F2.2";
  if (!f.has_u) return fail(id, "MissingRelation: frame declares no U");
  for (int z1 = 0; z1 < f.n1; ++z1)
    for (int z2 = 0; z2 < f.n1; ++z2)
      for (int x : members(f.sec('R')[z1][z2])) {
        if (which == 1 && has(f.u, z1) && !f.leq(Sort::One, z2, x))
          return fail(id, "(x,z1,z2)=(" + pt(f, Sort::One, x) + "," + pt(f, Sort::One, z1) + "," +
                              pt(f, Sort::One, z2) + ")");
        if (which == 2 && has(f.u, z2) && !f.leq(Sort::One, z1, x))
          return fail(id, "(x,z1,z2)=(" + pt(f, Sort::One, x) + "," + pt(f, Sort::One, z1) + "," +
                              pt(f, Sort::One, z2) + ")");
      }
  return pass(id);
}

AxiomResult check_f3i(const SortedFrame& f, int which) {
  std::string id = which == 1 ? "F3.1" : "F3.2";
  if (!f.has_u) return fail(id, "MissingRelation: frame declares no U");
  for (int x = 0; x < f.n1; ++x)
    for (int y = 0; y < f.nD; ++y) {
      if (!f.incident(x, y)) continue;
      bool ok = false;
      for (int z = 0; z < f.n1 && !ok; ++z) {
        if (!f.incident(z, y)) continue;
        for (int z1 = 0; z1 < f.n1 && !ok; ++z1)
          for (int z2 = 0; z2 < f.n1 && !ok; ++z2) {
            if (!has(f.sec('R')[z1][z2], z)) continue;
            if (which == 1 && has(f.u, z1) && f.leq(Sort::One, x, z2)) ok = true;
            if (which == 2 && has(f.u, z2) && f.leq(Sort::One, x, z1)) ok = true;
          }
      }
      if (!ok)
        return fail(id, "(x,y)=(" + pt(f, Sort::One, x) + "," + pt(f, Sort::Del, y) + ")");
    }
  return pass(id);
}

AxiomResult check_f3istar(const SortedFrame& f, int which) {
  std::string id = which == 1 ? "F3*.1" : "F3*.2";
  if (!f.has_u) return fail(id, "MissingRelation: frame declares no U");
  for (int x = 0; x < f.n1; ++x) {
    bool ok = false;
    for (int z1 = 0; z1 < f.n1 && !ok; ++z1)
      for (int z2 = 0; z2 < f.n1 && !ok; ++z2) {
        if (!has(f.sec('R')[z1][z2], x)) continue;
        if (which == 1 && has(f.u, z1) && f.leq(Sort::One, x, z2)) ok = true;
        if (which == 2 && has(f.u, z2) && f.leq(Sort::One, x, z1)) ok = true;
      }
    if (!ok) return fail(id, "x=" + pt(f, Sort::One, x));
  }
  return pass(id);
}

AxiomResult check_f3ibottom(const SortedFrame& f, int which) {
  std::string id = which == 1 ? "F3_*.1" : "F3_*.2";
  if (!f.has_u) return fail(id, "MissingRelation: frame declares no U");
  for (int x = 0; x < f.n1; ++x) {
    bool ok = false;
    for (int z : members(f.u)) {
      if (which == 1 && has(f.sec('R')[z][x], x)) ok = true;
      if (which == 2 && has(f.sec('R')[x][z], x)) ok = true;
    }
    if (!ok) return fail(id, "x=" + pt(f, Sort::One, x));
  }
  return pass(id);
}

// Semilattice axiom: sections {v : x ∈ T'zv} are co-stable.
AxiomResult check_f3_semi(const SortedFrame& f, const std::string& id) {
  for (int x = 0; x < f.n1; ++x)
    for (int z = 0; z < f.n1; ++z) {
      Bits sec = 0;
      for (int v = 0; v < f.nD; ++v)
        if (has(f.dual_sec('T', z, v), x)) sec |= bit(v);
      if (!f.is_stable(Sort::Del, sec))
        return fail(id, "section xT'z[] at (x,z)=(" + pt(f, Sort::One, x) + "," +
                            pt(f, Sort::One, z) + ") not co-stable");
    }
  return pass(id);
}

// Lattice axiom: sections {z : x ∈ T'zv} are stable.
AxiomResult check_f3b(const SortedFrame& f) {
  for (int x = 0; x < f.n1; ++x)
    for (int v = 0; v < f.nD; ++v) {
      Bits sec = 0;
      for (int z = 0; z < f.n1; ++z)
        if (has(f.dual_sec('T', z, v), x)) sec |= bit(z);
      if (!f.is_stable(Sort::One, sec))
        return fail("F3b", "section xT'[]v at (x,v)=(" + pt(f, Sort::One, x) + "," +
                               pt(f, Sort::Del, v) + ") not stable");
    }
  return pass("F3b");
}

// Distributivity precondition: the argument-place sections of the Galois dual
// of the upper-bound relation are Galois sets.
AxiomResult check_dist_section(const SortedFrame& f) {
  for (int y = 0; y < f.nD; ++y) {
    for (int z = 0; z < f.n1; ++z) {
      Bits secx = 0;
      for (int x = 0; x < f.n1; ++x)
        if (has(f.prime(Sort::One, f.upper_bound_sec(x, z)), y)) secx |= bit(x);
      if (!f.is_stable(Sort::One, secx))
        return fail("dist-section", "yR'≤[]z at (y,z)=(" + pt(f, Sort::Del, y) + "," +
                                        pt(f, Sort::One, z) + ") not stable");
      Bits secz = 0;
      for (int x = 0; x < f.n1; ++x)
        if (has(f.prime(Sort::One, f.upper_bound_sec(z, x)), y)) secz |= bit(x);
      if (!f.is_stable(Sort::One, secz))
        return fail("dist-section", "yR'≤x[] at (y,x)=(" + pt(f, Sort::Del, y) + "," +
                                        pt(f, Sort::One, z) + ") not stable");
    }
  }
  return pass("dist-section");
}

AxiomResult check_classical(const SortedFrame& f) {
  if (f.classical()) return pass("classical");
  return fail("classical", f.n1 != f.nD ? "carriers differ in size" : "I is not the identity");
}

AxiomResult check_quasi_serial(const SortedFrame& f) {
  if (f.quasi_serial()) return pass("quasi-serial");
  for (int x = 0; x < f.n1; ++x)
    if (!f.irow[x]) return fail("quasi-serial", "x=" + pt(f, Sort::One, x) + " has empty I-row");
  for (int y = 0; y < f.nD; ++y)
    if (!f.icol[y]) return fail("quasi-serial", "y=" + pt(f, Sort::Del, y) + " has empty I-column");
  return fail("quasi-serial", "");
}

AxiomResult check_separated(const SortedFrame& f) {
  if (f.separated()) return pass("separated");
  return fail("separated", "specialization preorder is not antisymmetric");
}

}  // namespace

AxiomResult check_axiom(const SortedFrame& f, const std::string& id) {
  if (id == "F1(T)") return check_f1(f, 'T');
  if (id == "F1(R)") return check_f1(f, 'R');
  if (id == "F1(S)") return check_f1(f, 'S');
  if (id == "M(T)") return check_m(f, 'T');
  if (id == "M(R)") return check_m(f, 'R');
  if (id == "M(S)") return check_m(f, 'S');
  if (id == "RES") return check_res(f);
  if (id == "U") return check_u(f, false);
  if (id == "F2") return check_u(f, true);
  if (id == "Ustar") return check_ustar(f);
  if (id == "U1") return check_u1(f);
  if (id == "U2") return check_u2(f);
  if (id == "U*2") return check_u2star(f);
  if (id == "U_*2") return check_u2bottomstar(f);
  if (id == "F2.1") return check_f2i(f, 1);
  if (id == "F2.2") return check_f2i(f, 2);
  if (id == "F3.1") return check_f3i(f, 1);
  if (id == "F3.2") return check_f3i(f, 2);
  if (id == "F3*.1") return check_f3istar(f, 1);
  if (id == "F3*.2") return check_f3istar(f, 2);
  if (id == "F3_*.1") return check_f3ibottom(f, 1);
  if (id == "F3_*.2") return check_f3ibottom(f, 2);
  if (id == "F3") return check_f3_semi(f, "F3");
  if (id == "F3a") return check_f3_semi(f, "F3a");
  if (id == "F3b") return check_f3b(f);
  if (id == "dist-section") return check_dist_section(f);
  if (id == "classical") return check_classical(f);
  if (id == "quasi-serial") return check_quasi_serial(f);
  if (id == "separated") return check_separated(f);
  throw FrameError("UnknownAxiom", id);
}

const std::vector<FrameClassSpec>& frame_classes() {
  static const std::vector<FrameClassSpec> classes = {
      {"PU", {'T'}, {"F1(T)", "U"}, false, false},
      {"PUl", {'T'}, {"F1(T)", "U", "U1", "U2"}, false, false},
      {"PUl*", {'T'}, {"F1(T)", "U", "U1", "U*2"}, true, false},
      {"PUl_*", {'T'}, {"F1(T)", "M(T)", "U", "U1", "U_*2"}, true, true},
      {"S", {'T'}, {"F1(T)", "F2", "F3"}, false, false},
      {"L", {'T'}, {"F1(T)", "F2", "F3a", "F3b"}, false, false},
      {"LK",
       {'T', 'R', 'S'},
       {"F1(T)", "F1(R)", "F1(S)", "RES", "Ustar", "F2.1", "F2.2", "F3.1", "F3.2"},
       false,
       false},
      {"LK*",
       {'T', 'R', 'S'},
       {"F1(T)", "F1(R)", "F1(S)", "RES", "Ustar", "F2.1", "F2.2", "F3*.1", "F3*.2"},
       true,
       false},
      {"LK_*",
       {'T', 'R', 'S'},
       {"F1(T)", "F1(R)", "F1(S)", "M(T)", "M(R)", "M(S)", "RES", "Ustar", "F2.1", "F2.2",
        "F3_*.1", "F3_*.2"},
       true,
       true},
  };
  return classes;
}

const FrameClassSpec& frame_class(const std::string& id) {
  for (auto& c : frame_classes())
    if (c.id == id) return c;
  throw FrameError("UnknownClass", id);
}

FrameClassReport check_frame_class(const SortedFrame& f, const std::string& class_id) {
  const auto& spec = frame_class(class_id);
  for (char rel : spec.relations) f.sec(rel);  // MissingRelation up front
  FrameClassReport report;
  report.class_id = class_id;
  for (auto& ax : spec.axioms) report.axioms.push_back(check_axiom(f, ax));
  return report;
}

std::string axiom_formula(const std::string& id) {
  if (id == "RES") return "∀x∀z∀y((xS'yz ↔ yR'xz) ∧ (yR'xz ↔ zT'xy))";
  if (id == "U") return "∀x∀y(x⫫y ↔ ∀u(u∈U → uT'xy))";
  if (id == "F2") return "∀x∀y(x⫫y ↔ ∀u uT'xy)";
  if (id == "U1") return "∀y∀x∀v(x∈U ∧ yTxv → v≤y)";
  if (id == "U2")
    return "∀y∀x(xIy → ∃v(xIv ∧ ∃u∃v1(u∈U ∧ vTuv1 ∧ y≤v1)))";
  if (id == "U*2") return "∀y∃x∃v(x∈U ∧ yTxv ∧ y≤v)";
  if (id == "U_*2") return "∀y∃x(x∈U ∧ yTxy)";
  if (id == "F2.1") return "∀x∀u∀z(u∈U ∧ xRuz → z≤x)";
  if (id == "F2.2") return "∀x∀u∀z(z∈U ∧ xRuz → u≤x)";
  if (id == "F3.1") return "∀x∀y(xIy → ∃z(zIy ∧ ∃u∃w(u∈U ∧ zRuw ∧ x≤w)))";
  if (id == "F3.2") return "∀x∀y(xIy → ∃z(zIy ∧ ∃u∃w(w∈U ∧ zRuw ∧ x≤u)))";
  if (id == "F3*.1") return "∀x∃u∃z(u∈U ∧ xRuz ∧ x≤z)";
  if (id == "F3*.2") return "∀x∃u∃z(z∈U ∧ xRuz ∧ x≤u)";
  if (id == "F3_*.1") return "∀x∃u(u∈U ∧ xRux)";
  if (id == "F3_*.2") return "∀x∃u(u∈U ∧ xRxu)";
  return id;
}

}  // namespace nlogic
