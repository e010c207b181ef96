#include "gc4/blocks.hpp"

#include <algorithm>

#include "gc4/error.hpp"

namespace gc4 {

std::string Structure::to_string() const {
  switch (kind) {
    case StructureKind::Symplectic:
      return "symplectic";
    case StructureKind::TwistedGC:
      return "twisted_gc";
    case StructureKind::Unknown:
      return "unknown";
  }
  return "unknown";
}

const TorusDescriptor* ManifoldState::find_torus(std::string_view id) const {
  for (const TorusDescriptor& t : tori)
    if (t.id == id) return &t;
  return nullptr;
}

long long ManifoldState::catalog_size() const {
  return std::count_if(tori.begin(), tori.end(),
                       [](const TorusDescriptor& t) { return !t.fiber_entry; });
}

namespace {

/// Catalog construction helper: words are written against the unprefixed
/// generator names and the prefix is applied at the end.
struct Builder {
  ManifoldState state;

  Builder(std::string kind, std::vector<std::string> names) {
    state.kind = std::move(kind);
    state.pres = Presentation(std::move(names));
  }

  FreeWord w(std::string_view text) const { return parse_word(text, state.pres.names()); }

  void relator(std::string_view text) { state.pres.add_relator(w(text)); }

  void torus(const std::string& id, std::string_view m, std::string_view l, std::string_view mu,
             GeomTag tag, const std::string& dual) {
    TorusDescriptor t;
    t.id = id;
    t.pushoffs = {w(m), w(l)};
    t.meridian = w(mu);
    t.tag = tag;
    t.dual_id = dual;
    state.tori.push_back(std::move(t));
  }

  void fiber(const std::string& id, const std::vector<std::string>& pushoffs, std::string_view mu,
             const std::string& dual, int genus) {
    TorusDescriptor t;
    t.id = id;
    for (const std::string& p : pushoffs) t.pushoffs.push_back(w(p));
    t.meridian = w(mu);
    t.tag = GeomTag::Symplectic;
    t.dual_id = dual;
    t.genus = genus;
    t.fiber_entry = true;
    state.tori.push_back(std::move(t));
  }

  ManifoldState finish(const std::string& prefix, long long e, long long sigma,
                       long long hyperbolic) {
    state.record.euler = e;
    state.record.signature = sigma;
    state.record.hyperbolic = hyperbolic;
    state.record.plus_one = 0;
    state.record.minus_one = 0;
    state.record.base_spin = Tri::Yes;
    state.structure = Structure{StructureKind::Symplectic, 0};
    state.history.push_back("block " + state.kind);
    if (!prefix.empty()) {
      std::vector<std::string> renamed;
      renamed.reserve(state.pres.names().size());
      for (const std::string& n : state.pres.names()) renamed.push_back(prefix + n);
      Presentation p(renamed);
      for (const FreeWord& r : state.pres.relators()) p.add_relator(r);
      state.pres = std::move(p);
      for (TorusDescriptor& t : state.tori) {
        t.id = prefix + t.id;
        if (t.dual_id) t.dual_id = prefix + *t.dual_id;
      }
    }
    return std::move(state);
  }
};

std::vector<std::string> surface_product_names(int h) {
  std::vector<std::string> names = {"a1", "b1", "a2", "b2"};
  for (int j = 1; j <= h; ++j) {
    names.push_back("c" + std::to_string(j));
    names.push_back("d" + std::to_string(j));
  }
  return names;
}

std::string surface_relator_cd(int h) {
  std::string rel;
  for (int j = 1; j <= h; ++j) rel += "[c" + std::to_string(j) + ", d" + std::to_string(j) + "] ";
  return rel;
}

ManifoldState make_sigma2_x_sigma2(const std::string& prefix) {
  Builder b("product_surfaces(2,2)", surface_product_names(2));
  b.relator("[a1, b1] [a2, b2]");
  b.relator("[c1, d1] [c2, d2]");
  b.torus("T1", "a1", "c1", "[b1^-1, d1^-1]", GeomTag::Lagrangian, "b1xd1");
  b.torus("T2", "a1", "c2", "[b1^-1, d2^-1]", GeomTag::Lagrangian, "b1xd2");
  b.torus("T3", "a2", "c1", "[b2^-1, d1^-1]", GeomTag::Lagrangian, "b2xd1");
  b.torus("T4", "a2", "c2", "[b2^-1, d2^-1]", GeomTag::Lagrangian, "b2xd2");
  b.torus("T5", "b1", "d1 c1 d1^-1", "[a1^-1, d1]", GeomTag::Lagrangian, "a1xd1");
  b.torus("T6", "b2", "d2 c2 d2^-1", "[a2^-1, d2]", GeomTag::Lagrangian, "a2xd2");
  b.torus("T7", "b2 a2 b2^-1", "d1", "[b2, c1^-1]", GeomTag::Lagrangian, "b2xc1");
  b.torus("T8", "b1 a1 b1^-1", "d2", "[b1, c2^-1]", GeomTag::Lagrangian, "b1xc2");
  b.fiber("SA", {"a1", "b1", "a2", "b2"}, "[c1, d1] [c2, d2]", "SB", 2);
  b.fiber("SB", {"c1", "d1", "c2", "d2"}, "[a1, b1] [a2, b2]", "SA", 2);
  return b.finish(prefix, 4, 0, 9);
}

ManifoldState make_sigma2_x_sigma3_twelve(const std::string& prefix) {
  Builder b("product_surfaces(2,3,twelve)", surface_product_names(3));
  b.relator("[a1, b1] [a2, b2]");
  b.relator(surface_relator_cd(3));
  b.torus("T1", "a1", "c1", "[b1^-1, d1^-1]", GeomTag::Lagrangian, "b1xd1");
  b.torus("T2", "a1", "c2", "[b1^-1, d2^-1]", GeomTag::Lagrangian, "b1xd2");
  b.torus("T3", "a1", "c3", "[b1^-1, d3^-1]", GeomTag::Lagrangian, "b1xd3");
  b.torus("T4", "a2", "c1", "[b2^-1, d1^-1]", GeomTag::Lagrangian, "b2xd1");
  b.torus("T5", "a2", "c2", "[b2^-1, d2^-1]", GeomTag::Lagrangian, "b2xd2");
  b.torus("T6", "a2", "c3", "[b2^-1, d3^-1]", GeomTag::Lagrangian, "b2xd3");
  b.torus("T7", "b1", "d1 c1 d1^-1", "[a1^-1, d1]", GeomTag::Lagrangian, "a1xd1");
  b.torus("T8", "b2", "d2 c2 d2^-1", "[a2^-1, d2]", GeomTag::Lagrangian, "a2xd2");
  b.torus("T9", "b2 a2 b2^-1", "d1", "[b2, c1^-1]", GeomTag::Lagrangian, "b2xc1");
  b.torus("T10", "b1 a1 b1^-1", "d2", "[b1, c2^-1]", GeomTag::Lagrangian, "b1xc2");
  b.torus("T11", "b1 a1 b1^-1", "d3", "[b1, c3^-1]", GeomTag::Lagrangian, "b1xc3");
  b.torus("T12", "b2 a2 b2^-1", "d3", "[b2, c3^-1]", GeomTag::Lagrangian, "b2xc3");
  b.fiber("SA", {"a1", "b1", "a2", "b2"}, surface_relator_cd(3), "SB", 2);
  b.fiber("SB", {"c1", "d1", "c2", "d2", "c3", "d3"}, "[a1, b1] [a2, b2]", "SA", 3);
  return b.finish(prefix, 8, 0, 13);
}

/// The (4+2h)-torus catalog: one torus per generator, the a/b killers
/// first, then the c/d pairs. Pushoff words for h > 3 follow the h = 3
/// pattern (extrapolated).
ManifoldState make_sigma2_x_sigmah(int h, const std::string& prefix) {
  Builder b("product_surfaces(2," + std::to_string(h) + ")", surface_product_names(h));
  b.relator("[a1, b1] [a2, b2]");
  b.relator(surface_relator_cd(h));
  b.torus("T1", "a1", "c1", "[b1^-1, d1^-1]", GeomTag::Lagrangian, "b1xd1");
  b.torus("T2", "b1", "d1 c1 d1^-1", "[a1^-1, d1]", GeomTag::Lagrangian, "a1xd1");
  b.torus("T3", "a2", "c2", "[b2^-1, d2^-1]", GeomTag::Lagrangian, "b2xd2");
  b.torus("T4", "b2", "d2 c2 d2^-1", "[a2^-1, d2]", GeomTag::Lagrangian, "a2xd2");
  b.torus("T5", "a2", "c1", "[b2^-1, d1^-1]", GeomTag::Lagrangian, "b2xd1");
  b.torus("T6", "b2 a2 b2^-1", "d1", "[b2, c1^-1]", GeomTag::Lagrangian, "b2xc1");
  b.torus("T7", "a1", "c2", "[b1^-1, d2^-1]", GeomTag::Lagrangian, "b1xd2");
  b.torus("T8", "b1 a1 b1^-1", "d2", "[b1, c2^-1]", GeomTag::Lagrangian, "b1xc2");
  for (int j = 3; j <= h; ++j) {
    std::string cj = "c" + std::to_string(j);
    std::string dj = "d" + std::to_string(j);
    b.torus("T" + std::to_string(2 * j + 3), "a1", cj, "[" + dj + "^-1, a1^-1]",
            GeomTag::Lagrangian, "b1x" + dj);
    b.torus("T" + std::to_string(2 * j + 4), "b2 a2 b2^-1", dj, "[" + cj + "^-1, a2^-1]",
            GeomTag::Lagrangian, "b2x" + cj);
  }
  b.fiber("SA", {"a1", "b1", "a2", "b2"}, surface_relator_cd(h), "SB", 2);
  std::vector<std::string> sb;
  for (int j = 1; j <= h; ++j) {
    sb.push_back("c" + std::to_string(j));
    sb.push_back("d" + std::to_string(j));
  }
  b.fiber("SB", sb, "[a1, b1] [a2, b2]", "SA", h);
  ManifoldState s = b.finish(prefix, 4 * h - 4, 0, 4 * h + 1);
  s.notes.push_back("catalog pushoffs for product_surfaces(2," + std::to_string(h) +
                    ") extrapolated from the h = 3 pattern");
  return s;
}

}  // namespace

ManifoldState make_product_surfaces(int g, int h, const std::string& prefix,
                                    bool twelve_torus_catalog) {
  if (g != 2 || h < 2)
    throw ModelError("product_surfaces supports (2,2) and (2,h) with h >= 3");
  if (twelve_torus_catalog) {
    if (h != 3) throw ModelError("the twelve-torus catalog exists only for product_surfaces(2,3)");
    return make_sigma2_x_sigma3_twelve(prefix);
  }
  if (h == 2) return make_sigma2_x_sigma2(prefix);
  return make_sigma2_x_sigmah(h, prefix);
}

ManifoldState make_four_torus(const std::string& prefix) {
  Builder b("four_torus", {"x", "y", "a", "b"});
  b.relator("[x, a]");
  b.relator("[y, a]");
  b.torus("T1", "x", "a", "[b^-1, y^-1]", GeomTag::Lagrangian, "yxb");
  b.torus("T2", "y", "b a b^-1", "[x^-1, b]", GeomTag::Lagrangian, "xxb");
  b.torus("T3", "a", "b", "[x^-1, y^-1]", GeomTag::Symplectic, "xxy");
  return b.finish(prefix, 0, 0, 3);
}

ManifoldState make_t2_x_sigma(int g, const std::string& prefix) {
  if (g < 1) throw ModelError("t2_x_sigma needs genus >= 1");
  std::vector<std::string> names = {"x", "y"};
  for (int i = 1; i <= g; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  Builder b("t2_x_sigma(" + std::to_string(g) + ")", names);
  b.relator("[x, y]");
  std::string surface;
  for (int i = 1; i <= g; ++i) surface += "[a" + std::to_string(i) + ", b" + std::to_string(i) + "] ";
  b.relator(surface);
  for (int i = 1; i <= g; ++i) {
    std::string ai = "a" + std::to_string(i);
    std::string bi = "b" + std::to_string(i);
    b.relator("[x, " + ai + "]");
    b.relator("[y, " + ai + "]");
    b.relator("[y, " + bi + " " + ai + " " + bi + "^-1]");
    b.torus("T" + std::to_string(2 * i - 1), "x", ai, "[" + bi + "^-1, y^-1]", GeomTag::Lagrangian,
            "yx" + bi);
    b.torus("T" + std::to_string(2 * i), "y", bi + " " + ai + " " + bi + "^-1",
            "[x^-1, " + bi + "]", GeomTag::Lagrangian, "xx" + bi);
  }
  b.fiber("SA", {"x", "y"}, surface, "SB", 1);
  std::vector<std::string> sb;
  for (int i = 1; i <= g; ++i) {
    sb.push_back("a" + std::to_string(i));
    sb.push_back("b" + std::to_string(i));
  }
  b.fiber("SB", sb, "[x, y]", "SA", g);
  return b.finish(prefix, 0, 0, 2 * g + 1);
}

ManifoldState make_t2_x_s2(const std::string& prefix) {
  Builder b("t2_x_s2", {"x", "y"});
  b.relator("[x, y]");
  b.torus("T1", "x", "y", "1", GeomTag::Symplectic, "ptxS2");
  return b.finish(prefix, 0, 0, 1);
}

ManifoldState make_external(const ExternalDecl& decl) {
  if ((decl.euler - decl.sigma) % 2 != 0)
    throw ModelError("external block: e and sigma must have equal parity");
  if (decl.trust.empty())
    throw ModelError("external block: a trust annotation is required (say what is declared)");
  ManifoldState s;
  s.kind = "external(" + decl.name + ")";
  s.pres = Presentation(decl.gens);
  for (const FreeWord& r : decl.relators) s.pres.add_relator(r);  // validates indices
  for (const ExternalTorusDecl& t : decl.tori) {
    if (t.pushoffs.size() % 2 != 0 || t.pushoffs.empty())
      throw ModelError("external torus " + t.id + ": pushoff list must have even size 2g");
    TorusDescriptor td;
    td.id = t.id;
    td.pushoffs = t.pushoffs;
    td.meridian = t.meridian;
    td.tag = t.tag;
    td.essential = t.essential;
    td.genus = static_cast<int>(t.pushoffs.size()) / 2;
    for (const FreeWord& w : t.pushoffs)
      if (w.max_gen() >= s.pres.ngens())
        throw ModelError("external torus " + t.id + ": pushoff uses an unknown generator");
    if (t.meridian.max_gen() >= s.pres.ngens())
      throw ModelError("external torus " + t.id + ": meridian uses an unknown generator");
    s.tori.push_back(std::move(td));
  }
  s.record.euler = decl.euler;
  s.record.signature = decl.sigma;
  s.record.base_spin = Tri::Unknown;
  s.structure = Structure{decl.structure, 0};
  s.trust = decl.trust;
  s.history.push_back("block " + s.kind);
  return s;
}

ManifoldState perturb_tori(const ManifoldState& s, const std::vector<std::string>& ids) {
  if (s.structure.kind != StructureKind::Symplectic)
    throw ModelError("perturb: state must be symplectic");
  ManifoldState out = s;
  std::string applied;
  for (const std::string& id : ids) {
    bool found = false;
    for (TorusDescriptor& t : out.tori) {
      if (t.id != id) continue;
      found = true;
      if (!t.available())
        throw ModelError("perturb: torus " + id + " is not available");
      if (t.tag == GeomTag::Symplectic) {
        out.notes.push_back("perturb: torus " + id + " is already symplectic");
      } else {
        t.tag = GeomTag::Symplectic;
      }
      break;
    }
    if (!found) throw ModelError("perturb: unknown torus " + id);
    if (!applied.empty()) applied += " ";
    applied += id;
  }
  out.history.push_back("perturb " + (applied.empty() ? std::string("(none)") : applied));
  return out;
}

}  // namespace gc4
