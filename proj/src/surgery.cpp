#include "gc4/surgery.hpp"

#include <algorithm>

#include "gc4/error.hpp"
#include "gc4/tietze.hpp"

namespace gc4 {

namespace {

TorusDescriptor* find_mutable(ManifoldState& s, const std::string& id) {
  for (TorusDescriptor& t : s.tori)
    if (t.id == id) return &t;
  return nullptr;
}

void add_note_once(ManifoldState& s, const std::string& note) {
  if (std::find(s.notes.begin(), s.notes.end(), note) == s.notes.end()) s.notes.push_back(note);
}

}  // namespace

ManifoldState torus_surgery(const ManifoldState& s, const std::string& torus_id,
                            const SurgeryParams& spec) {
  if (spec.p == 0 && spec.q == 0 && spec.r == 0)
    throw ModelError("surgery (0,0,0) is not a valid regluing");
  for (long long c : {spec.p, spec.q, spec.r})
    if (c > 1000000 || c < -1000000)
      throw ModelError("surgery coefficient " + std::to_string(c) + " out of range");

  ManifoldState out = s;
  TorusDescriptor* t = find_mutable(out, torus_id);
  if (!t) throw ModelError("surgery: unknown torus " + torus_id);
  if (!t->available()) throw ModelError("surgery: torus " + torus_id + " is not available");
  if (t->genus != 1) throw ModelError("surgery: " + torus_id + " is not a torus");
  if (t->fiber_entry)
    throw ModelError("surgery: " + torus_id +
                     " is a sum fiber; its trivial regluing is already part of the block");

  // Surgery relator mu^r m^p l^q. Euler characteristic and signature are
  // invariant under every torus surgery.
  FreeWord relator = t->meridian.pow(static_cast<int>(spec.r)) *
                     t->m_word().pow(static_cast<int>(spec.p)) *
                     t->l_word().pow(static_cast<int>(spec.q));
  out.pres.add_relator(relator);

  bool trivial = spec.trivial();
  if (!trivial) {
    if (t->essential && out.record.hyperbolic) {
      if (*out.record.hyperbolic >= 1) {
        // The torus class and its geometric dual die together.
        *out.record.hyperbolic -= 1;
      } else {
        out.record.hyperbolic.reset();
        add_note_once(out, "surgery on " + torus_id +
                               ": no tracked hyperbolic summand left; counts degraded");
      }
    } else if (!t->essential) {
      out.record.hyperbolic.reset();
      out.record.plus_one.reset();
      out.record.minus_one.reset();
      out.record.base_spin = Tri::Unknown;
      add_note_once(out, "surgery on non-essential torus " + torus_id +
                             ": form summand counts degraded to unknown");
    }
  }

  bool structure_known = out.structure.kind != StructureKind::Unknown;
  if (trivial) {
    // Regluing the same way; nothing changes.
  } else if (spec.r == 0 && t->tag == GeomTag::Symplectic && structure_known) {
    out.structure.kind = StructureKind::TwistedGC;
    out.structure.loci += 1;
  } else if ((spec.r == 1 || spec.r == -1) && t->tag == GeomTag::Lagrangian &&
             out.structure.kind == StructureKind::Symplectic) {
    // Luttinger surgery: the symplectic structure survives.
  } else {
    out.structure = Structure{StructureKind::Unknown, 0};
    add_note_once(out, "surgery " + spec.to_string() + " on " + torus_id +
                           ": no structure rule applies; structure unknown");
  }

  t->status = TorusDescriptor::Status::Surgered;
  t->surgered_with = spec;
  out.history.push_back("surgery " + torus_id + " " + spec.to_string());
  return out;
}

ManifoldState symplectic_fiber_sum(const ManifoldState& a, const std::string& ta_id,
                                   const ManifoldState& b, const std::string& tb_id,
                                   const std::vector<FreeWord>& ident) {
  const TorusDescriptor* ta = a.find_torus(ta_id);
  const TorusDescriptor* tb = b.find_torus(tb_id);
  if (!ta) throw ModelError("fiber sum: unknown torus " + ta_id);
  if (!tb) throw ModelError("fiber sum: unknown torus " + tb_id);
  if (!ta->available()) throw ModelError("fiber sum: torus " + ta_id + " is not available");
  if (!tb->available()) throw ModelError("fiber sum: torus " + tb_id + " is not available");
  if (ta->tag != GeomTag::Symplectic || tb->tag != GeomTag::Symplectic)
    throw ModelError("fiber sum: both fibers must be symplectic (perturb first)");
  if (ta->genus != tb->genus)
    throw ModelError("fiber sum: fiber genera differ (" + std::to_string(ta->genus) + " vs " +
                     std::to_string(tb->genus) + ")");
  if (ident.size() != ta->pushoffs.size())
    throw ModelError("fiber sum: identification needs " + std::to_string(ta->pushoffs.size()) +
                     " pushoff images, got " + std::to_string(ident.size()));
  for (const FreeWord& w : ident)
    if (w.max_gen() >= b.pres.ngens())
      throw ModelError("fiber sum: identification word uses an unknown generator of " + tb_id +
                       "'s side");

  // Free product: b's generators are appended after a's.
  std::vector<std::string> names = a.pres.names();
  for (const std::string& n : b.pres.names()) {
    if (std::find(names.begin(), names.end(), n) != names.end())
      throw ModelError("fiber sum: generator name '" + n +
                       "' exists on both sides; instantiate one block with a prefix");
    names.push_back(n);
  }
  int offset = a.pres.ngens();
  std::vector<int> shift(static_cast<size_t>(b.pres.ngens()));
  for (int i = 0; i < b.pres.ngens(); ++i) shift[static_cast<size_t>(i)] = i + offset;

  ManifoldState out;
  out.kind = "fiber_sum";
  out.pres = Presentation(std::move(names));
  for (const FreeWord& r : a.pres.relators()) out.pres.add_relator(r);
  for (const FreeWord& r : b.pres.relators()) out.pres.add_relator(r.remap(shift));
  // Van Kampen relators: pushoff identifications, then meridian matching.
  for (size_t k = 0; k < ident.size(); ++k)
    out.pres.add_relator(ta->pushoffs[k] * ident[k].remap(shift).inverse());
  out.pres.add_relator(ta->meridian * tb->meridian.remap(shift).inverse());

  for (const TorusDescriptor& t : a.tori) {
    TorusDescriptor copy = t;
    if (copy.id == ta_id) copy.status = TorusDescriptor::Status::ConsumedBySum;
    out.tori.push_back(std::move(copy));
  }
  for (const TorusDescriptor& t : b.tori) {
    if (out.find_torus(t.id))
      throw ModelError("fiber sum: catalog id '" + t.id +
                       "' exists on both sides; instantiate one block with a prefix");
    TorusDescriptor copy = t;
    for (FreeWord& w : copy.pushoffs) w = w.remap(shift);
    copy.meridian = copy.meridian.remap(shift);
    if (copy.id == tb_id) copy.status = TorusDescriptor::Status::ConsumedBySum;
    out.tori.push_back(std::move(copy));
  }

  // e(fiber) correction: tori contribute nothing, genus-g fibers -2(2-2g).
  out.record.euler = a.record.euler + b.record.euler - 2 * (2 - 2 * ta->genus);
  out.record.signature = a.record.signature + b.record.signature;  // Novikov additivity
  out.record.base_spin = Tri::Unknown;

  if (a.structure.kind == StructureKind::Symplectic &&
      b.structure.kind == StructureKind::Symplectic) {
    out.structure = Structure{StructureKind::Symplectic, 0};
  } else {
    out.structure = Structure{StructureKind::Unknown, 0};
    out.notes.push_back("fiber sum with a non-symplectic input: structure unknown");
  }

  out.notes.insert(out.notes.end(), a.notes.begin(), a.notes.end());
  out.notes.insert(out.notes.end(), b.notes.begin(), b.notes.end());
  out.trust.insert(out.trust.end(), a.trust.begin(), a.trust.end());
  out.trust.insert(out.trust.end(), b.trust.begin(), b.trust.end());
  out.history.insert(out.history.end(), a.history.begin(), a.history.end());
  out.history.insert(out.history.end(), b.history.begin(), b.history.end());
  out.history.push_back("fiber_sum " + ta_id + " ~ " + tb_id);
  return out;
}

ManifoldState blow_up(const ManifoldState& s, long long k) {
  if (k < 0) throw ModelError("blow_up: k must be >= 0");
  if (s.structure.kind == StructureKind::Unknown)
    throw ModelError("blow_up: structure is unknown; no nondegenerate point is certified");
  ManifoldState out = s;
  if (k == 0) return out;
  out.record.euler += k;
  out.record.signature -= k;
  if (out.record.minus_one) *out.record.minus_one += k;
  if (out.structure.kind == StructureKind::TwistedGC)
    add_note_once(out, "blow-ups and blow-downs preserve the type-change locus count");
  out.history.push_back("blowup " + std::to_string(k));
  return out;
}

ManifoldState blow_down(const ManifoldState& s) {
  if (s.structure.kind != StructureKind::TwistedGC)
    throw ModelError("blow_down: requires a twisted generalized complex state");
  if (!s.record.minus_one)
    throw ModelError("blow_down: <-1> summand count is not tracked");
  if (*s.record.minus_one < 1)
    throw ModelError("blow_down: no <-1> summand tracked");
  ManifoldState out = s;
  out.record.euler -= 1;
  out.record.signature += 1;
  *out.record.minus_one -= 1;
  add_note_once(out, "blow-ups and blow-downs preserve the type-change locus count");
  add_note_once(out,
                "blow-down consumed a tracked <-1> class; the sphere-brane hypothesis "
                "is asserted, not verified");
  out.history.push_back("blowdown");
  return out;
}

std::optional<long long> FinalReport::loci() const {
  switch (structure.kind) {
    case StructureKind::TwistedGC:
      return structure.loci;
    case StructureKind::Symplectic:
      return 0;
    case StructureKind::Unknown:
      return std::nullopt;
  }
  return std::nullopt;
}

FinalReport finalize_report(const ManifoldState& s, const ScenarioAssertions& assertions,
                            const Budgets& budgets) {
  FinalReport rep;

  // Untouched catalog tori are reglued trivially: each contributes its
  // meridian as a relator, exactly the (0,0,1) case of the surgery relator.
  rep.filled = s.pres;
  for (const TorusDescriptor& t : s.tori) {
    if (t.fiber_entry || !t.available()) continue;
    rep.filled.add_relator(t.meridian);
  }

  rep.pi1 = identify_group(rep.filled, budgets);
  rep.simplified = simplify_presentation(rep.filled, budgets.tietze_budget, budgets.relator_cap)
                       .presentation;
  rep.ab = abelianize(rep.filled);
  rep.betti = betti_from_euler(s.record.euler, rep.ab, s.record.signature);
  rep.record = s.record;
  rep.structure = s.structure;

  if (rep.record.counts_known()) {
    long long b2_counts =
        2 * *rep.record.hyperbolic + *rep.record.plus_one + *rep.record.minus_one;
    if (b2_counts != rep.betti.b2)
      throw ModelError("finalize: tracked form summands give b2 = " + std::to_string(b2_counts) +
                       " but Betti data gives b2 = " + std::to_string(rep.betti.b2));
    if (*rep.record.plus_one - *rep.record.minus_one != rep.record.signature)
      throw ModelError("finalize: tracked summands disagree with the signature");
  }

  rep.label = classify_homeomorphism(rep.betti, rep.record, rep.pi1);
  rep.almost_complex = almost_complex_check(rep.betti, rep.pi1);

  // A simply connected closed 4-manifold has H^3 = 0 by Poincare duality, so
  // the twisting form vanishes exactly when H1 does.
  rep.twisted = !rep.ab.trivial();
  rep.twist_summary = rep.twisted ? rep.ab.to_string() : "";

  rep.annotations = s.notes;
  for (const std::string& t : s.trust) rep.annotations.push_back("trusted: " + t);
  if (assertions.sphere_square_nonneg) {
    rep.annotations.push_back("SW trivial by adjunction - asserted sphere of square >= 0");
    rep.annotations.push_back("non-symplectic by Taubes");
  }
  if (assertions.homeo_claim) {
    const std::string& claim = *assertions.homeo_claim;
    auto [crec, cbetti] = connected_sum_invariants(parse_label(claim));
    bool match = crec.euler == rep.record.euler && crec.signature == rep.record.signature &&
                 cbetti.b1 == rep.betti.b1;
    if (match) {
      rep.annotations.push_back("homeo claim \"" + claim + "\" consistent with computed invariants");
    } else {
      rep.annotations.push_back(
          "flagged: homeo claim \"" + claim + "\" gives (e=" + std::to_string(crec.euler) +
          ", sigma=" + std::to_string(crec.signature) + ", b1=" + std::to_string(cbetti.b1) +
          ") but the construction gives (e=" + std::to_string(rep.record.euler) +
          ", sigma=" + std::to_string(rep.record.signature) +
          ", b1=" + std::to_string(rep.betti.b1) + ")");
    }
  }
  return rep;
}

}  // namespace gc4
