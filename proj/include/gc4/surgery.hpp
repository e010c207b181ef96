#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gc4/blocks.hpp"
#include "gc4/identify.hpp"
#include "gc4/invariants.hpp"

namespace gc4 {

/// (p,q,r)-torus surgery on a catalogued torus: carves the torus out and
/// reglues so that the boundary disk follows m^p l^q mu^r, which adds the
/// relator mu^r m^p l^q to the complement presentation. Euler characteristic
/// and signature never change. Effect on the structure tag:
///   (0,0,+-1)                         trivial regluing, everything preserved;
///   (p,q,0), symplectic torus         one new type-change locus (TwistedGC);
///   (p,q,+-1) != trivial, Lagrangian  Luttinger surgery, stays symplectic;
///   anything else                     structure degrades to Unknown (flagged).
/// Essential tori surgered nontrivially kill a hyperbolic pair: the count
/// drops by one when tracked.
ManifoldState torus_surgery(const ManifoldState& s, const std::string& torus_id,
                            const SurgeryParams& spec);

/// Gompf sum of two states along available symplectic catalog entries of
/// equal genus g. `ident` gives, for each of the 2g pushoffs of a's entry,
/// the identified word over b's generators; the meridians are equated. The
/// presentation is the free product modulo those relators, e adds with a
/// -2(2-2g) correction, signatures add, and the remaining entries of both
/// catalogs carry over. Generator names and catalog ids of the two sides
/// must not collide (instantiate blocks with a prefix).
ManifoldState symplectic_fiber_sum(const ManifoldState& a, const std::string& ta_id,
                                   const ManifoldState& b, const std::string& tb_id,
                                   const std::vector<FreeWord>& ident);

/// k-fold blow-up: e += k, sigma -= k, one new <-1> summand per point.
/// Fundamental group, presentation and locus count are untouched.
ManifoldState blow_up(const ManifoldState& s, long long k);

/// Blow-down of a tracked <-1> class on a twisted generalized complex state.
/// The sphere-brane hypothesis cannot be checked symbolically; the tracked
/// class plus the recorded assertion stand in for it.
ManifoldState blow_down(const ManifoldState& s);

/// Scenario-level assertions feeding finalize_report. Nothing here is ever
/// inferred by the engine.
struct ScenarioAssertions {
  /// An embedded essential sphere of square >= 0 exists (adjunction
  /// hypothesis, so Seiberg-Witten invariants vanish).
  bool sphere_square_nonneg = false;
  /// A homeomorphism-type claim to cross-check against the computed
  /// invariants.
  std::optional<std::string> homeo_claim;
};

struct FinalReport {
  Presentation filled;      // complement presentation with trivial fill-ins
  Presentation simplified;  // after Tietze reduction
  GroupIdentification pi1;
  AbelianInvariants ab;
  BettiData betti;
  InvariantRecord record;
  Structure structure;
  bool twisted = false;        // H1 != 0 forces a nonzero twisting 3-form
  std::string twist_summary;   // H1 when twisted
  ClassificationLabel label;
  Tri almost_complex = Tri::Unknown;
  std::vector<std::string> annotations;

  /// Locus count for the report: TwistedGC carries its count, a symplectic
  /// state has none (0), an unknown structure has no meaningful count.
  std::optional<long long> loci() const;
};

/// Closes the books on a state: every still-available catalog torus takes
/// the trivial (0,0,1) fill-in (relator mu), then the group pipeline,
/// Betti/record consistency checks, homeomorphism lookup, twist rule
/// (untwisted iff H1 = 0) and assertion-driven annotations run.
FinalReport finalize_report(const ManifoldState& s, const ScenarioAssertions& assertions = {},
                            const Budgets& budgets = {});

}  // namespace gc4
