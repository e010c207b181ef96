#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gc4/invariants.hpp"
#include "gc4/presentation.hpp"

namespace gc4 {

enum class GeomTag { Lagrangian, Symplectic };

struct SurgeryParams {
  long long p = 0, q = 0, r = 0;

  bool trivial() const { return p == 0 && q == 0 && (r == 1 || r == -1); }
  std::string to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
  }
  friend bool operator==(const SurgeryParams&, const SurgeryParams&) = default;
};

/// A catalogued square-zero surface available for surgery or fiber summing.
/// Genus-1 entries carry the two Lagrangian pushoffs m, l and the meridian
/// mu of the torus in the ambient block; a genus-g fiber entry carries 2g
/// pushoff words.
struct TorusDescriptor {
  enum class Status { Available, Surgered, ConsumedBySum };

  std::string id;
  std::vector<FreeWord> pushoffs;  // size 2 * genus
  FreeWord meridian;
  GeomTag tag = GeomTag::Lagrangian;
  std::optional<std::string> dual_id;
  bool essential = true;
  int genus = 1;
  /// Fiber entries (parallel product factors shipped for fiber sums) are not
  /// carved out of the block's complement presentation, so they take no
  /// default meridian fill-in at finalize time.
  bool fiber_entry = false;
  Status status = Status::Available;
  std::optional<SurgeryParams> surgered_with;

  const FreeWord& m_word() const { return pushoffs.at(0); }
  const FreeWord& l_word() const { return pushoffs.at(1); }
  bool available() const { return status == Status::Available; }
};

enum class StructureKind { Symplectic, TwistedGC, Unknown };

struct Structure {
  StructureKind kind = StructureKind::Symplectic;
  /// Number of type-change loci; meaningful in the TwistedGC state, zero in
  /// the Symplectic state.
  long long loci = 0;

  std::string to_string() const;
  friend bool operator==(const Structure&, const Structure&) = default;
};

/// A building block (or partially assembled manifold): the complement
/// presentation of the catalogued tori, the catalog itself, tracked
/// invariants and the geometric-structure tag. Values are immutable from the
/// engine's point of view; every operation returns a new state.
struct ManifoldState {
  std::string kind;  // block kind or operation summary; for reports
  Presentation pres;
  std::vector<TorusDescriptor> tori;
  InvariantRecord record;
  Structure structure;
  std::vector<std::string> history;
  std::vector<std::string> notes;  // degradation flags and warnings
  std::vector<std::string> trust;  // trusted assertions from external declarations

  const TorusDescriptor* find_torus(std::string_view id) const;
  /// Entries from the block's surgery catalog (fiber entries excluded).
  long long catalog_size() const;
};

/// Sigma_g x Sigma_h with the product symplectic form. Supported parameter
/// shapes: (2,2) with the eight-torus catalog, and (2,h>=3) with the
/// (4+2h)-torus catalog, whose pushoff words for h > 3 are extrapolated
/// from the h = 3 pattern. For (2,3), `twelve_torus_catalog` selects the
/// twelve-torus variant instead.
/// `prefix` is prepended to every generator name and catalog id.
ManifoldState make_product_surfaces(int g, int h, const std::string& prefix = "",
                                    bool twelve_torus_catalog = false);

/// T^4 with the three-torus catalog (T1, T2 Lagrangian; T3 symplectic).
ManifoldState make_four_torus(const std::string& prefix = "");

/// T^2 x Sigma_g (g >= 1) with the 2g-torus catalog plus the two product
/// fibers SA = T^2 x {pt} and SB = {pt} x Sigma_g.
ManifoldState make_t2_x_sigma(int g, const std::string& prefix = "");

/// T^2 x S^2 with the single symplectic torus T1 = T^2 x {s}.
ManifoldState make_t2_x_s2(const std::string& prefix = "");

/// Trusted declaration of a block the engine cannot derive.
struct ExternalTorusDecl {
  std::string id;
  std::vector<FreeWord> pushoffs;
  FreeWord meridian;
  GeomTag tag = GeomTag::Symplectic;
  bool essential = true;
};

struct ExternalDecl {
  std::string name = "external";
  long long euler = 0;
  long long sigma = 0;
  std::vector<std::string> gens;
  std::vector<FreeWord> relators;
  std::vector<ExternalTorusDecl> tori;
  StructureKind structure = StructureKind::Symplectic;
  std::vector<std::string> trust;
};

/// Only internal consistency is verified: e and sigma parity, well-formed
/// presentation and torus words. Everything else is taken on trust and the
/// trust annotations are carried into reports.
ManifoldState make_external(const ExternalDecl& decl);

/// Flips Lagrangian catalog tori to symplectic ones (symplectic-form
/// perturbation). Requires a Symplectic state and Available tori; perturbing
/// an already symplectic torus is a warning, not an error.
ManifoldState perturb_tori(const ManifoldState& s, const std::vector<std::string>& ids);

}  // namespace gc4
