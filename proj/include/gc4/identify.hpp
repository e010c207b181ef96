#pragma once

#include <string>
#include <vector>

#include "gc4/abelian.hpp"
#include "gc4/coset.hpp"
#include "gc4/presentation.hpp"
#include "gc4/tietze.hpp"

namespace gc4 {

/// Resource budgets for the identification pipeline. Defaults match the CLI
/// defaults.
struct Budgets {
  long long max_cosets = 100000;
  int tietze_budget = 5000;
  long long relator_cap = 64;
};

/// What a presentation could be certified to present. A tag other than
/// Unknown is only ever emitted with a terminating certificate: a closed
/// coset table, or a Tietze reduction to the literal standard form.
struct GroupIdentification {
  enum class Tag {
    Unknown,
    Trivial,
    FiniteCyclic,           // Z/n, param n >= 2
    FreeAbelianTimesCyclic, // Z/p + Z, param p (p = 0 means Z + Z)
    FreeOfRank,             // free group, param n >= 1
    SurfaceGroup,           // pi1 of the closed orientable surface, param genus >= 2
  };

  Tag tag = Tag::Unknown;
  long long param = 0;
  std::vector<std::string> evidence;

  bool certified() const { return tag != Tag::Unknown; }

  /// Canonical short name: "trivial", "Z/5", "Z/5 + Z", "Z^2", "Z", "F_3",
  /// "Sigma_2", "unknown".
  std::string to_string() const;
};

/// Identification pipeline: simplify, match standard forms (empty
/// presentation; single power relator; no relators; genus-g one-relator
/// surface form; the two-generator Z/p x Z form), then abelianize and fall
/// back to bounded coset enumeration. Unknown is a valid outcome.
GroupIdentification identify_group(const Presentation& p, const Budgets& budgets = {});

/// Matches a one-relator word of the shape [x1,x2][x3,x4]...[x_{2g-1},x_{2g}]
/// up to cyclic rotation and inversion, where every generator of the
/// presentation occurs in exactly one commutator block. Returns the genus, or
/// 0 when the shape does not match.
int surface_relator_genus(const Presentation& p);

}  // namespace gc4
