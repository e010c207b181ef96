#pragma once

#include <optional>
#include <vector>

#include "gc4/presentation.hpp"

namespace gc4 {

/// Result of a bounded coset enumeration. `index` is set only when the table
/// closed; `overflow` means the bound was hit, which is inconclusive rather
/// than a failure.
struct CosetOutcome {
  std::optional<long long> index;
  bool overflow = false;
  long long cosets_defined = 0;

  bool closed() const { return index.has_value(); }

  friend bool operator==(const CosetOutcome&, const CosetOutcome&) = default;
};

/// Todd-Coxeter enumeration of the cosets of <subgroup_gens> in the group
/// presented by `p`. HLT strategy with a lookahead pass when the coset bound
/// is reached; scanning order is fixed, so runs are reproducible. The index,
/// when the table closes, does not depend on relator or processing order.
///
/// max_cosets bounds the number of simultaneously live cosets (>= 1).
CosetOutcome enumerate_cosets(const Presentation& p, const std::vector<FreeWord>& subgroup_gens,
                              long long max_cosets);

}  // namespace gc4
