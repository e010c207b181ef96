#pragma once

#include <string>
#include <vector>

#include "gc4/presentation.hpp"

namespace gc4 {

/// Invariant factors of a finitely generated abelian group:
/// Z/t1 + Z/t2 + ... + Z^rank with 2 <= t1 | t2 | ... (factors of 1 are
/// never stored).
struct AbelianInvariants {
  std::vector<long long> torsion;
  int rank = 0;

  bool trivial() const { return torsion.empty() && rank == 0; }

  /// Canonical rendering, e.g. "0", "Z", "Z^2", "Z/5 + Z", "Z/2 + Z/4 + Z^3".
  std::string to_string() const;

  /// Parses the to_string format (whitespace tolerant). Throws ParseError.
  static AbelianInvariants parse(std::string_view text);

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Smith normal form of an integer matrix (row-major, m x n). Returns the
/// diagonal entries d1 | d2 | ... | dk (nonnegative, divisibility chain),
/// padded with zeros up to min(m, n). Pure; throws Error on arithmetic
/// overflow (entries are kept within long long).
std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> m);

/// H1 of the presented group: Smith normal form of the relator
/// exponent-sum matrix. The free rank equals b1 when the presentation is
/// that of a closed manifold's fundamental group.
AbelianInvariants abelianize(const Presentation& p);

}  // namespace gc4
