#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gc4/abelian.hpp"
#include "gc4/identify.hpp"

namespace gc4 {

enum class Tri { Yes, No, Unknown };

std::string tri_to_string(Tri t);

/// Integer invariants of a closed oriented 4-manifold, as tracked by the
/// engine. Intersection-form summand counts are optional: operations update
/// them only where a bookkeeping rule justifies it, and degrade to
/// unknown otherwise.
struct InvariantRecord {
  long long euler = 0;
  long long signature = 0;
  std::optional<long long> hyperbolic;  // H summands
  std::optional<long long> plus_one;    // <1> summands
  std::optional<long long> minus_one;   // <-1> summands
  /// Block-level spin certificate; see spin() for the derived value.
  Tri base_spin = Tri::Unknown;

  bool counts_known() const { return hyperbolic && plus_one && minus_one; }

  /// Derived spin state: a tracked odd summand forces No; otherwise the
  /// block certificate stands.
  Tri spin() const;

  /// Even/odd type of the tracked form, when the counts are known.
  Tri even_form() const;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// Betti numbers of a closed oriented connected 4-manifold,
/// e = 2 - 2 b1 + b2, b2 = b2+ + b2-, sigma = b2+ - b2-.
struct BettiData {
  long long b1 = 0;
  long long b2 = 0;
  long long b2_plus = 0;
  long long b2_minus = 0;

  friend bool operator==(const BettiData&, const BettiData&) = default;
};

struct ClassificationLabel {
  std::string label = "unclassified";
  std::string basis;  // which classification theorem backs the label

  bool classified() const { return label != "unclassified"; }
};

/// Standard connected-sum pieces.
struct Piece {
  enum class Kind { S2xS2, CP2, CP2bar, S3xS1, LpxS1, T2xS2 };
  Kind kind;
  long long param = 0;  // p for LpxS1
  long long count = 1;
};

/// Expected-value side of the homeomorphism claims: invariants of
/// #-sums of standard pieces. e = sum e_i - 2(k-1) over k pieces; signature,
/// b1 and the form summands are additive. Throws ModelError on an empty
/// piece list.
std::pair<InvariantRecord, BettiData> connected_sum_invariants(const std::vector<Piece>& pieces);

/// Parses a label such as "3(S2xS2)", "3 CP2 # 4 CP2bar",
/// "2(S2xS2) # S3xS1", "LpxS1(5) # 2 CP2bar" into its piece list.
std::vector<Piece> parse_label(std::string_view text);

/// b1 from the abelianization, b2 = e - 2 + 2 b1, b2+- solved from sigma.
/// Throws ModelError when the result would be negative or non-integral
/// (a scenario modeling error).
BettiData betti_from_euler(long long e, const AbelianInvariants& ab, long long sigma);

/// Homeomorphism-type lookup for the certified fundamental groups the engine
/// understands. Emits a label only when every modeled precondition of the
/// cited theorem is certified; "unclassified" otherwise.
ClassificationLabel classify_homeomorphism(const BettiData& b, const InvariantRecord& rec,
                                           const GroupIdentification& g);

/// Simply connected case: almost-complex iff b2+ is odd. Anything else is
/// Unknown.
Tri almost_complex_check(const BettiData& b, const GroupIdentification& g);

}  // namespace gc4
