#pragma once

#include <string>
#include <vector>

#include "gc4/presentation.hpp"

namespace gc4 {

namespace tietze {

/// An applicable substitution move: relator `relator` uses generator `gen`
/// exactly once, with exponent +-1, so `gen` equals a word in the remaining
/// generators. Applying the move rewrites every other relator, deletes the
/// defining relator and deletes the now-unused generator.
///
/// Presentations are kept canonical (relators reduced, cyclically reduced,
/// never trivial), so free/cyclic reduction and trivial-relator deletion are
/// implicit in every apply; substitution is the only move with a choice.
struct Move {
  int relator = -1;
  int gen = -1;
  /// Reduced length of the replacement word (used for move ordering).
  long long replacement_length = 0;
};

/// Enumerates the moves applicable to `p`, in deterministic order.
/// Substitutions that would grow any relator beyond `relator_cap` letters
/// are omitted.
std::vector<Move> applicable_moves(const Presentation& p, long long relator_cap);

/// Applies one move obtained from applicable_moves on the same presentation.
Presentation apply_move(const Presentation& p, const Move& m);

}  // namespace tietze

struct SimplifyResult {
  Presentation presentation;
  int moves_used = 0;
  /// Set when the step budget ran out before the presentation stabilized.
  bool budget_exhausted = false;
};

/// Budgeted, conservative Tietze simplification. Deterministic: at each step
/// the cheapest applicable move is taken (shortest replacement word first,
/// then lowest relator index). Never grows a relator beyond `relator_cap`
/// letters.
SimplifyResult simplify_presentation(const Presentation& p, int budget,
                                     long long relator_cap = 64);

}  // namespace gc4
