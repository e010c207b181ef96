#include "gc4/tietze.hpp"

#include <algorithm>

#include "gc4/error.hpp"

namespace gc4 {

namespace tietze {

namespace {

/// Splits relator r (cyclically reduced) around its unique occurrence of
/// `gen` and returns the replacement word for that generator.
FreeWord solve_for(const FreeWord& r, int gen) {
  const auto& ls = r.letters();
  size_t at = ls.size();
  for (size_t i = 0; i < ls.size(); ++i)
    if (ls[i].gen == gen) at = i;
  FreeWord prefix, suffix;
  for (size_t i = 0; i < at; ++i) prefix = prefix * FreeWord::generator(ls[i].gen, ls[i].exp);
  for (size_t i = at + 1; i < ls.size(); ++i)
    suffix = suffix * FreeWord::generator(ls[i].gen, ls[i].exp);
  // prefix * gen^e * suffix = 1
  if (ls[at].exp == 1) return prefix.inverse() * suffix.inverse();
  return suffix * prefix;
}

}  // namespace

std::vector<Move> applicable_moves(const Presentation& p, long long relator_cap) {
  std::vector<Move> moves;
  const auto& rels = p.relators();
  for (size_t ri = 0; ri < rels.size(); ++ri) {
    const FreeWord& r = rels[ri];
    for (int g = 0; g < p.ngens(); ++g) {
      int occurrences = 0;
      bool unit_exp = false;
      for (const Letter& l : r.letters()) {
        if (l.gen != g) continue;
        ++occurrences;
        unit_exp = (l.exp == 1 || l.exp == -1);
      }
      if (occurrences != 1 || !unit_exp) continue;

      FreeWord replacement = solve_for(r, g);
      // Conservative: skip the move if any rewritten relator would blow past
      // the cap.
      bool fits = true;
      for (size_t rj = 0; rj < rels.size() && fits; ++rj) {
        if (rj == ri) continue;
        FreeWord rewritten = rels[rj].substitute(g, replacement).cyclically_reduced();
        if (rewritten.length() > relator_cap) fits = false;
      }
      if (!fits) continue;
      moves.push_back(Move{static_cast<int>(ri), g, replacement.length()});
    }
  }
  return moves;
}

Presentation apply_move(const Presentation& p, const Move& m) {
  const auto& rels = p.relators();
  if (m.relator < 0 || m.relator >= static_cast<int>(rels.size()) || m.gen < 0 ||
      m.gen >= p.ngens())
    throw Error("tietze::apply_move: stale move");

  FreeWord replacement = solve_for(rels[static_cast<size_t>(m.relator)], m.gen);

  // Generator m.gen disappears; indices above it shift down by one.
  std::vector<int> new_index(static_cast<size_t>(p.ngens()));
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(p.ngens()) - 1);
  for (int g = 0; g < p.ngens(); ++g) {
    if (g == m.gen) {
      new_index[static_cast<size_t>(g)] = -1;
    } else {
      new_index[static_cast<size_t>(g)] = static_cast<int>(names.size());
      names.push_back(p.names()[static_cast<size_t>(g)]);
    }
  }

  Presentation out(std::move(names));
  for (size_t rj = 0; rj < rels.size(); ++rj) {
    if (rj == static_cast<size_t>(m.relator)) continue;
    FreeWord rewritten = rels[rj].substitute(m.gen, replacement);
    out.add_relator(rewritten.remap(new_index));  // reduces, drops trivial
  }
  return out;
}

}  // namespace tietze

SimplifyResult simplify_presentation(const Presentation& p, int budget, long long relator_cap) {
  if (budget <= 0) throw Error("simplify_presentation: budget must be positive");
  SimplifyResult result;
  result.presentation = p;
  while (result.moves_used < budget) {
    std::vector<tietze::Move> moves = tietze::applicable_moves(result.presentation, relator_cap);
    if (moves.empty()) return result;
    auto best = std::min_element(moves.begin(), moves.end(),
                                 [](const tietze::Move& a, const tietze::Move& b) {
                                   if (a.replacement_length != b.replacement_length)
                                     return a.replacement_length < b.replacement_length;
                                   if (a.relator != b.relator) return a.relator < b.relator;
                                   return a.gen < b.gen;
                                 });
    result.presentation = tietze::apply_move(result.presentation, *best);
    ++result.moves_used;
  }
  result.budget_exhausted = !tietze::applicable_moves(result.presentation, relator_cap).empty();
  return result;
}

}  // namespace gc4
