#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace gc4 {

/// One syllable of a free-group word: a generator index together with a
/// nonzero exponent.
struct Letter {
  int gen = 0;
  int exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A reduced word in a free group on generators indexed 0,1,2,...
///
/// The representation is canonical: adjacent syllables always carry distinct
/// generator indices and every exponent is nonzero, so two FreeWords compare
/// equal exactly when they are the same element of the free group. The empty
/// word is the identity.
class FreeWord {
 public:
  FreeWord() = default;

  static FreeWord generator(int gen, int exp = 1);

  /// Builds the reduced word with the given syllables (in order). Any input
  /// is accepted; cancellation and syllable merging happen here.
  static FreeWord from_letters(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  /// Word length counted in single letters (sum of |exp|).
  long long length() const;

  /// Largest generator index used, or -1 for the identity.
  int max_gen() const;

  bool uses_gen(int gen) const;

  FreeWord inverse() const;
  FreeWord pow(int n) const;
  FreeWord operator*(const FreeWord& rhs) const;

  /// Conjugation-minimal form: strips matching prefix/suffix pairs.
  FreeWord cyclically_reduced() const;

  /// Exponent sum per generator; the image of the word in Z^ngens.
  std::vector<long long> exponent_sums(int ngens) const;

  /// Replaces every occurrence of `gen` (any exponent) by `replacement`
  /// raised to that exponent, then reduces.
  FreeWord substitute(int gen, const FreeWord& replacement) const;

  /// Renames generator indices through `new_index`. Every generator used by
  /// the word must have a nonnegative image.
  FreeWord remap(const std::vector<int>& new_index) const;

  /// Flattens to single letters: generator index g with exponent +1 encodes
  /// as 2g, with exponent -1 as 2g+1. Used by the coset enumerator.
  std::vector<int> flatten() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// [u, v] = u v u^-1 v^-1.
FreeWord commutator_word(const FreeWord& u, const FreeWord& v);

/// Renders a word with the given generator names; the identity prints as "1".
/// Example: "a1 b1^-1 c2^3".
std::string word_to_string(const FreeWord& w, const std::vector<std::string>& names);

/// Parses a word literal. Grammar:
///
///   word := term*            (juxtaposition, optionally separated by '*')
///   term := atom ('^' int)?
///   atom := NAME | '1' | '(' word ')' | '[' word ',' word ']'
///
/// Throws ParseError (with 1-based column relative to `text`) on bad syntax
/// or on a NAME not present in `names`.
FreeWord parse_word(std::string_view text, const std::vector<std::string>& names);

}  // namespace gc4
