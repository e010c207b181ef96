#pragma once

#include <string>
#include <vector>

#include "gc4/word.hpp"

namespace gc4 {

/// Finite presentation <generators | relators>.
///
/// Relators are stored reduced and cyclically reduced; relator order carries
/// no meaning. Every relator references only generators below ngens().
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::vector<std::string> names) : names_(std::move(names)) {}

  int ngens() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<FreeWord>& relators() const { return relators_; }

  /// Index of a named generator, or -1.
  int gen_index(std::string_view name) const;

  /// Appends a relator (normal closure is implicit in presentation
  /// semantics). The word is cyclically reduced first; a trivial word is a
  /// no-op. Throws ModelError on an out-of-range generator index.
  void add_relator(const FreeWord& w);

  /// Presentation of the quotient by the normal closure of `extra`.
  Presentation quotient(const std::vector<FreeWord>& extra) const;

  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<FreeWord> relators_;
};

}  // namespace gc4
