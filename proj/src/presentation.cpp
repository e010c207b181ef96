#include "gc4/presentation.hpp"

#include "gc4/error.hpp"

namespace gc4 {

int Presentation::gen_index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

void Presentation::add_relator(const FreeWord& w) {
  if (w.max_gen() >= ngens())
    throw ModelError("relator references generator index " + std::to_string(w.max_gen()) +
                     " but presentation has " + std::to_string(ngens()) + " generators");
  FreeWord r = w.cyclically_reduced();
  if (!r.empty()) relators_.push_back(r);
}

Presentation Presentation::quotient(const std::vector<FreeWord>& extra) const {
  Presentation q = *this;
  for (const FreeWord& w : extra) q.add_relator(w);
  return q;
}

std::string Presentation::to_string() const {
  std::string out = "< ";
  for (size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ", ";
    out += names_[i];
  }
  out += " | ";
  for (size_t i = 0; i < relators_.size(); ++i) {
    if (i) out += ", ";
    out += word_to_string(relators_[i], names_);
  }
  out += " >";
  return out;
}

}  // namespace gc4
