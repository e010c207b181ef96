#include "gc4/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>

#include "gc4/error.hpp"

namespace gc4 {

namespace {

constexpr long long kMaxExp = 1000000000;  // letters stay well inside int

void check_exp(long long exp) {
  if (exp > kMaxExp || exp < -kMaxExp)
    throw Error("word exponent " + std::to_string(exp) + " out of range");
}

void push_reduced(std::vector<Letter>& out, int gen, long long exp) {
  if (exp == 0) return;
  check_exp(exp);
  if (!out.empty() && out.back().gen == gen) {
    long long merged = static_cast<long long>(out.back().exp) + exp;
    check_exp(merged);
    if (merged == 0) {
      out.pop_back();
    } else {
      out.back().exp = static_cast<int>(merged);
    }
  } else {
    out.push_back(Letter{gen, static_cast<int>(exp)});
  }
}

}  // namespace

FreeWord FreeWord::generator(int gen, int exp) {
  FreeWord w;
  if (exp != 0) w.letters_.push_back(Letter{gen, exp});
  return w;
}

FreeWord FreeWord::from_letters(const std::vector<Letter>& letters) {
  FreeWord w;
  for (const Letter& l : letters) push_reduced(w.letters_, l.gen, l.exp);
  return w;
}

long long FreeWord::length() const {
  long long n = 0;
  for (const Letter& l : letters_) n += std::abs(static_cast<long long>(l.exp));
  return n;
}

int FreeWord::max_gen() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

bool FreeWord::uses_gen(int gen) const {
  return std::any_of(letters_.begin(), letters_.end(),
                     [gen](const Letter& l) { return l.gen == gen; });
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(Letter{it->gen, -it->exp});
  return w;
}

FreeWord FreeWord::pow(int n) const {
  FreeWord result;
  if (n == 0 || empty()) return result;
  FreeWord base = n > 0 ? *this : inverse();
  // Single-syllable words exponentiate directly; anything else concatenates.
  long long reps = std::abs(static_cast<long long>(n));
  if (base.letters_.size() == 1) {
    long long e = static_cast<long long>(base.letters_[0].exp) * reps;
    push_reduced(result.letters_, base.letters_[0].gen, e);
    return result;
  }
  if (reps * length() > 4 * kMaxExp) throw Error("word power too large");
  for (long long i = 0; i < reps; ++i) result = result * base;
  return result;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  FreeWord w = *this;
  for (const Letter& l : rhs.letters_) push_reduced(w.letters_, l.gen, l.exp);
  return w;
}

FreeWord FreeWord::cyclically_reduced() const {
  std::vector<Letter> ls = letters_;
  while (ls.size() >= 2 && ls.front().gen == ls.back().gen) {
    int gen = ls.front().gen;
    long long merged = static_cast<long long>(ls.front().exp) + ls.back().exp;
    ls.pop_back();
    ls.erase(ls.begin());
    if (merged != 0) {
      // Re-attach the merged syllable at the front. Adjacent syllables of a
      // reduced word have distinct generators, so no further cancellation.
      ls.insert(ls.begin(), Letter{gen, static_cast<int>(merged)});
      break;
    }
  }
  return from_letters(ls);
}

std::vector<long long> FreeWord::exponent_sums(int ngens) const {
  std::vector<long long> sums(static_cast<size_t>(ngens), 0);
  for (const Letter& l : letters_) {
    if (l.gen >= 0 && l.gen < ngens) sums[static_cast<size_t>(l.gen)] += l.exp;
  }
  return sums;
}

FreeWord FreeWord::substitute(int gen, const FreeWord& replacement) const {
  FreeWord out;
  for (const Letter& l : letters_) {
    if (l.gen == gen) {
      out = out * replacement.pow(l.exp);
    } else {
      push_reduced(out.letters_, l.gen, l.exp);
    }
  }
  return out;
}

FreeWord FreeWord::remap(const std::vector<int>& new_index) const {
  FreeWord out;
  for (const Letter& l : letters_) {
    int g = (l.gen >= 0 && l.gen < static_cast<int>(new_index.size()))
                ? new_index[static_cast<size_t>(l.gen)]
                : -1;
    if (g < 0) throw Error("remap: generator " + std::to_string(l.gen) + " has no image");
    push_reduced(out.letters_, g, l.exp);
  }
  return out;
}

std::vector<int> FreeWord::flatten() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(length()));
  for (const Letter& l : letters_) {
    int code = l.exp > 0 ? 2 * l.gen : 2 * l.gen + 1;
    for (int i = 0; i < std::abs(l.exp); ++i) out.push_back(code);
  }
  return out;
}

FreeWord commutator_word(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse() * v.inverse();
}

std::string word_to_string(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    if (l.gen >= 0 && l.gen < static_cast<int>(names.size())) {
      out += names[static_cast<size_t>(l.gen)];
    } else {
      out += "g" + std::to_string(l.gen);
    }
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

namespace {

struct WordParser {
  std::string_view text;
  const std::vector<std::string>& names;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos) + 1);
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool at_end_or(char stop1, char stop2) {
    skip_ws();
    return pos >= text.size() || text[pos] == stop1 || text[pos] == stop2;
  }

  int parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    long long value = 0;
    try {
      value = std::stoll(std::string(text.substr(start, pos - start)));
    } catch (const std::exception&) {
      value = kMaxExp + 1;
    }
    if (value > kMaxExp || value < -kMaxExp) {
      pos = start;
      fail("exponent out of range");
    }
    return static_cast<int>(value);
  }

  int lookup(const std::string& name, size_t at) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    pos = at;
    fail("unknown generator '" + name + "'");
  }

  FreeWord parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("expected word");
    char c = text[pos];
    if (c == '1') {
      ++pos;
      return FreeWord{};
    }
    if (c == '(') {
      ++pos;
      FreeWord inner = parse_word_until(')', ')');
      if (!peek_is(')')) fail("expected ')'");
      ++pos;
      return inner;
    }
    if (c == '[') {
      ++pos;
      FreeWord u = parse_word_until(',', ',');
      if (!peek_is(',')) fail("expected ',' in commutator");
      ++pos;
      FreeWord v = parse_word_until(']', ']');
      if (!peek_is(']')) fail("expected ']'");
      ++pos;
      return commutator_word(u, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      return FreeWord::generator(lookup(std::string(text.substr(start, pos - start)), start));
    }
    fail(std::string("unexpected character '") + c + "' in word");
  }

  FreeWord parse_term() {
    FreeWord atom = parse_atom();
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      int e = parse_int();
      return atom.pow(e);
    }
    return atom;
  }

  FreeWord parse_word_until(char stop1, char stop2) {
    FreeWord w;
    while (!at_end_or(stop1, stop2)) {
      if (peek_is('*')) {
        ++pos;
        continue;
      }
      w = w * parse_term();
    }
    return w;
  }
};

}  // namespace

FreeWord parse_word(std::string_view text, const std::vector<std::string>& names) {
  WordParser p{text, names};
  FreeWord w = p.parse_word_until('\0', '\0');
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters after word");
  return w;
}

}  // namespace gc4
