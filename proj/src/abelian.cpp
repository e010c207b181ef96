#include "gc4/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "gc4/error.hpp"

namespace gc4 {

namespace {

long long checked_mul(long long a, long long b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > static_cast<__int128>(9e17) || p < -static_cast<__int128>(9e17))
    throw Error("smith_normal_form: entry overflow");
  return static_cast<long long>(p);
}

long long checked_sub(long long a, long long b) {
  __int128 d = static_cast<__int128>(a) - b;
  if (d > static_cast<__int128>(9e17) || d < -static_cast<__int128>(9e17))
    throw Error("smith_normal_form: entry overflow");
  return static_cast<long long>(d);
}

}  // namespace

std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t dim = std::min(rows, cols);
  std::vector<long long> diag(dim, 0);

  auto row_op = [&](size_t dst, size_t src, long long f) {  // row dst -= f * row src
    for (size_t j = 0; j < cols; ++j) m[dst][j] = checked_sub(m[dst][j], checked_mul(f, m[src][j]));
  };
  auto col_op = [&](size_t dst, size_t src, long long f) {
    for (size_t i = 0; i < rows; ++i) m[i][dst] = checked_sub(m[i][dst], checked_mul(f, m[i][src]));
  };

  for (size_t k = 0; k < dim; ++k) {
    // Smallest nonzero |entry| in the trailing submatrix becomes the pivot.
    size_t pi = k, pj = k;
    long long best = 0;
    for (size_t i = k; i < rows; ++i)
      for (size_t j = k; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
          best = std::abs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;

    std::swap(m[k], m[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = k + 1; i < rows; ++i) {
        if (m[i][k] == 0) continue;
        long long f = m[i][k] / m[k][k];
        row_op(i, k, f);
        if (m[i][k] != 0) {  // remainder becomes the new, smaller pivot
          std::swap(m[k], m[i]);
          clean = false;
        }
      }
      for (size_t j = k + 1; j < cols; ++j) {
        if (m[k][j] == 0) continue;
        long long f = m[k][j] / m[k][k];
        col_op(j, k, f);
        if (m[k][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][k], m[i][j]);
          clean = false;
        }
      }
    }

    // Divisibility: fold any entry the pivot misses back into column k.
    bool redo = false;
    for (size_t i = k + 1; i < rows && !redo; ++i)
      for (size_t j = k + 1; j < cols && !redo; ++j)
        if (m[i][j] % m[k][k] != 0) {
          col_op(k, j, -1);  // add column j to column k
          redo = true;
        }
    if (redo) {
      --k;
      continue;
    }
    diag[k] = std::abs(m[k][k]);
  }
  return diag;
}

AbelianInvariants abelianize(const Presentation& p) {
  size_t n = static_cast<size_t>(p.ngens());
  std::vector<std::vector<long long>> m;
  m.reserve(p.relators().size());
  for (const FreeWord& r : p.relators()) m.push_back(r.exponent_sums(p.ngens()));

  AbelianInvariants ab;
  if (m.empty()) {
    ab.rank = static_cast<int>(n);
    return ab;
  }
  std::vector<long long> diag = smith_normal_form(std::move(m));
  size_t nonzero = 0;
  for (long long d : diag)
    if (d != 0) ++nonzero;
  for (long long d : diag)
    if (d >= 2) ab.torsion.push_back(d);
  std::sort(ab.torsion.begin(), ab.torsion.end());
  ab.rank = static_cast<int>(n - nonzero);
  return ab;
}

std::string AbelianInvariants::to_string() const {
  if (trivial()) return "0";
  std::string out;
  for (long long t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  if (rank == 1) {
    if (!out.empty()) out += " + ";
    out += "Z";
  } else if (rank > 1) {
    if (!out.empty()) out += " + ";
    out += "Z^" + std::to_string(rank);
  }
  return out;
}

AbelianInvariants AbelianInvariants::parse(std::string_view text) {
  AbelianInvariants ab;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("abelian invariants: " + msg, 1, static_cast<int>(pos) + 1);
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '0') {
    ++pos;
    skip_ws();
    if (pos != text.size()) fail("trailing characters");
    return ab;
  }
  bool first = true;
  while (true) {
    skip_ws();
    if (!first) {
      if (pos >= text.size()) break;
      if (text[pos] != '+') fail("expected '+'");
      ++pos;
      skip_ws();
    }
    first = false;
    if (pos >= text.size() || text[pos] != 'Z') fail("expected 'Z'");
    ++pos;
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("expected torsion order");
      long long t = std::atoll(std::string(text.substr(start, pos - start)).c_str());
      if (t < 2) fail("torsion factor must be >= 2");
      ab.torsion.push_back(t);
    } else if (pos < text.size() && text[pos] == '^') {
      ++pos;
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("expected rank");
      ab.rank += std::atoi(std::string(text.substr(start, pos - start)).c_str());
    } else {
      ab.rank += 1;
    }
    skip_ws();
    if (pos >= text.size()) break;
  }
  std::sort(ab.torsion.begin(), ab.torsion.end());
  return ab;
}

}  // namespace gc4
