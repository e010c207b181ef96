#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>

#include "gc4/abelian.hpp"
#include "gc4/blocks.hpp"
#include "gc4/error.hpp"

using namespace gc4;

namespace {

/// Test-only oracle, independent of the production elimination: the k-th
/// determinantal divisor d_k is the gcd of ALL k x k minors (enumerated
/// exhaustively), and the invariant factors are s_k = d_k / d_{k-1}. Only
/// usable for small matrices; the random presentations below are 3 x 4.
long long minor_det(const std::vector<std::vector<long long>>& m, const std::vector<size_t>& rows,
                    std::vector<size_t> cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  long long det = 0;
  std::vector<size_t> sub(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < cols.size(); ++j) {
    std::vector<size_t> rest = cols;
    rest.erase(rest.begin() + static_cast<long>(j));
    long long term = m[rows[0]][cols[j]] * minor_det(m, sub, rest);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

void subsets_of(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
  std::vector<size_t> pick(k);
  std::function<void(size_t, size_t)> go = [&](size_t start, size_t depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (size_t i = start; i + (k - depth) <= n; ++i) {
      pick[depth] = i;
      go(i + 1, depth + 1);
    }
  };
  go(0, 0);
}

AbelianInvariants oracle_abelianize(const Presentation& p) {
  std::vector<std::vector<long long>> m;
  for (const FreeWord& r : p.relators()) m.push_back(r.exponent_sums(p.ngens()));
  AbelianInvariants ab;
  size_t rows = m.size();
  size_t cols = static_cast<size_t>(p.ngens());
  if (rows == 0) {
    ab.rank = p.ngens();
    return ab;
  }
  std::vector<long long> divisors = {1};  // d_0
  size_t rank = 0;
  for (size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<size_t>> rsets, csets;
    subsets_of(rows, k, rsets);
    subsets_of(cols, k, csets);
    long long g = 0;
    for (const auto& rs : rsets)
      for (const auto& cs : csets) g = std::gcd(g, minor_det(m, rs, cs));
    if (g == 0) break;
    divisors.push_back(g);
    rank = k;
  }
  for (size_t k = 1; k <= rank; ++k) {
    long long s = divisors[k] / divisors[k - 1];
    if (s >= 2) ab.torsion.push_back(s);
  }
  std::sort(ab.torsion.begin(), ab.torsion.end());
  ab.rank = p.ngens() - static_cast<int>(rank);
  return ab;
}

Presentation pres(const std::vector<std::string>& names, const std::vector<std::string>& rels) {
  Presentation p(names);
  for (const auto& r : rels) p.add_relator(parse_word(r, names));
  return p;
}

}  // namespace

TEST_CASE("Z/5 x Z from the blown-down Hopf-surface presentation") {
  Presentation p = pres({"x", "a"}, {"x^5", "[x, a]"});
  AbelianInvariants ab = abelianize(p);
  CHECK(ab.torsion == std::vector<long long>{5});
  CHECK(ab.rank == 1);
  CHECK(ab.to_string() == "Z/5 + Z");
}

TEST_CASE("genus-2 product block abelianizes to rank 8") {
  ManifoldState block = make_product_surfaces(2, 2);
  Presentation filled = block.pres;
  for (const TorusDescriptor& t : block.tori)
    if (!t.fiber_entry) filled.add_relator(t.meridian);
  AbelianInvariants ab = abelianize(filled);
  CHECK(ab.rank == 8);
  CHECK(ab.torsion.empty());
}

TEST_CASE("random presentations match the exhaustive-pivot oracle") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> len(0, 6);
  const std::vector<std::string> names = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 300; ++trial) {
    Presentation p(names);
    for (int r = 0; r < 3; ++r) {
      std::vector<Letter> ls;
      int n = len(rng);
      for (int i = 0; i < n; ++i) {
        int e = entry(rng);
        if (e != 0) ls.push_back(Letter{static_cast<int>(rng() % 4), e});
      }
      FreeWord w = FreeWord::from_letters(ls);
      if (!w.empty()) p.add_relator(w);
    }
    AbelianInvariants got = abelianize(p);
    AbelianInvariants want = oracle_abelianize(p);
    CAPTURE(p.to_string());
    CHECK(got == want);
  }
}

TEST_CASE("square matrices match the minor-gcd oracle") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> entry(-6, 6);
  const std::vector<std::string> names = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 150; ++trial) {
    Presentation p(names);
    for (int r = 0; r < 4; ++r) {
      std::vector<Letter> ls;
      for (int g = 0; g < 4; ++g) {
        int e = entry(rng);
        if (e != 0) ls.push_back(Letter{g, e});
      }
      FreeWord w = FreeWord::from_letters(ls);
      if (!w.empty()) p.add_relator(w);
    }
    CAPTURE(p.to_string());
    CHECK(abelianize(p) == oracle_abelianize(p));
  }
}

TEST_CASE("divisibility chain is maintained") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<long long>> m(3, std::vector<long long>(4));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng);
    auto diag = smith_normal_form(m);
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] == 0) continue;
      REQUIRE(diag[i] != 0);
      CHECK(diag[i + 1] % diag[i] == 0);
    }
  }
}

TEST_CASE("abelian invariants formatting round-trips") {
  for (const std::string text : {"0", "Z", "Z^2", "Z/5 + Z", "Z/2 + Z/4 + Z^3", "Z/7"}) {
    CHECK(AbelianInvariants::parse(text).to_string() == text);
  }
  CHECK_THROWS_AS(AbelianInvariants::parse("Z/1"), ParseError);
  CHECK_THROWS_AS(AbelianInvariants::parse("Q"), ParseError);
}

TEST_CASE("quotient appends relators and validates indices") {
  Presentation p = pres({"a"}, {});
  Presentation q = p.quotient({parse_word("a", {"a"})});
  CHECK(q.relators().size() == 1);
  CHECK(abelianize(q).trivial());
  CHECK_THROWS_AS(p.quotient({FreeWord::generator(3)}), ModelError);
  // Quotient by an already-present relator: abelianization unchanged.
  Presentation r = pres({"a", "b"}, {"a b a^-1 b^-1", "a^4"});
  Presentation r2 = r.quotient({parse_word("a^4", {"a", "b"})});
  CHECK(abelianize(r) == abelianize(r2));
}

TEST_CASE("quotient can only shrink the group: rank never increases") {
  std::mt19937 rng(5150);
  const std::vector<std::string> names = {"a", "b", "c"};
  std::uniform_int_distribution<int> entry(-3, 3);
  auto random_word = [&] {
    std::vector<Letter> ls;
    for (int i = 0; i < 4; ++i) {
      int e = entry(rng);
      if (e != 0) ls.push_back(Letter{static_cast<int>(rng() % 3), e});
    }
    return FreeWord::from_letters(ls);
  };
  for (int trial = 0; trial < 200; ++trial) {
    Presentation p(names);
    for (int r = 0; r < 2; ++r) {
      FreeWord w = random_word();
      if (!w.empty()) p.add_relator(w);
    }
    FreeWord extra = random_word();
    Presentation q = p.quotient({extra});
    AbelianInvariants before = abelianize(p);
    AbelianInvariants after = abelianize(q);
    CHECK(after.rank <= before.rank);
    // Minimal generator count of an abelian quotient cannot grow either.
    CHECK(after.rank + static_cast<int>(after.torsion.size()) <=
          before.rank + static_cast<int>(before.torsion.size()));
  }
}
