#include <doctest.h>

#include "gc4/abelian.hpp"
#include "gc4/error.hpp"
#include "gc4/tietze.hpp"

using namespace gc4;

namespace {

Presentation pres(const std::vector<std::string>& names, const std::vector<std::string>& rels) {
  Presentation p(names);
  for (const auto& r : rels) p.add_relator(parse_word(r, names));
  return p;
}

/// The eight-generator presentation left by the four-locus construction on
/// the genus-2 product: surface relations plus the eight surgery relators.
Presentation x4_presentation() {
  return pres({"a1", "b1", "a2", "b2", "c1", "d1", "c2", "d2"},
              {
                  "[a1, b1] [a2, b2]",
                  "[c1, d1] [c2, d2]",
                  "[b1^-1, d1^-1] c1",
                  "[b1^-1, d2^-1]^-1 a1",
                  "[b2^-1, d1^-1] a2",
                  "[b2^-1, d2^-1]^-1 c2",
                  "b1",
                  "b2",
                  "d1",
                  "d2",
              });
}

/// T^2 x Sigma_2 after the rank-2 free-group surgery set.
Presentation xf21_presentation() {
  return pres({"x", "y", "a1", "b1", "a2", "b2"},
              {
                  "[x, y]",
                  "[a1, b1] [a2, b2]",
                  "[x, a1]",
                  "[y, a1]",
                  "[y, b1 a1 b1^-1]",
                  "[x, a2]",
                  "[y, a2]",
                  "[y, b2 a2 b2^-1]",
                  "[b1^-1, y^-1]^-1 a1",
                  "[b2^-1, y^-1]^-1 x",
                  "[x^-1, b2]^-1 b2 a2 b2^-1",
                  "y",
              });
}

}  // namespace

TEST_CASE("the four-locus relation set collapses to the empty presentation") {
  SimplifyResult r = simplify_presentation(x4_presentation(), 5000);
  CHECK(r.presentation.ngens() == 0);
  CHECK(r.presentation.relators().empty());
  CHECK_FALSE(r.budget_exhausted);
}

TEST_CASE("defining relator removes its generator") {
  SimplifyResult r = simplify_presentation(pres({"a", "b"}, {"a"}), 10);
  CHECK(r.presentation.ngens() == 1);
  CHECK(r.presentation.names() == std::vector<std::string>{"b"});
  CHECK(r.presentation.relators().empty());
}

TEST_CASE("free generators are never deleted") {
  // <b1, b2 | > presents a rank-2 free group; nothing may shrink it.
  SimplifyResult r = simplify_presentation(xf21_presentation(), 5000);
  CHECK(r.presentation.ngens() == 2);
  CHECK(r.presentation.relators().empty());
  CHECK(r.presentation.names() == std::vector<std::string>{"b1", "b2"});
}

TEST_CASE("every simplification preserves the abelianization") {
  for (const Presentation& p : {x4_presentation(), xf21_presentation(),
                                pres({"x", "a"}, {"x^5", "[x, a]"})}) {
    SimplifyResult r = simplify_presentation(p, 5000);
    CHECK(abelianize(r.presentation) == abelianize(p));
  }
}

TEST_CASE("budget exhaustion is flagged, not an error") {
  SimplifyResult r = simplify_presentation(x4_presentation(), 1);
  CHECK(r.moves_used == 1);
  CHECK(r.budget_exhausted);
  CHECK(abelianize(r.presentation) == abelianize(x4_presentation()));
  CHECK_THROWS_AS(simplify_presentation(x4_presentation(), 0), Error);
}

TEST_CASE("the relator cap blocks blowup substitutions") {
  Presentation p(std::vector<std::string>{"a", "b"});
  p.add_relator(parse_word("a", {"a", "b"}) * parse_word("b", {"a", "b"}).pow(40));
  p.add_relator(parse_word("a^2", {"a", "b"}));
  SimplifyResult capped = simplify_presentation(p, 100, 64);
  CHECK(capped.presentation == p);  // substituting a would leave an 80-letter relator
  CHECK_FALSE(capped.budget_exhausted);
  SimplifyResult loose = simplify_presentation(p, 100, 128);
  CHECK(loose.presentation.ngens() == 1);
  REQUIRE(loose.presentation.relators().size() == 1);
  CHECK(loose.presentation.relators()[0].length() == 80);
}

TEST_CASE("applied moves preserve the abelianization") {
  Presentation p = pres({"a", "b"}, {"a b^-1", "b a"});
  auto moves = tietze::applicable_moves(p, 64);
  REQUIRE(!moves.empty());
  for (const tietze::Move& m : moves) {
    Presentation q = tietze::apply_move(p, m);
    CHECK(abelianize(q) == abelianize(p));
  }
}
