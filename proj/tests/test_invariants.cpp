#include <doctest.h>

#include <algorithm>
#include <random>

#include "gc4/error.hpp"
#include "gc4/invariants.hpp"

using namespace gc4;

namespace {

GroupIdentification make_id(GroupIdentification::Tag tag, long long param = 0) {
  GroupIdentification g;
  g.tag = tag;
  g.param = param;
  return g;
}

const GroupIdentification kTrivial = make_id(GroupIdentification::Tag::Trivial);
const GroupIdentification kZ = make_id(GroupIdentification::Tag::FreeOfRank, 1);

AbelianInvariants rank(int r) {
  AbelianInvariants ab;
  ab.rank = r;
  return ab;
}

}  // namespace

TEST_CASE("connected sums of standard pieces") {
  auto [rec, b] = connected_sum_invariants({{Piece::Kind::S2xS2, 0, 3}});
  CHECK(rec.euler == 8);
  CHECK(rec.signature == 0);
  CHECK(b.b2 == 6);
  CHECK(rec.even_form() == Tri::Yes);
  CHECK(rec.spin() == Tri::Yes);

  auto [rec2, b2] =
      connected_sum_invariants({{Piece::Kind::CP2, 0, 3}, {Piece::Kind::CP2bar, 0, 4}});
  CHECK(rec2.euler == 9);
  CHECK(rec2.signature == -1);
  CHECK(rec2.even_form() == Tri::No);
  CHECK(b2.b2_plus == 3);
  CHECK(b2.b2_minus == 4);

  auto [rec3, b3] = connected_sum_invariants({{Piece::Kind::S3xS1, 0, 1}});
  CHECK(rec3.euler == 0);
  CHECK(rec3.signature == 0);
  CHECK(b3.b1 == 1);
  CHECK(b3.b2 == 0);
}

TEST_CASE("connected sum is permutation invariant and two-part additive") {
  std::vector<Piece> pieces = {{Piece::Kind::S2xS2, 0, 2},
                               {Piece::Kind::CP2bar, 0, 3},
                               {Piece::Kind::S3xS1, 0, 1},
                               {Piece::Kind::T2xS2, 0, 1}};
  auto [rec, b] = connected_sum_invariants(pieces);
  std::mt19937 rng(11);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(pieces.begin(), pieces.end(), rng);
    auto [rec2, b2] = connected_sum_invariants(pieces);
    CHECK(rec2 == rec);
    CHECK(b2 == b);
  }

  std::vector<Piece> left = {pieces[0], pieces[1]};
  std::vector<Piece> right = {pieces[2], pieces[3]};
  auto [lrec, lb] = connected_sum_invariants(left);
  auto [rrec, rb] = connected_sum_invariants(right);
  CHECK(rec.euler == lrec.euler + rrec.euler - 2);

  CHECK_THROWS_AS(connected_sum_invariants({}), ModelError);
}

TEST_CASE("betti data from euler characteristic and H1") {
  BettiData b = betti_from_euler(4, rank(0), 0);
  CHECK(b == BettiData{0, 2, 1, 1});

  BettiData s3s1 = betti_from_euler(0, rank(1), 0);
  CHECK(s3s1 == BettiData{1, 0, 0, 0});

  BettiData xs22 = betti_from_euler(0, rank(4), 0);
  CHECK(xs22.b1 == 4);
  CHECK(xs22.b2 == 6);

  CHECK_THROWS_AS(betti_from_euler(3, rank(0), 0), ModelError);   // b2, sigma parity clash
  CHECK_THROWS_AS(betti_from_euler(-4, rank(0), 0), ModelError);  // negative b2
  CHECK_THROWS_AS(betti_from_euler(4, rank(0), 4), ModelError);   // |sigma| > b2
}

TEST_CASE("Freedman branch labels") {
  InvariantRecord even;
  even.euler = 4;
  even.signature = 0;
  even.hyperbolic = 1;
  even.plus_one = 0;
  even.minus_one = 0;
  even.base_spin = Tri::Yes;
  ClassificationLabel l = classify_homeomorphism(BettiData{0, 2, 1, 1}, even, kTrivial);
  CHECK(l.label == "1(S2xS2)");
  CHECK(l.basis == "Freedman");

  InvariantRecord odd;
  odd.euler = 9;
  odd.signature = -1;
  odd.hyperbolic = 0;
  odd.plus_one = 3;
  odd.minus_one = 4;
  odd.base_spin = Tri::Yes;
  ClassificationLabel l2 = classify_homeomorphism(BettiData{0, 7, 3, 4}, odd, kTrivial);
  CHECK(l2.label == "3 CP2 # 4 CP2bar");

  // Uncertified identification never labels.
  ClassificationLabel l3 = classify_homeomorphism(BettiData{0, 2, 1, 1}, even,
                                                  make_id(GroupIdentification::Tag::Unknown));
  CHECK(l3.label == "unclassified");
}

TEST_CASE("infinite-cyclic branch labels") {
  InvariantRecord rec;
  rec.euler = 8;
  rec.signature = 0;
  rec.hyperbolic = 3;
  rec.plus_one = 0;
  rec.minus_one = 0;
  rec.base_spin = Tri::Yes;
  ClassificationLabel l = classify_homeomorphism(BettiData{1, 6, 3, 3}, rec, kZ);
  CHECK(l.label == "3(S2xS2) # S3xS1");
  CHECK(l.basis == "Hambleton-Teichner");

  InvariantRecord flat;
  flat.euler = 0;
  flat.signature = 0;
  flat.hyperbolic = 0;
  flat.plus_one = 0;
  flat.minus_one = 0;
  flat.base_spin = Tri::Yes;
  CHECK(classify_homeomorphism(BettiData{1, 0, 0, 0}, flat, kZ).label == "S3xS1");
}

TEST_CASE("infinite-cyclic odd-form labels") {
  InvariantRecord rec;
  rec.euler = 5;
  rec.signature = -1;
  rec.hyperbolic = 0;
  rec.plus_one = 2;
  rec.minus_one = 3;
  rec.base_spin = Tri::Yes;
  ClassificationLabel l = classify_homeomorphism(BettiData{1, 5, 2, 3}, rec, kZ);
  CHECK(l.label == "2 CP2 # 3 CP2bar # S3xS1");
  auto [rec2, b2] = connected_sum_invariants(parse_label(l.label));
  CHECK(rec2.euler == 5);
  CHECK(rec2.signature == -1);
  CHECK(b2.b1 == 1);
}

TEST_CASE("lens-space-bundle branch labels") {
  InvariantRecord rec;
  rec.euler = 0;
  rec.signature = 0;
  rec.hyperbolic = 0;
  rec.plus_one = 0;
  rec.minus_one = 0;
  rec.base_spin = Tri::Yes;
  GroupIdentification z5z = make_id(GroupIdentification::Tag::FreeAbelianTimesCyclic, 5);
  CHECK(classify_homeomorphism(BettiData{1, 0, 0, 0}, rec, z5z).label == "LpxS1(5)");

  InvariantRecord blown = rec;
  blown.euler = 2;
  blown.signature = -2;
  *blown.minus_one += 2;
  CHECK(classify_homeomorphism(BettiData{1, 2, 0, 2}, blown, z5z).label ==
        "LpxS1(5) # 2 CP2bar");
}

TEST_CASE("classification labels round-trip through connected_sum_invariants") {
  struct Case {
    BettiData b;
    InvariantRecord rec;
    GroupIdentification g;
  };
  std::vector<Case> cases;
  InvariantRecord even;
  even.hyperbolic = 3;
  even.plus_one = 0;
  even.minus_one = 0;
  even.base_spin = Tri::Yes;
  even.euler = 8;
  even.signature = 0;
  cases.push_back({BettiData{0, 6, 3, 3}, even, kTrivial});
  InvariantRecord odd = even;
  odd.hyperbolic = 0;
  odd.plus_one = 3;
  odd.minus_one = 4;
  odd.euler = 9;
  odd.signature = -1;
  cases.push_back({BettiData{0, 7, 3, 4}, odd, kTrivial});
  InvariantRecord zrec = even;
  zrec.euler = 6;  // e = 2 - 2 b1 + b2 with b1 = 1
  cases.push_back({BettiData{1, 6, 3, 3}, zrec, kZ});

  for (const Case& c : cases) {
    ClassificationLabel label = classify_homeomorphism(c.b, c.rec, c.g);
    REQUIRE(label.classified());
    auto [rec2, b2] = connected_sum_invariants(parse_label(label.label));
    CHECK(rec2.euler == c.rec.euler);
    CHECK(rec2.signature == c.rec.signature);
    CHECK(b2.b1 == c.b.b1);
    CHECK(rec2.even_form() == c.rec.even_form());
  }
}

TEST_CASE("almost-complex parity rule") {
  CHECK(almost_complex_check(BettiData{0, 2, 1, 1}, kTrivial) == Tri::Yes);
  CHECK(almost_complex_check(BettiData{0, 4, 2, 2}, kTrivial) == Tri::No);
  CHECK(almost_complex_check(BettiData{1, 2, 1, 1}, kZ) == Tri::Unknown);
}

TEST_CASE("label parsing diagnostics") {
  CHECK(parse_label("3(S2xS2)").size() == 1);
  CHECK(parse_label("3 CP2 # 4 CP2bar").size() == 2);
  CHECK(parse_label("LpxS1(5) # 2 CP2bar").size() == 2);
  CHECK_THROWS_AS(parse_label(""), ParseError);
  CHECK_THROWS_AS(parse_label("3(E8)"), ParseError);
  CHECK_THROWS_AS(parse_label("S2xS2 S3xS1"), ParseError);
}

TEST_CASE("spin derivation from tracked summands") {
  InvariantRecord rec;
  rec.base_spin = Tri::Yes;
  rec.hyperbolic = 2;
  rec.plus_one = 0;
  rec.minus_one = 0;
  CHECK(rec.spin() == Tri::Yes);
  *rec.minus_one = 1;
  CHECK(rec.spin() == Tri::No);
  *rec.minus_one = 0;
  rec.base_spin = Tri::Unknown;
  CHECK(rec.spin() == Tri::Unknown);
  CHECK(rec.even_form() == Tri::Yes);  // counts known, no odd summands
}
