#include "gc4/invariants.hpp"

#include <cctype>

#include "gc4/error.hpp"

namespace gc4 {

std::string tri_to_string(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "yes";
    case Tri::No:
      return "no";
    case Tri::Unknown:
      return "unknown";
  }
  return "unknown";
}

Tri InvariantRecord::spin() const {
  if (plus_one && minus_one && (*plus_one > 0 || *minus_one > 0)) return Tri::No;
  return base_spin;
}

Tri InvariantRecord::even_form() const {
  if (spin() == Tri::Yes) return Tri::Yes;
  if (plus_one && minus_one) return (*plus_one > 0 || *minus_one > 0) ? Tri::No : Tri::Yes;
  return Tri::Unknown;
}

namespace {

struct PieceData {
  long long e, sigma, b1, hyperbolic, plus_one, minus_one;
};

PieceData piece_data(const Piece& p) {
  switch (p.kind) {
    case Piece::Kind::S2xS2:
      return {4, 0, 0, 1, 0, 0};
    case Piece::Kind::CP2:
      return {3, 1, 0, 0, 1, 0};
    case Piece::Kind::CP2bar:
      return {3, -1, 0, 0, 0, 1};
    case Piece::Kind::S3xS1:
      return {0, 0, 1, 0, 0, 0};
    case Piece::Kind::LpxS1:
      if (p.param < 1) throw ModelError("LpxS1 parameter must be >= 1");
      return {0, 0, 1, 0, 0, 0};
    case Piece::Kind::T2xS2:
      return {0, 0, 2, 1, 0, 0};
  }
  throw ModelError("unknown piece tag");
}

}  // namespace

std::pair<InvariantRecord, BettiData> connected_sum_invariants(const std::vector<Piece>& pieces) {
  long long k = 0;
  long long e = 0, sigma = 0, b1 = 0, hyp = 0, plus = 0, minus = 0;
  for (const Piece& p : pieces) {
    if (p.count < 0) throw ModelError("piece multiplicity must be nonnegative");
    PieceData d = piece_data(p);
    k += p.count;
    e += d.e * p.count;
    sigma += d.sigma * p.count;
    b1 += d.b1 * p.count;
    hyp += d.hyperbolic * p.count;
    plus += d.plus_one * p.count;
    minus += d.minus_one * p.count;
  }
  if (k == 0) throw ModelError("connected sum needs at least one piece");
  e -= 2 * (k - 1);

  InvariantRecord rec;
  rec.euler = e;
  rec.signature = sigma;
  rec.hyperbolic = hyp;
  rec.plus_one = plus;
  rec.minus_one = minus;
  rec.base_spin = Tri::Yes;  // every standard piece has spin No only via odd summands

  BettiData b;
  b.b1 = b1;
  b.b2 = 2 * hyp + plus + minus;
  b.b2_plus = hyp + plus;
  b.b2_minus = hyp + minus;
  return {rec, b};
}

std::vector<Piece> parse_label(std::string_view text) {
  std::vector<Piece> pieces;
  size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("label: " + msg, 1, static_cast<int>(pos) + 1);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_int = [&]() -> long long {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(std::string(text.substr(start, pos - start)));
  };
  auto parse_name = [&]() -> std::string {
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected piece name");
    return std::string(text.substr(start, pos - start));
  };

  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) fail("empty label");
      break;
    }
    if (!first) {
      if (text[pos] != '#') fail("expected '#'");
      ++pos;
      skip_ws();
    }
    first = false;

    long long count = 1;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      count = parse_int();
      skip_ws();
    }
    bool parenthesized = false;
    if (pos < text.size() && text[pos] == '(') {
      parenthesized = true;
      ++pos;
      skip_ws();
    }
    std::string name = parse_name();
    long long param = 0;
    if (!parenthesized && pos < text.size() && text[pos] == '(') {
      ++pos;
      param = parse_int();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
    }
    if (parenthesized) {
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
    }

    Piece piece;
    piece.count = count;
    piece.param = param;
    if (name == "S2xS2")
      piece.kind = Piece::Kind::S2xS2;
    else if (name == "CP2")
      piece.kind = Piece::Kind::CP2;
    else if (name == "CP2bar")
      piece.kind = Piece::Kind::CP2bar;
    else if (name == "S3xS1")
      piece.kind = Piece::Kind::S3xS1;
    else if (name == "LpxS1")
      piece.kind = Piece::Kind::LpxS1;
    else if (name == "T2xS2")
      piece.kind = Piece::Kind::T2xS2;
    else
      fail("unknown piece tag '" + name + "'");
    pieces.push_back(piece);
  }
  return pieces;
}

BettiData betti_from_euler(long long e, const AbelianInvariants& ab, long long sigma) {
  BettiData b;
  b.b1 = ab.rank;
  b.b2 = e - 2 + 2 * b.b1;
  if (b.b2 < 0)
    throw ModelError("betti_from_euler: b2 = " + std::to_string(b.b2) +
                     " is negative; inconsistent scenario data");
  if ((b.b2 + sigma) % 2 != 0 || std::abs(sigma) > b.b2)
    throw ModelError("betti_from_euler: signature " + std::to_string(sigma) +
                     " incompatible with b2 = " + std::to_string(b.b2));
  b.b2_plus = (b.b2 + sigma) / 2;
  b.b2_minus = (b.b2 - sigma) / 2;
  return b;
}

ClassificationLabel classify_homeomorphism(const BettiData& b, const InvariantRecord& rec,
                                           const GroupIdentification& g) {
  ClassificationLabel out;
  if (!g.certified()) return out;
  Tri even = rec.even_form();

  auto sum_text = [](long long count, const std::string& piece) {
    return std::to_string(count) + (piece == "S2xS2" ? "(S2xS2)" : " " + piece);
  };

  switch (g.tag) {
    case GroupIdentification::Tag::Trivial: {
      if (b.b1 != 0) return out;
      if (even == Tri::Yes && rec.signature == 0 && b.b2 >= 2 && b.b2 % 2 == 0) {
        out.label = sum_text(b.b2 / 2, "S2xS2");
        out.basis = "Freedman";
      } else if (even == Tri::No && b.b2_plus >= 0 && b.b2_minus >= 0 && b.b2 >= 1) {
        std::string label;
        if (b.b2_plus > 0) label = sum_text(b.b2_plus, "CP2");
        if (b.b2_minus > 0) {
          if (!label.empty()) label += " # ";
          label += sum_text(b.b2_minus, "CP2bar");
        }
        out.label = label;
        out.basis = "Freedman";
      }
      return out;
    }
    case GroupIdentification::Tag::FreeOfRank: {
      if (g.param != 1 || b.b1 != 1) return out;
      if (even == Tri::Yes && rec.signature == 0 && b.b2 % 2 == 0) {
        out.label = b.b2 == 0 ? "S3xS1" : sum_text(b.b2 / 2, "S2xS2") + " # S3xS1";
        out.basis = "Hambleton-Teichner";
      } else if (even == Tri::No && b.b2 >= 1) {
        std::string label;
        if (b.b2_plus > 0) label = sum_text(b.b2_plus, "CP2") + " # ";
        if (b.b2_minus > 0) label += sum_text(b.b2_minus, "CP2bar") + " # ";
        out.label = label + "S3xS1";
        out.basis = "Hambleton-Teichner";
      }
      return out;
    }
    case GroupIdentification::Tag::FreeAbelianTimesCyclic: {
      // Z/p + Z with negative definite tracked form: Lens space bundle
      // bookkeeping, L(p,1) x S1 blown up b2 times.
      if (g.param < 2 || b.b1 != 1) return out;
      if (b.b2_plus != 0) return out;
      std::string base = "LpxS1(" + std::to_string(g.param) + ")";
      out.label = b.b2_minus == 0 ? base : base + " # " + sum_text(b.b2_minus, "CP2bar");
      out.basis = "Kirby calculus";
      return out;
    }
    default:
      return out;
  }
}

Tri almost_complex_check(const BettiData& b, const GroupIdentification& g) {
  if (g.tag != GroupIdentification::Tag::Trivial) return Tri::Unknown;
  return (b.b2_plus % 2 != 0) ? Tri::Yes : Tri::No;
}

}  // namespace gc4
