#include "gc4/identify.hpp"

#include <algorithm>

namespace gc4 {

namespace {

bool letters_all_unit(const FreeWord& w) {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [](const Letter& l) { return l.exp == 1 || l.exp == -1; });
}

/// Checks that `ls` is [x1,y1][x2,y2]...[xg,yg] with all blocks over
/// pairwise-distinct generators covering 0..2g-1.
bool is_commutator_chain(const std::vector<Letter>& ls, int ngens) {
  size_t blocks = ls.size() / 4;
  if (blocks * 4 != ls.size() || static_cast<int>(blocks * 2) != ngens) return false;
  std::vector<int> used(static_cast<size_t>(ngens), 0);
  for (size_t b = 0; b < blocks; ++b) {
    const Letter& u = ls[4 * b];
    const Letter& v = ls[4 * b + 1];
    const Letter& ui = ls[4 * b + 2];
    const Letter& vi = ls[4 * b + 3];
    if (u.gen == v.gen) return false;
    if (ui.gen != u.gen || ui.exp != -u.exp) return false;
    if (vi.gen != v.gen || vi.exp != -v.exp) return false;
    if (u.gen >= ngens || v.gen >= ngens) return false;
    ++used[static_cast<size_t>(u.gen)];
    ++used[static_cast<size_t>(v.gen)];
  }
  return std::all_of(used.begin(), used.end(), [](int c) { return c == 1; });
}

bool matches_commutator_chain(const FreeWord& w, int ngens) {
  if (!letters_all_unit(w)) return false;
  for (const FreeWord& base : {w, w.inverse()}) {
    std::vector<Letter> ls = base.letters();
    for (size_t rot = 0; rot < ls.size(); ++rot) {
      if (is_commutator_chain(ls, ngens)) return true;
      std::rotate(ls.begin(), ls.begin() + 1, ls.end());
    }
    if (ls.empty()) break;
  }
  return false;
}

long long product_of(const std::vector<long long>& v) {
  long long p = 1;
  for (long long x : v) p *= x;
  return p;
}

std::string coset_evidence(const CosetOutcome& tc, long long bound) {
  if (tc.closed())
    return "coset enumeration over trivial subgroup: closed at index " +
           std::to_string(*tc.index) + " (" + std::to_string(tc.cosets_defined) +
           " cosets defined, bound " + std::to_string(bound) + ")";
  return "coset enumeration over trivial subgroup: overflow at bound " + std::to_string(bound);
}

}  // namespace

int surface_relator_genus(const Presentation& p) {
  if (p.relators().size() != 1 || p.ngens() < 4 || p.ngens() % 2 != 0) return 0;
  if (matches_commutator_chain(p.relators()[0], p.ngens())) return p.ngens() / 2;
  return 0;
}

std::string GroupIdentification::to_string() const {
  switch (tag) {
    case Tag::Unknown:
      return "unknown";
    case Tag::Trivial:
      return "trivial";
    case Tag::FiniteCyclic:
      return "Z/" + std::to_string(param);
    case Tag::FreeAbelianTimesCyclic:
      return param == 0 ? "Z^2" : "Z/" + std::to_string(param) + " + Z";
    case Tag::FreeOfRank:
      return param == 1 ? "Z" : "F_" + std::to_string(param);
    case Tag::SurfaceGroup:
      return "Sigma_" + std::to_string(param);
  }
  return "unknown";
}

GroupIdentification identify_group(const Presentation& p, const Budgets& budgets) {
  GroupIdentification id;

  SimplifyResult simp = simplify_presentation(p, budgets.tietze_budget, budgets.relator_cap);
  const Presentation& sp = simp.presentation;
  id.evidence.push_back("tietze: " + std::to_string(simp.moves_used) + " moves, reduced to " +
                        std::to_string(sp.ngens()) + " generators / " +
                        std::to_string(sp.relators().size()) + " relators");
  if (simp.budget_exhausted) id.evidence.push_back("tietze: budget exhausted");

  auto certify = [&](GroupIdentification::Tag tag, long long param, const std::string& how) {
    id.tag = tag;
    id.param = param;
    id.evidence.push_back(how);
  };

  if (sp.ngens() == 0) {
    // The reduction proves triviality, but the trivial tag is certified by a
    // closed coset table on the input presentation; the reduction is the
    // cross-check. A budget too small to close the table is inconclusive.
    CosetOutcome tc = enumerate_cosets(p, {}, budgets.max_cosets);
    id.evidence.insert(id.evidence.begin(), coset_evidence(tc, budgets.max_cosets));
    if (tc.closed() && *tc.index == 1) {
      certify(GroupIdentification::Tag::Trivial, 0,
              "cross-check: tietze-reduced to the empty presentation");
    } else {
      id.evidence.push_back(
          "simplifier reached the empty presentation; the trivial tag still needs a "
          "closed coset table");
    }
    return id;
  }
  if (sp.relators().empty()) {
    certify(GroupIdentification::Tag::FreeOfRank, sp.ngens(),
            "matched standard form: free of rank " + std::to_string(sp.ngens()));
  } else if (sp.ngens() == 1 && sp.relators().size() == 1 &&
             sp.relators()[0].letters().size() == 1 &&
             std::abs(sp.relators()[0].letters()[0].exp) >= 2) {
    long long n = std::abs(static_cast<long long>(sp.relators()[0].letters()[0].exp));
    certify(GroupIdentification::Tag::FiniteCyclic, n,
            "matched standard form: cyclic of order " + std::to_string(n));
  } else if (sp.ngens() == 2 && sp.relators().size() == 1 &&
             matches_commutator_chain(sp.relators()[0], 2)) {
    certify(GroupIdentification::Tag::FreeAbelianTimesCyclic, 0,
            "matched standard form: [x, y] on two generators (Z + Z)");
  } else if (int genus = surface_relator_genus(sp); genus >= 2) {
    certify(GroupIdentification::Tag::SurfaceGroup, genus,
            "matched standard form: genus-" + std::to_string(genus) + " surface relator");
  } else if (sp.ngens() == 2 && sp.relators().size() == 2) {
    // <x, a | x^p, [x, a]> in either relator order.
    for (int which = 0; which < 2 && !id.certified(); ++which) {
      const FreeWord& power = sp.relators()[static_cast<size_t>(which)];
      const FreeWord& comm = sp.relators()[static_cast<size_t>(1 - which)];
      if (power.letters().size() != 1) continue;
      long long n = std::abs(static_cast<long long>(power.letters()[0].exp));
      if (n < 2) continue;
      if (!matches_commutator_chain(comm, 2)) continue;
      certify(GroupIdentification::Tag::FreeAbelianTimesCyclic, n,
              "matched standard form: <x, a | x^" + std::to_string(n) + ", [x, a]>");
    }
  }

  if (id.certified()) return id;

  AbelianInvariants ab = abelianize(sp);
  id.evidence.push_back("abelianization: " + ab.to_string());

  CosetOutcome tc = enumerate_cosets(sp, {}, budgets.max_cosets);
  id.evidence.push_back(coset_evidence(tc, budgets.max_cosets));
  if (tc.closed()) {
    long long order = *tc.index;
    if (order == 1) {
      certify(GroupIdentification::Tag::Trivial, 0, "coset table closed at index 1");
    } else if (ab.rank == 0 && product_of(ab.torsion) == order) {
      // |G| = |H1(G)| forces the commutator subgroup to vanish.
      if (ab.torsion.size() == 1) {
        certify(GroupIdentification::Tag::FiniteCyclic, ab.torsion[0],
                "finite of order " + std::to_string(order) + " with cyclic abelianization");
      } else {
        id.evidence.push_back("finite abelian of order " + std::to_string(order) +
                              ", no matching tag");
      }
    } else {
      id.evidence.push_back("finite of order " + std::to_string(order) +
                            ", structure not certified");
    }
  }
  return id;
}

}  // namespace gc4
