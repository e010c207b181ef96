#include "gc4/coset.hpp"

#include <deque>

#include "gc4/error.hpp"

namespace gc4 {

namespace {

constexpr int kUndefined = -1;

// Coset table with union-find coincidence handling, following the classic
// HLT scheme with lookahead and compaction (Holt, Handbook of Computational
// Group Theory, ch. 5). max_cosets bounds the physical table: rows are
// reclaimed only by the compaction that follows a productive lookahead.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<FreeWord>& subgroup_gens,
             long long max_cosets)
      : nletters_(2 * p.ngens()), max_cosets_(max_cosets) {
    if (max_cosets < 1) throw Error("enumerate_cosets: max-cosets must be >= 1");
    for (const FreeWord& r : p.relators()) {
      std::vector<int> flat = r.flatten();
      if (!flat.empty()) relators_.push_back(std::move(flat));
    }
    for (const FreeWord& w : subgroup_gens) {
      std::vector<int> flat = w.flatten();
      if (!flat.empty()) subgens_.push_back(std::move(flat));
    }
    new_coset();
  }

  CosetOutcome run() {
    CosetOutcome out;
    for (const auto& w : subgens_) {
      if (!scan_and_fill(0, w)) return overflowed(out);
      process_coincidences();
    }
    // Sweep until a full pass leaves the table untouched: the final clean
    // pass certifies closure (complete rows, every relator cycle satisfied).
    // A sweep that runs out of room gets one rescue attempt at a time:
    // lookahead for coincidences, then compaction; an unproductive lookahead
    // spends the rescue budget for good.
    while (true) {
      unsigned long long before = mutations_;
      if (!sweep()) {
        if (lookahead_spent_) return overflowed(out);
        long long live_before = live_count_;
        lookahead();
        if ((live_before - live_count_) * 20 < max_cosets_) lookahead_spent_ = true;
        compact();
        if (table_full()) return overflowed(out);
        continue;
      }
      if (mutations_ == before) break;
    }
    out.index = live_count_;
    out.cosets_defined = defined_total_;
    return out;
  }

 private:
  static int inv(int letter) { return letter ^ 1; }

  bool alive(int c) const { return parent_[static_cast<size_t>(c)] == c; }
  bool table_full() const { return static_cast<long long>(parent_.size()) >= max_cosets_; }

  int rep(int c) {
    while (parent_[static_cast<size_t>(c)] != c) {
      parent_[static_cast<size_t>(c)] =
          parent_[static_cast<size_t>(parent_[static_cast<size_t>(c)])];
      c = parent_[static_cast<size_t>(c)];
    }
    return c;
  }

  int& entry(int c, int l) { return table_[static_cast<size_t>(c) * nletters_ + l]; }

  void install(int c, int l, int d) {
    entry(c, l) = d;
    entry(d, inv(l)) = c;
    ++mutations_;
  }

  int new_coset() {
    table_.resize(table_.size() + static_cast<size_t>(nletters_), kUndefined);
    parent_.push_back(static_cast<int>(parent_.size()));
    ++live_count_;
    ++defined_total_;
    ++mutations_;
    return static_cast<int>(parent_.size()) - 1;
  }

  bool sweep() {
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      if (!alive(c)) continue;
      for (const auto& r : relators_) {
        if (!scan_and_fill(c, r)) return false;
        process_coincidences();
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      // A closed table is complete: every letter acts on every live coset.
      for (int l = 0; l < nletters_; ++l) {
        if (entry(c, l) != kUndefined) continue;
        if (table_full()) return false;
        install(c, l, new_coset());
      }
    }
    return true;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
    --live_count_;
    ++mutations_;
    dead_queue_.push_back(b);
  }

  void process_coincidences() {
    while (!dead_queue_.empty()) {
      int t = dead_queue_.front();
      dead_queue_.pop_front();
      for (int l = 0; l < nletters_; ++l) {
        int d = entry(t, l);
        if (d == kUndefined) continue;
        entry(t, l) = kUndefined;
        if (entry(d, inv(l)) == t) entry(d, inv(l)) = kUndefined;
        int mu = rep(t);
        int nu = rep(d);
        int forward = entry(mu, l);
        if (forward != kUndefined) {
          merge(forward, nu);
        } else {
          int backward = entry(nu, inv(l));
          if (backward != kUndefined) {
            merge(backward, mu);
          } else {
            install(mu, l, nu);
          }
        }
      }
    }
  }

  // Scans word w from coset c, defining cosets to force closure. Returns
  // false when the table is out of room.
  bool scan_and_fill(int c, const std::vector<int>& w) {
    size_t i = 0;
    size_t j = w.size();
    int f = rep(c);
    int b = f;
    while (true) {
      while (i < j && entry(f, w[i]) != kUndefined) {
        f = rep(entry(f, w[i]));
        ++i;
      }
      if (i == j) {
        if (f != b) merge(f, b);
        return true;
      }
      while (j > i && entry(b, inv(w[j - 1])) != kUndefined) {
        b = rep(entry(b, inv(w[j - 1])));
        --j;
      }
      if (j == i) {
        if (f != b) merge(f, b);
        return true;
      }
      if (j == i + 1) {
        install(f, w[i], b);
        return true;
      }
      if (table_full()) return false;
      install(f, w[i], new_coset());
    }
  }

  // Scans every live coset against every relator, writing nothing: only
  // coincidences (completed cycles arriving at two different cosets) are
  // collected. The space they free is what a stuck HLT run is after.
  void lookahead() {
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      if (!alive(c)) continue;
      for (const auto& w : relators_) {
        scan_no_fill(c, w);
        process_coincidences();
        if (!alive(c)) break;
      }
    }
  }

  void scan_no_fill(int c, const std::vector<int>& w) {
    size_t i = 0;
    size_t j = w.size();
    int f = rep(c);
    int b = f;
    while (i < j && entry(f, w[i]) != kUndefined) {
      f = rep(entry(f, w[i]));
      ++i;
    }
    while (j > i && entry(b, inv(w[j - 1])) != kUndefined) {
      b = rep(entry(b, inv(w[j - 1])));
      --j;
    }
    if (j == i && f != b) merge(f, b);
  }

  // Renumbers live cosets onto the front rows, reclaiming dead ones. Must
  // only run with the coincidence queue drained; coset 0 keeps its seat.
  void compact() {
    std::vector<int> newid(parent_.size(), kUndefined);
    int next = 0;
    for (size_t c = 0; c < parent_.size(); ++c)
      if (alive(static_cast<int>(c))) newid[c] = next++;
    std::vector<int> fresh(static_cast<size_t>(next) * nletters_, kUndefined);
    for (size_t c = 0; c < parent_.size(); ++c) {
      if (newid[c] == kUndefined) continue;
      for (int l = 0; l < nletters_; ++l) {
        int e = entry(static_cast<int>(c), l);
        if (e != kUndefined)
          fresh[static_cast<size_t>(newid[c]) * nletters_ + l] =
              newid[static_cast<size_t>(rep(e))];
      }
    }
    table_ = std::move(fresh);
    parent_.resize(static_cast<size_t>(next));
    for (int c = 0; c < next; ++c) parent_[static_cast<size_t>(c)] = c;
  }

  CosetOutcome overflowed(CosetOutcome out) const {
    out.overflow = true;
    out.cosets_defined = defined_total_;
    return out;
  }

  int nletters_;
  long long max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgens_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::deque<int> dead_queue_;
  long long live_count_ = 0;
  long long defined_total_ = 0;
  unsigned long long mutations_ = 0;
  bool lookahead_spent_ = false;
};

}  // namespace

CosetOutcome enumerate_cosets(const Presentation& p, const std::vector<FreeWord>& subgroup_gens,
                              long long max_cosets) {
  for (const FreeWord& w : subgroup_gens) {
    if (w.max_gen() >= p.ngens())
      throw ModelError("subgroup generator references an unknown generator");
  }
  if (p.ngens() == 0) {
    CosetOutcome out;
    out.index = 1;
    out.cosets_defined = 1;
    return out;
  }
  Enumerator e(p, subgroup_gens, max_cosets);
  return e.run();
}

}  // namespace gc4
