#pragma once

// Score-sequence machinery: Landau feasibility, the (star)/(dagger)/(ddagger)
// condition family on the complement sequence r_i = n - s_i, the
// repeat-smoothing step that drives the induction toward the transitive
// sequence, enumeration, and a deterministic realizer.

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regtour/tournament.hpp"

namespace regtour {

/// Nondecreasing vector of nonnegative integers. Landau feasibility is a
/// separate predicate: sequences such as (0,0,3) are representable so that
/// infeasibility can be reported rather than made unconstructible.
class ScoreSequence {
 public:
  ScoreSequence() = default;

  explicit ScoreSequence(std::vector<int> values) : s_(std::move(values)) {
    for (std::size_t i = 0; i < s_.size(); ++i) {
      if (s_[i] < 0) throw std::invalid_argument("score sequence entry is negative");
      if (i > 0 && s_[i - 1] > s_[i])
        throw std::invalid_argument("score sequence is not nondecreasing");
    }
  }

  const std::vector<int>& values() const noexcept { return s_; }
  int size() const noexcept { return static_cast<int>(s_.size()); }
  int operator[](int i) const { return s_[static_cast<std::size_t>(i)]; }

  bool operator==(const ScoreSequence&) const = default;

 private:
  std::vector<int> s_;
};

inline ScoreSequence score_sequence(const Tournament& t) {
  std::vector<int> s(static_cast<std::size_t>(t.order()));
  for (int v = 0; v < t.order(); ++v) s[static_cast<std::size_t>(v)] = t.out_degree(v);
  std::sort(s.begin(), s.end());
  return ScoreSequence(std::move(s));
}

/// Complement sequence r_i = n - s_i; nonincreasing whenever S is a
/// score-shaped input, and 1 <= r_i <= n for genuine score sequences.
struct RSequence {
  std::vector<int> values;
};

inline RSequence r_of(const ScoreSequence& s) {
  const int n = s.size();
  RSequence r;
  r.values.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r.values.push_back(n - s[i]);
  return r;
}

/// Landau condition: every length-k prefix sums to at least k(k-1)/2, with
/// equality at k = n.
inline bool is_landau(const ScoreSequence& s) {
  const int n = s.size();
  long long prefix = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += s[k - 1];
    const long long bound = static_cast<long long>(k) * (k - 1) / 2;
    if (prefix < bound) return false;
    if (k == n && prefix != bound) return false;
  }
  return true;
}

struct ConditionFlags {
  bool star = false;     // sum_{i<=k} r_i <= nk - C(k,2) for all k
  bool dagger = false;   // sum_{i<=k} r_i <= sum_i min(r_i, k) for all k
  bool ddagger = false;  // nk - C(k,2) <= sum_i min(r_i, k) for all k
};

inline ConditionFlags evaluate_conditions(const ScoreSequence& s) {
  const int n = s.size();
  const auto r = r_of(s).values;
  ConditionFlags f{true, true, true};
  long long prefix = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += r[static_cast<std::size_t>(k - 1)];
    const long long linear = static_cast<long long>(n) * k - static_cast<long long>(k) * (k - 1) / 2;
    long long capped = 0;
    for (int x : r) capped += std::min(x, k);
    if (prefix > linear) f.star = false;
    if (prefix > capped) f.dagger = false;
    if (linear > capped) f.ddagger = false;
  }
  return f;
}

/// One smoothing step: decrement the first entry of the leftmost repeated
/// block, increment its last entry. `raw` is the positional result, left
/// unsorted on purpose; `monotone` records whether it is still nondecreasing.
struct GriggsReidStep {
  int repeat_index = -1;  // leftmost index i with s_i = s_{i+1}
  int multiplicity = 0;   // occurrences of that repeated value
  std::vector<int> raw;
  bool monotone = true;

  ScoreSequence canonical() const {
    auto sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    return ScoreSequence(std::move(sorted));
  }
};

inline GriggsReidStep griggs_reid_step(const ScoreSequence& s) {
  if (!is_landau(s)) throw std::invalid_argument("griggs_reid_step: sequence is not Landau-feasible");
  const int n = s.size();
  int t = -1;
  for (int i = 0; i + 1 < n; ++i) {
    if (s[i] == s[i + 1]) {
      t = i;
      break;
    }
  }
  if (t < 0)
    throw std::invalid_argument("griggs_reid_step: transitive sequence has no repeated entry");
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (s[i] == s[t]) ++m;
  GriggsReidStep step;
  step.repeat_index = t;
  step.multiplicity = m;
  step.raw = s.values();
  step.raw[static_cast<std::size_t>(t)] -= 1;
  step.raw[static_cast<std::size_t>(t + m - 1)] += 1;
  for (std::size_t i = 0; i + 1 < step.raw.size(); ++i)
    if (step.raw[i] > step.raw[i + 1]) step.monotone = false;
  return step;
}

/// Reverse-lexicographic order: the largest differing index decides.
inline std::strong_ordering prec(const ScoreSequence& a, const ScoreSequence& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("prec: sequences have different lengths");
  for (int i = a.size() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace detail {

inline void enumerate_scores_rec(int n, long long total, std::vector<int>& acc, long long prefix,
                                 std::vector<ScoreSequence>& out) {
  const int pos = static_cast<int>(acc.size());
  if (pos == n) {
    if (prefix == total) out.emplace_back(acc);
    return;
  }
  const int lo = pos == 0 ? 0 : acc.back();
  const int remaining = n - pos - 1;
  for (int v = lo; v <= n - 1; ++v) {
    const long long p = prefix + v;
    // Landau prefix bound at k = pos+1.
    if (p < static_cast<long long>(pos + 1) * pos / 2) continue;
    // The suffix is nondecreasing from v and capped at n-1.
    if (p + static_cast<long long>(remaining) * v > total) break;
    if (p + static_cast<long long>(remaining) * (n - 1) < total) continue;
    acc.push_back(v);
    enumerate_scores_rec(n, total, acc, p, out);
    acc.pop_back();
  }
}

}  // namespace detail

/// Every Landau-feasible score sequence of length n, each exactly once,
/// ascending in the `prec` order.
inline std::vector<ScoreSequence> enumerate_scores(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_scores: order must be >= 1");
  std::vector<ScoreSequence> out;
  std::vector<int> acc;
  acc.reserve(static_cast<std::size_t>(n));
  detail::enumerate_scores_rec(n, static_cast<long long>(n) * (n - 1) / 2, acc, 0, out);
  std::sort(out.begin(), out.end(), [](const ScoreSequence& a, const ScoreSequence& b) {
    return prec(a, b) == std::strong_ordering::less;
  });
  return out;
}

namespace detail {

// Exhaustive fallback: orient pairs in lexicographic order, pruning on the
// remaining out-demand of each vertex. slots[v] counts undecided pairs
// incident to v; a vertex can never owe more out-arcs than that.
inline bool realize_backtrack(std::vector<int>& rem, std::vector<int>& slots,
                              const std::vector<std::pair<int, int>>& pairs,
                              std::vector<char>& orient, std::size_t idx) {
  if (idx == pairs.size()) return true;
  const auto [i, j] = pairs[idx];
  slots[static_cast<std::size_t>(i)] -= 1;
  slots[static_cast<std::size_t>(j)] -= 1;
  for (int winner : {i, j}) {
    const int loser = winner ^ i ^ j;
    if (rem[static_cast<std::size_t>(winner)] == 0) continue;
    rem[static_cast<std::size_t>(winner)] -= 1;
    if (rem[static_cast<std::size_t>(winner)] <= slots[static_cast<std::size_t>(winner)] &&
        rem[static_cast<std::size_t>(loser)] <= slots[static_cast<std::size_t>(loser)]) {
      orient[idx] = winner == i ? 1 : 2;
      if (realize_backtrack(rem, slots, pairs, orient, idx + 1)) {
        slots[static_cast<std::size_t>(i)] += 1;
        slots[static_cast<std::size_t>(j)] += 1;
        return true;
      }
    }
    rem[static_cast<std::size_t>(winner)] += 1;
  }
  slots[static_cast<std::size_t>(i)] += 1;
  slots[static_cast<std::size_t>(j)] += 1;
  return false;
}

}  // namespace detail

/// Deterministic tournament with out_degree(vertex i) = s_i. Greedy: the
/// vertex with the largest remaining score beats the lowest-scored remaining
/// opponents; every output is validated against S before being returned.
inline Tournament realize(const ScoreSequence& s) {
  if (!is_landau(s)) throw std::invalid_argument("realize: sequence is not Landau-feasible");
  const int n = s.size();
  std::vector<std::pair<int, int>> arcs;  // (winner, loser)
  arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  // items stay sorted by (remaining score, vertex id)
  std::vector<std::pair<int, int>> items;  // (remaining, id)
  for (int i = 0; i < n; ++i) items.emplace_back(s[i], i);
  bool greedy_ok = true;
  while (!items.empty() && greedy_ok) {
    auto [score, v] = items.back();
    items.pop_back();
    if (score > static_cast<int>(items.size())) {
      greedy_ok = false;
      break;
    }
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (static_cast<int>(k) < score) {
        arcs.emplace_back(v, items[k].second);
      } else {
        arcs.emplace_back(items[k].second, v);
        items[k].first -= 1;
        if (items[k].first < 0) greedy_ok = false;
      }
    }
    std::sort(items.begin(), items.end());
  }
  Tournament t;
  if (greedy_ok) {
    t = Tournament::from_edges(n, arcs);
    for (int i = 0; i < n; ++i)
      if (t.out_degree(i) != s[i]) greedy_ok = false;
  }
  if (!greedy_ok) {
    // Full backtracking fallback; reaching it is unexpected but tolerated.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<int> rem = s.values();
    std::vector<int> slots(static_cast<std::size_t>(n), n - 1);
    std::vector<char> orient(pairs.size(), 0);
    if (!detail::realize_backtrack(rem, slots, pairs, orient, 0))
      throw std::logic_error("realize: no tournament found for a Landau-feasible sequence");
    TournamentBuilder b(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      orient[k] == 1 ? b.arc(pairs[k].first, pairs[k].second)
                     : b.arc(pairs[k].second, pairs[k].first);
    t = b.finish();
  }
  if (!(score_sequence(t) == s))
    throw std::logic_error("realize: constructed tournament does not match the requested scores");
  return t;
}

}  // namespace regtour
