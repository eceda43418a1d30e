#pragma once

// Dense bitset-backed tournament digraph. Row i holds the out-neighbourhood
// of vertex i, one bit per vertex, so an arc test is a single word probe and
// degree counts are popcounts.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace regtour {

struct DegreeTriple {
  int in = 0;
  int out = 0;
  int charge = 0;  // in - out
};

class Tournament;

/// Incremental builder used by the extension constructions: orient pairs one
/// at a time, then finish() verifies that exactly one orientation was chosen
/// for every pair of distinct vertices.
class TournamentBuilder {
 public:
  explicit TournamentBuilder(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("tournament order must be nonnegative");
    words_ = static_cast<std::size_t>((n + 63) / 64);
    rows_.assign(words_ * static_cast<std::size_t>(n), 0);
  }

  int order() const noexcept { return n_; }

  bool has_arc(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
            (v & 63)) & 1u;
  }

  /// Adds u -> v. Throws with a distinct diagnostic on out-of-range labels,
  /// self-loops, repeated arcs, and arcs opposing an existing orientation.
  void arc(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::out_of_range("vertex label out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") in order-" + std::to_string(n_) +
                              " tournament");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_arc(u, v))
      throw std::invalid_argument("duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
    if (has_arc(v, u))
      throw std::invalid_argument("conflicting orientation for pair {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}: " + std::to_string(v) + "->" +
                                  std::to_string(u) + " already present");
    rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |=
        std::uint64_t{1} << (v & 63);
  }

  Tournament finish();

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  friend class Tournament;
};

class Tournament {
 public:
  Tournament() = default;

  /// Validating constructor from an explicit arc list; the arc set must cover
  /// every unordered pair exactly once.
  static Tournament from_edges(int n, const std::vector<std::pair<int, int>>& arcs) {
    TournamentBuilder b(n);
    for (const auto& [u, v] : arcs) b.arc(u, v);
    return b.finish();
  }

  int order() const noexcept { return n_; }

  /// True iff the arc u -> v is present. Unchecked.
  bool arc(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >>
            (v & 63)) & 1u;
  }

  int out_degree(int v) const {
    const std::uint64_t* row = rows_.data() + static_cast<std::size_t>(v) * words_;
    int c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(row[w]);
    return c;
  }

  // Totality makes the in-degree the complement of the out-degree.
  int in_degree(int v) const { return n_ - 1 - out_degree(v); }

  int charge(int v) const { return in_degree(v) - out_degree(v); }

  std::vector<int> out_set(int v) const {
    std::vector<int> r;
    for (int u = 0; u < n_; ++u)
      if (arc(v, u)) r.push_back(u);
    return r;
  }

  std::vector<int> in_set(int v) const {
    std::vector<int> r;
    for (int u = 0; u < n_; ++u)
      if (arc(u, v)) r.push_back(u);
    return r;
  }

  /// All arcs, one per pair, ordered by (min label, max label).
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        e.emplace_back(arc(i, j) ? std::make_pair(i, j) : std::make_pair(j, i));
    return e;
  }

  std::vector<std::vector<int>> adjacency_matrix() const {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n_),
                                    std::vector<int>(static_cast<std::size_t>(n_), 0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (arc(i, j)) m[i][j] = 1;
    return m;
  }

  bool operator==(const Tournament& o) const noexcept { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  friend class TournamentBuilder;
};

inline Tournament TournamentBuilder::finish() {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!has_arc(i, j) && !has_arc(j, i))
        throw std::invalid_argument("missing edge between " + std::to_string(i) + " and " +
                                    std::to_string(j));
  Tournament t;
  t.n_ = n_;
  t.words_ = words_;
  t.rows_ = rows_;
  return t;
}

inline DegreeTriple degrees(const Tournament& t, int v) {
  if (v < 0 || v >= t.order())
    throw std::out_of_range("vertex label out of range: " + std::to_string(v));
  DegreeTriple d;
  d.out = t.out_degree(v);
  d.in = t.in_degree(v);
  d.charge = d.in - d.out;
  return d;
}

inline bool is_regular(const Tournament& t) {
  for (int v = 0; v < t.order(); ++v)
    if (t.charge(v) != 0) return false;
  return true;  // vacuously true at order 0
}

inline Tournament invert(const Tournament& t) {
  TournamentBuilder b(t.order());
  for (int i = 0; i < t.order(); ++i)
    for (int j = i + 1; j < t.order(); ++j)
      t.arc(i, j) ? b.arc(j, i) : b.arc(i, j);
  return b.finish();
}

struct InducedSubtournament {
  Tournament sub;
  std::vector<int> old_to_new;  // size order(T), -1 where the vertex was dropped
};

/// Subtournament induced on `vertices`; new labels follow ascending old labels.
inline InducedSubtournament induced(const Tournament& t, std::vector<int> vertices) {
  for (int v : vertices)
    if (v < 0 || v >= t.order())
      throw std::out_of_range("induced subset member out of range: " + std::to_string(v));
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  InducedSubtournament r;
  r.old_to_new.assign(static_cast<std::size_t>(t.order()), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k)
    r.old_to_new[static_cast<std::size_t>(vertices[k])] = static_cast<int>(k);
  TournamentBuilder b(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t c = a + 1; c < vertices.size(); ++c)
      t.arc(vertices[a], vertices[c]) ? b.arc(static_cast<int>(a), static_cast<int>(c))
                                      : b.arc(static_cast<int>(c), static_cast<int>(a));
  r.sub = b.finish();
  return r;
}

/// True iff M + M^T = J - I, i.e. M is the adjacency matrix of a tournament.
/// Throws on non-square or non-binary input.
inline bool validate_tournament_matrix(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
    for (int x : row)
      if (x != 0 && x != 1) throw std::invalid_argument("matrix entry outside {0,1}");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int want = i == j ? 0 : 1;
      if (m[i][j] + m[j][i] != want) return false;
    }
  return true;
}

/// Copy of t with vertex i renamed to perm[i]; perm must be a bijection on
/// the labels.
inline Tournament relabel(const Tournament& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.order())
    throw std::invalid_argument("relabel: permutation length does not match the order");
  TournamentBuilder b(t.order());
  for (const auto& [u, v] : t.edges())
    b.arc(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return b.finish();
}

/// Transitive tournament where vertex u beats every smaller label, so the
/// out-degree of vertex i is exactly i.
inline Tournament transitive_tournament(int n) {
  TournamentBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < u; ++v) b.arc(u, v);
  return b.finish();
}

}  // namespace regtour
