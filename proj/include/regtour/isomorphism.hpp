#pragma once

// Backtracking tournament isomorphism for small orders, plus the Type-I /
// Type-II certification built on top of it. No canonical-form machinery:
// instances here are tiny and the search must be deterministic.

#include <optional>
#include <vector>

#include "regtour/tournament.hpp"

namespace regtour {

struct IsoWitness {
  std::vector<int> map;  // map[i] = image of vertex i in the target
};

namespace detail {

// Per-vertex invariant used for pruning: out-degree plus the sorted
// out-degree multisets of the out- and in-neighbourhoods.
struct VertexSignature {
  int out = 0;
  std::vector<int> out_scores;
  std::vector<int> in_scores;
  bool operator==(const VertexSignature&) const = default;
};

inline std::vector<VertexSignature> signatures(const Tournament& t) {
  const int n = t.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = t.out_degree(v);
  std::vector<VertexSignature> sig(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& s = sig[static_cast<std::size_t>(v)];
    s.out = deg[static_cast<std::size_t>(v)];
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      (t.arc(v, u) ? s.out_scores : s.in_scores).push_back(deg[static_cast<std::size_t>(u)]);
    }
    std::sort(s.out_scores.begin(), s.out_scores.end());
    std::sort(s.in_scores.begin(), s.in_scores.end());
  }
  return sig;
}

inline bool extend(const Tournament& a, const Tournament& b,
                   const std::vector<VertexSignature>& sa,
                   const std::vector<VertexSignature>& sb, std::vector<int>& map,
                   std::vector<char>& used, int pos) {
  const int n = a.order();
  if (pos == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[static_cast<std::size_t>(cand)]) continue;
    if (!(sa[static_cast<std::size_t>(pos)] == sb[static_cast<std::size_t>(cand)])) continue;
    bool ok = true;
    for (int prev = 0; prev < pos; ++prev) {
      if (a.arc(prev, pos) != b.arc(map[static_cast<std::size_t>(prev)], cand)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(pos)] = cand;
    used[static_cast<std::size_t>(cand)] = 1;
    if (extend(a, b, sa, sb, map, used, pos + 1)) return true;
    used[static_cast<std::size_t>(cand)] = 0;
  }
  return false;
}

}  // namespace detail

/// Edge-preserving bijection from `a` onto `b`, or nullopt. Deterministic:
/// candidates are tried in ascending label order, so the first hit is the
/// lexicographically least witness.
inline std::optional<IsoWitness> are_isomorphic(const Tournament& a, const Tournament& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  if (a == b) {
    // The identity is edge-preserving and lexicographically least.
    IsoWitness w;
    w.map.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w.map[static_cast<std::size_t>(i)] = i;
    return w;
  }
  auto sa = detail::signatures(a);
  auto sb = detail::signatures(b);
  auto sorted_sa = sa, sorted_sb = sb;
  auto by_sig = [](const detail::VertexSignature& x, const detail::VertexSignature& y) {
    if (x.out != y.out) return x.out < y.out;
    if (x.out_scores != y.out_scores) return x.out_scores < y.out_scores;
    return x.in_scores < y.in_scores;
  };
  std::sort(sorted_sa.begin(), sorted_sa.end(), by_sig);
  std::sort(sorted_sb.begin(), sorted_sb.end(), by_sig);
  if (sorted_sa != sorted_sb) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  if (!detail::extend(a, b, sa, sb, map, used, 0)) return std::nullopt;
  return IsoWitness{std::move(map)};
}

enum class TypeKind { type1, type2 };

struct TypeWitness {
  int vertex = -1;
  TypeKind kind = TypeKind::type1;
  // Local-label map from the subtournament induced on Ind(vertex) onto the
  // one induced on Out(vertex) (type1) or onto its inversion (type2).
  IsoWitness iso;
};

/// Checks the type condition at one distinguished vertex of a regular
/// tournament: Ind(v) against Out(v) for type1, Ind(v) against the inversion
/// of Out(v) for type2.
inline std::optional<TypeWitness> certify_type_at(const Tournament& t, TypeKind kind, int v) {
  if (!is_regular(t)) throw std::invalid_argument("certify_type requires a regular tournament");
  if (v < 0 || v >= t.order())
    throw std::out_of_range("certify vertex out of range: " + std::to_string(v));
  Tournament ins = induced(t, t.in_set(v)).sub;
  Tournament outs = induced(t, t.out_set(v)).sub;
  if (kind == TypeKind::type2) outs = invert(outs);
  if (auto iso = are_isomorphic(ins, outs)) return TypeWitness{v, kind, std::move(*iso)};
  return std::nullopt;
}

/// Scans vertices in label order and returns the first witness, or nullopt.
inline std::optional<TypeWitness> certify_type(const Tournament& t, TypeKind kind) {
  if (!is_regular(t)) throw std::invalid_argument("certify_type requires a regular tournament");
  for (int v = 0; v < t.order(); ++v)
    if (auto w = certify_type_at(t, kind, v)) return w;
  return std::nullopt;
}

}  // namespace regtour
