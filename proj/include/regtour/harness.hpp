#pragma once

// Exhaustive enumeration of labeled tournaments, brute-force oracles,
// extension verification, the greedy-conjecture sweep over score sequences,
// and the property-suite runner. Sweeps are deterministic: parallel shards
// merge in unit order and failure lists are sorted, so repeated runs emit
// byte-identical reports (timing is kept out of the canonical JSON form).

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "regtour/constructions.hpp"
#include "regtour/gale_ryser.hpp"
#include "regtour/io.hpp"
#include "regtour/isomorphism.hpp"
#include "regtour/score_sequence.hpp"
#include "regtour/tournament.hpp"

namespace regtour {

struct VerificationFailure {
  std::string construction;
  std::string property;
  std::string detail;
  std::string input;
  auto operator<=>(const VerificationFailure&) const = default;
};

struct VerificationReport {
  std::string scope;
  std::uint64_t instances = 0;
  std::uint64_t failure_count = 0;
  std::vector<VerificationFailure> failures;  // first `failure_cap` of them
  std::map<int, std::uint64_t> per_order;
  std::vector<std::pair<std::string, std::uint64_t>> sections;
  double elapsed_seconds = 0.0;

  static constexpr std::size_t failure_cap = 200;

  bool passed() const noexcept { return failure_count == 0; }

  void add_failure(std::string construction, std::string property, std::string detail,
                   std::string input) {
    failure_count += 1;
    if (failures.size() < failure_cap)
      failures.push_back({std::move(construction), std::move(property), std::move(detail),
                          std::move(input)});
  }

  void absorb_failures(const VerificationReport& other) {
    failure_count += other.failure_count;
    for (const auto& f : other.failures)
      if (failures.size() < failure_cap) failures.push_back(f);
  }

  void absorb(const VerificationReport& other) {
    instances += other.instances;
    absorb_failures(other);
    for (const auto& [k, v] : other.per_order) per_order[k] += v;
    if (!other.scope.empty()) sections.emplace_back(other.scope, other.instances);
  }

  void sort_failures() { std::sort(failures.begin(), failures.end()); }
};

inline nlohmann::json failure_to_json(const VerificationFailure& f) {
  return {{"construction", f.construction},
          {"property", f.property},
          {"detail", f.detail},
          {"input", f.input}};
}

inline VerificationFailure failure_from_json(const nlohmann::json& j) {
  return {j.at("construction").get<std::string>(), j.at("property").get<std::string>(),
          j.at("detail").get<std::string>(), j.at("input").get<std::string>()};
}

/// Canonical JSON form. Timing is excluded unless asked for, so that two
/// runs of the same sweep serialize identically.
inline nlohmann::json report_to_json(const VerificationReport& r, bool with_timing = false) {
  nlohmann::json j;
  j["scope"] = r.scope;
  j["instances"] = r.instances;
  j["failure_count"] = r.failure_count;
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : r.failures) fs.push_back(failure_to_json(f));
  j["failures"] = std::move(fs);
  nlohmann::json po = nlohmann::json::object();
  for (const auto& [k, v] : r.per_order) po[std::to_string(k)] = v;
  j["per_order"] = std::move(po);
  if (!r.sections.empty()) {
    nlohmann::json ss = nlohmann::json::array();
    for (const auto& [name, count] : r.sections) ss.push_back({{"name", name}, {"instances", count}});
    j["sections"] = std::move(ss);
  }
  j["pass"] = r.passed();
  if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

inline std::string report_table(const VerificationReport& r) {
  std::string out;
  out += "scope:     " + r.scope + "\n";
  out += "instances: " + std::to_string(r.instances) + "\n";
  if (!r.per_order.empty()) {
    out += "per order:";
    for (const auto& [k, v] : r.per_order)
      out += " " + std::to_string(k) + "=" + std::to_string(v);
    out += "\n";
  }
  for (const auto& [name, count] : r.sections)
    out += "  section " + name + ": " + std::to_string(count) + " instances\n";
  out += "failures:  " + std::to_string(r.failure_count) + "\n";
  for (const auto& f : r.failures)
    out += "  [" + f.construction + "] " + f.property + ": " + f.detail + " input=" + f.input + "\n";
  if (r.failure_count > r.failures.size())
    out += "  ... " + std::to_string(r.failure_count - r.failures.size()) + " more\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", r.elapsed_seconds);
  out += "elapsed:   " + std::string(buf) + "s\n";
  out += std::string("status:    ") + (r.passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

namespace detail {

inline std::vector<std::pair<int, int>> pair_table(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// Tournament number `mask` in the edge-bitmask enumeration: bit p of the
/// mask orients pair p (pairs ordered (0,1),(0,2),...,(n-2,n-1)); a set bit
/// means low label -> high label.
inline Tournament tournament_from_mask(int n, std::uint64_t mask) {
  TournamentBuilder b(n);
  int p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p)
      (mask >> p) & 1 ? b.arc(i, j) : b.arc(j, i);
  return b.finish();
}

inline std::uint64_t mask_of(const Tournament& t) {
  const int n = t.order();
  if (n * (n - 1) / 2 > 62) throw std::invalid_argument("mask_of: order too large for a 64-bit mask");
  std::uint64_t mask = 0;
  int p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p)
      if (t.arc(i, j)) mask |= std::uint64_t{1} << p;
  return mask;
}

/// Calls f on every labeled tournament of the given order, in mask order.
template <class F>
void for_each_labeled(int n, F&& f) {
  if (n < 0) throw std::invalid_argument("for_each_labeled: negative order");
  const int pairs = n * (n - 1) / 2;
  if (pairs > 62) throw std::invalid_argument("for_each_labeled: order too large to enumerate");
  const std::uint64_t total = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = 0; mask < total; ++mask) f(tournament_from_mask(n, mask));
}

/// Materialized enumeration; meant for small orders (n <= 6 or so).
inline std::vector<Tournament> enumerate_labeled(int n) {
  std::vector<Tournament> all;
  for_each_labeled(n, [&](Tournament t) { all.push_back(std::move(t)); });
  return all;
}

/// Out-degree vector straight from a mask, without building the tournament.
inline std::vector<int> mask_out_degrees(int n, std::uint64_t mask) {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  int p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p)
      out[static_cast<std::size_t>((mask >> p) & 1 ? i : j)] += 1;
  return out;
}

/// Copy of t with the arc between u and v reversed; test fixture helper.
inline Tournament flip_arc(const Tournament& t, int u, int v) {
  TournamentBuilder b(t.order());
  for (const auto& [a, c] : t.edges()) {
    const bool hit = (a == u && c == v) || (a == v && c == u);
    hit ? b.arc(c, a) : b.arc(a, c);
  }
  return b.finish();
}

/// Checks one extension against its contract: (a) the output is structurally
/// a tournament, (b) it is regular, (c) the embedding is an injective
/// edge-preserving map, (d) the order matches the construction kind, and
/// (e) type1/type2 outputs certify at the trace witness. Failures become
/// report entries, never exceptions.
inline VerificationReport verify_extension(const Tournament& input, const ExtensionResult& result,
                                           ConstructionKind expected) {
  VerificationReport rep;
  rep.instances = 1;
  rep.per_order[input.order()] += 1;
  const std::string kind = to_string(expected);
  const std::string in_json = to_json_string(input);
  const Tournament& out = result.output;
  const int n = input.order();

  bool structurally_ok = true;
  try {
    if (!validate_tournament_matrix(out.adjacency_matrix())) structurally_ok = false;
  } catch (const std::exception&) {
    structurally_ok = false;
  }
  if (!structurally_ok)
    rep.add_failure(kind, "valid-tournament", "output is not a tournament matrix", in_json);

  if (!is_regular(out)) rep.add_failure(kind, "regular-output", "output has a charged vertex", in_json);

  if (static_cast<int>(result.embedding.size()) != n) {
    rep.add_failure(kind, "embedding-shape",
                    "embedding has " + std::to_string(result.embedding.size()) +
                        " entries, expected " + std::to_string(n),
                    in_json);
  } else {
    std::vector<char> seen(static_cast<std::size_t>(out.order()), 0);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int img = result.embedding[static_cast<std::size_t>(i)];
      if (img < 0 || img >= out.order()) {
        rep.add_failure(kind, "embedding-range", "image " + std::to_string(img) + " out of range",
                        in_json);
        ok = false;
      } else if (seen[static_cast<std::size_t>(img)]) {
        rep.add_failure(kind, "embedding-injective", "image " + std::to_string(img) + " repeats",
                        in_json);
        ok = false;
      } else {
        seen[static_cast<std::size_t>(img)] = 1;
      }
    }
    if (ok) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const int a = result.embedding[static_cast<std::size_t>(i)];
          const int b = result.embedding[static_cast<std::size_t>(j)];
          if (input.arc(i, j) != out.arc(a, b)) {
            rep.add_failure(kind, "embedding-edge-preserving",
                            "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                ") changes orientation",
                            in_json);
            i = n;  // one report per input suffices
            break;
          }
        }
    }
  }

  const bool doubled = expected == ConstructionKind::type1 || expected == ConstructionKind::type2 ||
                       expected == ConstructionKind::greedy;
  if (doubled && out.order() != 2 * n + 1)
    rep.add_failure(kind, "order-contract",
                    "output order " + std::to_string(out.order()) + ", expected " +
                        std::to_string(2 * n + 1),
                    in_json);
  if (expected == ConstructionKind::plus_two && out.order() != n + 2)
    rep.add_failure(kind, "order-contract",
                    "output order " + std::to_string(out.order()) + ", expected " +
                        std::to_string(n + 2),
                    in_json);
  if (out.order() > 0 && out.order() % 2 == 0)
    rep.add_failure(kind, "order-contract", "regular output must have odd order", in_json);

  if ((expected == ConstructionKind::type1 || expected == ConstructionKind::type2) && n > 0) {
    if (!result.trace.witness) {
      rep.add_failure(kind, "witness-certification", "trace carries no witness vertex", in_json);
    } else if (structurally_ok && is_regular(out)) {
      const TypeKind tk =
          expected == ConstructionKind::type1 ? TypeKind::type1 : TypeKind::type2;
      if (!certify_type_at(out, tk, *result.trace.witness))
        rep.add_failure(kind, "witness-certification",
                        "vertex " + std::to_string(*result.trace.witness) +
                            " fails the neighbourhood isomorphism",
                        in_json);
    }
  }
  return rep;
}

struct OracleResult {
  int order = 0;
  Tournament example;
};

namespace detail {

inline bool complete_to_regular(int cap, const std::vector<std::pair<int, int>>& free_pairs,
                                std::size_t idx, std::vector<int>& out, std::vector<int>& in,
                                std::vector<int>& slots, std::vector<char>& orient) {
  if (idx == free_pairs.size()) return true;
  const auto [i, j] = free_pairs[idx];
  slots[static_cast<std::size_t>(i)] -= 1;
  slots[static_cast<std::size_t>(j)] -= 1;
  for (int winner : {i, j}) {
    const int loser = winner ^ i ^ j;
    if (out[static_cast<std::size_t>(winner)] == cap || in[static_cast<std::size_t>(loser)] == cap)
      continue;
    out[static_cast<std::size_t>(winner)] += 1;
    in[static_cast<std::size_t>(loser)] += 1;
    const bool viable =
        cap - out[static_cast<std::size_t>(i)] <= slots[static_cast<std::size_t>(i)] &&
        cap - in[static_cast<std::size_t>(i)] <= slots[static_cast<std::size_t>(i)] &&
        cap - out[static_cast<std::size_t>(j)] <= slots[static_cast<std::size_t>(j)] &&
        cap - in[static_cast<std::size_t>(j)] <= slots[static_cast<std::size_t>(j)];
    if (viable) {
      orient[idx] = winner == i ? 1 : 2;
      if (complete_to_regular(cap, free_pairs, idx + 1, out, in, slots, orient)) {
        slots[static_cast<std::size_t>(i)] += 1;
        slots[static_cast<std::size_t>(j)] += 1;
        return true;
      }
    }
    out[static_cast<std::size_t>(winner)] -= 1;
    in[static_cast<std::size_t>(loser)] -= 1;
  }
  slots[static_cast<std::size_t>(i)] += 1;
  slots[static_cast<std::size_t>(j)] += 1;
  return false;
}

}  // namespace detail

/// Brute-force companion to the embedding constructions: the smallest odd
/// order N >= order(T) at which some regular tournament contains T, found by
/// exhaustive completion over the unassigned arcs, plus one example. Guarded
/// to order(T) <= 4. The doubling construction bounds the search at 2n+1.
inline OracleResult min_regular_extension_oracle(const Tournament& t) {
  const int n = t.order();
  if (n > 4)
    throw std::invalid_argument("min_regular_extension_oracle: guarded to inputs of order <= 4");
  for (int big = n | 1; big <= 2 * n + 1; big += 2) {
    const int cap = (big - 1) / 2;
    bool viable = true;
    for (int v = 0; v < n && viable; ++v)
      if (t.out_degree(v) > cap || t.in_degree(v) > cap) viable = false;
    if (!viable) continue;
    std::vector<std::pair<int, int>> free_pairs;
    for (int i = 0; i < big; ++i)
      for (int j = std::max(i + 1, n); j < big; ++j) free_pairs.emplace_back(i, j);
    std::vector<int> out(static_cast<std::size_t>(big), 0), in(static_cast<std::size_t>(big), 0);
    for (int v = 0; v < n; ++v) {
      out[static_cast<std::size_t>(v)] = t.out_degree(v);
      in[static_cast<std::size_t>(v)] = t.in_degree(v);
    }
    std::vector<int> slots(static_cast<std::size_t>(big), 0);
    for (const auto& [i, j] : free_pairs) {
      slots[static_cast<std::size_t>(i)] += 1;
      slots[static_cast<std::size_t>(j)] += 1;
    }
    bool bounded = true;
    for (int v = 0; v < big && bounded; ++v)
      if (cap - out[static_cast<std::size_t>(v)] > slots[static_cast<std::size_t>(v)] ||
          cap - in[static_cast<std::size_t>(v)] > slots[static_cast<std::size_t>(v)])
        bounded = false;
    if (!bounded) continue;
    std::vector<char> orient(free_pairs.size(), 0);
    if (!detail::complete_to_regular(cap, free_pairs, 0, out, in, slots, orient)) continue;
    TournamentBuilder b(big);
    for (const auto& [u, v] : t.edges()) b.arc(u, v);
    for (std::size_t k = 0; k < free_pairs.size(); ++k)
      orient[k] == 1 ? b.arc(free_pairs[k].first, free_pairs[k].second)
                     : b.arc(free_pairs[k].second, free_pairs[k].first);
    OracleResult res{big, b.finish()};
    if (!is_regular(res.example))
      throw std::logic_error("min_regular_extension_oracle: completion is not regular");
    return res;
  }
  throw std::logic_error("min_regular_extension_oracle: no extension up to order 2n+1");
}

/// Sweeps the greedy Type-II construction over every Landau-feasible score
/// sequence of order <= n_max, realizing each sequence once. Shardable and
/// resumable: with a checkpoint path, finished work units append their
/// partial results as JSON lines and are skipped on rerun. The merged report
/// is byte-identical regardless of shard count or resumption.
inline VerificationReport verify_greedy_over_scores(int n_max, int shards = 1,
                                                    const std::string& checkpoint_path = "",
                                                    GreedyTieBreak tie = GreedyTieBreak::stable) {
  if (n_max < 1) throw std::invalid_argument("verify_greedy_over_scores: n_max must be >= 1");
  if (shards < 1) throw std::invalid_argument("verify_greedy_over_scores: shards must be >= 1");
  detail::Stopwatch clock;

  struct Unit {
    int n = 0;
    int shard = 0;
    std::size_t begin = 0;
    std::size_t end = 0;
  };
  struct Partial {
    std::uint64_t checked = 0;
    std::vector<VerificationFailure> failures;
  };

  std::vector<std::vector<ScoreSequence>> seqs(static_cast<std::size_t>(n_max) + 1);
  std::vector<Unit> units;
  for (int n = 1; n <= n_max; ++n) {
    seqs[static_cast<std::size_t>(n)] = enumerate_scores(n);
    const std::size_t total = seqs[static_cast<std::size_t>(n)].size();
    for (int s = 0; s < shards; ++s)
      units.push_back({n, s, total * static_cast<std::size_t>(s) / static_cast<std::size_t>(shards),
                       total * (static_cast<std::size_t>(s) + 1) / static_cast<std::size_t>(shards)});
  }

  std::vector<std::optional<Partial>> results(units.size());
  std::mutex io_mutex;
  std::ofstream checkpoint_out;
  const int tie_id = tie == GreedyTieBreak::stable ? 0 : 1;
  if (!checkpoint_path.empty()) {
    std::ifstream in(checkpoint_path);
    std::map<std::pair<int, int>, Partial> done;
    for (std::string line; std::getline(in, line);) {
      if (line.empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded()) continue;  // torn tail line from an interrupted run
      // Entries are only reusable when the work-unit geometry matches.
      if (j.value("shards", -1) != shards || j.value("tie", -1) != tie_id) continue;
      Partial p;
      p.checked = j.at("checked").get<std::uint64_t>();
      for (const auto& f : j.at("failures")) p.failures.push_back(failure_from_json(f));
      done[{j.at("n").get<int>(), j.at("shard").get<int>()}] = std::move(p);
    }
    for (std::size_t u = 0; u < units.size(); ++u) {
      auto it = done.find({units[u].n, units[u].shard});
      if (it != done.end()) results[u] = it->second;
    }
    checkpoint_out.open(checkpoint_path, std::ios::app);
  }

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t u = cursor.fetch_add(1);
      if (u >= units.size()) return;
      if (results[u]) continue;  // restored from checkpoint
      const Unit& unit = units[u];
      Partial p;
      const auto& pool = seqs[static_cast<std::size_t>(unit.n)];
      for (std::size_t k = unit.begin; k < unit.end; ++k) {
        const ScoreSequence& s = pool[k];
        const GreedyResult g = greedy_type2(realize(s), tie);
        p.checked += 1;
        if (!g.regular)
          p.failures.push_back({"greedy", "regular-output",
                                "greedy construction left a charged vertex", to_csv(s)});
      }
      std::lock_guard<std::mutex> lock(io_mutex);
      if (checkpoint_out.is_open()) {
        nlohmann::json line;
        line["n"] = unit.n;
        line["shard"] = unit.shard;
        line["shards"] = shards;
        line["tie"] = tie_id;
        line["checked"] = p.checked;
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : p.failures) fs.push_back(failure_to_json(f));
        line["failures"] = std::move(fs);
        checkpoint_out << line.dump() << "\n" << std::flush;
      }
      results[u] = std::move(p);
    }
  };
  if (shards == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const unsigned width = std::min<unsigned>(static_cast<unsigned>(shards),
                                              std::max(1u, std::thread::hardware_concurrency()));
    for (unsigned i = 0; i < width; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerificationReport rep;
  rep.scope = "greedy-type2 conjecture over score sequences, n <= " + std::to_string(n_max) +
              (tie == GreedyTieBreak::stable ? "" : " (reversed tie-break)");
  for (std::size_t u = 0; u < units.size(); ++u) {
    rep.instances += results[u]->checked;
    rep.per_order[units[u].n] += results[u]->checked;
    for (auto& f : results[u]->failures) {
      rep.failure_count += 1;
      if (rep.failures.size() < VerificationReport::failure_cap) rep.failures.push_back(f);
    }
  }
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

}  // namespace regtour
