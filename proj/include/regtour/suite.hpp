#pragma once

// Property batteries over exhaustively enumerated inputs, one per module
// family, and the configurable suite runner that aggregates them. Each
// battery returns a VerificationReport; the acceptance harness and the CLI
// `suite` subcommand are thin wrappers around these.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "regtour/harness.hpp"

namespace regtour {

/// Degree arithmetic, the parity remark, the six regularity equivalences,
/// inversion laws, and the matrix identity, over all labeled tournaments of
/// order <= max_order.
inline VerificationReport battery_core(int max_order) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.scope = "core invariants over labeled tournaments, n <= " + std::to_string(max_order);
  for (int n = 0; n <= max_order; ++n) {
    for_each_labeled(n, [&](const Tournament& t) {
      rep.instances += 1;
      rep.per_order[n] += 1;
      auto fail = [&](const char* property, const std::string& detail) {
        rep.add_failure("core", property, detail, to_json_string(t));
      };
      bool all_even_charge = true, all_odd_charge = true;
      bool all_neutral = true, half_in = true, half_out = true;
      int first_out = n > 0 ? t.out_degree(0) : 0, first_in = n > 0 ? t.in_degree(0) : 0;
      bool same_out = true, same_in = true;
      for (int v = 0; v < n; ++v) {
        const DegreeTriple d = degrees(t, v);
        if (d.in + d.out != n - 1) fail("degree-sum", "in+out != n-1 at vertex " + std::to_string(v));
        if (((d.charge % 2) + 2) % 2 != ((n - 1) % 2 + 2) % 2)
          fail("charge-parity", "charge parity off at vertex " + std::to_string(v));
        (d.charge % 2 == 0 ? all_odd_charge : all_even_charge) = false;
        if (d.charge != 0) all_neutral = false;
        if (2 * d.in != n - 1) half_in = false;
        if (2 * d.out != n - 1) half_out = false;
        if (d.out != first_out) same_out = false;
        if (d.in != first_in) same_in = false;
      }
      if (n > 0) {
        const bool even_order = n % 2 == 0;
        if (even_order != all_odd_charge)
          fail("parity-remark", "order parity disagrees with charge parity");
        if (!even_order && !all_even_charge)
          fail("parity-remark", "odd order with an odd charge");
      }
      const bool reg = is_regular(t);
      if (reg != same_out || reg != same_in || reg != half_in || reg != half_out ||
          reg != all_neutral)
        fail("regularity-equivalences", "the six regular characterizations disagree");
      if (reg && n % 2 == 0 && n > 0) fail("regular-odd-order", "regular tournament of even order");

      const Tournament inv = invert(t);
      if (!(invert(inv) == t)) fail("invert-involution", "double inversion changed the tournament");
      const auto s = score_sequence(t).values();
      std::vector<int> mapped(s.size());
      for (std::size_t i = 0; i < s.size(); ++i)
        mapped[i] = n - 1 - s[s.size() - 1 - i];  // reverse keeps it sorted
      if (score_sequence(inv).values() != mapped)
        fail("invert-score-map", "inversion scores are not the complement");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && inv.arc(i, j) != t.arc(j, i)) fail("invert-transpose", "not the transpose");
      if (!validate_tournament_matrix(t.adjacency_matrix()))
        fail("matrix-identity", "A + A^T != J - I on a built tournament");
    });
  }
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

namespace detail {

inline bool witness_is_valid(const Tournament& a, const Tournament& b, const IsoWitness& w) {
  if (static_cast<int>(w.map.size()) != a.order() || a.order() != b.order()) return false;
  std::vector<char> seen(w.map.size(), 0);
  for (int img : w.map) {
    if (img < 0 || img >= b.order() || seen[static_cast<std::size_t>(img)]) return false;
    seen[static_cast<std::size_t>(img)] = 1;
  }
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j)
      if (a.arc(i, j) != b.arc(w.map[static_cast<std::size_t>(i)], w.map[static_cast<std::size_t>(j)]))
        return false;
  return true;
}

}  // namespace detail

/// Reflexivity, symmetry of existence over all pairs, relabeling invariance,
/// and witness validity, over all labeled tournaments of order <= max_order.
inline VerificationReport battery_isomorphism(int max_order) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.scope = "isomorphism properties over labeled tournaments, n <= " + std::to_string(max_order);
  for (int n = 0; n <= max_order; ++n) {
    const auto all = enumerate_labeled(n);
    for (const auto& t : all) {
      rep.instances += 1;
      rep.per_order[n] += 1;
      const std::string in_json = to_json_string(t);
      auto self = are_isomorphic(t, t);
      if (!self || !detail::witness_is_valid(t, t, *self))
        rep.add_failure("isomorphism", "reflexive", "no valid self-witness", in_json);
      if (n > 0) {
        std::vector<int> rot(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % n;
        const Tournament r = relabel(t, rot);
        auto w = are_isomorphic(t, r);
        if (!w || !detail::witness_is_valid(t, r, *w))
          rep.add_failure("isomorphism", "relabel-invariance", "rotation relabeling not detected",
                          in_json);
      }
    }
    for (const auto& a : all)
      for (const auto& b : all) {
        auto ab = are_isomorphic(a, b);
        auto ba = are_isomorphic(b, a);
        if (ab.has_value() != ba.has_value())
          rep.add_failure("isomorphism", "symmetry", "existence differs between directions",
                          to_json_string(a) + " vs " + to_json_string(b));
        if (ab && !detail::witness_is_valid(a, b, *ab))
          rep.add_failure("isomorphism", "witness-valid", "returned witness is not edge-preserving",
                          to_json_string(a) + " vs " + to_json_string(b));
      }
  }
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

/// The condition chain (star always, ddagger always, hence dagger), the
/// strictness claim at k = r_t, the step equivalence claim, termination of
/// the smoothing iteration at the transitive sequence with strict increase,
/// and realize/score stability, over every Landau-feasible sequence of order
/// <= max_order.
inline VerificationReport battery_score_theorems(int max_order) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.scope = "score-sequence theorems, n <= " + std::to_string(max_order);
  for (int n = 1; n <= max_order; ++n) {
    for (const ScoreSequence& s : enumerate_scores(n)) {
      rep.instances += 1;
      rep.per_order[n] += 1;
      const std::string in_csv = to_csv(s);
      auto fail = [&](const char* property, const std::string& detail) {
        rep.add_failure("scores", property, detail, in_csv);
      };
      const ConditionFlags flags = evaluate_conditions(s);
      if (!flags.star) fail("star", "(star) fails on a Landau-feasible sequence");
      if (!flags.ddagger) fail("ddagger", "(ddagger) fails on a Landau-feasible sequence");
      if (!flags.dagger) fail("dagger", "(dagger) fails although star and ddagger imply it");

      bool transitive = true;
      for (int i = 0; i + 1 < n; ++i)
        if (s[i] == s[i + 1]) transitive = false;
      if (!transitive) {
        const GriggsReidStep step = griggs_reid_step(s);
        if (!step.monotone) fail("step-monotone", "positional step left a descent");
        const ScoreSequence next = step.canonical();
        if (!is_landau(next)) fail("step-feasible", "step output is not a score sequence");
        if (prec(s, next) != std::strong_ordering::less)
          fail("step-increase", "step did not strictly increase in prec order");
        // Strictness at k = r_t.
        const auto r = r_of(s).values;
        const int k = r[static_cast<std::size_t>(step.repeat_index)];
        long long capped = 0;
        for (int x : r) capped += std::min(x, k);
        const long long linear =
            static_cast<long long>(n) * k - static_cast<long long>(k) * (k - 1) / 2;
        if (!(linear < capped)) fail("claim-a-strict", "inequality at k = r_t is not strict");
        if (evaluate_conditions(next).ddagger != flags.ddagger)
          fail("claim-b-equivalence", "(ddagger) changed across the step");
        // Iterate to the transitive sequence.
        ScoreSequence cur = s;
        int guard = n * n + n + 1;
        for (;;) {
          bool done = true;
          for (int i = 0; i + 1 < cur.size(); ++i)
            if (cur[i] == cur[i + 1]) done = false;
          if (done) break;
          if (--guard < 0) {
            fail("iteration-terminates", "smoothing did not reach the transitive sequence");
            break;
          }
          const ScoreSequence nxt = griggs_reid_step(cur).canonical();
          if (prec(cur, nxt) != std::strong_ordering::less) {
            fail("iteration-increase", "iteration step was not a strict prec increase");
            break;
          }
          cur = nxt;
        }
        if (guard >= 0 && !(cur == score_sequence(transitive_tournament(n))))
          fail("iteration-target", "iteration ended off the transitive sequence");
      }
      if (!(score_sequence(realize(s)) == s))
        fail("realize-stability", "realized tournament has different scores");
    }
  }
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

/// enumerate_scores against the brute-force score-sequence set of all
/// labeled tournaments, plus uniqueness and prec-ascending order.
inline VerificationReport battery_score_enumeration(int max_order) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.scope = "score enumeration vs labeled brute force, n <= " + std::to_string(max_order);
  for (int n = 1; n <= max_order; ++n) {
    std::set<std::vector<int>> brute;
    for_each_labeled(n, [&](const Tournament& t) { brute.insert(score_sequence(t).values()); });
    const auto enumerated = enumerate_scores(n);
    rep.instances += enumerated.size();
    rep.per_order[n] += enumerated.size();
    std::set<std::vector<int>> seen;
    for (std::size_t i = 0; i < enumerated.size(); ++i) {
      if (!seen.insert(enumerated[i].values()).second)
        rep.add_failure("scores", "enumeration-unique", "sequence repeated", to_csv(enumerated[i]));
      if (i > 0 && prec(enumerated[i - 1], enumerated[i]) != std::strong_ordering::less)
        rep.add_failure("scores", "enumeration-order", "not prec-ascending", to_csv(enumerated[i]));
      if (!brute.count(enumerated[i].values()))
        rep.add_failure("scores", "enumeration-sound", "sequence has no labeled realization",
                        to_csv(enumerated[i]));
    }
    for (const auto& v : brute)
      if (!seen.count(v))
        rep.add_failure("scores", "enumeration-complete", "realized sequence missing",
                        to_csv(ScoreSequence(v)));
  }
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

/// Gale-Ryser predicate and realizer against exhaustive search over all
/// binary matrices, for every shape m,n <= max_dim and every demand vector
/// with entries <= max_dim.
inline VerificationReport battery_gale_ryser(int max_dim) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.scope = "gale-ryser oracle equivalence, dims and entries <= " + std::to_string(max_dim);
  auto encode = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::uint64_t key = 1;
    for (int x : p) key = key * 37 + static_cast<std::uint64_t>(x) + 1;
    key = key * 37 + 36;
    for (int x : q) key = key * 37 + static_cast<std::uint64_t>(x) + 1;
    return key;
  };
  for (int m = 1; m <= max_dim; ++m) {
    for (int n = 1; n <= max_dim; ++n) {
      // Every achievable (row sums, column sums) signature of an m x n
      // binary matrix, by enumerating all of them.
      std::unordered_set<std::uint64_t> achievable;
      const std::uint64_t total = std::uint64_t{1} << (m * n);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<int> p(static_cast<std::size_t>(m), 0), q(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < n; ++j)
            if ((mask >> (i * n + j)) & 1) {
              p[static_cast<std::size_t>(i)] += 1;
              q[static_cast<std::size_t>(j)] += 1;
            }
        achievable.insert(encode(p, q));
      }
      std::vector<std::vector<int>> ps, qs;
      std::vector<int> acc;
      // All row-sum vectors with entries in [0, max_dim] ...
      auto gen_p = [&](auto&& self, int pos) -> void {
        if (pos == m) {
          ps.push_back(acc);
          return;
        }
        for (int v = 0; v <= max_dim; ++v) {
          acc.push_back(v);
          self(self, pos + 1);
          acc.pop_back();
        }
      };
      gen_p(gen_p, 0);
      // ... and all nonincreasing column-sum vectors with entries in [0, max_dim].
      auto gen_q = [&](auto&& self, int pos, int hi) -> void {
        if (pos == n) {
          qs.push_back(acc);
          return;
        }
        for (int v = hi; v >= 0; --v) {
          acc.push_back(v);
          self(self, pos + 1, v);
          acc.pop_back();
        }
      };
      gen_q(gen_q, 0, max_dim);
      for (const auto& p : ps) {
        for (const auto& q : qs) {
          rep.instances += 1;
          const bool expected = achievable.count(encode(p, q)) > 0;
          std::string input = "P=[";
          for (std::size_t i = 0; i < p.size(); ++i) input += (i ? "," : "") + std::to_string(p[i]);
          input += "] Q=[";
          for (std::size_t i = 0; i < q.size(); ++i) input += (i ? "," : "") + std::to_string(q[i]);
          input += "]";
          bool predicted = false;
          try {
            predicted = feasible(p, q, 1);
          } catch (const std::exception& e) {
            rep.add_failure("gale-ryser", "predicate-throws", e.what(), input);
            continue;
          }
          if (predicted != expected)
            rep.add_failure("gale-ryser", "oracle-equivalence",
                            predicted ? "predicate accepts an unachievable pair"
                                      : "predicate rejects an achievable pair",
                            input);
          if (predicted) {
            try {
              const BinaryMatrix c = realize01(p, q);
              if (c.row_sums() != p || c.col_sums() != q)
                rep.add_failure("gale-ryser", "realization-sums", "sums drifted", input);
            } catch (const std::exception& e) {
              rep.add_failure("gale-ryser", "realization-fails", e.what(), input);
            }
          } else {
            bool threw = false;
            try {
              realize01(p, q);
            } catch (const std::invalid_argument&) {
              threw = true;
            }
            if (!threw)
              rep.add_failure("gale-ryser", "realization-rejects",
                              "realize01 accepted an infeasible pair", input);
          }
        }
      }
    }
  }
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

/// The embedding theorem end to end: embed_regular, embed_type1 and
/// embed_type2 verified on every labeled tournament of order <= max_order.
inline VerificationReport battery_embeddings(int max_order) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.scope = "embedding constructions over labeled tournaments, n <= " + std::to_string(max_order);
  for (int n = 0; n <= max_order; ++n) {
    for_each_labeled(n, [&](const Tournament& t) {
      rep.instances += 1;
      rep.per_order[n] += 1;
      struct Job {
        ConstructionKind kind;
        ExtensionResult (*run)(const Tournament&);
      };
      static const Job jobs[] = {{ConstructionKind::inductive, embed_regular},
                                 {ConstructionKind::type1, embed_type1},
                                 {ConstructionKind::type2, embed_type2}};
      for (const Job& job : jobs) {
        try {
          const ExtensionResult res = job.run(t);
          rep.absorb_failures(verify_extension(t, res, job.kind));
        } catch (const std::exception& e) {
          rep.add_failure(to_string(job.kind), "construction-throws", e.what(), to_json_string(t));
        }
      }
    });
  }
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

/// The order n+2 enlargement on every labeled regular tournament of each odd
/// order in [3, max_order]: output regular of order n+2, every degree
/// (n+1)/2, input embedded by the identity.
inline VerificationReport battery_plus_two(int max_order) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.scope = "plus_two on all labeled regular tournaments of odd order 3.." +
              std::to_string(max_order);
  for (int n = 3; n <= max_order; n += 2) {
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const auto outdeg = mask_out_degrees(n, mask);
      bool reg = true;
      for (int d : outdeg)
        if (2 * d != n - 1) {
          reg = false;
          break;
        }
      if (!reg) continue;
      const Tournament t = tournament_from_mask(n, mask);
      rep.instances += 1;
      rep.per_order[n] += 1;
      const ExtensionResult res = plus_two(t);
      rep.absorb_failures(verify_extension(t, res, ConstructionKind::plus_two));
      for (int v = 0; v < res.output.order(); ++v)
        if (res.output.out_degree(v) != (n + 1) / 2) {
          rep.add_failure("plus_two", "uniform-degree",
                          "vertex " + std::to_string(v) + " degree " +
                              std::to_string(res.output.out_degree(v)) + ", expected " +
                              std::to_string((n + 1) / 2),
                          to_json_string(t));
          break;
        }
      for (int i = 0; i < n; ++i)
        if (res.embedding[static_cast<std::size_t>(i)] != i) {
          rep.add_failure("plus_two", "identity-embedding", "input block was relabeled",
                          to_json_string(t));
          break;
        }
    }
  }
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

/// Brute-force minimality: no construction may beat the exhaustive oracle,
/// and the oracle's own example must itself verify.
inline VerificationReport battery_oracle_consistency(int max_order) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.scope = "construction orders vs exhaustive minimal extension, n <= " +
              std::to_string(max_order);
  for (int n = 0; n <= max_order; ++n) {
    for_each_labeled(n, [&](const Tournament& t) {
      rep.instances += 1;
      rep.per_order[n] += 1;
      const std::string in_json = to_json_string(t);
      const OracleResult oracle = min_regular_extension_oracle(t);
      ExtensionResult wrapped;
      wrapped.output = oracle.example;
      wrapped.embedding = detail::identity_map(n);
      wrapped.trace.kind = ConstructionKind::inductive;
      rep.absorb_failures(verify_extension(t, wrapped, ConstructionKind::inductive));
      if (oracle.example.order() != oracle.order)
        rep.add_failure("oracle", "example-order", "example order differs from the reported one",
                        in_json);
      const int floor_order = oracle.order;
      auto check_floor = [&](const char* name, int got) {
        if (got < floor_order)
          rep.add_failure(name, "beats-exhaustive-minimum",
                          "construction order " + std::to_string(got) +
                              " below the exhaustive minimum " + std::to_string(floor_order),
                          in_json);
      };
      check_floor("inductive", embed_regular(t).output.order());
      check_floor("type1", embed_type1(t).output.order());
      check_floor("type2", embed_type2(t).output.order());
      const GreedyResult g = greedy_type2(t);
      if (g.regular) check_floor("greedy", g.extension.output.order());
    });
  }
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

/// The greedy verdict must be a function of the score sequence alone: all
/// labeled tournaments sharing a score sequence get the same verdict.
inline VerificationReport battery_greedy_decoupling(int max_order) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.scope = "greedy verdict depends only on scores, labeled n <= " + std::to_string(max_order);
  for (int n = 1; n <= max_order; ++n) {
    std::map<std::vector<int>, bool> verdicts;
    for_each_labeled(n, [&](const Tournament& t) {
      rep.instances += 1;
      rep.per_order[n] += 1;
      const GreedyResult g = greedy_type2(t);
      const auto key = score_sequence(t).values();
      auto [it, inserted] = verdicts.emplace(key, g.regular);
      if (!inserted && it->second != g.regular)
        rep.add_failure("greedy", "score-decoupling",
                        "verdict differs across realizations of one score sequence",
                        to_json_string(t));
    });
  }
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

/// Deliberately tampered fixture: flips one arc of a verified extension and
/// expects the verifier to say so. The surfaced failures stay in the report.
inline VerificationReport battery_fault_injection() {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.scope = "fault injection fixture";
  const Tournament t = Tournament::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  ExtensionResult res = embed_type1(t);
  res.output = flip_arc(res.output, 0, 1);
  VerificationReport one = verify_extension(t, res, ConstructionKind::type1);
  rep.instances += 1;
  rep.per_order[t.order()] += 1;
  if (one.passed()) {
    rep.add_failure("fault-injection", "tamper-undetected",
                    "verify_extension accepted a tampered extension", to_json_string(t));
  } else {
    for (const auto& f : one.failures)
      rep.add_failure("fault-injection", f.property, "deliberate: " + f.detail, f.input);
  }
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

struct SuiteConfig {
  int core_max_order = 5;
  int iso_max_order = 4;
  int scores_max_order = 10;
  int scores_brute_max_order = 6;
  int gale_ryser_max_dim = 3;
  int embed_max_order = 5;
  int plus_two_max_order = 7;
  int oracle_max_order = 4;
  int greedy_max_order = 8;
  int decoupling_max_order = 5;
  bool fault_injection = false;
  bool probe_tie_breaks = false;
};

/// Parses a config object, rejecting unknown keys.
inline SuiteConfig suite_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("suite config must be a JSON object");
  SuiteConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "core_max_order") c.core_max_order = value.get<int>();
    else if (key == "iso_max_order") c.iso_max_order = value.get<int>();
    else if (key == "scores_max_order") c.scores_max_order = value.get<int>();
    else if (key == "scores_brute_max_order") c.scores_brute_max_order = value.get<int>();
    else if (key == "gale_ryser_max_dim") c.gale_ryser_max_dim = value.get<int>();
    else if (key == "embed_max_order") c.embed_max_order = value.get<int>();
    else if (key == "plus_two_max_order") c.plus_two_max_order = value.get<int>();
    else if (key == "oracle_max_order") c.oracle_max_order = value.get<int>();
    else if (key == "greedy_max_order") c.greedy_max_order = value.get<int>();
    else if (key == "decoupling_max_order") c.decoupling_max_order = value.get<int>();
    else if (key == "fault_injection") c.fault_injection = value.get<bool>();
    else if (key == "probe_tie_breaks") c.probe_tie_breaks = value.get<bool>();
    else throw std::invalid_argument("run_suite: unknown config key \"" + key + "\"");
  }
  return c;
}

/// Runs every battery at the configured order caps and aggregates one report.
inline VerificationReport run_suite(const SuiteConfig& cfg) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.scope = "property suite";
  rep.absorb(battery_core(cfg.core_max_order));
  rep.absorb(battery_isomorphism(cfg.iso_max_order));
  rep.absorb(battery_score_theorems(cfg.scores_max_order));
  rep.absorb(battery_score_enumeration(cfg.scores_brute_max_order));
  rep.absorb(battery_gale_ryser(cfg.gale_ryser_max_dim));
  rep.absorb(battery_embeddings(cfg.embed_max_order));
  rep.absorb(battery_plus_two(cfg.plus_two_max_order));
  rep.absorb(battery_oracle_consistency(cfg.oracle_max_order));
  rep.absorb(battery_greedy_decoupling(cfg.decoupling_max_order));
  rep.absorb(verify_greedy_over_scores(cfg.greedy_max_order));
  if (cfg.probe_tie_breaks)
    rep.absorb(verify_greedy_over_scores(cfg.greedy_max_order, 1, "", GreedyTieBreak::reversed));
  if (cfg.fault_injection) rep.absorb(battery_fault_injection());
  rep.sort_failures();
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

}  // namespace regtour
