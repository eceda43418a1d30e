// Acceptance suite: one line per criterion on stdout, report tables for any
// failure on stderr, nonzero exit when anything fails. Scales are fixed; the
// only knob is the opt-in extended greedy sweep (--greedy-n-max N, default 12).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "regtour/regtour.hpp"

using namespace regtour;

namespace {

int g_failures = 0;

void announce(int number, const std::string& name, bool pass, const std::string& summary) {
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              summary.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string stats(const VerificationReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1fs", r.elapsed_seconds);
  return std::to_string(r.instances) + " instances, " + std::to_string(r.failure_count) +
         " failures, " + buf;
}

void dump_failures(const VerificationReport& r) {
  if (!r.passed()) std::fprintf(stderr, "%s\n", report_table(r).c_str());
}

bool roundtrips(const Tournament& t) {
  return read_tournament_json(to_json_string(t)) == t &&
         read_tournament_matrix(to_matrix_string(t)) == t &&
         read_tournament_dot(to_dot(t)) == t;
}

}  // namespace

int main(int argc, char** argv) {
  int greedy_n_max = 12;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--greedy-n-max") == 0 && i + 1 < argc) {
      greedy_n_max = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--greedy-n-max N]\n", argv[0]);
      return 2;
    }
  }
  const int shards = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  const auto c1 = [] { return battery_embeddings(6); };
  const auto c2 = [&](int shard_count) {
    return verify_greedy_over_scores(greedy_n_max, shard_count);
  };
  const auto c3 = [] { return battery_gale_ryser(4); };
  const auto c4 = [] { return battery_score_theorems(10); };
  const auto c5 = [] { return battery_plus_two(7); };
  const auto c6 = [] { return battery_oracle_consistency(4); };

  // 1. Exhaustive embedding theorem check over all labeled tournaments n <= 6.
  const VerificationReport r1 = c1();
  const std::uint64_t expected_inputs = 1 + 1 + 2 + 8 + 64 + 1024 + 32768;
  announce(1, "embed_regular/type1/type2 verified on all labeled tournaments, n <= 6",
           r1.passed() && r1.instances == expected_inputs, stats(r1));
  dump_failures(r1);

  // 2. Greedy conjecture sweep over every Landau-feasible score sequence.
  const VerificationReport r2 = c2(shards);
  announce(2,
           "greedy type2 sweep over all score sequences, n <= " + std::to_string(greedy_n_max),
           r2.passed(), stats(r2));
  dump_failures(r2);

  // 3. Gale-Ryser predicate and realizer against exhaustive matrix search.
  const VerificationReport r3 = c3();
  announce(3, "gale-ryser feasibility equals exhaustive search, dims/entries <= 4", r3.passed(),
           stats(r3));
  dump_failures(r3);

  // 4. The condition-chain theorems on score sequences up to order 10.
  const VerificationReport r4 = c4();
  announce(4, "condition chain, strictness, step equivalence, termination, n <= 10", r4.passed(),
           stats(r4));
  dump_failures(r4);

  // 5. plus_two on every labeled regular tournament of order 3, 5, 7.
  const VerificationReport r5 = c5();
  const bool c5_counts = r5.per_order.count(3) && r5.per_order.at(3) == 2 &&
                         r5.per_order.count(5) && r5.per_order.at(5) == 24 &&
                         r5.per_order.count(7) && r5.per_order.at(7) > 0;
  announce(5, "plus_two degree/order contract on all regular tournaments of order 3,5,7",
           r5.passed() && c5_counts, stats(r5));
  dump_failures(r5);

  // 6. No construction beats the exhaustive minimal-extension oracle.
  const VerificationReport r6 = c6();
  announce(6, "construction orders respect the exhaustive minimum, n <= 4", r6.passed(),
           stats(r6));
  dump_failures(r6);

  // 7. Determinism and formats: identical canonical reports on rerun
  //    (criterion 2 rerun also switches to a single shard) and lossless
  //    JSON/DOT/matrix round trips on the fixture set.
  detail::Stopwatch clock7;
  bool deterministic = true;
  deterministic &= report_to_json(c1()).dump() == report_to_json(r1).dump();
  deterministic &= report_to_json(c2(1)).dump() == report_to_json(r2).dump();
  deterministic &= report_to_json(c3()).dump() == report_to_json(r3).dump();
  deterministic &= report_to_json(c4()).dump() == report_to_json(r4).dump();
  deterministic &= report_to_json(c5()).dump() == report_to_json(r5).dump();
  deterministic &= report_to_json(c6()).dump() == report_to_json(r6).dump();

  bool formats_ok = true;
  std::uint64_t fixtures = 0;
  for (int n = 0; n <= 4 && formats_ok; ++n) {
    for_each_labeled(n, [&](const Tournament& t) {
      formats_ok = formats_ok && roundtrips(t);
      ++fixtures;
    });
  }
  for_each_labeled(4, [&](const Tournament& t) {
    formats_ok = formats_ok && roundtrips(embed_regular(t).output) &&
                 roundtrips(embed_type1(t).output) && roundtrips(embed_type2(t).output);
    fixtures += 3;
  });
  formats_ok = formats_ok && roundtrips(transitive_tournament(9)) &&
               roundtrips(pad_to_order(Tournament::from_edges(1, {}), 9).output);
  fixtures += 2;
  char buf7[96];
  std::snprintf(buf7, sizeof(buf7), "%llu round-trip fixtures, %.1fs",
                static_cast<unsigned long long>(fixtures), clock7.seconds());
  announce(7, "byte-identical reports on rerun; lossless JSON/DOT/matrix round trips",
           deterministic && formats_ok, buf7);
  if (!deterministic) std::fprintf(stderr, "criterion 7: a rerun produced a different report\n");
  if (!formats_ok) std::fprintf(stderr, "criterion 7: a fixture failed to round-trip\n");

  if (g_failures == 0) {
    std::printf("acceptance: all 7 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
