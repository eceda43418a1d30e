#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <optional>

#include "regtour/harness.hpp"
#include "regtour/isomorphism.hpp"
#include "regtour/suite.hpp"

using namespace regtour;

namespace {

Tournament three_cycle() { return Tournament::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }

// Independent oracle: try every bijection in lexicographic order.
std::optional<std::vector<int>> brute_iso(const Tournament& a, const Tournament& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (a.arc(i, j) != b.arc(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
          ok = false;
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

TEST_CASE("are_isomorphic matches the brute-force oracle on all pairs up to order 4") {
  for (int n = 0; n <= 4; ++n) {
    const auto all = enumerate_labeled(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto expect = brute_iso(a, b);
        const auto got = are_isomorphic(a, b);
        REQUIRE(got.has_value() == expect.has_value());
        if (expect) {
          // Both searches scan candidates in ascending order, so the witness
          // must be the lexicographically least bijection.
          REQUIRE(got->map == *expect);
        }
      }
    }
  }
}

TEST_CASE("basic isomorphism examples") {
  CHECK(are_isomorphic(three_cycle(), invert(three_cycle())).has_value());
  CHECK_FALSE(are_isomorphic(three_cycle(), transitive_tournament(3)).has_value());
  CHECK(are_isomorphic(Tournament(), Tournament()).has_value());
  CHECK_FALSE(are_isomorphic(Tournament(), Tournament::from_edges(1, {})).has_value());
}

namespace {

// Brute-force isomorphism classes of all labeled tournaments with the given
// score sequence.
std::vector<Tournament> iso_classes_with_scores(int n, const std::vector<int>& scores) {
  std::vector<Tournament> reps;
  for_each_labeled(n, [&](const Tournament& t) {
    if (score_sequence(t).values() != scores) return;
    for (const auto& r : reps)
      if (brute_iso(r, t)) return;
    reps.push_back(t);
  });
  return reps;
}

}  // namespace

TEST_CASE("equal score sequences do not imply isomorphism") {
  // Order 4 is too small: the brute-force oracle shows (1,1,1,3) has exactly
  // one class (a dominant vertex over a triangle), as does every order-4
  // score sequence. The first genuine collisions appear at order 5.
  const auto order4 = iso_classes_with_scores(4, {1, 1, 1, 3});
  REQUIRE(order4.size() == 1);
  std::vector<Tournament> same_class;
  for_each_labeled(4, [&](const Tournament& t) {
    if (score_sequence(t).values() == std::vector<int>{1, 1, 1, 3}) same_class.push_back(t);
  });
  for (const auto& t : same_class) CHECK(are_isomorphic(order4[0], t).has_value());

  // Oracle-first at order 5: find a score sequence carrying at least two
  // classes and check that the search separates its representatives.
  bool found_collision = false;
  for (const ScoreSequence& s : enumerate_scores(5)) {
    const auto reps = iso_classes_with_scores(5, s.values());
    REQUIRE_FALSE(reps.empty());
    if (reps.size() < 2) continue;
    found_collision = true;
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        CHECK_FALSE(are_isomorphic(reps[i], reps[j]).has_value());
  }
  CHECK(found_collision);
}

TEST_CASE("certify_type basics") {
  const Tournament c3 = three_cycle();
  const auto w1 = certify_type(c3, TypeKind::type1);
  REQUIRE(w1.has_value());
  CHECK(w1->vertex == 0);
  const auto w2 = certify_type(c3, TypeKind::type2);
  REQUIRE(w2.has_value());
  CHECK(w2->vertex == 0);
  CHECK_THROWS_AS(certify_type(transitive_tournament(3), TypeKind::type1), std::invalid_argument);
  CHECK_THROWS_AS(certify_type_at(c3, TypeKind::type1, 5), std::out_of_range);
  // Order 0 is vacuously regular but has no witness vertex to offer.
  CHECK_FALSE(certify_type(Tournament(), TypeKind::type1).has_value());
}

TEST_CASE("certify_type scans vertices in label order") {
  // Rotational order-5 tournament: every vertex certifies, so the witness
  // must be vertex 0.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i)
    for (int d : {1, 2}) edges.emplace_back(i, (i + d) % 5);
  const Tournament r5 = Tournament::from_edges(5, edges);
  REQUIRE(is_regular(r5));
  const auto w = certify_type(r5, TypeKind::type1);
  REQUIRE(w.has_value());
  CHECK(w->vertex == 0);
}

TEST_CASE("isomorphism property battery up to order 4") {
  const VerificationReport rep = battery_isomorphism(4);
  INFO(report_table(rep));
  CHECK(rep.passed());
}
