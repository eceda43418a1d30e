#include <catch2/catch_amalgamated.hpp>

#include "regtour/harness.hpp"
#include "regtour/io.hpp"

using namespace regtour;

namespace {

Tournament three_cycle() { return Tournament::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("JSON form") {
  // Edges are listed one per pair, ordered by (low label, high label).
  const std::string text = to_json_string(three_cycle());
  CHECK(text == R"({"edges":[[0,1],[2,0],[1,2]],"n":3})");
  CHECK(read_tournament_json(text) == three_cycle());

  CHECK_THROWS_WITH(read_tournament_json("{"), Catch::Matchers::ContainsSubstring("not valid JSON"));
  CHECK_THROWS_WITH(read_tournament_json(R"({"n":2})"),
                    Catch::Matchers::ContainsSubstring("\"n\" and \"edges\""));
  CHECK_THROWS_WITH(read_tournament_json(R"({"n":2,"edges":[[0]]})"),
                    Catch::Matchers::ContainsSubstring("pair of integers"));
  CHECK_THROWS_WITH(read_tournament_json(R"({"n":2,"edges":[]})"),
                    Catch::Matchers::ContainsSubstring("missing edge"));
}

TEST_CASE("matrix form") {
  const std::string text = to_matrix_string(three_cycle());
  CHECK(text == "010\n001\n100\n");
  CHECK(read_tournament_matrix(text) == three_cycle());
  CHECK_THROWS_WITH(read_tournament_matrix("01\n001\n100\n"),
                    Catch::Matchers::ContainsSubstring("length"));
  CHECK_THROWS_WITH(read_tournament_matrix("0a\n00\n"),
                    Catch::Matchers::ContainsSubstring("invalid character"));
  CHECK_THROWS_WITH(read_tournament_matrix("01\n10\n"),
                    Catch::Matchers::ContainsSubstring("conflicting orientation"));
}

TEST_CASE("DOT form") {
  const std::string text = to_dot(three_cycle());
  CHECK(read_tournament_dot(text) == three_cycle());
  // Exactly C(n,2) edge statements.
  std::size_t arrows = 0;
  for (std::size_t pos = text.find("->"); pos != std::string::npos; pos = text.find("->", pos + 1))
    ++arrows;
  CHECK(arrows == 3);
  CHECK(read_tournament_dot("digraph {\n}\n").order() == 0);
  CHECK_THROWS_WITH(read_tournament_dot("graph broken"),
                    Catch::Matchers::ContainsSubstring("braces"));
  CHECK_THROWS_WITH(read_tournament_dot("digraph { 0 -- 1; }"),
                    Catch::Matchers::ContainsSubstring("edge statement"));
}

TEST_CASE("format auto-detection") {
  CHECK(read_tournament_auto(to_json_string(three_cycle())) == three_cycle());
  CHECK(read_tournament_auto(to_dot(three_cycle())) == three_cycle());
  CHECK(read_tournament_auto(to_matrix_string(three_cycle())) == three_cycle());
  CHECK_THROWS_WITH(read_tournament_auto("???"),
                    Catch::Matchers::ContainsSubstring("unrecognized"));
  CHECK_THROWS_WITH(read_tournament_auto("   "),
                    Catch::Matchers::ContainsSubstring("unrecognized"));
}

TEST_CASE("round trips are lossless over all labeled tournaments up to order 4") {
  for (int n = 0; n <= 4; ++n) {
    for_each_labeled(n, [&](const Tournament& t) {
      CHECK(read_tournament_json(to_json_string(t)) == t);
      CHECK(read_tournament_matrix(to_matrix_string(t)) == t);
      CHECK(read_tournament_dot(to_dot(t)) == t);
    });
  }
}

TEST_CASE("trace and extension JSON carry the kind-specific fields") {
  const Tournament t3 = transitive_tournament(3);
  const nlohmann::json t2j = trace_to_json(embed_type2(t3).trace);
  CHECK(t2j["kind"] == "type2");
  CHECK(t2j["witness"] == 6);
  CHECK(t2j["matrix_c"].is_array());

  const GreedyResult g = greedy_type2(t3);
  const nlohmann::json gj = trace_to_json(g.extension.trace);
  CHECK(gj["kind"] == "greedy");
  CHECK(gj["relabel_log"].size() == 3);

  const nlohmann::json ej = extension_to_json(embed_regular(t3), true);
  CHECK(ej["kind"] == "inductive");
  CHECK(ej["regular"] == true);
  CHECK(ej.contains("trace"));
  CHECK_FALSE(extension_to_json(embed_regular(t3), false).contains("trace"));

  const nlohmann::json pj = trace_to_json(pad_to_order(three_cycle(), 7).trace);
  CHECK(pj["kind"] == "pad");
  CHECK(pj["steps"].size() == 2);
  CHECK(pj["steps"][0]["kind"] == "plus_two");
}

TEST_CASE("report JSON stays canonical and the table mentions failures") {
  VerificationReport rep;
  rep.scope = "demo";
  rep.instances = 2;
  rep.per_order[3] = 2;
  rep.add_failure("kind", "prop", "something broke", "{}");
  const nlohmann::json j = report_to_json(rep);
  CHECK(j["pass"] == false);
  CHECK(j["failure_count"] == 1);
  CHECK_FALSE(j.contains("elapsed_seconds"));
  CHECK(report_to_json(rep, true).contains("elapsed_seconds"));
  const std::string table = report_table(rep);
  CHECK(table.find("something broke") != std::string::npos);
  CHECK(table.find("status:    FAIL") != std::string::npos);
}
