#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "regtour/cli.hpp"

using namespace regtour;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream f(path, std::ios::trunc);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("embed type1 on the single vertex prints the triangle") {
  const CliRun r = run({"embed", "--kind", "type1"}, R"({"n":1,"edges":[]})");
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "type1");
  CHECK(j["output"]["n"] == 3);
  CHECK(j["regular"] == true);
  CHECK(tournament_from_json(j["output"]) ==
        Tournament::from_edges(3, {{0, 2}, {2, 1}, {1, 0}}));
}

TEST_CASE("embed with trace and alternative formats") {
  const std::string cycle = R"({"n":3,"edges":[[0,1],[1,2],[2,0]]})";
  const CliRun traced = run({"embed", "--kind", "type2", "--trace"}, cycle);
  REQUIRE(traced.code == 0);
  CHECK(nlohmann::json::parse(traced.out)["trace"]["matrix_c"].is_array());

  const CliRun dot = run({"embed", "--kind", "regular", "--format", "dot"}, cycle);
  REQUIRE(dot.code == 0);
  CHECK(dot.out.rfind("digraph {", 0) == 0);

  const CliRun bad = run({"embed", "--kind", "regular", "--format", "dot", "--trace"}, cycle);
  CHECK(bad.code == 2);
  CHECK(bad.err.find("--trace requires") != std::string::npos);

  const CliRun greedy = run({"embed", "--kind", "greedy"}, cycle);
  REQUIRE(greedy.code == 0);
  CHECK(nlohmann::json::parse(greedy.out)["conjecture_holds"] == true);
}

TEST_CASE("check reports scores, conditions and types") {
  const std::string path = write_temp("regtour_cli_t3.json", R"({"n":3,"edges":[[1,0],[2,0],[2,1]]})");
  const CliRun r = run({"check", "--input", path});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["regular"] == false);
  CHECK(j["score_sequence"] == nlohmann::json::array({0, 1, 2}));
  CHECK(j["conditions"]["star"] == true);
  CHECK(j["type1"].is_null());

  const CliRun reg = run({"check"}, R"({"n":3,"edges":[[0,1],[1,2],[2,0]]})");
  const nlohmann::json jr = nlohmann::json::parse(reg.out);
  CHECK(jr["regular"] == true);
  CHECK(jr["type1"]["vertex"] == 0);
  CHECK(jr["type2"]["vertex"] == 0);
  std::filesystem::remove(path);
}

TEST_CASE("scores subcommand") {
  const CliRun list = run({"scores", "--enumerate", "3"});
  REQUIRE(list.code == 0);
  CHECK(list.out == "1,1,1\n0,1,2\n");

  const CliRun realize = run({"scores", "--realize", "0,1,2", "--format", "matrix"});
  REQUIRE(realize.code == 0);
  CHECK(realize.out == "000\n100\n110\n");

  CHECK(run({"scores"}).code == 2);
  CHECK(run({"scores", "--enumerate", "2", "--realize", "0,1"}).code == 2);
  CHECK(run({"scores", "--realize", "0,0,3"}).code == 2);
}

TEST_CASE("galeryser subcommand") {
  CHECK(run({"galeryser", "--feasible", "--rows", "2,1", "--cols", "2,1"}).out == "true\n");
  CHECK(run({"galeryser", "--feasible", "--rows", "2,0", "--cols", "2,0"}).out == "false\n");
  CHECK(run({"galeryser", "--feasible", "--rows", "4", "--cols", "2,2", "--lambda", "2"}).out ==
        "true\n");

  const CliRun mat = run({"galeryser", "--realize", "--rows", "2,1", "--cols", "2,1"});
  REQUIRE(mat.code == 0);
  CHECK(mat.out == "11\n10\n");

  const CliRun infeasible = run({"galeryser", "--realize", "--rows", "2,0", "--cols", "2,0"});
  CHECK(infeasible.code == 2);
  CHECK(infeasible.err.find("not realizable") != std::string::npos);
  CHECK(run({"galeryser", "--rows", "1", "--cols", "1"}).code == 2);
  CHECK(run({"galeryser", "--feasible", "--rows", "1", "--cols", "x"}).code == 2);
}

TEST_CASE("verify-conjecture subcommand") {
  const CliRun r = run({"verify-conjecture", "--n-max", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["instances"] == 8);  // 1+1+2+4 sequences

  const CliRun table = run({"verify-conjecture", "--n-max", "3", "--shards", "2"});
  CHECK(table.code == 0);
  CHECK(table.out.find("status:    PASS") != std::string::npos);
  CHECK(run({"verify-conjecture", "--n-max", "0"}).code == 2);
}

TEST_CASE("enumerate subcommand") {
  const CliRun r = run({"enumerate", "--order", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out == R"({"edges":[[1,0]],"n":2})"
                 "\n"
                 R"({"edges":[[0,1]],"n":2})"
                 "\n");
  CHECK(run({"enumerate", "--order", "8"}).code == 2);
}

TEST_CASE("enumerate sampling is seed-deterministic") {
  const CliRun a = run({"enumerate", "--order", "9", "--sample", "5", "--seed", "7"});
  const CliRun b = run({"enumerate", "--order", "9", "--sample", "5", "--seed-for-samplers", "7"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 5);
  const CliRun c = run({"enumerate", "--order", "9", "--sample", "5", "--seed", "8"});
  CHECK(a.out != c.out);
  for (std::size_t pos = 0, line_end = 0; pos < a.out.size(); pos = line_end + 1) {
    line_end = a.out.find('\n', pos);
    const Tournament t = read_tournament_json(a.out.substr(pos, line_end - pos));
    CHECK(t.order() == 9);
  }
  CHECK(run({"enumerate", "--order", "12", "--sample", "2"}).code == 2);
}

TEST_CASE("export round-trips through every format") {
  const std::string json = R"({"n":3,"edges":[[0,1],[1,2],[2,0]]})";
  const CliRun dot = run({"export", "--format", "dot"}, json);
  REQUIRE(dot.code == 0);
  const CliRun back = run({"export", "--format", "json"}, dot.out);
  REQUIRE(back.code == 0);
  CHECK(read_tournament_json(back.out) == read_tournament_json(json));

  const CliRun matrix = run({"export", "--format", "matrix"}, json);
  const CliRun back2 = run({"export", "--format", "json"}, matrix.out);
  CHECK(back2.out == back.out);
}

TEST_CASE("suite subcommand honors config files and fault injection") {
  const std::string cfg = write_temp("regtour_cli_suite.json", R"({
    "core_max_order": 3, "iso_max_order": 2, "scores_max_order": 4,
    "scores_brute_max_order": 3, "gale_ryser_max_dim": 2, "embed_max_order": 3,
    "plus_two_max_order": 3, "oracle_max_order": 2, "greedy_max_order": 3,
    "decoupling_max_order": 3})");
  const CliRun ok = run({"suite", "--config", cfg, "--format", "json"});
  REQUIRE(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["pass"] == true);

  const CliRun faulty = run({"suite", "--config", cfg, "--fault-injection"});
  CHECK(faulty.code == 1);
  CHECK(faulty.out.find("status:    FAIL") != std::string::npos);

  const std::string bad_cfg = write_temp("regtour_cli_suite_bad.json", R"({"nope": 1})");
  const CliRun bad = run({"suite", "--config", bad_cfg});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown config key") != std::string::npos);
  std::filesystem::remove(cfg);
  std::filesystem::remove(bad_cfg);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  const CliRun missing = run({"embed"}, "");
  CHECK(missing.code == 2);
  const CliRun badfile = run({"check", "--input", "/nonexistent/f.json"});
  CHECK(badfile.code == 2);
  CHECK(badfile.err.find("cannot open") != std::string::npos);
  const CliRun garbage = run({"check"}, "???");
  CHECK(garbage.code == 2);
  CHECK(garbage.err.find("unrecognized") != std::string::npos);
  const CliRun help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("embed") != std::string::npos);
}
