#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "djgraph/generators.hpp"
#include "djgraph/graph.hpp"
#include "djgraph/io.hpp"
#include "support/helpers.hpp"

using namespace djgraph;
namespace dt = djgraph::testing;
using ordered_json = nlohmann::ordered_json;

namespace {

// Scratch directory shared by all cases in this binary.
const std::string& scratch_dir() {
  static const std::string dir = [] {
    char tmpl[] = "/tmp/djgraph_cli_XXXXXX";
    const char* made = ::mkdtemp(tmpl);
    if (!made) throw std::runtime_error("mkdtemp failed");
    return std::string(made);
  }();
  return dir;
}

std::string scratch(const std::string& name) {
  return scratch_dir() + "/" + name;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(dt::run_cli("").exit_code == 2);
  CHECK(dt::run_cli("frobnicate").exit_code == 2);
  CHECK(dt::run_cli("generate").exit_code == 2);
  CHECK(dt::run_cli("generate extremal --n 11").exit_code == 2);  // missing --k
  const auto help = dt::run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("generate") != std::string::npos);
  CHECK(help.output.find("search") != std::string::npos);
}

TEST_CASE("generate writes the named graph document") {
  const auto res = dt::run_cli("generate extremal --n 11 --k 2");
  REQUIRE(res.exit_code == 0);
  const NamedGraph named = parse_graph_json(res.output);
  CHECK(named.name == "gnk-11-2");
  CHECK(named.graph == extremal_gnk(11, 2));

  const auto custom = dt::run_cli("generate extremal --n 9 --k 2 --name foo");
  REQUIRE(custom.exit_code == 0);
  CHECK(parse_graph_json(custom.output).name == "foo");

  const std::string out = scratch("gnk.json");
  const auto filed =
      dt::run_cli("generate extremal --n 11 --k 2 --out " + out + " --quiet");
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.output.empty());
  CHECK(dt::slurp(out) == res.output);
}

TEST_CASE("generate rejects impossible parameters") {
  const auto parity = dt::run_cli("generate extremal --n 10 --k 2");
  CHECK(parity.exit_code == 2);
  CHECK(parity.output.find("error:") != std::string::npos);
  CHECK(dt::run_cli("generate extremal --n 11 --k 2 --strict-range")
            .exit_code == 2);
  CHECK(dt::run_cli("generate random-convex --n 8 --p 0.5 --seed 1")
            .exit_code == 2);
  CHECK(dt::run_cli("generate stars --n 0").exit_code == 2);
}

TEST_CASE("generate, analyze, verify: the full pipeline") {
  const std::string graph_path = scratch("pipeline.json");
  const std::string analysis_path = scratch("pipeline_analysis.json");
  REQUIRE(dt::run_cli("generate random-convex --n 8 --p 2/3 --seed 1 --out " +
                      graph_path + " --quiet")
              .exit_code == 0);

  REQUIRE(dt::run_cli("analyze " + graph_path + " --out " + analysis_path +
                      " --quiet")
              .exit_code == 0);
  const ordered_json doc = ordered_json::parse(dt::slurp(analysis_path));
  CHECK(doc["schema"] == "djgraph-analysis-1");
  CHECK(doc["aggregates"]["dj_total"] == 33);
  CHECK(doc["aggregates"]["n_l"] == 1);

  const auto audit = dt::run_cli("verify " + analysis_path);
  CHECK(audit.exit_code == 0);
  CHECK(audit.output.find("report consistent") != std::string::npos);
  // Analysis documents always take the audit path, claims flag or not.
  CHECK(dt::run_cli("verify " + analysis_path + " --claims eq_9").exit_code ==
        0);

  const auto all = dt::run_cli("verify " + graph_path);
  CHECK(all.exit_code == 0);
  CHECK(all.output.find("lemma_2_1: holds") != std::string::npos);
  CHECK(all.output.find("eq_9: holds lhs=33 rhs=30") != std::string::npos);

  const std::string reports_path = scratch("pipeline_claims.json");
  const auto one = dt::run_cli("verify " + graph_path +
                               " --claims eq_9,ineq_10 --out " + reports_path +
                               " --quiet");
  CHECK(one.exit_code == 0);
  const ordered_json claims = ordered_json::parse(dt::slurp(reports_path));
  CHECK(claims["schema"] == "djgraph-claims-1");
  REQUIRE(claims["reports"].size() == 2);
  CHECK(claims["reports"][0]["claim"] == "eq_9");
  CHECK(claims["reports"][1]["claim"] == "ineq_10");
}

TEST_CASE("verify flags a tampered analysis document") {
  const std::string graph_path = scratch("tamper.json");
  const std::string analysis_path = scratch("tamper_analysis.json");
  REQUIRE(dt::run_cli("generate convex-complete --n 6 --out " + graph_path +
                      " --quiet")
              .exit_code == 0);
  REQUIRE(dt::run_cli("analyze " + graph_path + " --out " + analysis_path +
                      " --quiet")
              .exit_code == 0);

  ordered_json doc = ordered_json::parse(dt::slurp(analysis_path));
  doc["aggregates"]["dj_total"] = 7;
  dt::spit(analysis_path, doc.dump());

  const auto audit = dt::run_cli("verify " + analysis_path);
  CHECK(audit.exit_code == 1);
  CHECK(audit.output.find("report inconsistent") != std::string::npos);
  CHECK(audit.output.find("dj_total") != std::string::npos);
}

TEST_CASE("verify exits one on a violated claim") {
  const std::string fixture = dt::fixture_path("eq9_violation.json");
  const auto res = dt::run_cli("verify " + fixture);
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("eq_9: violated lhs=18 rhs=20") != std::string::npos);
  CHECK(res.output.find("nell_equals_eGprime: holds") != std::string::npos);

  const auto scoped = dt::run_cli("verify " + fixture + " --claims lemma_2_1");
  CHECK(scoped.exit_code == 0);
}

TEST_CASE("verify rejects unknown claims and broken input") {
  const std::string graph_path = scratch("reject.json");
  REQUIRE(dt::run_cli("generate stars --n 3 --out " + graph_path + " --quiet")
              .exit_code == 0);
  const auto unknown = dt::run_cli("verify " + graph_path + " --claims nope");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.output.find("valid names") != std::string::npos);
  CHECK(unknown.output.find("lemma_2_1") != std::string::npos);
  CHECK(dt::run_cli("verify " + graph_path + " --claims ,,").exit_code == 2);

  const std::string broken = scratch("broken.json");
  dt::spit(broken, "{not json");
  const auto bad = dt::run_cli("verify " + broken);
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("error:") != std::string::npos);
  CHECK(dt::run_cli("verify " + scratch("missing.json")).exit_code == 2);
}

TEST_CASE("oracle cross-checks all counting routes") {
  const std::string gnk_path = scratch("oracle_gnk.json");
  REQUIRE(dt::run_cli("generate extremal --n 11 --k 2 --out " + gnk_path +
                      " --quiet")
              .exit_code == 0);
  const auto convex = dt::run_cli("oracle " + gnk_path);
  CHECK(convex.exit_code == 0);
  CHECK(convex.output.find("dj_graph=22") != std::string::npos);
  CHECK(convex.output.find("dj_edge_half_sum=22") != std::string::npos);
  CHECK(convex.output.find("convex_chord_oracle=22") != std::string::npos);
  CHECK(convex.output.find("agreement=yes") != std::string::npos);

  // A point inside the hull disables the chord rule but not the handshake.
  const std::string pit_path = scratch("oracle_pit.json");
  dt::spit(pit_path,
           graph_json(GeometricGraph({{0, 0}, {10, 0}, {5, 9}, {5, 3}},
                                     {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3},
                                      {2, 3}}),
                      "pit"));
  const auto pit = dt::run_cli("oracle " + pit_path);
  CHECK(pit.exit_code == 0);
  CHECK(pit.output.find("dj_graph=3") != std::string::npos);
  CHECK(pit.output.find("convex_chord_oracle=not_applicable") !=
        std::string::npos);
  CHECK(pit.output.find("agreement=yes") != std::string::npos);
}

TEST_CASE("search: clean run, determinism, worker independence") {
  const std::string base = "search --instances 6 --n-range 6:8 --p 1/2,2/3 "
                           "--seed 42 --claims theorem_2,theorem_3 --quiet";
  const std::string out_a = scratch("search_a.json");
  const std::string out_b = scratch("search_b.json");
  const std::string csv = scratch("search.csv");

  REQUIRE(dt::run_cli(base + " --csv " + csv + " --out " + out_a).exit_code ==
          0);
  REQUIRE(dt::run_cli(base + " --parallelism 3 --out " + out_b).exit_code == 0);
  CHECK(dt::slurp(out_a) == dt::slurp(out_b));

  // The environment override is just another way to set the worker count.
  const std::string out_env = scratch("search_env.json");
  REQUIRE(dt::run_command("DJGRAPH_PARALLELISM=2 " + dt::cli_path() + " " +
                          base + " --out " + out_env)
              .exit_code == 0);
  CHECK(dt::slurp(out_a) == dt::slurp(out_env));

  const ordered_json doc = ordered_json::parse(dt::slurp(out_a));
  CHECK(doc["schema"] == "djgraph-search-1");
  CHECK(doc["instances_run"] == 6);
  CHECK(doc["config"]["claims"] ==
        ordered_json::array({"theorem_2", "theorem_3"}));
  const std::string csv_text = dt::slurp(csv);
  CHECK(csv_text.rfind("claim,holds,violated,not_applicable\n", 0) == 0);
  CHECK(csv_text.find("theorem_3,") != std::string::npos);
}

TEST_CASE("search surfaces violations through the exit code") {
  const std::string out = scratch("search_eq9.json");
  const auto res = dt::run_cli(
      "search --instances 40 --n-range 6:9 --p 1/2 --seed 2025 "
      "--min-degree 2 --claims eq_9 --quiet --out " + out);
  CHECK(res.exit_code == 1);
  const ordered_json doc = ordered_json::parse(dt::slurp(out));
  REQUIRE_FALSE(doc["violations"].empty());
  CHECK(doc["violations"][0]["label"] == "violation");
  CHECK(doc["violations"][0]["report"]["claim"] == "eq_9");
  CHECK(doc["violations"][0]["spec"]["kind"] == "random_convex");
}

TEST_CASE("search argument validation") {
  CHECK(dt::run_cli("search --instances 2 --seed 1 --n-range 9").exit_code ==
        2);
  CHECK(dt::run_cli("search --instances 2 --seed 1 --p 0.5").exit_code == 2);
  CHECK(dt::run_cli("search --instances 2 --seed 1 --family smallworld")
            .exit_code == 2);
  CHECK(dt::run_cli("search --instances 2 --seed 1 --claims wat").exit_code ==
        2);
  CHECK(dt::run_cli("search --seed 1").exit_code == 2);  // missing --instances
}

TEST_CASE("repeated invocations are byte-identical") {
  const auto a = dt::run_cli("generate random-general --n 7 --p 1/2 --seed 9 "
                             "--box 500");
  const auto b = dt::run_cli("generate random-general --n 7 --p 1/2 --seed 9 "
                             "--box 500");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  const NamedGraph named = parse_graph_json(a.output);
  CHECK(named.graph == random_general_graph(7, Prob{1, 2}, 9, 500));
  CHECK(named.name == "random_general-n7-p1of2-s9-b500");
}
