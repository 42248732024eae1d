#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ballean/cli/run.hpp"

using namespace ballean::cli;
using nlohmann::json;

namespace {

std::string scenario(const std::string& name) { return std::string(BALLEAN_SCENARIO_DIR) + "/" + name + ".json"; }

RunResult run_file(const std::string& name, Format format = Format::Json) {
  RunOptions o;
  o.scenario_path = scenario(name);
  o.format = format;
  return run(o);
}

RunResult run_doc(const json& doc) { return run_text(doc.dump(), RunOptions{}); }

}  // namespace

TEST_CASE("antipodal grid search reports unsat with a certificate") {
  const auto r = run_file("antipodal-grid-n2-search");
  CHECK(r.exit_code == kFail);
  const auto report = json::parse(r.report);
  CHECK(report["outcome"] == "unsat");
  CHECK_FALSE(report["result"]["certificate"].empty());
  CHECK(report["result"]["replay"]["ok"] == true);
}

TEST_CASE("ordinal sum derive-selector passes") {
  const auto r = run_file("ordinal-sum-derive-selector");
  CHECK(r.exit_code == kPass);
  const auto report = json::parse(r.report);
  CHECK(report["result"]["check"]["passed"] == true);
  CHECK(report["result"]["order"]["split"] == json::array({"l0", "r0"}));
}

TEST_CASE("unknown point ids are schema errors naming the field") {
  const auto r = run_file("unknown-point");
  CHECK(r.exit_code == kError);
  CHECK(r.diagnostic.find("bornology.base[1][1]") != std::string::npos);
  CHECK(r.diagnostic.find("'z'") != std::string::npos);
  CHECK(json::parse(r.report)["outcome"] == "error");
}

TEST_CASE("schema violations") {
  CHECK(run_text("{", RunOptions{}).exit_code == kError);
  const auto no_version = run_doc({{"window", {{"points", {"a"}}}}, {"task", {{"kind", "validate"}}}});
  CHECK(no_version.diagnostic.find("version") != std::string::npos);
  const auto bad_task = run_doc({{"version", 1}, {"window", {{"points", {"a"}}}}, {"task", {{"kind", "nope"}}}});
  CHECK(bad_task.exit_code == kError);
  CHECK(bad_task.diagnostic.find("task.kind") != std::string::npos);
  const auto odd = run_doc({{"version", 1},
                            {"window", {{"generator", "ngon"}, {"n", 7}, {"delta", 1.0}, {"epsilon", 1.0}}},
                            {"task", {{"kind", "search"}}}});
  CHECK(odd.exit_code == kError);
  CHECK(odd.diagnostic.find("window.n") != std::string::npos);
  const auto missing = run_doc({{"version", 1}, {"window", {{"points", {"a", "b"}}}}, {"task", {{"kind", "check-two-selector"}}}});
  CHECK(missing.exit_code == kError);
  CHECK(missing.diagnostic.find("coarse") != std::string::npos);
}

TEST_CASE("exit codes agree with outcomes for every bundled scenario") {
  for (const auto& entry : std::filesystem::directory_iterator(BALLEAN_SCENARIO_DIR)) {
    RunOptions o;
    o.scenario_path = entry.path().string();
    const auto r = run(o);
    const auto report = json::parse(r.report);
    CHECK(report["exit_code"] == r.exit_code);
    const std::string outcome = report["outcome"];
    const int expected = outcome == "pass" || outcome == "found" ? kPass
                         : outcome == "fail" || outcome == "unsat" ? kFail
                         : outcome == "inconclusive"               ? kInconclusive
                                                                   : kError;
    CHECK(expected == r.exit_code);
  }
}

TEST_CASE("reports are byte-identical across runs and keys are sorted") {
  for (const auto& entry : std::filesystem::directory_iterator(BALLEAN_SCENARIO_DIR)) {
    for (const auto format : {Format::Json, Format::Text}) {
      RunOptions o;
      o.scenario_path = entry.path().string();
      o.format = format;
      CHECK(run(o).report == run(o).report);
    }
  }
  const auto text = run_file("line-transfer").report;
  CHECK(text.find("\"exit_code\"") < text.find("\"outcome\""));
  CHECK(text.find("\"outcome\"") < text.find("\"result\""));
}

TEST_CASE("search budget from options gives inconclusive") {
  RunOptions o;
  o.scenario_path = scenario("antipodal-grid-n2-search");
  o.max_steps = 2;
  const auto r = run(o);
  CHECK(r.exit_code == kInconclusive);
  CHECK(json::parse(r.report)["outcome"] == "inconclusive");
}

TEST_CASE("n-gon scenarios through the command layer") {
  CHECK(run_file("ngon8-unsat").exit_code == kFail);
  const auto found = run_file("ngon8-found");
  CHECK(found.exit_code == kPass);
  CHECK(json::parse(found.report)["result"]["witness_valid"] == true);
}

TEST_CASE("remaining bundled tasks") {
  CHECK(run_file("chain-interval-base").exit_code == kPass);
  CHECK(run_file("grid-lexicographic-check").exit_code == kFail);
  CHECK(run_file("grid-validate").exit_code == kPass);
  CHECK(run_file("graph-path-validate").exit_code == kPass);
  CHECK(run_file("truncated-line-derive-order").exit_code == kPass);
  const auto t = json::parse(run_file("line-transfer").report);
  CHECK(t["outcome"] == "pass");
  for (const auto& row : t["result"]["expected_moduli"]) CHECK(row["consistent"] == true);
}

TEST_CASE("text format leads with the outcome") {
  const auto r = run_file("explicit-search", Format::Text);
  CHECK(r.report.rfind("outcome: found\n", 0) == 0);
  CHECK(r.report.find("result.witness[0].value: \"1\"") != std::string::npos);
}

TEST_CASE("reports can be written to a file") {
  const auto path = std::filesystem::temp_directory_path() / "ballean_cli_test_report.json";
  RunOptions o;
  o.scenario_path = scenario("explicit-search");
  o.output_path = path.string();
  const auto r = run(o);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == r.report);
  std::filesystem::remove(path);
}
