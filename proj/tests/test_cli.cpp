#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dtc/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dtc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("act applies a twist") {
  const Run r = run({"act", "--surface", "once-punctured-torus", "--coords", R"([{"curve":0,"m":"3","t":"1"}])",
                     "--word", "T+0"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["coords"]["entries"][0]["m"] == "3");
  CHECK(doc["coords"]["entries"][0]["t"] == "4");
}

TEST_CASE("count") {
  const Run r = run({"count", "--surface", "once-punctured-torus", "--coords", R"([{"curve":0,"m":2,"t":0}])"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 2);
  const Run dump = run({"count", "--surface", "once-punctured-torus", "--coords", R"([{"curve":0,"m":2,"t":1}])",
                        "--dump-strands"});
  CHECK(json::parse(dump.out)["strands"]["matching"].size() == 4);
  const Run odd = run({"count", "--surface", "four-holed-sphere", "--coords", R"([{"curve":0,"m":1}])"});
  CHECK(odd.code == 1);
  CHECK(odd.out.empty());
}

TEST_CASE("verify-relations") {
  Run r = run({"verify-relations", "--surface", "once-punctured-torus", "--suite", "braid", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passed"] == true);
  r = run({"verify-relations", "--surface", "genus-two-closed", "--suite", "involution", "--samples", "50"});
  CHECK(r.code == 3);
  const json doc = json::parse(r.out);
  CHECK(doc["passed"] == false);
  bool has_counterexample = false;
  for (const auto& p : doc["suites"][0]["properties"]) has_counterexample |= p.contains("counterexample");
  CHECK(has_counterexample);
}

TEST_CASE("dilatation and scan") {
  Run r = run({"dilatation", "--surface", "once-punctured-torus", "--word", "T+0 M1@0 T-0 M1@0"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(json::parse(r.out)["lambda"].get<double>() - 2.6180339887498949) < 1e-6);
  r = run({"dilatation", "--surface", "once-punctured-torus", "--word", "T+0 M1@0 T-0 M1@0", "--tol", "0"});
  CHECK(r.code == 1);

  r = run({"scan", "--surface", "once-punctured-torus", "--max-length", "3"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    CHECK(j.contains("word"));
    CHECK(j.contains("log_lambda"));
    CHECK(j.contains("converged"));
    CHECK(j.contains("iterations"));
    ++n;
  }
  CHECK(n > 0);
  const Run again = run({"scan", "--surface", "once-punctured-torus", "--max-length", "3", "--threads", "3"});
  CHECK(again.out == r.out);
}

TEST_CASE("errors are structured") {
  Run r = run({"act", "--surface", "once-punctured-torus", "--coords", R"([{"curve":0,"m":"3"}])", "--word", "T+9"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  json e = json::parse(r.err)["error"];
  CHECK(e["kind"] == "parse");
  CHECK(e["column"] == 1);
  CHECK(e["message"] == "unknown curve id 9 at column 1");

  r = run({"act", "--surface", "no-such-surface.json", "--coords", "[]"});
  CHECK(r.code == 1);
  r = run({"act", "--surface", "once-punctured-torus", "--coords", "[{"});
  CHECK(r.code == 1);
  r = run({"frobnicate"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.err)["error"]["kind"] == "usage");
}

TEST_CASE("presets and --out") {
  const auto path = std::filesystem::temp_directory_path() / "dtc_cli_presets.json";
  const Run r = run({"presets", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const json doc = json::parse(in);
  CHECK(doc.size() == 4);
  std::filesystem::remove(path);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify-relations", "--surface", "four-holed-sphere", "--samples", "30"};
  CHECK(run(args).out == run(args).out);
}
