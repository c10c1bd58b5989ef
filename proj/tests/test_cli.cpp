#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "oacd/cli.hpp"

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "oacd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int rc = oacd::run_cli(int(argv.size()), argv.data(), out, err, in);
  return {rc, out.str(), err.str()};
}

const char* kTriangle = "x,y\n0,0\n4,0\n# apex\n0,4\n";

}  // namespace

TEST_CASE("build from stdin csv") {
  auto r = run({"build", "-i", "-"}, kTriangle);
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["counts"]["cells"] == 6);
  CHECK(j["counts"]["edges"] == 6);
  CHECK(j["counts"]["vertices3I"] == 1);
  CHECK(j["counts"]["vertices2I"] == 0);
  CHECK(j["particles"].size() == 13);
}

TEST_CASE("build from json input") {
  auto r = run({"build", "--format", "json", "--out", "table"}, R"([[0,0],["4","0"],[0,"4/1"]])");
  REQUIRE(r.rc == 0);
  CHECK(r.out.find("222") != std::string::npos);
  CHECK(r.out.find("vertex3I") != std::string::npos);
}

TEST_CASE("float input must be exact") {
  CHECK(run({"build", "--format", "json"}, "[[0,0],[0.5,0],[0,4]]").rc == 0);
  auto bad = run({"build", "--format", "json"}, "[[0,0],[0.1,0],[0,4]]");
  CHECK(bad.rc == 2);
}

TEST_CASE("degenerate input exits 2 with a report") {
  auto r = run({"build", "--out", "json"}, "1,0\n0,1\n-1,0\n0,-1\n");
  CHECK(r.rc == 2);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"] == "DegenerateInput");
  CHECK(j["validation"]["violations"].size() >= 1);
  CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("query the worked examples") {
  auto r = run({"query", "36A038", "25A058"});
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["relation"] == "Joint");
  CHECK(j["delta"] == "2");
  CHECK(j["gamma"] == 3);
  CHECK(j["evidence"] == nlohmann::json::array({"44A048"}));

  auto e = nlohmann::json::parse(run({"query", "07A247", "17A147"}).out);
  CHECK(e["relation"] == "Contains");
  CHECK(e["a"]["kind"] == "edge");
  CHECK(e["b"]["kind"] == "vertex2I");
}

TEST_CASE("query with a diagram marks realization") {
  auto r = run({"query", "024", "204", "-i", "-"}, kTriangle);
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["relation"] == "Connected");
  CHECK(j["realized"] == nlohmann::json::array({true}));
  CHECK(run({"query", "0246", "2046", "-i", "-"}, kTriangle).rc == 2);
}

TEST_CASE("bad codes exit 2") {
  CHECK(run({"query", "07#247", "17A147"}).rc == 2);
  CHECK(run({"query", "0000", "17A147"}).rc == 2);
}

TEST_CASE("verify suite") {
  auto r = run({"verify", "--n-min", "3", "--n-max", "4", "--trials", "3", "--seed", "5", "--out", "json"});
  CHECK(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["seed"] == 5);
  CHECK(j["summary"]["fail"] == 0);
  CHECK_FALSE(j["checks"][0].contains("millis"));
  auto t = run({"verify", "--n-min", "3", "--n-max", "3", "--trials", "1", "--out", "json", "--timing"});
  CHECK(nlohmann::json::parse(t.out)["checks"][0].contains("millis"));
}

TEST_CASE("verify one input") {
  auto r = run({"verify", "-i", "-"}, kTriangle);
  CHECK(r.rc == 0);
  CHECK(r.out.find("ok") != std::string::npos);
  CHECK(run({"verify", "-i", "-"}, "0,0\n1,0\n2,0\n").rc == 2);
}

TEST_CASE("render svg") {
  auto r = run({"render", "--edge-labels"}, kTriangle);
  REQUIRE(r.rc == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("</svg>") != std::string::npos);
  CHECK(r.out.find("class=\"v3I\"") != std::string::npos);
  CHECK(run({"render", "--bbox", "1,1,2,2"}, kTriangle).rc == 2);
}

TEST_CASE("matrix") {
  auto r = run({"matrix", "024", "204", "--with", "204", "240"});
  REQUIRE(r.rc == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["conn"] == true);
  CHECK(j["relation"]["relation"] == "Overlaps");
  CHECK(j["cdn_reading"] == "cross");
  auto t = run({"matrix", "024", "420", "--out", "table"});
  CHECK(t.out.find("conn: 0") != std::string::npos);
}

TEST_CASE("hidden") {
  auto r = run({"hidden"}, kTriangle);
  REQUIRE(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out).empty());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).rc == 2);
  CHECK(run({"frobnicate"}).rc == 2);
  CHECK(run({"build", "--out", "pdf"}, kTriangle).rc == 2);
  CHECK(run({"--help"}).rc == 0);
}
