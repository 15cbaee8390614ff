#include "sigmakl/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sigmakl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("table json") {
  const Result r = run({"table", "--type", "A2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["system"]["type"] == "A2");
  CHECK(j["system"]["order"] == 6);
  CHECK(j["system"]["involutions"] == 4);
  CHECK(j["system"]["twisted"] == false);
  // pairs y <= w among 1, s, t, sts: 1 + 2 + 2 + 4
  REQUIRE(j["entries"].size() == 9);
  for (const auto& e : j["entries"]) CHECK(e["sigma"] == json{{"0", "1"}});
  CHECK(j["entries"][0]["y"] == json::array());
  CHECK_FALSE(j["entries"][0].contains("classic"));
}

TEST_CASE("table with classic polynomials and a length bound") {
  const Result r = run({"table", "--type", "B2", "--classic", "--max-length", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  for (const auto& e : j["entries"]) {
    CHECK(e["w"].size() <= 1);
    CHECK(e.contains("classic"));
  }
}

TEST_CASE("csv and text formats") {
  const Result csv = run({"table", "--type", "A1", "--format", "csv", "--classic"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "y_word,w_word,poly,classic_poly\n\"[]\",\"[]\",0:1,0:1\n\"[]\",\"[0]\",0:1,0:1\n\"[0]\",\"[0]\",0:1,0:1\n");
  const Result text = run({"table", "--type", "A1", "--format", "text"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("P^sigma = 1") != std::string::npos);
}

TEST_CASE("classical kl table") {
  const Result r = run({"kl", "--type", "A3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  bool nontrivial = false;
  for (const auto& e : j["entries"])
    if (e["poly"].size() > 1) nontrivial = true;
  CHECK(nontrivial);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--type", "B3", "--jobs", "4"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["counterexample"].is_null());
  for (const auto& s : j["suites"]) CHECK(s["status"] != "fail");

  const Result tw = run({"verify", "--type", "A3", "--twisted", "delta=2,1,0", "--format", "text"});
  CHECK(tw.code == 0);
  CHECK(tw.out.find("all suites passed") != std::string::npos);
}

TEST_CASE("character") {
  const Result r = run({"character", "--type", "A2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["equal"] == true);
  REQUIRE(j["classes"].size() == 3);
  CHECK(j["classes"][0]["chi_m1"] == 4);
  CHECK(j["classes"][0]["class_size"] == 1);
}

TEST_CASE("cells") {
  const Result r = run({"cells", "--type", "A2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["cells"].size() == 3);
  CHECK(j["cells"][1]["size"] == 4);
  CHECK(j["cells"][1]["involution_count"] == 2);
  CHECK(j["cells"][1]["representatives"] == json{{0}, {1}});

  CHECK(run({"cells", "--type", "A5"}).code == 2);
  CHECK(run({"cells", "--type", "B3", "--cell-cap", "20"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"table"}).code == 2);
  CHECK(run({"table", "--type", "Q3"}).code == 2);
  CHECK(run({"table", "--type", "A2", "--format", "xml"}).code == 2);
  CHECK(run({"table", "--type", "A3", "--twisted", "delta=1,0,2"}).code == 2);
  CHECK(run({"table", "--type", "I2(5)"}).code == 2);
  CHECK(run({"table", "--type", "I2(5)", "--experimental"}).code == 0);
  CHECK(run({"character", "--type", "I2(5)", "--experimental"}).code == 0);
  CHECK(run({"table", "--type", "A2", "--jobs", "0"}).code == 2);
  CHECK_FALSE(run({"table", "--type", "Q3"}).err.empty());
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is independent of the thread count") {
  for (const std::string type : {"A4", "D4"}) {
    const std::string one = run({"table", "--type", type, "--jobs", "1", "--classic"}).out;
    CHECK(run({"table", "--type", type, "--jobs", "4", "--classic"}).out == one);
    CHECK(run({"table", "--type", type, "--jobs", "8", "--classic"}).out == one);
  }
}

TEST_CASE("out file") {
  const auto path = std::filesystem::temp_directory_path() / "sigmakl_cli_test.json";
  const Result r = run({"table", "--type", "A1", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run({"table", "--type", "A1"}).out);
  std::filesystem::remove(path);
}

}
