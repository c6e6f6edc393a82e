#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cylrig/cli.hpp"
#include "cylrig/io.hpp"

using namespace cylrig;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cylrig");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(CYLRIG_FIXTURES_DIR) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = std::string("/tmp/cylrig_cli_test_") + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("check on F1") {
  Run r = run({"check", "--input", fixture("Ci_F1.json")});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["tight"] == true);
  CHECK(j["gamma_tight"] == true);
  CHECK(j["characters"]["pass"] == true);
  CHECK(j["seed"] == 0);
}

TEST_CASE("every bundled base graph passes check") {
  for (const char* f : {"C2_F2.json", "C2_K4.json", "C2_W5.json", "C2_Wd42.json", "Ci_F1.json",
                        "Ci_F2.json", "Cs_F1nf.json", "Cs_F1tf.json", "Cs_F2.json",
                        "Cs_K34.json", "Cs_W5.json", "Cs_Wd42.json"}) {
    Run r = run({"check", "--input", fixture(f)});
    CAPTURE(f);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["gamma_tight"] == true);
  }
}

TEST_CASE("certify on K5 reports a witness") {
  Run r = run({"certify", "--input", fixture("K5_C2.json")});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["certified"] == false);
  CHECK(j["witness"].size() == 5);
}

TEST_CASE("isostatic on Wd(4,2)") {
  Run r = run({"isostatic", "--input", fixture("C2_Wd42.json"), "--seed", "0"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["isostatic"] == true);
  CHECK(j["max_rank"] == 19);
  CHECK(j["seed"] == 0);
}

TEST_CASE("certify then replay") {
  Run c = run({"certify", "--input", fixture("Cs_W5.json")});
  REQUIRE(c.code == 0);
  std::string path = temp_file("cert.json", c.out);
  Run r = run({"replay", "--input", path});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["gamma_tight"] == true);
  CHECK(j["graph"]["vertices"] == 5);
}

TEST_CASE("trees and characters") {
  Run t = run({"trees", "--input", fixture("C2_Wd42.json")});
  REQUIRE(t.code == 0);
  Json j = Json::parse(t.out);
  CHECK(j["verified"] == true);
  CHECK(j["coloring"].size() == 12);

  Run ch = run({"characters", "--input", fixture("Ci_F1.json"), "--format", "text"});
  REQUIRE(ch.code == 0);
  CHECK(ch.out.find("characters.pass: true") != std::string::npos);
}

TEST_CASE("basegraphs self-verifies") {
  Run r = run({"basegraphs", "--timing"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["all_verified"] == true);
  CHECK(j["entries"].size() == 18);
  CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("error exits") {
  CHECK(run({"check", "--input", "/nonexistent.json"}).code == 1);
  CHECK(run({"check"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"check", "--input", fixture("Ci_F1.json"), "--format", "xml"}).code == 1);
  CHECK(run({"check", "--input", temp_file("bad.json", "{oops")}).code == 1);

  std::string c2v = temp_file("c2v.json", R"({"group": "C2v",
      "vertices": ["1", "2", "3", "4"],
      "edges": [["1", "2"], ["1", "3"], ["1", "4"], ["2", "3"], ["2", "4"], ["3", "4"]],
      "action": {"sigma": {"1": "2", "2": "1", "3": "4", "4": "3"},
                 "sigma_p": {"1": "3", "3": "1", "2": "4", "4": "2"}}})");
  Run r = run({"certify", "--input", c2v});
  CHECK(r.code == 1);
  CHECK(r.err.find("necessary conditions only; see characters") != std::string::npos);
  CHECK(run({"characters", "--input", c2v}).code == 0);
  CHECK(run({"--help"}).code == 0);
}
