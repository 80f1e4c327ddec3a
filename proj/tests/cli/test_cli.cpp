#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "s2s2_cli/cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = s2s2::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> numbers(const std::string& text) {
  static const std::regex number(R"(-?\d+(\.\d+)?([eE][-+]?\d+)?)");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it)
    out.push_back(it->str());
  std::sort(out.begin(), out.end());
  return out;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("snf reads a matrix from stdin") {
  auto r = run({"snf", "--format", "json"}, "1 0\n0 1\n");
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["results"]["d"] == Json::parse("[[1,0],[0,1]]"));
  CHECK(j["results"]["diagonal"] == Json::parse(R"(["1","1"])"));
}

TEST_CASE("bordism for Z4 ends with three Z/2 summands") {
  auto r = run({"bordism", "--group", "Z4", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  std::vector<std::pair<int, int>> where;
  for (const auto& s : j["results"]["summands"]) {
    CHECK(s["group"] == "Z/2");
    where.emplace_back(s["p"], s["q"]);
  }
  std::sort(where.begin(), where.end());
  CHECK(where == std::vector<std::pair<int, int>>{{0, 4}, {2, 2}, {4, 0}});
  bool flagged = false;
  for (const auto& c : j["claims"])
    if (c["name"] == "summand(4,0)") flagged = c["provenance"] == "assumption";
  CHECK(flagged);
}

TEST_CASE("text and json carry the same numbers") {
  const std::vector<std::vector<std::string>> commands = {
      {"group-cohomology", "--group", "Z4", "--module", "z4-pi2"},
      {"ring", "build", "--ring", "rp2xrp2"},
      {"gamma", "orbits", "--symmetry", "swap=0 1;1 0"},
      {"bordism", "e3", "--group", "Z4"},
      {"kkr", "--quotient", "rp4rp4", "--class", "y"},
      {"cover-check", "--samples", "200"},
  };
  for (auto args : commands) {
    auto text = args, json = args;
    text.insert(text.end(), {"--format", "text"});
    json.insert(json.end(), {"--format", "json"});
    auto a = run(text), b = run(json);
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(numbers(a.out) == numbers(b.out));
  }
}

TEST_CASE("reports are reproducible for a fixed seed") {
  auto a = run({"cover-check", "--samples", "500", "--seed", "7", "--format", "json"});
  auto b = run({"cover-check", "--samples", "500", "--seed", "7", "--format", "json"});
  CHECK(a.out == b.out);
  auto c = run({"cover-check", "--samples", "500", "--seed", "8", "--format", "json"});
  CHECK(a.out != c.out);
}

TEST_CASE("defaults are printed into every report") {
  auto j = Json::parse(run({"kkr", "--quotient", "s2xrp2", "--class", "y", "--format", "json"}).out);
  CHECK(j["metadata"]["seed"] == 0);
  CHECK(j["metadata"]["grid"] == 200);
  CHECK(j["results"]["q"] == 2);
}

TEST_CASE("malformed input exits with code 2") {
  CHECK(run({"snf"}, "1 2\n3\n").code == 2);
  CHECK(run({"snf", "--matrix", "1 x"}).code == 2);
  CHECK(run({"group-cohomology", "--group", "Q8"}).code == 2);
  CHECK(run({"group-cohomology", "--group", "Z4", "--module", "no-such-module"}).code == 2);
  CHECK(run({"ring", "wu", "--ring", "z4"}).code == 2);
  CHECK(run({"ring", "cup", "--ring", "rp2xrp2", "--a", "t^2", "--b", "q"}).code == 2);
  CHECK(run({"bordism", "--group", "Z2"}).code == 2);
  CHECK(run({"kkr", "--quotient", "rp4rp4", "--class", "x+y"}).code == 2);
  CHECK(run({"kkr"}).code == 2);
  CHECK(run({"--format", "yaml", "snf"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("failed verification exits with code 1 and reports a witness") {
  auto r = run({"verify-actions", "--action", "identity", "--format", "json"});
  CHECK(r.code == 1);
  auto j = Json::parse(r.out);
  CHECK(j["error"]["kind"] == "verification-failed");
  CHECK(j["error"].contains("witness"));
}

TEST_CASE("ring presentations are read from files") {
  auto path = temp_file("s2s2_cli_ring.txt");
  std::ofstream(path) << "# RP^2\ngen a 1\nrel a^3\ntop 2\nfundamental a^2\n";
  auto r = run({"ring", "wu", "--ring", path.string(), "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["results"]["wu_classes"]["v1"] == "a");
  std::filesystem::remove(path);
}

TEST_CASE("modules are read from JSON files") {
  auto path = temp_file("s2s2_cli_module.json");
  std::ofstream(path) << R"({"actions": [[[0, 1], [1, 0]]]})";
  auto r = run({"group-cohomology", "--group", "Z4", "--module", path.string(), "--max-degree", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["results"]["cohomology"][2]["group"] == "Z/2");
  std::filesystem::remove(path);
}

TEST_CASE("--out writes the report to a file") {
  auto path = temp_file("s2s2_cli_out.json");
  auto r = run({"snf", "--matrix", "2 4; 6 8", "--format", "json", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  auto j = Json::parse(in);
  CHECK(j["results"]["diagonal"] == Json::parse(R"(["2","4"])"));
  std::filesystem::remove(path);
}

TEST_CASE("reference suite with a custom file") {
  auto good = temp_file("s2s2_cli_ref_good.json");
  std::ofstream(good) << R"({"checks": [{"id": "ring.z4.sq1-u", "topic": "t", "claim": "c", "expected": "0"}]})";
  auto r = run({"paper-suite", "--reference", good.string(), "--format", "json"});
  auto j = Json::parse(r.out);
  CHECK(j["results"]["passed"] == 1);
  // Evaluators without a stored value make the suite incomplete.
  CHECK(r.code == 1);
  CHECK_FALSE(j["results"]["evaluators_without_reference"].empty());

  auto wrong = temp_file("s2s2_cli_ref_wrong.json");
  std::ofstream(wrong) << R"({"checks": [{"id": "ring.z4.sq1-u", "expected": "u^2"}, {"id": "no.such.check", "expected": 1}]})";
  auto w = Json::parse(run({"paper-suite", "--reference", wrong.string(), "--format", "json"}).out);
  CHECK(w["results"]["failed"] == 2);

  auto broken = temp_file("s2s2_cli_ref_broken.json");
  std::ofstream(broken) << "{";
  CHECK(run({"paper-suite", "--reference", broken.string()}).code == 2);
  for (const auto& p : {good, wrong, broken}) std::filesystem::remove(p);
}

TEST_CASE("the shipped reference file covers every evaluator") {
  auto r = run({"paper-suite", "--format", "json"});
  auto j = Json::parse(r.out);
  CHECK(j["results"]["evaluators_without_reference"].empty());
  CHECK(j["results"]["checks"].size() >= 25);
  for (const auto& c : j["results"]["checks"]) {
    CAPTURE(c["id"].get<std::string>());
    CHECK_FALSE(c.contains("error"));
  }
}
