#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sysent/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = sysent::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"bounds"}).code == 2);
  CHECK(run({"bounds", "table"}).code == 2);  // missing required --gmin/--gmax
  CHECK(run({"bounds", "table", "--gmin", "2", "--gmax", "5", "--precision", "0"}).code == 2);
  CHECK(run({"invert", "rholog", "--delta", "ten"}).code == 2);
  const CliResult r = run({"threshold", "loewner", "--format", "yaml"});
  CHECK(r.code == 2);
  CHECK(r.err.find("usage error") != std::string::npos);
}

TEST_CASE("domain errors exit with 1") {
  const CliResult r = run({"invert", "rholog", "--delta", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("outside monotone range") != std::string::npos);
  CHECK(run({"bounds", "corollary", "--alpha", "0.2", "--beta", "0.1", "--genus",
             "2", "--sigma", "1.0"}).code == 1);  // inadmissible pair
  CHECK(run({"threshold", "asymptotic", "--lambda", "3.5"}).code == 1);
}

TEST_CASE("bounds table csv schema") {
  const CliResult r =
      run({"bounds", "table", "--gmin", "2", "--gmax", "5", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream is(r.out);
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "genus,loewner,gromov_aspherical,gromov_genus,buser_sarnak_lower,"
        "paper_asymptotic,corollary_best");
  int rows = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
  }
  CHECK(rows == 4);
}

TEST_CASE("threshold loewner pretty report ends with the genus threshold") {
  const CliResult r = run({"threshold", "loewner"});
  REQUIRE(r.code == 0);
  const std::string tail = "genus_threshold: 20\n";
  REQUIRE(r.out.size() >= tail.size());
  CHECK(r.out.substr(r.out.size() - tail.size()) == tail);
}

TEST_CASE("lab bolza json keys") {
  const CliResult r = run({"lab", "bolza", "--rmax", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.is_object());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"entropy_slope", "katok_ratio",
                                         "orbit_table", "systole"});
  CHECK(j["systole"].get<std::string>() == "3.057142");  // 6 decimals
  CHECK(j["orbit_table"].is_array());
  CHECK(j["orbit_table"].size() == 16);
}

TEST_CASE("lab torus with packing and counting") {
  const CliResult r = run({"lab", "torus", "--basis", "1,0,0,1", "--alpha", "0.1",
                           "--count-radius", "10", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["ratio"].get<std::string>() == "1.000000");
  CHECK(j["packing_count"].get<long long>() == 25);
  CHECK(j["orbit_count"].get<long long>() == 317);
}

TEST_CASE("identical argv produces identical bytes") {
  const std::vector<std::vector<std::string>> cases = {
      {"bounds", "table", "--gmin", "2", "--gmax", "6", "--format", "json"},
      {"threshold", "loewner", "--format", "csv"},
      {"invert", "best", "--genus", "400"},
      {"lab", "bolza", "--rmax", "4", "--format", "csv"},
  };
  for (const auto& argv : cases) {
    const CliResult a = run(argv);
    const CliResult b = run(argv);
    REQUIRE(a.code == 0);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("--out writes the same bytes to a file") {
  const std::vector<std::string> base = {"invert", "rholog", "--delta", "100",
                                         "--format", "json"};
  const CliResult direct = run(base);
  REQUIRE(direct.code == 0);

  const std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "sysent_cli_out_test.json";
  std::vector<std::string> with_out = base;
  with_out.push_back("--out");
  with_out.push_back(tmp.string());
  const CliResult filed = run(with_out);
  REQUIRE(filed.code == 0);
  CHECK(filed.out.empty());

  std::ifstream f(tmp, std::ios::binary);
  std::ostringstream content;
  content << f.rdbuf();
  CHECK(content.str() == direct.out);
  std::filesystem::remove(tmp);
}

TEST_CASE("precision flag controls rendering") {
  const CliResult p3 =
      run({"invert", "rholog", "--delta", "100", "--precision", "3"});
  REQUIRE(p3.code == 0);
  CHECK(p3.out.find("rho: 29.537") != std::string::npos);
  const CliResult p9 =
      run({"invert", "rholog", "--delta", "100", "--precision", "9"});
  CHECK(p9.out.find("rho: 29.536599054") != std::string::npos);
}

TEST_CASE("verify all --quick passes") {
  const CliResult r = run({"verify", "all", "--quick"});
  CHECK(r.code == 0);
  CHECK(r.out.find("checks passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
