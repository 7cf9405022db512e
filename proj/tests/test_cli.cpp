#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SDIV_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  res.status = pclose(pipe);
  return res;
}

}  // namespace

TEST_CASE("cli divergence record") {
  const RunResult r =
      run_cli("divergence --kind umegaki --rho diag:0.9,0.1 --sigma diag:0.5,0.5");
  REQUIRE(r.status == 0);
  const json rec = json::parse(r.out);
  CHECK(rec["command"] == "divergence");
  CHECK(rec["value"].get<double>() == doctest::Approx(0.368064207168).epsilon(1e-11));
}

TEST_CASE("cli infinity serialization") {
  const RunResult r =
      run_cli("divergence --kind umegaki --rho diag:0.9,0.1 --sigma diag:1,0");
  REQUIRE(r.status == 0);
  const json rec = json::parse(r.out);
  CHECK(rec["value"] == "inf");
}

TEST_CASE("cli oneshot record with optimizer") {
  const RunResult r = run_cli("oneshot --kind q_min --rho diag:0.9,0.1 --sigma diag:0.5,0.5");
  REQUIRE(r.status == 0);
  const json rec = json::parse(r.out);
  CHECK(rec["value"].get<double>() == doctest::Approx(5.0 / 14.0).epsilon(1e-9));
  CHECK(rec["optimizer"].contains("mu"));
  CHECK(rec["optimizer"].contains("mix"));
}

TEST_CASE("cli validate and file output") {
  const std::string path = "cli_test_out.json";
  std::remove(path.c_str());
  const RunResult r = run_cli("validate --state random:3 --seed 4 --out " + path);
  REQUIRE(r.status == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  json rec;
  in >> rec;
  CHECK(rec["ok"] == true);
  CHECK(rec["dim"] == 3);
  CHECK(rec["trace"].get<double>() == doctest::Approx(1.0));
  std::remove(path.c_str());
}

TEST_CASE("cli boundary csv") {
  const RunResult r = run_cli("boundary --rho diag:0.9,0.1 --sigma diag:0.5,0.5");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("mu,alpha,beta\n", 0) == 0);
}

TEST_CASE("cli trace csv") {
  const RunResult r = run_cli(
      "trace --mode classical --rho diag:0.9,0.1 --sigma diag:0.5,0.5 --s 1 --C 1 "
      "--n-list 1,2,10");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("n,logQ,exponent,target\n", 0) == 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  int rows = 0;
  while (std::getline(is, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("cli error record and nonzero exit") {
  const RunResult r =
      run_cli("divergence --kind petz --alpha 1.5 --rho diag:0.9,0.1 --sigma diag:0.5,0.5");
  CHECK(r.status != 0);
  const json rec = json::parse(r.out);
  CHECK(rec.contains("error"));
  CHECK(rec["error"]["type"] == "domain");
}

TEST_CASE("cli rejects malformed state specs") {
  const RunResult r = run_cli("validate --state bogus");
  CHECK(r.status != 0);
  const json rec = json::parse(r.out);
  CHECK(rec.contains("error"));
}
