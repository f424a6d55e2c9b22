#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef ENTWIG_CLI_PATH
#error "ENTWIG_CLI_PATH must point at the built binary"
#endif

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(ENTWIG_CLI_PATH) + " " + args + " > cli_out.tmp 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("verify exits 0 on a passing run and writes the report") {
  {
    std::ofstream cfg("cli_ok.tmp.cfg");
    cfg << "suites = fock\n";
  }
  const int rc = run("verify --config cli_ok.tmp.cfg --out cli_rep.tmp.json --csv cli_rep.tmp.csv");
  CHECK(rc == 0);
  std::ifstream in("cli_rep.tmp.json");
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j["summary"]["fail"] == 0);
  std::ifstream csv("cli_rep.tmp.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "name,equation,value,tolerance,status");
  std::remove("cli_ok.tmp.cfg");
  std::remove("cli_rep.tmp.json");
  std::remove("cli_rep.tmp.csv");
}

TEST_CASE("config errors exit 2") {
  {
    std::ofstream cfg("cli_bad.tmp.cfg");
    cfg << "outer_points = 4\n";
  }
  CHECK(run("verify --config cli_bad.tmp.cfg") == 2);
  std::remove("cli_bad.tmp.cfg");
  CHECK(run("verify --config cli_missing.tmp.cfg") == 2);
}

TEST_CASE("check failures exit 1") {
  // an inner grid too small to calibrate fails every weyl record
  {
    std::ofstream cfg("cli_fail.tmp.cfg");
    cfg << "suites = weyl\ncutoff = 4\ninner_points = 5\ninner_extent = 0.8\n";
  }
  CHECK(run("verify --config cli_fail.tmp.cfg") == 1);
  std::remove("cli_fail.tmp.cfg");
}

TEST_CASE("suite flag overrides the config") {
  const int rc = run("verify --suite fock --jobs 2");
  CHECK(rc == 0);
  std::remove("cli_out.tmp");
}
