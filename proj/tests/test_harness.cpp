#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "entwig/config.hpp"
#include "entwig/suite.hpp"

using namespace entwig;

TEST_CASE("config defaults and overrides") {
  const SuiteConfig def = parse_config("");
  CHECK(def.cutoff == 10);
  CHECK(def.scalar_cutoff == 30);
  CHECK(def.inner_points == 41);
  CHECK(def.inner_extent == 4.5);
  CHECK(def.outer_points == 25);
  CHECK(def.states_points == 61);
  CHECK(def.states_extent == 5.0);
  CHECK(def.jobs == 0);
  CHECK(def.suites.empty());

  const SuiteConfig c = parse_config("cutoff = 12\n# comment\n  suites = xform, fock\n");
  CHECK(c.cutoff == 12);
  CHECK(c.scalar_cutoff == 30);
  CHECK(c.suites == std::vector<std::string>{"xform", "fock"});
}

TEST_CASE("config rejects bad input with named fields") {
  CHECK_THROWS_AS(parse_config("cutoff = 0"), ConfigError);
  CHECK_THROWS_AS(parse_config("outer_points = 4"), ConfigError);
  try {
    parse_config("outer_points = 4");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("outer_points") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("outer_points = 10"), ConfigError);  // even
  CHECK_THROWS_AS(parse_config("inner_extent = -2"), ConfigError);
  CHECK_THROWS_AS(parse_config("jobs = -1"), ConfigError);
  CHECK_THROWS_AS(parse_config("cutoff"), ConfigError);
  CHECK_THROWS_AS(parse_config("suites = nonsense"), ConfigError);
  try {
    parse_config("frobnicate = 1");
    CHECK(false);
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("frobnicate") != std::string::npos);
    CHECK(msg.find("scalar_cutoff") != std::string::npos);  // lists known keys
  }
}

TEST_CASE("suite selection and record structure") {
  SuiteConfig cfg = parse_config("suites = fock");
  const SuiteReport rep = run_suite(cfg);
  CHECK(rep.checks.size() == 6);
  CHECK(rep.fail_count == 0);
  for (const auto& r : rep.checks) {
    CHECK(r.name.rfind("fock.", 0) == 0);
    CHECK(!r.equation.empty());
  }
  const std::string json = report_json(rep);
  const auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["tool"] == "entwig");
  CHECK(parsed["summary"]["total"] == 6);
  CHECK(parsed["checks"].size() == 6);
  CHECK(parsed["parameters"]["cutoff"] == 10);

  const std::string csv = report_csv(rep);
  CHECK(csv.rfind("name,equation,value,tolerance,status\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("catalog size is published") {
  CHECK(catalog_size() == 68);
  // a full run emits exactly one record per catalog entry
  // (exercised at reduced parameters by the acceptance suite)
}

TEST_CASE("report bodies are deterministic") {
  SuiteConfig cfg = parse_config("suites = fock, xform");
  auto strip_seconds = [](const std::string& body) {
    auto j = nlohmann::json::parse(body);
    for (auto& c : j["checks"]) c.erase("seconds");
    return j.dump();
  };
  const std::string a = strip_seconds(report_json(run_suite(cfg)));
  const std::string b = strip_seconds(report_json(run_suite(cfg)));
  CHECK(a == b);
  // parallel workers do not change any measured value
  cfg.jobs = 3;
  const std::string c = strip_seconds(report_json(run_suite(cfg)));
  CHECK(a == c);
}

TEST_CASE("component failures become fail records") {
  // an inner grid this small cannot calibrate; every weyl record should
  // carry the failure note instead of aborting the run
  SuiteConfig cfg = parse_config("suites = weyl\ncutoff = 4\ninner_points = 5\ninner_extent = 0.8");
  const SuiteReport rep = run_suite(cfg);
  CHECK(rep.fail_count > 0);
  bool saw_note = false;
  for (const auto& r : rep.checks)
    if (r.status == CheckStatus::fail && !r.note.empty()) saw_note = true;
  CHECK(saw_note);
}
