#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "entwig.h"

TEST_CASE("version and error text") {
  CHECK(std::string(entwig_version()) == "0.1.0");
  CHECK(entwig_last_error() != nullptr);
}

TEST_CASE("config lifecycle and error codes") {
  entwig_config* cfg = nullptr;
  CHECK(entwig_config_create(&cfg) == ENTWIG_OK);
  CHECK(entwig_config_set(cfg, "cutoff", "8") == ENTWIG_OK);
  CHECK(entwig_config_set(cfg, "cutoff", "0") == ENTWIG_ERR_CONFIG);
  CHECK(std::string(entwig_last_error()).find("cutoff") != std::string::npos);
  CHECK(entwig_config_set(cfg, "nope", "1") == ENTWIG_ERR_CONFIG);
  entwig_config_free(cfg);

  entwig_config* parsed = nullptr;
  CHECK(entwig_config_parse("outer_points = 4", &parsed) == ENTWIG_ERR_CONFIG);
  CHECK(parsed == nullptr);
  CHECK(entwig_config_parse("suites = fock", &parsed) == ENTWIG_OK);
  entwig_config_free(parsed);
  CHECK(entwig_config_parse(nullptr, &parsed) == ENTWIG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("suite run through the C surface") {
  entwig_config* cfg = nullptr;
  REQUIRE(entwig_config_parse("suites = fock", &cfg) == ENTWIG_OK);
  entwig_report* rep = nullptr;
  REQUIRE(entwig_suite_run(cfg, &rep) == ENTWIG_OK);
  entwig_config_free(cfg);

  CHECK(entwig_report_check_count(rep) == 6);
  CHECK(entwig_report_fail_count(rep) == 0);
  CHECK(entwig_report_pass_count(rep) == 6);
  CHECK(entwig_catalog_size() == 68);

  char* json = nullptr;
  REQUIRE(entwig_report_json(rep, &json) == ENTWIG_OK);
  const auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["summary"]["pass"] == 6);
  entwig_string_free(json);

  char* csv = nullptr;
  REQUIRE(entwig_report_csv(rep, &csv) == ENTWIG_OK);
  CHECK(std::string(csv).rfind("name,", 0) == 0);
  entwig_string_free(csv);

  const char* path = "capi_report.tmp.json";
  CHECK(entwig_report_write(rep, path, nullptr) == ENTWIG_OK);
  std::FILE* f = std::fopen(path, "rb");
  CHECK(f != nullptr);
  if (f) std::fclose(f);
  std::remove(path);
  entwig_report_free(rep);
}

TEST_CASE("grid functions through the C surface") {
  const int axes = 2, points = 9;
  const double extent = 2.0;
  const long total = 81;
  std::vector<double> interleaved(2 * total);
  for (long i = 0; i < points; ++i)
    for (long j = 0; j < points; ++j) {
      const double x = -extent + i * (2 * extent / (points - 1));
      const double y = -extent + j * (2 * extent / (points - 1));
      interleaved[2 * (i * points + j)] = std::exp(-x * x - y * y);
      interleaved[2 * (i * points + j) + 1] = 0.1 * x * y;
    }
  entwig_gridfn* gf = nullptr;
  REQUIRE(entwig_gridfn_create(axes, points, extent, interleaved.data(), &gf) == ENTWIG_OK);
  CHECK(entwig_gridfn_axes(gf) == 2);
  CHECK(entwig_gridfn_points(gf) == 9);
  CHECK(entwig_gridfn_extent(gf) == 2.0);

  // binary write/read is bit-exact
  const char* bin = "capi_gridfn.tmp.bin";
  REQUIRE(entwig_gridfn_write(gf, bin, 1) == ENTWIG_OK);
  entwig_gridfn* rt = nullptr;
  REQUIRE(entwig_gridfn_read(bin, &rt) == ENTWIG_OK);
  std::vector<double> a(2 * total), b(2 * total);
  REQUIRE(entwig_gridfn_samples(gf, a.data()) == ENTWIG_OK);
  REQUIRE(entwig_gridfn_samples(rt, b.data()) == ENTWIG_OK);
  CHECK(a == b);
  std::remove(bin);
  entwig_gridfn_free(rt);

  // transforms invert each other on the interior
  entwig_gridfn* fwd = nullptr;
  REQUIRE(entwig_gridfn_transform(gf, "real_forward", &fwd) == ENTWIG_OK);
  entwig_gridfn* back = nullptr;
  REQUIRE(entwig_gridfn_transform(fwd, "real_inverse", &back) == ENTWIG_OK);
  std::vector<double> rb(2 * total);
  REQUIRE(entwig_gridfn_samples(back, rb.data()) == ENTWIG_OK);
  const long mid = (points / 2) * points + points / 2;
  CHECK(std::abs(rb[2 * mid] - a[2 * mid]) < 0.05);  // tiny grid, coarse bound

  double gap = 0.0;
  CHECK(entwig_gridfn_parseval_gap(gf, &gap) == ENTWIG_OK);
  CHECK(gap >= 0.0);

  entwig_gridfn* bad = nullptr;
  CHECK(entwig_gridfn_transform(gf, "no_such_op", &bad) == ENTWIG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(entwig_last_error()).find("no_such_op") != std::string::npos);
  CHECK(entwig_gridfn_read("does_not_exist.bin", &bad) == ENTWIG_ERR_IO);

  entwig_gridfn_free(fwd);
  entwig_gridfn_free(back);
  entwig_gridfn_free(gf);
}
