#include "entwig.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "entwig/config.hpp"
#include "entwig/grid.hpp"
#include "entwig/suite.hpp"
#include "entwig/xform.hpp"

using entwig::ConfigError;

struct entwig_config {
  entwig::SuiteConfig cfg;
};

struct entwig_report {
  entwig::SuiteReport report;
};

struct entwig_gridfn {
  entwig::GridFunction gf;
};

namespace {

thread_local std::string g_last_error;

entwig_status fail(entwig_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

template <typename F>
entwig_status guarded(F&& f) {
  try {
    f();
    return ENTWIG_OK;
  } catch (const ConfigError& e) {
    return fail(ENTWIG_ERR_CONFIG, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ENTWIG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ENTWIG_ERR_RUNTIME, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* entwig_version(void) { return "0.1.0"; }

const char* entwig_last_error(void) { return g_last_error.c_str(); }

void entwig_string_free(char* s) { std::free(s); }

entwig_status entwig_config_create(entwig_config** out) {
  if (!out) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = new entwig_config{};
  return ENTWIG_OK;
}

entwig_status entwig_config_parse(const char* text, entwig_config** out) {
  if (!text || !out) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new entwig_config{entwig::parse_config(text)}; });
}

entwig_status entwig_config_set(entwig_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { entwig::set_config_value(cfg->cfg, key, value); });
}

void entwig_config_free(entwig_config* cfg) { delete cfg; }

entwig_status entwig_suite_run(const entwig_config* cfg, entwig_report** out) {
  if (!cfg || !out) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new entwig_report{entwig::run_suite(cfg->cfg)}; });
}

int entwig_report_check_count(const entwig_report* rep) {
  return rep ? int(rep->report.checks.size()) : 0;
}

int entwig_report_pass_count(const entwig_report* rep) {
  return rep ? rep->report.pass_count : 0;
}

int entwig_report_fail_count(const entwig_report* rep) {
  return rep ? rep->report.fail_count : 0;
}

int entwig_report_flag_count(const entwig_report* rep) {
  return rep ? rep->report.flag_count : 0;
}

int entwig_catalog_size(void) { return entwig::catalog_size(); }

entwig_status entwig_report_json(const entwig_report* rep, char** out) {
  if (!rep || !out) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = dup_string(entwig::report_json(rep->report)); });
}

entwig_status entwig_report_csv(const entwig_report* rep, char** out) {
  if (!rep || !out) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = dup_string(entwig::report_csv(rep->report)); });
}

entwig_status entwig_report_write(const entwig_report* rep, const char* json_path,
                                  const char* csv_path) {
  if (!rep) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null report");
  return guarded([&] {
    entwig::write_report_files(rep->report, json_path ? json_path : "",
                               csv_path ? csv_path : "");
  });
}

void entwig_report_free(entwig_report* rep) { delete rep; }

entwig_status entwig_gridfn_create(int axes, int points, double extent,
                                   const double* interleaved, entwig_gridfn** out) {
  if (!out) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    const entwig::ComplexGrid grid = entwig::make_grid(axes, points, extent);
    entwig::GridFunction gf{grid, std::vector<entwig::cdouble>(grid.total()), 0.0};
    if (interleaved) {
      for (long k = 0; k < grid.total(); ++k)
        gf.samples[size_t(k)] =
            entwig::cdouble(interleaved[2 * k], interleaved[2 * k + 1]);
    }
    entwig::record_boundary(gf);
    *out = new entwig_gridfn{std::move(gf)};
  });
}

entwig_status entwig_gridfn_read(const char* path, entwig_gridfn** out) {
  if (!path || !out) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  const entwig_status rc =
      guarded([&] { *out = new entwig_gridfn{entwig::read_grid_function(path)}; });
  return rc == ENTWIG_ERR_RUNTIME ? fail(ENTWIG_ERR_IO, g_last_error.c_str()) : rc;
}

entwig_status entwig_gridfn_write(const entwig_gridfn* gf, const char* path, int binary) {
  if (!gf || !path) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null argument");
  const entwig_status rc =
      guarded([&] { entwig::write_grid_function(path, gf->gf, binary != 0); });
  return rc == ENTWIG_ERR_RUNTIME ? fail(ENTWIG_ERR_IO, g_last_error.c_str()) : rc;
}

int entwig_gridfn_axes(const entwig_gridfn* gf) { return gf ? gf->gf.grid.axes : 0; }

int entwig_gridfn_points(const entwig_gridfn* gf) { return gf ? gf->gf.grid.points : 0; }

double entwig_gridfn_extent(const entwig_gridfn* gf) {
  return gf ? gf->gf.grid.extent : 0.0;
}

entwig_status entwig_gridfn_samples(const entwig_gridfn* gf, double* buffer) {
  if (!gf || !buffer) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null argument");
  for (size_t k = 0; k < gf->gf.samples.size(); ++k) {
    buffer[2 * k] = gf->gf.samples[k].real();
    buffer[2 * k + 1] = gf->gf.samples[k].imag();
  }
  return ENTWIG_OK;
}

entwig_status entwig_gridfn_transform(const entwig_gridfn* gf, const char* op,
                                      entwig_gridfn** out) {
  if (!gf || !op || !out) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const std::string name(op);
    entwig::GridFunction result;
    if (name == "real_forward") {
      result = entwig::real_forward(gf->gf);
    } else if (name == "real_inverse") {
      result = entwig::real_inverse(gf->gf);
    } else if (name == "complex_forward") {
      result = entwig::complex_forward(gf->gf);
    } else if (name == "complex_inverse") {
      result = entwig::complex_inverse(gf->gf);
    } else {
      throw std::invalid_argument(
          "unknown transform '" + name +
          "'; known: real_forward real_inverse complex_forward complex_inverse");
    }
    *out = new entwig_gridfn{std::move(result)};
  });
}

entwig_status entwig_gridfn_parseval_gap(const entwig_gridfn* gf, double* out) {
  if (!gf || !out) return fail(ENTWIG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = entwig::parseval_gap(gf->gf); });
}

void entwig_gridfn_free(entwig_gridfn* gf) { delete gf; }

}  // extern "C"
