#ifndef ENTWIG_SUITE_HPP
#define ENTWIG_SUITE_HPP

#include <string>
#include <vector>

#include "entwig/config.hpp"

namespace entwig {

enum class CheckStatus { pass, fail, paper_mismatch_flag, accuracy_warning };

const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  std::string equation;  // paper equation tag
  double value = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::pass;
  std::string note;
  double seconds = 0.0;
};

struct SuiteReport {
  std::string version;
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  int pass_count = 0;
  int fail_count = 0;
  int flag_count = 0;
  int warning_count = 0;
};

// Number of records a suites=all run emits.
int catalog_size();

// Runs the selected suites in dependency order; component errors become
// fail records with the message in the note, the batch never aborts.
// Independent checks may run on cfg.jobs worker threads; every measured
// value is identical across thread counts, and the report is assembled in
// catalog order.
SuiteReport run_suite(const SuiteConfig& cfg);

// Deterministic JSON body with stable field order ("seconds" fields are the
// only run-to-run variable part) and a CSV summary table.
std::string report_json(const SuiteReport& report);
std::string report_csv(const SuiteReport& report);
void write_report_files(const SuiteReport& report, const std::string& json_path,
                        const std::string& csv_path);

}  // namespace entwig

#endif
