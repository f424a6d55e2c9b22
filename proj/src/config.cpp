#include "entwig/config.hpp"

#include <algorithm>
#include <sstream>

namespace entwig {

namespace {

std::string trim(const std::string& s) {
  const auto from = s.find_first_not_of(" \t\r\n");
  if (from == std::string::npos) return "";
  const auto to = s.find_last_not_of(" \t\r\n");
  return s.substr(from, to - from + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
}

void check_points(const std::string& key, int v) {
  if (v < 5) throw ConfigError(key + ": grid points must be >= 5");
  if (v % 2 == 0) throw ConfigError(key + ": grid points must be odd so 0 is a node");
}

void check_extent(const std::string& key, double v) {
  if (!(v > 0.0)) throw ConfigError(key + ": grid extent must be positive");
}

void check_cutoff(const std::string& key, int v) {
  if (v < 1) throw ConfigError(key + ": cutoff must be >= 1");
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {"fock", "states", "weyl", "xform",
                                                 "ordering"};
  return names;
}

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> keys = {
      "cutoff",        "scalar_cutoff",   "inner_points",    "inner_extent",
      "outer_points",  "outer_extent",    "states_cutoff",   "states_points",
      "states_extent", "ordering_cutoff", "coherent_cutoff", "beta_points",
      "beta_extent",   "suites",          "out",             "csv",
      "jobs"};
  return keys;
}

void set_config_value(SuiteConfig& cfg, const std::string& raw_key,
                      const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key == "cutoff") {
    cfg.cutoff = parse_int(key, value);
    check_cutoff(key, cfg.cutoff);
  } else if (key == "scalar_cutoff") {
    cfg.scalar_cutoff = parse_int(key, value);
    check_cutoff(key, cfg.scalar_cutoff);
  } else if (key == "inner_points") {
    cfg.inner_points = parse_int(key, value);
    check_points(key, cfg.inner_points);
  } else if (key == "inner_extent") {
    cfg.inner_extent = parse_double(key, value);
    check_extent(key, cfg.inner_extent);
  } else if (key == "outer_points") {
    cfg.outer_points = parse_int(key, value);
    check_points(key, cfg.outer_points);
  } else if (key == "outer_extent") {
    cfg.outer_extent = parse_double(key, value);
    check_extent(key, cfg.outer_extent);
  } else if (key == "states_cutoff") {
    cfg.states_cutoff = parse_int(key, value);
    check_cutoff(key, cfg.states_cutoff);
  } else if (key == "states_points") {
    cfg.states_points = parse_int(key, value);
    check_points(key, cfg.states_points);
  } else if (key == "states_extent") {
    cfg.states_extent = parse_double(key, value);
    check_extent(key, cfg.states_extent);
  } else if (key == "ordering_cutoff") {
    cfg.ordering_cutoff = parse_int(key, value);
    check_cutoff(key, cfg.ordering_cutoff);
  } else if (key == "coherent_cutoff") {
    cfg.coherent_cutoff = parse_int(key, value);
    check_cutoff(key, cfg.coherent_cutoff);
  } else if (key == "beta_points") {
    cfg.beta_points = parse_int(key, value);
    check_points(key, cfg.beta_points);
  } else if (key == "beta_extent") {
    cfg.beta_extent = parse_double(key, value);
    check_extent(key, cfg.beta_extent);
  } else if (key == "suites") {
    cfg.suites.clear();
    std::string item;
    std::istringstream ss(value);
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      if (item == "all") {
        cfg.suites.clear();
        continue;
      }
      const auto& names = known_suites();
      if (std::find(names.begin(), names.end(), item) == names.end()) {
        std::string msg = "suites: unknown suite '" + item + "'; known:";
        for (const auto& n : names) msg += " " + n;
        throw ConfigError(msg);
      }
      cfg.suites.push_back(item);
    }
  } else if (key == "out") {
    cfg.out_path = value;
  } else if (key == "csv") {
    cfg.csv_path = value;
  } else if (key == "jobs") {
    if (value == "auto") {
      cfg.jobs = 0;
    } else {
      cfg.jobs = parse_int(key, value);
      if (cfg.jobs < 0) throw ConfigError("jobs: must be >= 0 (0 = auto)");
    }
  } else {
    std::string msg = "unknown key '" + key + "'; known keys:";
    for (const auto& k : known_config_keys()) msg += " " + k;
    throw ConfigError(msg);
  }
}

SuiteConfig parse_config(const std::string& text) {
  SuiteConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    set_config_value(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
  return cfg;
}

}  // namespace entwig
