#ifndef ENTWIG_CONFIG_HPP
#define ENTWIG_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace entwig {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Verification-suite parameters. Grids obey the ComplexGrid invariants
// (odd point counts >= 5, positive extents); suite names come from the
// known catalog.
struct SuiteConfig {
  int cutoff = 10;          // Fock cutoff for the Wigner/Weyl operator checks
  int scalar_cutoff = 30;   // cutoff for eigenrelation and overlap checks
  int inner_points = 41;    // eta grid inside the Wigner operator quadrature
  double inner_extent = 4.5;
  int outer_points = 25;    // (mu,nu) grids of the operator-valued transforms
  double outer_extent = 4.5;
  int states_cutoff = 12;   // resolution-of-identity checks
  int states_points = 61;
  double states_extent = 5.0;
  int ordering_cutoff = 8;    // quantize side of the ordering checks
  int coherent_cutoff = 24;   // coherent-state dequantizer space
  int beta_points = 25;       // coherent-state beta grids
  double beta_extent = 2.4;
  std::vector<std::string> suites;  // empty = all
  std::string out_path;
  std::string csv_path;
  int jobs = 0;  // 0 = auto

  bool operator==(const SuiteConfig&) const = default;
};

// "key = value" lines, '#' comments. Unknown keys and invariant violations
// raise ConfigError with the offending key named.
SuiteConfig parse_config(const std::string& text);

// Single-key override used by the CLI and the C API; same validation.
void set_config_value(SuiteConfig& cfg, const std::string& key, const std::string& value);

const std::vector<std::string>& known_suites();
const std::vector<std::string>& known_config_keys();

}  // namespace entwig

#endif
