#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satwet/solvers.hpp"

namespace satwet {

/// Bad configuration input: unknown key, unparsable value, malformed line.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The full parameter set in configuration units (km, dBm, dB, MHz, degrees).
/// Defaults are the Table I profile with N = 10, M = 4, zero azimuth and an
/// ideal circuit. Conversion to SI happens in resolve().
struct ParameterSet {
  double earth_radius_km = 6378.0;
  double altitude_km = 200.0;
  double tx_power_dbm = 40.0;
  double tx_gain_db = 50.0;
  double rx_gain_db = 10.0;
  double carrier_mhz = 868.0;
  std::optional<double> sensitivity_dbm;  // empty = ideal circuit
  double harvest_efficiency = 0.7;
  double m = 19.4;
  double b0 = 0.158;
  double omega = 1.29;
  int num_satellites = 10;
  int antennas_per_satellite = 4;
  double phase_error_var = 0.0;
  double azimuth_deg = 0.0;
  PassMode pass_mode = PassMode::full;
  GainConvention gain_convention = GainConvention::mn2;

  /// Throws ConfigError for unknown keys (listing the valid ones) or values
  /// that do not parse for the key's type.
  void set(std::string_view key, std::string_view value);

  /// Value of key formatted as it would appear in a config file.
  std::string get(std::string_view key) const;

  /// Every key with its formatted value, in canonical order.
  std::vector<std::pair<std::string, std::string>> entries() const;

  /// Converts to SI and validates; throws std::invalid_argument on
  /// out-of-range values.
  PassParameters resolve() const;

  static std::span<const std::string_view> keys();
  static bool is_key(std::string_view key);
};

/// One `key = value` assignment from a config file or `--set` flag.
struct Assignment {
  std::string key;
  std::string value;
  int line = 0;
};

/// Splits `key=value`, trimming whitespace around both parts.
Assignment parse_assignment(std::string_view text);

/// Reads `key = value` lines; blank lines and `#` comments are skipped.
std::vector<Assignment> read_assignments(std::istream& in);
std::vector<Assignment> read_assignments(const std::filesystem::path& path);

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double value);

/// Strict full-string parse; throws ConfigError naming `what` on failure.
double parse_number(std::string_view text, std::string_view what);

}  // namespace satwet
