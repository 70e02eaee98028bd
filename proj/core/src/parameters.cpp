#include "satwet/parameters.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>

namespace satwet {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

int parse_count(std::string_view text, std::string_view what) {
  const double v = parse_number(text, what);
  if (v != std::floor(v) || v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    throw ConfigError(std::string(what) + ": expected an integer, got '" + std::string(text) + "'");
  }
  return static_cast<int>(v);
}

struct Field {
  std::string_view key;
  void (*set)(ParameterSet&, std::string_view);
  std::string (*get)(const ParameterSet&);
};

#define SATWET_NUMBER_FIELD(name)                                                          \
  Field {                                                                                  \
    #name, [](ParameterSet& p, std::string_view v) { p.name = parse_number(v, #name); },   \
        [](const ParameterSet& p) { return format_number(p.name); }                        \
  }
#define SATWET_COUNT_FIELD(name)                                                           \
  Field {                                                                                  \
    #name, [](ParameterSet& p, std::string_view v) { p.name = parse_count(v, #name); },    \
        [](const ParameterSet& p) { return std::to_string(p.name); }                       \
  }

const std::array<Field, 17> kFields = {
    SATWET_NUMBER_FIELD(earth_radius_km),
    SATWET_NUMBER_FIELD(altitude_km),
    SATWET_NUMBER_FIELD(tx_power_dbm),
    SATWET_NUMBER_FIELD(tx_gain_db),
    SATWET_NUMBER_FIELD(rx_gain_db),
    SATWET_NUMBER_FIELD(carrier_mhz),
    Field{"sensitivity_dbm",
          [](ParameterSet& p, std::string_view v) {
            if (lower(v) == "ideal") {
              p.sensitivity_dbm.reset();
            } else {
              p.sensitivity_dbm = parse_number(v, "sensitivity_dbm");
            }
          },
          [](const ParameterSet& p) {
            return p.sensitivity_dbm ? format_number(*p.sensitivity_dbm) : std::string("ideal");
          }},
    SATWET_NUMBER_FIELD(harvest_efficiency),
    SATWET_NUMBER_FIELD(m),
    SATWET_NUMBER_FIELD(b0),
    SATWET_NUMBER_FIELD(omega),
    SATWET_COUNT_FIELD(num_satellites),
    SATWET_COUNT_FIELD(antennas_per_satellite),
    SATWET_NUMBER_FIELD(phase_error_var),
    SATWET_NUMBER_FIELD(azimuth_deg),
    Field{"pass_mode",
          [](ParameterSet& p, std::string_view v) {
            const auto s = lower(v);
            if (s == "full") {
              p.pass_mode = PassMode::full;
            } else if (s == "half") {
              p.pass_mode = PassMode::half;
            } else {
              throw ConfigError("pass_mode: expected 'half' or 'full', got '" + std::string(v) + "'");
            }
          },
          [](const ParameterSet& p) { return std::string(to_string(p.pass_mode)); }},
    Field{"gain_convention",
          [](ParameterSet& p, std::string_view v) {
            const auto s = lower(v);
            if (s == "mn2") {
              p.gain_convention = GainConvention::mn2;
            } else if (s == "mn_squared" || s == "(mn)^2") {
              p.gain_convention = GainConvention::mn_squared;
            } else {
              throw ConfigError("gain_convention: expected 'mn2' or 'mn_squared', got '" +
                                std::string(v) + "'");
            }
          },
          [](const ParameterSet& p) { return std::string(to_string(p.gain_convention)); }},
};

#undef SATWET_NUMBER_FIELD
#undef SATWET_COUNT_FIELD

const std::array<std::string_view, kFields.size()> kKeys = [] {
  std::array<std::string_view, kFields.size()> keys{};
  for (std::size_t i = 0; i < kFields.size(); ++i) keys[i] = kFields[i].key;
  return keys;
}();

const Field& find_field(std::string_view key) {
  for (const auto& f : kFields) {
    if (f.key == key) return f;
  }
  std::string msg = "unknown parameter '" + std::string(key) + "'; valid keys:";
  for (const auto& f : kFields) {
    msg += ' ';
    msg += f.key;
  }
  throw ConfigError(msg);
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

double parse_number(std::string_view text, std::string_view what) {
  auto s = trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
    throw ConfigError(std::string(what) + ": expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

void ParameterSet::set(std::string_view key, std::string_view value) {
  find_field(trim(key)).set(*this, trim(value));
}

std::string ParameterSet::get(std::string_view key) const { return find_field(key).get(*this); }

std::vector<std::pair<std::string, std::string>> ParameterSet::entries() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(kFields.size());
  for (const auto& f : kFields) out.emplace_back(std::string(f.key), f.get(*this));
  return out;
}

std::span<const std::string_view> ParameterSet::keys() { return kKeys; }

bool ParameterSet::is_key(std::string_view key) {
  return std::find(kKeys.begin(), kKeys.end(), key) != kKeys.end();
}

PassParameters ParameterSet::resolve() const {
  PassParameters p;
  p.geometry.earth_radius_m = earth_radius_km * 1e3;
  p.geometry.altitude_m = altitude_km * 1e3;
  p.geometry.azimuth_offset_rad = deg_to_rad(azimuth_deg);
  p.link.tx_power_w = dbm_to_watts(tx_power_dbm);
  p.link.tx_gain = db_to_linear(tx_gain_db);
  p.link.rx_gain = db_to_linear(rx_gain_db);
  p.link.carrier_hz = carrier_mhz * 1e6;
  p.link.harvest_efficiency = harvest_efficiency;
  p.link.sensitivity_w = sensitivity_dbm ? dbm_to_watts(*sensitivity_dbm) : 0.0;
  p.fading = {m, b0, omega};
  p.array.num_satellites = num_satellites;
  p.array.antennas_per_satellite = antennas_per_satellite;
  p.array.phase_error_var = phase_error_var;
  p.array.gain_convention = gain_convention;
  p.pass_mode = pass_mode;
  p.validate();
  return p;
}

Assignment parse_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("expected key=value, got '" + std::string(text) + "'");
  }
  Assignment a;
  a.key = std::string(trim(text.substr(0, eq)));
  a.value = std::string(trim(text.substr(eq + 1)));
  if (a.key.empty()) throw ConfigError("empty key in '" + std::string(text) + "'");
  return a;
}

std::vector<Assignment> read_assignments(std::istream& in) {
  std::vector<Assignment> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    try {
      Assignment a = parse_assignment(view);
      a.line = number;
      out.push_back(std::move(a));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Assignment> read_assignments(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  return read_assignments(in);
}

}  // namespace satwet
