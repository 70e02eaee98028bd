#include "satwet/scenario.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <thread>

#include "satwet/report.hpp"

namespace satwet {

namespace {

constexpr std::array<std::string_view, 5> kFigureNames = {"fig2", "fig3", "fig4", "fig5a",
                                                          "fig5b"};

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int decimal_places(std::string_view text) {
  text = trim(text);
  const auto exp = text.find_first_of("eE");
  const auto mantissa = text.substr(0, exp);
  const auto dot = mantissa.find('.');
  int places = dot == std::string_view::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
  if (exp != std::string_view::npos) {
    places -= static_cast<int>(parse_number(text.substr(exp + 1), "exponent"));
  }
  return std::max(places, 0);
}

std::string column_name(const Overlay& overlay, std::string_view field) {
  if (overlay.label.empty()) return std::string(field);
  return overlay.label + ":" + std::string(field);
}

std::string describe_overrides(const Overlay& overlay) {
  std::string out;
  for (const auto& [key, value] : overlay.overrides) {
    if (!out.empty()) out += "; ";
    out += key + "=" + value;
  }
  return out;
}

double output_value(SweepOutput output, const PassParameters& params, const PassResult& r) {
  switch (output) {
    case SweepOutput::harvested_j: return r.harvested_j;
    case SweepOutput::efficiency: return r.efficiency;
    case SweepOutput::received_dbm: return watts_to_dbm(r.peak_received_w);
    case SweepOutput::window_s: return r.window_s;
    case SweepOutput::misalignment_efficiency: return misalignment_efficiency(params.array);
  }
  return 0.0;
}

Overlay make_overlay(std::string label,
                     std::vector<std::pair<std::string, std::string>> overrides) {
  return Overlay{std::move(label), std::move(overrides)};
}

// N x circuit overlays shared by the frequency and altitude figures.
std::vector<Overlay> satellites_by_circuit() {
  std::vector<Overlay> overlays;
  for (const char* n : {"10", "20"}) {
    overlays.push_back(make_overlay(std::string("N") + n + "_practical",
                                    {{"num_satellites", n}, {"sensitivity_dbm", "-10"}}));
    overlays.push_back(make_overlay(std::string("N") + n + "_ideal",
                                    {{"num_satellites", n}, {"sensitivity_dbm", "ideal"}}));
  }
  return overlays;
}

}  // namespace

std::string_view to_string(SweepOutput output) {
  switch (output) {
    case SweepOutput::harvested_j: return "harvested_j";
    case SweepOutput::efficiency: return "efficiency";
    case SweepOutput::received_dbm: return "received_dbm";
    case SweepOutput::window_s: return "window_s";
    case SweepOutput::misalignment_efficiency: return "misalignment_efficiency";
  }
  return "unknown";
}

std::optional<SweepOutput> parse_sweep_output(std::string_view name) {
  for (auto out : {SweepOutput::harvested_j, SweepOutput::efficiency, SweepOutput::received_dbm,
                   SweepOutput::window_s, SweepOutput::misalignment_efficiency}) {
    if (to_string(out) == name) return out;
  }
  return std::nullopt;
}

void SweepSpec::validate() const {
  if (!ParameterSet::is_key(axis_key)) {
    throw ConfigError("sweep axis '" + axis_key + "' is not a parameter");
  }
  if (axis_key == "pass_mode" || axis_key == "gain_convention") {
    throw ConfigError("sweep axis '" + axis_key + "' is not numeric");
  }
  if (axis_values.empty()) throw ConfigError("sweep axis has no values");
  for (double v : axis_values) {
    if (!std::isfinite(v)) throw ConfigError("sweep axis values must be finite");
  }
  if (axis_values.size() > 1) {
    const bool increasing = axis_values[1] > axis_values[0];
    for (std::size_t i = 1; i < axis_values.size(); ++i) {
      const bool ok = increasing ? axis_values[i] > axis_values[i - 1]
                                 : axis_values[i] < axis_values[i - 1];
      if (!ok) throw ConfigError("sweep axis values must be strictly monotone");
    }
  }
  if (outputs.empty()) throw ConfigError("sweep requests no outputs");
  for (std::size_t i = 0; i < overlays.size(); ++i) {
    const auto& o = overlays[i];
    if (overlays.size() > 1 && o.label.empty()) {
      throw ConfigError("every overlay needs a label when more than one is given");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (overlays[j].label == o.label) throw ConfigError("duplicate overlay label '" + o.label + "'");
    }
    for (const auto& [key, value] : o.overrides) {
      if (!ParameterSet::is_key(key)) {
        ParameterSet{}.set(key, value);  // throws with the list of valid keys
      }
      if (key == axis_key) {
        throw ConfigError("overlay '" + o.label + "' overrides the sweep axis '" + key + "'");
      }
    }
  }
}

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options) {
  spec.validate();
  const std::vector<Overlay> overlays =
      spec.overlays.empty() ? std::vector<Overlay>{Overlay{}} : spec.overlays;

  SweepResult result;
  result.generated_at = utc_timestamp();
  result.columns.push_back(spec.axis_key);
  for (const auto& overlay : overlays) {
    for (auto out : spec.outputs) result.columns.push_back(column_name(overlay, to_string(out)));
    result.columns.push_back(column_name(overlay, "status"));
  }

  const std::size_t n_rows = spec.axis_values.size();
  result.rows.assign(n_rows, {});
  std::vector<std::vector<std::string>> errors(n_rows);

  auto evaluate_row = [&](std::size_t i) {
    const double axis_value = spec.axis_values[i];
    std::vector<Cell> row;
    row.reserve(result.columns.size());
    row.emplace_back(axis_value);
    for (const auto& overlay : overlays) {
      try {
        ParameterSet params = spec.base;
        for (const auto& [key, value] : overlay.overrides) params.set(key, value);
        params.set(spec.axis_key, format_number(axis_value));
        const PassParameters resolved = params.resolve();
        const PassResult pass = compute_pass(resolved);
        for (auto out : spec.outputs) row.emplace_back(output_value(out, resolved, pass));
        row.emplace_back(std::string(pass.harvested_j > 0.0 ? "ok" : "infeasible"));
      } catch (const std::exception& e) {
        for (std::size_t k = 0; k < spec.outputs.size(); ++k) row.emplace_back(0.0);
        row.emplace_back(std::string("error"));
        errors[i].push_back(column_name(overlay, spec.axis_key + "=" + format_number(axis_value)) +
                            ": " + e.what());
      }
    }
    result.rows[i] = std::move(row);
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(n_rows, 1)));
  if (threads == 1) {
    for (std::size_t i = 0; i < n_rows; ++i) evaluate_row(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < n_rows; i = next++) evaluate_row(i);
      });
    }
  }

  auto& meta = result.metadata;
  meta.emplace_back("satwet_version", std::string(kVersion));
  meta.emplace_back("sweep", spec.name);
  meta.emplace_back("axis", spec.axis_key);
  std::string outputs;
  for (auto out : spec.outputs) {
    if (!outputs.empty()) outputs += ",";
    outputs += to_string(out);
  }
  meta.emplace_back("outputs", outputs);
  for (const auto& overlay : spec.overlays) {
    meta.emplace_back("overlay." + overlay.label, describe_overrides(overlay));
  }
  for (auto& [key, value] : spec.base.entries()) meta.emplace_back("param." + key, value);
  for (const auto& row_errors : errors) {
    for (const auto& e : row_errors) meta.emplace_back("cell_error", e);
  }
  return result;
}

SweepSpec builtin_figure(std::string_view name) {
  SweepSpec spec;
  spec.name = std::string(name);
  if (name == "fig2") {
    spec.axis_key = "num_satellites";
    spec.axis_values = parse_axis_values("1:30:1");
    for (const char* phi : {"0", "1"}) {
      for (const char* pth : {"ideal", "-10", "-5"}) {
        const std::string circuit = std::string(pth) == "ideal" ? "ideal" : std::string("pth") + pth;
        spec.overlays.push_back(make_overlay(circuit + "_phi" + phi,
                                             {{"sensitivity_dbm", pth}, {"azimuth_deg", phi}}));
      }
    }
    spec.outputs = {SweepOutput::harvested_j, SweepOutput::window_s};
  } else if (name == "fig3") {
    spec.axis_key = "carrier_mhz";
    spec.axis_values = parse_axis_values("300:3000:10");
    spec.overlays = satellites_by_circuit();
    spec.outputs = {SweepOutput::harvested_j};
  } else if (name == "fig4") {
    spec.axis_key = "altitude_km";
    spec.axis_values = parse_axis_values("160:600:5");
    spec.overlays = satellites_by_circuit();
    spec.outputs = {SweepOutput::harvested_j};
  } else if (name == "fig5a") {
    spec.axis_key = "azimuth_deg";
    spec.axis_values = parse_axis_values("0:3:0.05");
    for (const char* n : {"10", "20"}) {
      for (const char* pth : {"-10", "-5"}) {
        spec.overlays.push_back(make_overlay(std::string("N") + n + "_pth" + pth,
                                             {{"num_satellites", n}, {"sensitivity_dbm", pth}}));
      }
    }
    spec.outputs = {SweepOutput::efficiency};
  } else if (name == "fig5b") {
    spec.axis_key = "phase_error_var";
    spec.axis_values = parse_axis_values("0:3:0.05");
    for (const char* n : {"10", "20"}) {
      spec.overlays.push_back(make_overlay(std::string("N") + n, {{"num_satellites", n}}));
    }
    spec.outputs = {SweepOutput::misalignment_efficiency, SweepOutput::harvested_j};
  } else {
    std::string msg = "unknown figure '" + std::string(name) + "'; available:";
    for (auto f : kFigureNames) {
      msg += ' ';
      msg += f;
    }
    throw ConfigError(msg);
  }
  return spec;
}

std::span<const std::string_view> builtin_figure_names() { return kFigureNames; }

std::vector<double> parse_axis_values(std::string_view text) {
  text = trim(text);
  std::vector<double> values;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("axis range must be start:stop:step");
    const double start = parse_number(parts[0], "axis start");
    const double stop = parse_number(parts[1], "axis stop");
    const double step = parse_number(parts[2], "axis step");
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) || step == 0.0 ||
        (stop - start) / step < 0.0) {
      throw ConfigError("axis range " + std::string(text) + " is empty or unbounded");
    }
    const double count = std::floor((stop - start) / step + 1e-9) + 1.0;
    if (count > 1e6) throw ConfigError("axis range has more than 1e6 points");
    // Snap to the decimal grid implied by the inputs so 0.05 steps print cleanly.
    const int places = std::min(15, std::max(decimal_places(parts[0]), decimal_places(parts[2])));
    const double scale = std::pow(10.0, places);
    for (int i = 0; i < static_cast<int>(count); ++i) {
      values.push_back(std::round((start + i * step) * scale) / scale);
    }
  } else {
    for (auto part : split(text, ',')) values.push_back(parse_number(part, "axis value"));
  }
  return values;
}

Overlay parse_overlay(std::string_view text) {
  Overlay overlay;
  const auto colon = text.find(':');
  std::string_view body = text;
  if (colon != std::string_view::npos) {
    overlay.label = std::string(trim(text.substr(0, colon)));
    body = text.substr(colon + 1);
  }
  for (auto part : split(body, ';')) {
    if (part.empty()) continue;
    Assignment a = parse_assignment(part);
    overlay.overrides.emplace_back(std::move(a.key), std::move(a.value));
  }
  if (overlay.overrides.empty()) {
    throw ConfigError("overlay '" + std::string(text) + "' has no overrides");
  }
  return overlay;
}

SweepSpec sweep_spec_from_assignments(const std::vector<Assignment>& assignments) {
  SweepSpec spec;
  bool have_axis = false;
  bool have_values = false;
  for (const auto& a : assignments) {
    try {
      if (a.key == "sweep.name") {
        spec.name = a.value;
      } else if (a.key == "sweep.axis") {
        spec.axis_key = a.value;
        have_axis = true;
      } else if (a.key == "sweep.values") {
        spec.axis_values = parse_axis_values(a.value);
        have_values = true;
      } else if (a.key == "sweep.overlay") {
        spec.overlays.push_back(parse_overlay(a.value));
      } else if (a.key == "sweep.outputs") {
        spec.outputs.clear();
        for (auto name : split(a.value, ',')) {
          const auto out = parse_sweep_output(name);
          if (!out) {
            throw ConfigError("unknown output '" + std::string(name) +
                              "'; valid outputs: harvested_j efficiency received_dbm window_s "
                              "misalignment_efficiency");
          }
          spec.outputs.push_back(*out);
        }
      } else if (a.key.starts_with("sweep.")) {
        throw ConfigError("unknown sweep key '" + a.key +
                          "'; valid keys: sweep.name sweep.axis sweep.values sweep.overlay "
                          "sweep.outputs");
      } else {
        spec.base.set(a.key, a.value);
      }
    } catch (const ConfigError& e) {
      if (a.line > 0) throw ConfigError("line " + std::to_string(a.line) + ": " + e.what());
      throw;
    }
  }
  if (!have_axis || !have_values) {
    throw ConfigError("sweep config needs both sweep.axis and sweep.values");
  }
  spec.validate();
  return spec;
}

}  // namespace satwet
