#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "satwet/parameters.hpp"
#include "satwet/report.hpp"
#include "satwet/scenario.hpp"
#include "satwet/solvers.hpp"

namespace satwet::cli {

namespace {

struct Failure : std::runtime_error {
  Failure(std::string kind, const std::string& reason, int code)
      : std::runtime_error(reason), kind(std::move(kind)), code(code) {}
  std::string kind;
  int code;
};

struct CommonOptions {
  std::string config;
  std::vector<std::string> sets;
  std::string output;
  std::string format = "csv";
  int verbosity = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("-c,--config", opts.config, "Key-value config file (defaults: Table I profile)");
  cmd->add_option("-s,--set", opts.sets, "Override a parameter, key=value (repeatable)");
  cmd->add_option("-o,--output", opts.output, "Write the machine-readable result to this file");
  cmd->add_option("-f,--format", opts.format, "Machine output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("-v,--verbose", opts.verbosity, "More diagnostics (repeatable)");
}

std::vector<Assignment> config_assignments(const CommonOptions& opts) {
  if (opts.config.empty()) return {};
  return read_assignments(std::filesystem::path(opts.config));
}

void apply_sets(ParameterSet& params, const CommonOptions& opts) {
  for (const auto& text : opts.sets) {
    const Assignment a = parse_assignment(text);
    params.set(a.key, a.value);
  }
}

// Config file then --set overrides. sweep.* keys belong to `sweep` and are
// skipped here.
ParameterSet load_parameters(const CommonOptions& opts) {
  ParameterSet params;
  for (const auto& a : config_assignments(opts)) {
    if (a.key.starts_with("sweep.")) continue;
    try {
      params.set(a.key, a.value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(a.line) + ": " + e.what());
    }
  }
  apply_sets(params, opts);
  return params;
}

OutputFormat output_format(const CommonOptions& opts) {
  return opts.format == "json" ? OutputFormat::json : OutputFormat::csv;
}

void emit(const SweepResult& result, const CommonOptions& opts, std::ostream& out) {
  if (opts.output.empty()) {
    write_result(out, result, output_format(opts));
    return;
  }
  std::ofstream file(opts.output, std::ios::binary);
  if (!file) throw Failure("io", "cannot open output file '" + opts.output + "'", kUsageError);
  write_result(file, result, output_format(opts));
}

void add_parameter_metadata(SweepResult& result, const ParameterSet& params) {
  for (auto& [key, value] : params.entries()) result.metadata.emplace_back("param." + key, value);
}

std::string power_text(double watts) {
  std::ostringstream os;
  os << std::setprecision(4) << watts_to_dbm(watts) << " dBm (" << watts << " W)";
  return os.str();
}

int run_pass(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const ParameterSet params = load_parameters(opts);
  const PassParameters resolved = params.resolve();
  const PassResult r = compute_pass(resolved);

  out << std::setprecision(6);
  out << "satellite pass (" << to_string(resolved.pass_mode) << ")\n"
      << "  array gain           : " << r.array_gain << " (" << linear_to_db(r.array_gain)
      << " dB)\n"
      << "  sensitivity          : "
      << (resolved.link.sensitivity_w > 0.0 ? power_text(resolved.link.sensitivity_w)
                                            : std::string("ideal circuit"))
      << "\n"
      << "  peak received power  : " << power_text(r.peak_received_w) << "\n"
      << "  cut-off distance     : " << r.cutoff_distance_m / 1e3 << " km\n"
      << "  charging window      : " << r.window_s << " s (limited by "
      << to_string(r.window_limited_by) << ")\n"
      << "  harvested energy     : " << r.harvested_j * 1e3 << " mJ\n"
      << "  MRT upper bound      : " << r.upper_bound_j * 1e3 << " mJ\n"
      << "  charging efficiency  : " << r.efficiency << "\n";
  if (!r.visible) out << "  note: the pass never rises above the horizon\n";
  if (opts.verbosity > 0) {
    out << "  mu (with array gain) : " << r.mu << " W m^2\n"
        << "  cut-off angle        : " << r.cutoff_angle_rad << " rad\n"
        << "  horizon angle        : " << r.horizon_angle_rad << " rad\n";
  }
  if (r.saturation_warning) {
    err << "satwet: warning: peak received power " << power_text(r.peak_received_w)
        << " exceeds the linear harvesting region (" << kSaturationDbm << " dBm)\n";
  }
  out << "\n";

  SweepResult result;
  result.generated_at = utc_timestamp();
  result.metadata.emplace_back("satwet_version", std::string(kVersion));
  result.metadata.emplace_back("command", "pass");
  add_parameter_metadata(result, params);
  result.columns = {"window_s",          "cutoff_distance_m", "cutoff_angle_rad",
                    "horizon_angle_rad", "harvested_j",       "upper_bound_j",
                    "efficiency",        "window_limited_by", "array_gain",
                    "peak_received_w",   "peak_received_dbm", "visible",
                    "saturation_warning"};
  result.rows.push_back({r.window_s, r.cutoff_distance_m, r.cutoff_angle_rad,
                         r.horizon_angle_rad, r.harvested_j, r.upper_bound_j, r.efficiency,
                         std::string(to_string(r.window_limited_by)), r.array_gain,
                         r.peak_received_w, watts_to_dbm(r.peak_received_w),
                         std::string(r.visible ? "true" : "false"),
                         std::string(r.saturation_warning ? "true" : "false")});
  emit(result, opts, out);
  return kOk;
}

int run_sweep_command(const CommonOptions& opts, unsigned threads, std::ostream& out) {
  if (opts.config.empty()) {
    throw Failure("usage", "sweep needs --config with sweep.axis and sweep.values", kUsageError);
  }
  SweepSpec spec = sweep_spec_from_assignments(config_assignments(opts));
  apply_sets(spec.base, opts);
  emit(run_sweep(spec, SweepOptions{threads}), opts, out);
  return kOk;
}

int run_figure(const CommonOptions& opts, const std::string& name, unsigned threads,
               std::ostream& out) {
  SweepSpec spec = builtin_figure(name);
  spec.base = load_parameters(opts);
  emit(run_sweep(spec, SweepOptions{threads}), opts, out);
  return kOk;
}

int run_solve(const CommonOptions& opts, const std::string& target, int max_satellites,
              std::ostream& out) {
  FeasibilityQuery query;
  const ParameterSet params = load_parameters(opts);
  query.fixed = params.resolve();
  query.limits.max_satellites = max_satellites;
  std::string unit;
  double scale = 1.0;
  if (target == "min-satellites") {
    query.free_variable = FreeVariable::num_satellites;
  } else if (target == "max-frequency") {
    query.free_variable = FreeVariable::carrier_hz;
    unit = "MHz";
    scale = 1e-6;
  } else {
    query.free_variable = FreeVariable::altitude_m;
    unit = "km";
    scale = 1e-3;
  }
  const SolveResult r = solve(query);
  const double value = r.value * scale;

  out << target << ": " << format_number(value) << (unit.empty() ? "" : " " + unit) << " ("
      << to_string(r.status) << ", " << r.evaluations << " evaluations)\n\n";

  SweepResult result;
  result.generated_at = utc_timestamp();
  result.metadata.emplace_back("satwet_version", std::string(kVersion));
  result.metadata.emplace_back("command", "solve " + target);
  add_parameter_metadata(result, params);
  result.columns = {"target", "status", "value", "unit", "evaluations"};
  result.rows.push_back({target, std::string(to_string(r.status)), value,
                         unit.empty() ? std::string("count") : unit,
                         static_cast<double>(r.evaluations)});
  emit(result, opts, out);

  if (r.status != SolveStatus::found) {
    throw Failure("infeasible",
                  target + " search ended with " + std::string(to_string(r.status)) + " at " +
                      format_number(value) + (unit.empty() ? "" : " " + unit),
                  kInfeasible);
  }
  return kOk;
}

int run_validate(const ValidationOptions& options, std::ostream& out) {
  bool all = true;
  for (const auto& check : run_validation(options)) {
    out << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << "\n";
    all = all && check.passed;
  }
  if (!all) throw Failure("validation", "one or more oracle checks failed", kValidationFailed);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy harvested by a ground device from a passing LEO satellite grid", "satwet"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  CommonOptions opts;
  unsigned threads = 0;

  auto* pass = app.add_subcommand("pass", "Evaluate a single pass");
  add_common(pass, opts);

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep described in a config file");
  add_common(sweep, opts);
  sweep->add_option("-j,--threads", threads, "Worker threads (0 = all cores)");

  std::string figure_name;
  auto* figure = app.add_subcommand("figure", "Reproduce a built-in figure sweep");
  add_common(figure, opts);
  figure->add_option("name", figure_name, "fig2, fig3, fig4, fig5a or fig5b")->required();
  figure->add_option("-j,--threads", threads, "Worker threads (0 = all cores)");

  std::string target;
  int max_satellites = SearchLimits{}.max_satellites;
  auto* solve_cmd = app.add_subcommand("solve", "Feasibility limits");
  add_common(solve_cmd, opts);
  solve_cmd->add_option("target", target, "min-satellites, max-frequency or max-altitude")
      ->required()
      ->check(CLI::IsMember({"min-satellites", "max-frequency", "max-altitude"}));
  solve_cmd->add_option("--max-satellites", max_satellites, "Search cap for min-satellites")
      ->check(CLI::PositiveNumber);

  ValidationOptions validation;
  auto* validate = app.add_subcommand("validate", "Check the closed form against its oracles");
  validate->add_option("--samples", validation.energy_samples, "Random passes for the quadrature check")
      ->check(CLI::PositiveNumber);
  validate->add_option("--mc-samples", validation.channel_samples, "Monte-Carlo channel draws")
      ->check(CLI::PositiveNumber);
  validate->add_option("--seed", validation.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "satwet: error: usage: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*pass) return run_pass(opts, out, err);
    if (*sweep) return run_sweep_command(opts, threads, out);
    if (*figure) return run_figure(opts, figure_name, threads, out);
    if (*solve_cmd) return run_solve(opts, target, max_satellites, out);
    if (*validate) return run_validate(validation, out);
  } catch (const Failure& f) {
    err << "satwet: error: " << f.kind << ": " << f.what() << "\n";
    return f.code;
  } catch (const ConfigError& e) {
    err << "satwet: error: config: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "satwet: error: parameter: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "satwet: error: internal: " << e.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("satwet");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace satwet::cli
