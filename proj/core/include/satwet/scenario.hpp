#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "satwet/parameters.hpp"

namespace satwet {

enum class SweepOutput {
  harvested_j,
  efficiency,
  received_dbm,
  window_s,
  misalignment_efficiency
};

std::string_view to_string(SweepOutput output);
std::optional<SweepOutput> parse_sweep_output(std::string_view name);

/// Named set of parameter overrides applied on top of the base profile.
struct Overlay {
  std::string label;
  std::vector<std::pair<std::string, std::string>> overrides;
};

struct SweepSpec {
  std::string name = "sweep";
  ParameterSet base;
  std::string axis_key = "num_satellites";
  std::vector<double> axis_values;
  std::vector<Overlay> overlays;  // empty = one unlabeled series
  std::vector<SweepOutput> outputs = {SweepOutput::harvested_j};

  /// Throws ConfigError: empty/non-finite/non-monotone axis, unknown keys,
  /// overlays touching the axis key, duplicate labels, no outputs.
  void validate() const;
};

using Cell = std::variant<double, std::string>;

struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;  // one per axis value, in axis order
  std::vector<std::pair<std::string, std::string>> metadata;
  std::string generated_at;  // UTC ISO-8601; not part of the body
};

struct SweepOptions {
  unsigned threads = 1;  // 0 = hardware concurrency
};

/// Evaluates every (axis value, overlay) cell. Invalid cells are flagged
/// "error" in the overlay's status column and carry zeros; cells without a
/// charging window are flagged "infeasible".
SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

/// Named figure reproductions: fig2, fig3, fig4, fig5a, fig5b.
SweepSpec builtin_figure(std::string_view name);
std::span<const std::string_view> builtin_figure_names();

/// `start:stop:step` (inclusive, tolerant of round-off) or `a, b, c`.
std::vector<double> parse_axis_values(std::string_view text);

/// `label: key=value; key=value`.
Overlay parse_overlay(std::string_view text);

/// Builds a SweepSpec from config assignments: parameter keys go to the
/// base profile, `sweep.axis`, `sweep.values`, `sweep.overlay` (repeatable)
/// and `sweep.outputs` describe the sweep.
SweepSpec sweep_spec_from_assignments(const std::vector<Assignment>& assignments);

}  // namespace satwet
