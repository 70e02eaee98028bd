#pragma once

#include <string_view>

#include "satwet/energy.hpp"

namespace satwet {

/// Everything compute_pass needs for one pass.
struct PassParameters {
  OrbitGeometry geometry;
  LinkBudget link;
  FadingParams fading;
  ArrayConfig array;
  PassMode pass_mode = PassMode::full;

  void validate() const;
};

PassResult compute_pass(const PassParameters& params);

/// Non-zero harvested energy over the pass.
bool is_feasible(const PassParameters& params);

enum class FreeVariable { num_satellites, carrier_hz, altitude_m };

struct SearchLimits {
  int max_satellites = 10'000;
  double min_frequency_hz = 100e6;
  double max_frequency_hz = 100e9;
  double frequency_resolution_hz = 1e6;
  double min_altitude_m = 160e3;
  double max_altitude_m = 36'000e3;
  double altitude_resolution_m = 1e3;
};

struct FeasibilityQuery {
  PassParameters fixed;  // the free variable's value here is ignored
  FreeVariable free_variable = FreeVariable::num_satellites;
  SearchLimits limits;
};

enum class SolveStatus {
  found,
  cap_exceeded,              // still feasible (max-type) / infeasible (min-type) at the cap
  infeasible_at_lower_bound  // max-type search has nothing feasible in range
};

struct SolveResult {
  SolveStatus status = SolveStatus::found;
  /// The solution when found; otherwise the search bound that was hit.
  double value = 0.0;
  int evaluations = 0;
};

/// Smallest N >= 1 with a feasible pass (doubling, then bisection).
SolveResult min_satellites(const FeasibilityQuery& query);

/// Largest carrier frequency, on the resolution grid, with a feasible pass.
SolveResult max_frequency(const FeasibilityQuery& query);

/// Largest altitude, on the resolution grid, with a feasible pass.
SolveResult max_altitude(const FeasibilityQuery& query);

SolveResult solve(const FeasibilityQuery& query);

std::string_view to_string(SolveStatus status);
std::string_view to_string(FreeVariable variable);

}  // namespace satwet
