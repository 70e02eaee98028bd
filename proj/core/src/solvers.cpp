#include "satwet/solvers.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace satwet {

void PassParameters::validate() const {
  geometry.validate();
  link.validate();
  fading.validate();
  array.validate();
}

PassResult compute_pass(const PassParameters& params) {
  return compute_pass(params.geometry, params.link, params.fading, params.array,
                      params.pass_mode);
}

bool is_feasible(const PassParameters& params) { return compute_pass(params).harvested_j > 0.0; }

namespace {

void require_free(const FeasibilityQuery& query, FreeVariable expected) {
  if (query.free_variable != expected) {
    throw std::invalid_argument("query free variable is " +
                                std::string(to_string(query.free_variable)) + ", expected " +
                                std::string(to_string(expected)));
  }
}

// Largest feasible point k * step for integer k in [ceil(lo/step), floor(hi/step)],
// assuming the predicate is true below some threshold and false above it.
template <typename Apply>
SolveResult max_on_grid(const PassParameters& fixed, double lo, double hi, double step,
                        Apply apply) {
  if (!(step > 0.0) || !(lo <= hi)) throw std::invalid_argument("invalid search range");
  SolveResult result;
  auto feasible = [&](std::int64_t k) {
    PassParameters p = fixed;
    apply(p, static_cast<double>(k) * step);
    ++result.evaluations;
    return is_feasible(p);
  };

  std::int64_t low = static_cast<std::int64_t>(std::ceil(lo / step - 1e-9));
  std::int64_t high = static_cast<std::int64_t>(std::floor(hi / step + 1e-9));
  if (!feasible(low)) {
    result.status = SolveStatus::infeasible_at_lower_bound;
    result.value = static_cast<double>(low) * step;
    return result;
  }
  if (feasible(high)) {
    result.status = SolveStatus::cap_exceeded;
    result.value = static_cast<double>(high) * step;
    return result;
  }
  while (high - low > 1) {
    const std::int64_t mid = low + (high - low) / 2;
    (feasible(mid) ? low : high) = mid;
  }
  result.value = static_cast<double>(low) * step;
  return result;
}

}  // namespace

SolveResult min_satellites(const FeasibilityQuery& query) {
  require_free(query, FreeVariable::num_satellites);
  const int cap = query.limits.max_satellites;
  if (cap < 1) throw std::invalid_argument("max_satellites must be at least 1");

  SolveResult result;
  auto feasible = [&](int n) {
    PassParameters p = query.fixed;
    p.array.num_satellites = n;
    ++result.evaluations;
    return is_feasible(p);
  };

  if (feasible(1)) {
    result.value = 1;
    return result;
  }
  // Doubling bracket: `low` infeasible, `high` feasible.
  int low = 1;
  int high = 2;
  while (true) {
    if (high >= cap) {
      high = cap;
      if (!feasible(cap)) {
        result.status = SolveStatus::cap_exceeded;
        result.value = cap;
        return result;
      }
      break;
    }
    if (feasible(high)) break;
    low = high;
    high *= 2;
  }
  while (high - low > 1) {
    const int mid = low + (high - low) / 2;
    (feasible(mid) ? high : low) = mid;
  }
  result.value = high;
  return result;
}

SolveResult max_frequency(const FeasibilityQuery& query) {
  require_free(query, FreeVariable::carrier_hz);
  const auto& lim = query.limits;
  return max_on_grid(query.fixed, lim.min_frequency_hz, lim.max_frequency_hz,
                     lim.frequency_resolution_hz,
                     [](PassParameters& p, double f) { p.link.carrier_hz = f; });
}

SolveResult max_altitude(const FeasibilityQuery& query) {
  require_free(query, FreeVariable::altitude_m);
  const auto& lim = query.limits;
  return max_on_grid(query.fixed, lim.min_altitude_m, lim.max_altitude_m,
                     lim.altitude_resolution_m,
                     [](PassParameters& p, double h) { p.geometry.altitude_m = h; });
}

SolveResult solve(const FeasibilityQuery& query) {
  switch (query.free_variable) {
    case FreeVariable::num_satellites: return min_satellites(query);
    case FreeVariable::carrier_hz: return max_frequency(query);
    case FreeVariable::altitude_m: return max_altitude(query);
  }
  throw std::invalid_argument("unknown free variable");
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::found: return "found";
    case SolveStatus::cap_exceeded: return "cap_exceeded";
    case SolveStatus::infeasible_at_lower_bound: return "infeasible_at_lower_bound";
  }
  return "unknown";
}

std::string_view to_string(FreeVariable variable) {
  switch (variable) {
    case FreeVariable::num_satellites: return "num_satellites";
    case FreeVariable::carrier_hz: return "carrier_hz";
    case FreeVariable::altitude_m: return "altitude_m";
  }
  return "unknown";
}

}  // namespace satwet
