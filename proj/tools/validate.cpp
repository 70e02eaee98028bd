#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "satwet/channel.hpp"
#include "satwet/energy.hpp"

namespace satwet::cli {

namespace {

std::string scientific(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

CheckOutcome closed_form_vs_quadrature(const ValidationOptions& options) {
  constexpr double kTolerance = 1e-9;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> altitude_km(160.0, 2000.0);
  std::uniform_real_distribution<double> azimuth_deg(0.0, 5.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double worst = 0.0;
  int checked = 0;
  for (int i = 0; i < options.energy_samples; ++i) {
    OrbitGeometry geom;
    geom.altitude_m = altitude_km(rng) * 1e3;
    geom.azimuth_offset_rad = deg_to_rad(azimuth_deg(rng));
    const double horizon = horizon_angle(geom);
    if (horizon <= 0.0) continue;
    // (0, 1] so the window never collapses to zero.
    const double window = (1.0 - unit(rng)) * horizon / angular_velocity(geom);
    const double mu = 1e6;
    const double closed = closed_form_energy(geom, mu, window, PassMode::half);
    const double numeric = numeric_energy(geom, mu, window, PassMode::half, 1e-12);
    worst = std::max(worst, std::abs(closed - numeric) / numeric);
    ++checked;
  }
  return {"closed_form_vs_quadrature", checked > 0 && worst <= kTolerance,
          std::to_string(checked) + " passes, max rel err " + scientific(worst)};
}

CheckOutcome zero_azimuth_identity(const ValidationOptions& options) {
  constexpr double kTolerance = 1e-12;
  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> altitude_km(160.0, 2000.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ArrayConfig single{1, 1, 0.0, GainConvention::mn2};

  double worst = 0.0;
  for (int i = 0; i < options.identity_samples; ++i) {
    OrbitGeometry geom;
    geom.altitude_m = altitude_km(rng) * 1e3;
    const double window = (1.0 - unit(rng)) * horizon_angle(geom) / angular_velocity(geom);
    const double general = closed_form_energy(geom, 1.0, window, PassMode::full);
    const double reduced = mrt_upper_bound(geom, 1.0, single, window);
    worst = std::max(worst, std::abs(general - reduced) / reduced);
  }
  return {"zero_azimuth_identity", worst <= kTolerance,
          std::to_string(options.identity_samples) + " pairs, max rel err " + scientific(worst)};
}

CheckOutcome channel_monte_carlo(const ValidationOptions& options) {
  const FadingParams fading;
  const GammaApprox approx = gamma_params(fading);
  const double mean = mean_channel_power(approx);
  const double identity_err = std::abs(mean - (2.0 * fading.b0 + fading.omega)) / mean;

  const auto draws = sample_channel_power(approx, options.seed, options.channel_samples);
  double sum = 0.0;
  for (double x : draws) sum += x;
  const double sample_mean = sum / static_cast<double>(draws.size());
  const double std_error =
      std::sqrt(approx.alpha_s) * approx.beta_s / std::sqrt(static_cast<double>(draws.size()));
  const double z = std::abs(sample_mean - mean) / std_error;
  return {"channel_monte_carlo", z <= 3.0 && identity_err <= 1e-12,
          "sample mean " + std::to_string(sample_mean) + ", |z| = " + std::to_string(z)};
}

}  // namespace

std::vector<CheckOutcome> run_validation(const ValidationOptions& options) {
  return {closed_form_vs_quadrature(options), zero_azimuth_identity(options),
          channel_monte_carlo(options)};
}

}  // namespace satwet::cli
