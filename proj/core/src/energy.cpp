#include "satwet/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "satwet/quadrature.hpp"

namespace satwet {

namespace {

void require_finite_non_negative(double value, const char* what) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument(std::string(what) + " must be finite and non-negative");
  }
}

// Product P_t G_T G_R (lambda / 4 pi)^2 alpha_s beta_s; received power at
// unit distance and unit array gain.
double link_constant(const LinkBudget& link, const GammaApprox& approx) {
  const double k = link.wavelength_m() / (4.0 * kPi);
  return link.tx_power_w * link.tx_gain * link.rx_gain * k * k * mean_channel_power(approx);
}

double coherent_gain(const ArrayConfig& cfg) {
  const double n = cfg.num_satellites;
  const double m = cfg.antennas_per_satellite;
  const double per_satellite = cfg.gain_convention == GainConvention::mn2 ? m : m * m;
  return per_satellite * n * n;
}

}  // namespace

void LinkBudget::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(tx_power_w)) throw std::invalid_argument("tx_power_w must be positive");
  if (!positive(tx_gain) || !positive(rx_gain)) {
    throw std::invalid_argument("antenna gains must be positive");
  }
  if (!positive(carrier_hz)) throw std::invalid_argument("carrier_hz must be positive");
  if (!positive(harvest_efficiency) || harvest_efficiency > 1.0) {
    throw std::invalid_argument("harvest_efficiency must lie in (0, 1]");
  }
  if (!std::isfinite(sensitivity_w) || sensitivity_w < 0.0) {
    throw std::invalid_argument("sensitivity_w must be non-negative");
  }
}

void ArrayConfig::validate() const {
  if (num_satellites < 1) throw std::invalid_argument("num_satellites must be at least 1");
  if (antennas_per_satellite < 1) {
    throw std::invalid_argument("antennas_per_satellite must be at least 1");
  }
  if (std::isnan(phase_error_var) || phase_error_var < 0.0) {
    throw std::invalid_argument("phase_error_var must be non-negative");
  }
}

double mu_coefficient(const LinkBudget& link, const GammaApprox& approx) {
  return link.harvest_efficiency * link_constant(link, approx);
}

double received_power(const LinkBudget& link, const GammaApprox& approx, double distance_m,
                      double array_gain) {
  if (!(distance_m > 0.0)) throw std::invalid_argument("distance must be positive");
  return array_gain * link_constant(link, approx) / (distance_m * distance_m);
}

double harvested_power(double received_w, const LinkBudget& link) {
  if (received_w < link.sensitivity_w) return 0.0;
  return link.harvest_efficiency * received_w;
}

double cutoff_distance(const LinkBudget& link, const GammaApprox& approx, double array_gain) {
  if (link.sensitivity_w == 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(array_gain * link_constant(link, approx) / link.sensitivity_w);
}

double closed_form_energy(const OrbitGeometry& geom, double mu, double window_s,
                          PassMode mode) {
  geom.validate();
  require_finite_non_negative(window_s, "window_s");
  const double omega = angular_velocity(geom);
  const double half_angle = 0.5 * omega * window_s;
  if (half_angle >= 0.5 * kPi) {
    throw std::domain_error("charging window must stay below half an orbit");
  }
  if (window_s == 0.0) return 0.0;

  const double r = geom.earth_radius_m;
  const double h = geom.altitude_m;
  const double phi = geom.azimuth_offset_rad;
  const double cross = 2.0 * r * (r + h);
  const double s = std::sin(0.5 * phi);
  const double a_minus_b = h * h + 2.0 * cross * s * s;
  const double a_plus_b = (r + h) * (r + h) + r * r + cross * std::cos(phi);

  const double e_half = 2.0 * mu / (omega * std::sqrt(a_minus_b * a_plus_b)) *
                        std::atan(std::sqrt(a_plus_b / a_minus_b) * std::tan(half_angle));
  return mode == PassMode::full ? 2.0 * e_half : e_half;
}

namespace detail {

double numeric_pass_integral(double a, double b, double omega, double mu, double window_s,
                             double rel_tol) {
  if (window_s == 0.0) return 0.0;
  const auto result = integrate_adaptive(
      [&](double t) { return mu / (a - b * std::cos(omega * t)); }, 0.0, window_s,
      QuadratureOptions{.rel_tol = rel_tol});
  if (!result.converged) {
    throw std::runtime_error("pass energy quadrature did not converge");
  }
  return result.value;
}

}  // namespace detail

double numeric_energy(const OrbitGeometry& geom, double mu, double window_s, PassMode mode,
                      double rel_tol) {
  geom.validate();
  require_finite_non_negative(window_s, "window_s");
  if (!(rel_tol > 0.0) || rel_tol > 1e-3) {
    throw std::invalid_argument("rel_tol must lie in (0, 1e-3]");
  }
  const double r = geom.earth_radius_m;
  const double rh = geom.orbit_radius_m();
  const double a = rh * rh + r * r;
  const double b = 2.0 * r * rh * std::cos(geom.azimuth_offset_rad);
  const double e_half =
      detail::numeric_pass_integral(a, b, angular_velocity(geom), mu, window_s, rel_tol);
  return mode == PassMode::full ? 2.0 * e_half : e_half;
}

double array_gain(const ArrayConfig& cfg) {
  cfg.validate();
  const double n = cfg.num_satellites;
  const double m = cfg.antennas_per_satellite;
  const double per_satellite = cfg.gain_convention == GainConvention::mn2 ? m : m * m;
  return per_satellite * (n + n * (n - 1.0) * std::exp(-cfg.phase_error_var));
}

double mrt_upper_bound(const OrbitGeometry& geom, double mu, const ArrayConfig& cfg,
                       double window_s) {
  geom.validate();
  cfg.validate();
  require_finite_non_negative(window_s, "window_s");
  const double w = angular_velocity(geom);
  const double h = geom.altitude_m;
  const double r = geom.earth_radius_m;
  const double cot = 1.0 / std::tan(0.5 * w * window_s);
  const double angle = kPi - 2.0 * std::atan(h * cot / (h + 2.0 * r));
  return 2.0 * coherent_gain(cfg) * mu * angle / (h * h * w + 2.0 * h * r * w);
}

PassResult compute_pass(const OrbitGeometry& geom, const LinkBudget& link,
                        const FadingParams& fading, const ArrayConfig& cfg, PassMode mode) {
  geom.validate();
  link.validate();
  cfg.validate();
  const GammaApprox approx = gamma_params(fading);

  PassResult out;
  out.array_gain = array_gain(cfg);
  out.cutoff_distance_m = cutoff_distance(link, approx, out.array_gain);
  const ChargingWindow window = window_limits(geom, out.cutoff_distance_m);
  out.window_s = window.duration_s;
  out.cutoff_angle_rad = window.cutoff_angle_rad;
  out.horizon_angle_rad = window.horizon_angle_rad;
  out.window_limited_by = window.limited_by;
  out.visible = window.horizon_angle_rad > 0.0;

  const double mu_single = mu_coefficient(link, approx);
  out.mu = out.array_gain * mu_single;
  out.harvested_j = closed_form_energy(geom, out.mu, out.window_s, mode);
  out.upper_bound_j = mrt_upper_bound(geom, mu_single, cfg, out.window_s);

  out.peak_received_w = received_power(link, approx, closest_approach(geom), out.array_gain);
  out.saturation_warning = out.peak_received_w > dbm_to_watts(kSaturationDbm);

  if (out.harvested_j > 0.0) {
    const double ideal_window = window_limits(geom, std::numeric_limits<double>::infinity()).duration_s;
    const double ideal = closed_form_energy(geom, out.mu, ideal_window, mode);
    out.efficiency = std::min(1.0, out.harvested_j / ideal);
  }
  return out;
}

double charging_efficiency(const OrbitGeometry& geom, const LinkBudget& link,
                           const FadingParams& fading, const ArrayConfig& cfg, PassMode mode) {
  return compute_pass(geom, link, fading, cfg, mode).efficiency;
}

double misalignment_efficiency(const ArrayConfig& cfg) {
  cfg.validate();
  const double n = cfg.num_satellites;
  return (1.0 + (n - 1.0) * std::exp(-cfg.phase_error_var)) / n;
}

std::string_view to_string(PassMode mode) {
  return mode == PassMode::full ? "full" : "half";
}

std::string_view to_string(GainConvention convention) {
  return convention == GainConvention::mn2 ? "mn2" : "mn_squared";
}

std::string_view to_string(WindowLimit limit) {
  switch (limit) {
    case WindowLimit::sensitivity: return "sensitivity";
    case WindowLimit::horizon: return "horizon";
    case WindowLimit::none: break;
  }
  return "none";
}

}  // namespace satwet
