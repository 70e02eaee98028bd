#pragma once

#include <string_view>

#include "satwet/channel.hpp"
#include "satwet/geometry.hpp"

namespace satwet {

/// Half integrates from closest approach to T; full doubles it to cover the
/// symmetric approach leg as well.
enum class PassMode { half, full };

/// How the per-satellite antenna count enters the coherent MRT gain:
/// mn2 -> M * N^2, mn_squared -> (M N)^2.
enum class GainConvention { mn2, mn_squared };

struct LinkBudget {
  double tx_power_w = 10.0;  // 40 dBm
  double tx_gain = 1e5;      // 50 dB
  double rx_gain = 10.0;     // 10 dB
  double carrier_hz = 868e6;
  double harvest_efficiency = 0.7;
  /// Harvester activation threshold; 0 is the ideal circuit.
  double sensitivity_w = 0.0;

  void validate() const;
  double wavelength_m() const { return kSpeedOfLight / carrier_hz; }
};

struct ArrayConfig {
  int num_satellites = 10;
  int antennas_per_satellite = 4;
  /// Variance of the i.i.d. per-satellite phase error, rad^2.
  double phase_error_var = 0.0;
  GainConvention gain_convention = GainConvention::mn2;

  void validate() const;
};

struct PassResult {
  double window_s = 0.0;
  double cutoff_distance_m = 0.0;  // +inf for the ideal circuit
  double cutoff_angle_rad = 0.0;
  double horizon_angle_rad = 0.0;
  double harvested_j = 0.0;
  double upper_bound_j = 0.0;
  double efficiency = 0.0;
  WindowLimit window_limited_by = WindowLimit::none;

  // Diagnostics.
  double array_gain = 0.0;
  double mu = 0.0;                 // W m^2, array gain included
  double peak_received_w = 0.0;    // at closest approach
  bool visible = false;            // pass rises above the horizon
  bool saturation_warning = false; // peak above the linear harvesting region
};

/// Received power above which the linear harvester model is no longer trusted.
inline constexpr double kSaturationDbm = -3.0;

/// eta_h P_t G_T G_R (lambda / 4 pi)^2 alpha_s beta_s, in W m^2.
double mu_coefficient(const LinkBudget& link, const GammaApprox& approx);

/// Mean received power at distance_m, excluding the harvester efficiency.
double received_power(const LinkBudget& link, const GammaApprox& approx,
                      double distance_m, double array_gain);

/// Threshold-gated linear harvester; the threshold itself is inclusive.
double harvested_power(double received_w, const LinkBudget& link);

/// Distance at which received power drops to the sensitivity threshold.
/// Infinite for the ideal circuit.
double cutoff_distance(const LinkBudget& link, const GammaApprox& approx,
                       double array_gain);

/// Closed-form pass energy for integrand mu / (A - B cos(omega t)) with
/// A = (R+H)^2 + R^2 and B = 2 R (R+H) cos(phi). Requires omega * T < pi.
double closed_form_energy(const OrbitGeometry& geom, double mu, double window_s,
                          PassMode mode);

/// Adaptive-quadrature evaluation of the same pass integral. Throws
/// std::runtime_error when the tolerance cannot be met.
double numeric_energy(const OrbitGeometry& geom, double mu, double window_s,
                      PassMode mode, double rel_tol = 1e-10);

namespace detail {
/// Quadrature of mu / (a - b cos(omega t)) over [0, window_s].
double numeric_pass_integral(double a, double b, double omega, double mu,
                             double window_s, double rel_tol);
}  // namespace detail

/// Power gain of the satellite grid: K (N + N (N - 1) exp(-sigma^2)) with
/// K = M (mn2) or M^2 (mn_squared). Cross-satellite terms carry the phase
/// misalignment penalty; antennas within a satellite stay co-phased.
double array_gain(const ArrayConfig& cfg);

/// Coherent full-pass bound at zero azimuth and zero phase error. The
/// geometry's azimuth and the config's phase error are ignored.
double mrt_upper_bound(const OrbitGeometry& geom, double mu,
                       const ArrayConfig& cfg, double window_s);

PassResult compute_pass(const OrbitGeometry& geom, const LinkBudget& link,
                        const FadingParams& fading, const ArrayConfig& cfg,
                        PassMode mode = PassMode::full);

/// Energy with the configured threshold over energy with the ideal circuit.
double charging_efficiency(const OrbitGeometry& geom, const LinkBudget& link,
                           const FadingParams& fading, const ArrayConfig& cfg,
                           PassMode mode = PassMode::full);

/// (1 + (N - 1) exp(-sigma^2)) / N; independent of M.
double misalignment_efficiency(const ArrayConfig& cfg);

std::string_view to_string(PassMode mode);
std::string_view to_string(GainConvention convention);
std::string_view to_string(WindowLimit limit);

}  // namespace satwet
