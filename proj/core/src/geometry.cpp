#include "satwet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace satwet {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string(name) + " must be finite and positive");
  }
}

double sin_half_squared(double x) {
  const double s = std::sin(0.5 * x);
  return s * s;
}

// 2 R (R + H), the coefficient of the cosine term in d^2.
double cross_term(const OrbitGeometry& geom) {
  return 2.0 * geom.earth_radius_m * geom.orbit_radius_m();
}

}  // namespace

void OrbitGeometry::validate() const {
  require_positive(earth_radius_m, "earth_radius_m");
  require_positive(altitude_m, "altitude_m");
  require_positive(grav_const, "grav_const");
  require_positive(earth_mass_kg, "earth_mass_kg");
  if (!std::isfinite(azimuth_offset_rad) || azimuth_offset_rad < 0.0 ||
      azimuth_offset_rad >= 0.5 * kPi) {
    throw std::invalid_argument("azimuth_offset_rad must lie in [0, pi/2)");
  }
}

double angular_velocity(const OrbitGeometry& geom) {
  const double r = geom.orbit_radius_m();
  return std::sqrt(geom.grav_const * geom.earth_mass_kg / (r * r * r));
}

double slant_range(const OrbitGeometry& geom, double t_s) {
  // d^2 = H^2 + 2R(R+H) (1 - cos(phi) cos(wt)), with both 1 - cos terms in
  // half-angle form so d(0) = H exactly when phi = 0.
  const double phi = geom.azimuth_offset_rad;
  const double wt = angular_velocity(geom) * t_s;
  const double one_minus =
      2.0 * sin_half_squared(phi) + std::cos(phi) * 2.0 * sin_half_squared(wt);
  const double h = geom.altitude_m;
  return std::sqrt(h * h + cross_term(geom) * one_minus);
}

double closest_approach(const OrbitGeometry& geom) { return slant_range(geom, 0.0); }

double horizon_angle(const OrbitGeometry& geom) {
  const double x =
      geom.earth_radius_m / (geom.orbit_radius_m() * std::cos(geom.azimuth_offset_rad));
  if (!(x < 1.0)) return 0.0;
  return std::acos(x);
}

double cutoff_angle(const OrbitGeometry& geom, double cutoff_distance_m) {
  if (std::isnan(cutoff_distance_m) || cutoff_distance_m < 0.0) {
    throw std::invalid_argument("cutoff distance must be non-negative");
  }
  if (std::isinf(cutoff_distance_m)) return kPi;
  const double d_min = closest_approach(geom);
  if (cutoff_distance_m <= d_min) return 0.0;
  // d_c^2 - d_min^2 = 4 R (R+H) cos(phi) sin^2(theta/2)
  const double s = (cutoff_distance_m - d_min) * (cutoff_distance_m + d_min) /
                   (2.0 * cross_term(geom) * std::cos(geom.azimuth_offset_rad));
  if (s >= 1.0) return kPi;
  return 2.0 * std::asin(std::sqrt(s));
}

ChargingWindow window_limits(const OrbitGeometry& geom, double cutoff_distance_m) {
  ChargingWindow window;
  window.cutoff_angle_rad = cutoff_angle(geom, cutoff_distance_m);
  window.horizon_angle_rad = horizon_angle(geom);
  const double theta = std::min(window.cutoff_angle_rad, window.horizon_angle_rad);
  if (theta <= 0.0) return window;
  window.limited_by = window.cutoff_angle_rad < window.horizon_angle_rad
                          ? WindowLimit::sensitivity
                          : WindowLimit::horizon;
  window.duration_s = theta / angular_velocity(geom);
  return window;
}

double charging_window(const OrbitGeometry& geom, double cutoff_distance_m) {
  return window_limits(geom, cutoff_distance_m).duration_s;
}

}  // namespace satwet
