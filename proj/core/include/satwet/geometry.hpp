#pragma once

#include "satwet/units.hpp"

namespace satwet {

/// Circular-orbit pass geometry for a single satellite grid over a ground
/// device. Time t = 0 is the closest-approach (zenith crossing) instant and
/// the pass is symmetric about it.
struct OrbitGeometry {
  double earth_radius_m = kEarthRadiusM;
  double altitude_m = 200e3;
  double grav_const = kGravitationalConstant;
  double earth_mass_kg = kEarthMassKg;
  /// Offset of the device from the orbital plane, in [0, pi/2).
  double azimuth_offset_rad = 0.0;

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  double orbit_radius_m() const { return earth_radius_m + altitude_m; }
};

enum class WindowLimit { sensitivity, horizon, none };

/// Angular limits of the charging window, all as orbital angle omega*t.
struct ChargingWindow {
  double cutoff_angle_rad = 0.0;
  double horizon_angle_rad = 0.0;
  double duration_s = 0.0;
  WindowLimit limited_by = WindowLimit::none;
};

/// sqrt(G Me / (R+H)^3), rad/s.
double angular_velocity(const OrbitGeometry& geom);

/// Satellite-to-device distance at time t (s) from closest approach.
double slant_range(const OrbitGeometry& geom, double t_s);

/// Minimum of slant_range over the pass (t = 0).
double closest_approach(const OrbitGeometry& geom);

/// Orbital angle at which the satellite sets below the device's horizon.
/// Returns 0 when the pass never rises above the horizon.
double horizon_angle(const OrbitGeometry& geom);

/// Orbital angle at which the slant range reaches cutoff_distance_m.
/// Clamped to 0 below closest approach and to pi beyond the antipode;
/// an infinite distance maps to pi.
double cutoff_angle(const OrbitGeometry& geom, double cutoff_distance_m);

/// Window from closest approach until either the sensitivity cut-off or the
/// horizon is reached, whichever comes first.
ChargingWindow window_limits(const OrbitGeometry& geom, double cutoff_distance_m);

/// Duration T (s) of window_limits(); 0 means no charging opportunity.
double charging_window(const OrbitGeometry& geom, double cutoff_distance_m);

}  // namespace satwet
