#pragma once

#include <numbers>

namespace satwet {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 2.998e8;  // m/s

// Table I orbit constants.
inline constexpr double kEarthRadiusM = 6.378e6;
inline constexpr double kGravitationalConstant = 6.67e-11;  // m^3 / (kg s^2)
inline constexpr double kEarthMassKg = 5.97e24;

// Conversions used only at the configuration and reporting boundary.
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double db_to_linear(double db);
double linear_to_db(double linear);
double deg_to_rad(double deg);
double rad_to_deg(double rad);

}  // namespace satwet
