#include "satwet/units.hpp"

#include <cmath>

namespace satwet {

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts * 1e3); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace satwet
