#include "satwet/geometry.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

namespace satwet {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

OrbitGeometry table_one(double altitude_m = 200e3, double azimuth_rad = 0.0) {
  OrbitGeometry g;
  g.altitude_m = altitude_m;
  g.azimuth_offset_rad = azimuth_rad;
  return g;
}

// Plain law of cosines on the orbit radius and Earth radius vectors.
double law_of_cosines(const OrbitGeometry& g, double t) {
  const double r = g.earth_radius_m;
  const double rs = g.orbit_radius_m();
  const double w = std::sqrt(g.grav_const * g.earth_mass_kg / (rs * rs * rs));
  const double cos_gamma = std::cos(g.azimuth_offset_rad) * std::cos(w * t);
  return std::sqrt(rs * rs + r * r - 2.0 * rs * r * cos_gamma);
}

TEST(Geometry, ValidateRejectsBadInputs) {
  EXPECT_NO_THROW(table_one().validate());
  auto g = table_one();
  g.altitude_m = 0.0;
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g = table_one();
  g.earth_radius_m = -1.0;
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g = table_one(200e3, 0.5 * kPi);
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g = table_one(200e3, -0.01);
  EXPECT_THROW(g.validate(), std::invalid_argument);
  g = table_one();
  g.grav_const = std::nan("");
  EXPECT_THROW(g.validate(), std::invalid_argument);
}

TEST(Geometry, AngularVelocityTableOne) {
  // mpmath, 40 digits: sqrt(6.67e-11 * 5.97e24 / 6.578e6^3)
  EXPECT_NEAR(angular_velocity(table_one()), 0.0011827944521092000, 1e-18);
}

TEST(Geometry, AngularVelocityScaling) {
  OrbitGeometry near = table_one();
  OrbitGeometry far = near;
  // Orbit radius times four -> omega / 8.
  far.altitude_m = 4.0 * near.orbit_radius_m() - near.earth_radius_m;
  EXPECT_NEAR(angular_velocity(near) / angular_velocity(far), 8.0, 1e-12);

  double previous = angular_velocity(table_one(100e3));
  for (double h = 200e3; h < 4e7; h *= 1.7) {
    const double w = angular_velocity(table_one(h));
    EXPECT_LT(w, previous);
    previous = w;
  }
  EXPECT_LT(angular_velocity(table_one(1e15)), 1e-15);
}

TEST(Geometry, SlantRangeSpecialPoints) {
  const auto g = table_one();
  EXPECT_DOUBLE_EQ(slant_range(g, 0.0), 200e3);
  const double half_orbit = kPi / angular_velocity(g);
  EXPECT_NEAR(slant_range(g, half_orbit), 2.0 * g.earth_radius_m + g.altitude_m, 1e-6);
  // mpmath reference
  EXPECT_NEAR(slant_range(g, 60.0), 501209.84182125848, 1e-6);
  EXPECT_NEAR(slant_range(table_one(500e3, deg_to_rad(2.0)), 150.0), 1227955.9846449941, 1e-6);
}

TEST(Geometry, SlantRangeMatchesLawOfCosines) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> h(160e3, 2000e3), phi(0.0, 1.5), t(-3000.0, 3000.0);
  for (int i = 0; i < 500; ++i) {
    const auto g = table_one(h(rng), phi(rng));
    const double time = t(rng);
    EXPECT_NEAR(slant_range(g, time) / law_of_cosines(g, time), 1.0, 1e-9);
  }
}

TEST(Geometry, SlantRangeEvenAndMonotone) {
  const auto g = table_one(550e3, deg_to_rad(1.5));
  const double w = angular_velocity(g);
  const double d_min = std::sqrt(std::pow(g.orbit_radius_m(), 2) + std::pow(g.earth_radius_m, 2) -
                                 2.0 * g.orbit_radius_m() * g.earth_radius_m *
                                     std::cos(g.azimuth_offset_rad));
  EXPECT_NEAR(closest_approach(g), d_min, 1e-6);
  double previous = slant_range(g, 0.0);
  for (int k = 1; k <= 200; ++k) {
    const double t = k * (kPi / w) / 200.0;
    EXPECT_DOUBLE_EQ(slant_range(g, t), slant_range(g, -t));
    const double d = slant_range(g, t);
    EXPECT_GE(d, previous);
    EXPECT_GE(d, g.altitude_m);
    previous = d;
  }
}

TEST(Geometry, HorizonAngle) {
  const auto g = table_one();
  EXPECT_NEAR(horizon_angle(g), 0.24722342441757642, 1e-14);
  EXPECT_NEAR(horizon_angle(table_one(500e3, deg_to_rad(2.0))), 0.38213747339532204, 1e-14);

  // At the horizon angle the slant range equals the tangent distance.
  for (double h : {200e3, 800e3, 1500e3}) {
    for (double phi_deg : {0.0, 2.0, 5.0}) {
      const auto geom = table_one(h, deg_to_rad(phi_deg));
      const double t = horizon_angle(geom) / angular_velocity(geom);
      const double tangent = std::sqrt(std::pow(geom.orbit_radius_m(), 2) -
                                       std::pow(geom.earth_radius_m, 2));
      EXPECT_NEAR(slant_range(geom, t) / tangent, 1.0, 1e-12);
    }
  }
}

TEST(Geometry, HorizonAngleBoundaries) {
  auto g = table_one();
  g.azimuth_offset_rad = std::acos(g.earth_radius_m / g.orbit_radius_m());
  EXPECT_NEAR(horizon_angle(g), 0.0, 1e-7);
  g.azimuth_offset_rad += 1e-3;
  EXPECT_EQ(horizon_angle(g), 0.0);
  EXPECT_LT(horizon_angle(table_one(1e-3)), 1e-4);
}

TEST(Geometry, HorizonAngleMonotone) {
  double prev = horizon_angle(table_one(200e3, 0.0));
  for (double phi = 0.01; phi < 0.5; phi += 0.01) {
    const double h = horizon_angle(table_one(200e3, phi));
    EXPECT_LE(h, prev);
    prev = h;
  }
  prev = 0.0;
  for (double alt = 160e3; alt < 3e6; alt += 50e3) {
    const double h = horizon_angle(table_one(alt, deg_to_rad(3.0)));
    EXPECT_GE(h, prev);
    prev = h;
  }
}

TEST(Geometry, CutoffAngleClamps) {
  const auto g = table_one();
  EXPECT_EQ(cutoff_angle(g, 200e3), 0.0);
  EXPECT_EQ(cutoff_angle(g, 100e3), 0.0);
  EXPECT_EQ(cutoff_angle(g, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(cutoff_angle(g, 2.0 * g.earth_radius_m + g.altitude_m), kPi);
  EXPECT_EQ(cutoff_angle(g, 1e9), kPi);
  EXPECT_EQ(cutoff_angle(g, kInf), kPi);
  EXPECT_THROW(cutoff_angle(g, -1.0), std::invalid_argument);
}

TEST(Geometry, CutoffAngleRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> h(160e3, 2000e3), phi_deg(0.0, 5.0), frac(1e-6, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const auto g = table_one(h(rng), deg_to_rad(phi_deg(rng)));
    const double theta = frac(rng) * horizon_angle(g);
    const double d = slant_range(g, theta / angular_velocity(g));
    EXPECT_NEAR(cutoff_angle(g, d) / theta, 1.0, 1e-9) << "theta=" << theta;
  }
}

TEST(Geometry, ChargingWindow) {
  const auto g = table_one();
  const double w = angular_velocity(g);
  EXPECT_EQ(charging_window(g, kInf), horizon_angle(g) / w);
  EXPECT_EQ(charging_window(g, 200e3), 0.0);

  const auto ideal = window_limits(g, kInf);
  EXPECT_EQ(ideal.limited_by, WindowLimit::horizon);
  const auto tight = window_limits(g, 250e3);
  EXPECT_EQ(tight.limited_by, WindowLimit::sensitivity);
  EXPECT_NEAR(slant_range(g, tight.duration_s), 250e3, 1e-6);
  const auto none = window_limits(g, 150e3);
  EXPECT_EQ(none.limited_by, WindowLimit::none);
  EXPECT_EQ(none.duration_s, 0.0);

  auto invisible = table_one(200e3, 0.3);
  EXPECT_EQ(window_limits(invisible, kInf).limited_by, WindowLimit::none);
  EXPECT_EQ(charging_window(invisible, kInf), 0.0);
}

TEST(Geometry, OutputsFiniteOverValidDomain) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> h(1.0, 4e7), phi(0.0, 0.5 * kPi - 1e-9), d(0.0, 1e8);
  for (int i = 0; i < 1000; ++i) {
    const auto g = table_one(h(rng), phi(rng));
    const double dc = d(rng);
    EXPECT_TRUE(std::isfinite(horizon_angle(g)));
    EXPECT_TRUE(std::isfinite(cutoff_angle(g, dc)));
    EXPECT_TRUE(std::isfinite(charging_window(g, dc)));
    EXPECT_TRUE(std::isfinite(slant_range(g, 1000.0)));
  }
}

}  // namespace
}  // namespace satwet
