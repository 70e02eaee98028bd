// Acceptance suite: one PASS/FAIL line per criterion, each with its pinned
// tolerance and runtime limit. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "satwet/channel.hpp"
#include "satwet/energy.hpp"
#include "satwet/solvers.hpp"

namespace {

using namespace satwet;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<Outcome()> check;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

OrbitGeometry orbit(double altitude_m = 200e3, double azimuth_rad = 0.0) {
  OrbitGeometry g;
  g.altitude_m = altitude_m;
  g.azimuth_offset_rad = azimuth_rad;
  return g;
}

PassParameters table_one(int n = 10, double sensitivity_dbm = -10.0) {
  PassParameters p;
  p.array.num_satellites = n;
  p.array.antennas_per_satellite = 4;
  p.link.sensitivity_w = dbm_to_watts(sensitivity_dbm);
  return p;
}

bool within_fraction(double value, double target, double fraction) {
  return std::abs(value - target) <= fraction * std::abs(target);
}

// 1. Closed form against adaptive quadrature, 1000 random passes, 1e-9.
Outcome closed_form_oracle() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> h(160e3, 2000e3), phi(0.0, deg_to_rad(5.0)),
      unit(0.0, 1.0), log_mu(-3.0, 9.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto g = orbit(h(rng), phi(rng));
    const double window = (1.0 - unit(rng)) * horizon_angle(g) / angular_velocity(g);
    const double mu = std::pow(10.0, log_mu(rng));
    const auto mode = i % 2 == 0 ? PassMode::half : PassMode::full;
    const double closed = closed_form_energy(g, mu, window, mode);
    const double numeric = numeric_energy(g, mu, window, mode, 1e-12);
    worst = std::max(worst, std::abs(closed - numeric) / numeric);
  }
  return {worst <= 1e-9, fmt("max rel err %.3e over 1000 passes (tol 1e-9)", worst)};
}

// 2. Zero-azimuth reduced form, 100 random (H, T), 1e-12.
Outcome zero_azimuth_identity() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> h(160e3, 2000e3), unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto g = orbit(h(rng));
    const double w = angular_velocity(g);
    const double window = (1.0 - unit(rng)) * horizon_angle(g) / w;
    const double hh = g.altitude_m;
    const double r = g.earth_radius_m;
    const double cot = 1.0 / std::tan(0.5 * w * window);
    const double reduced =
        (kPi - 2.0 * std::atan(hh * cot / (hh + 2.0 * r))) / (hh * hh * w + 2.0 * hh * r * w);
    const double general = closed_form_energy(g, 1.0, window, PassMode::half);
    worst = std::max(worst, std::abs(general - reduced) / reduced);
  }
  return {worst <= 1e-12, fmt("max rel err %.3e over 100 pairs (tol 1e-12)", worst)};
}

// 3. Minimum constellation size 9 (-10 dBm) and 16 (-5 dBm), +-1.
Outcome figure_two_thresholds() {
  FeasibilityQuery q;
  q.free_variable = FreeVariable::num_satellites;
  q.fixed = table_one(1, -10.0);
  const auto n10 = min_satellites(q);
  q.fixed = table_one(1, -5.0);
  const auto n5 = min_satellites(q);
  const bool ok = n10.status == SolveStatus::found && n5.status == SolveStatus::found &&
                  std::abs(n10.value - 9) <= 1 && std::abs(n5.value - 16) <= 1;
  return {ok, fmt("N_min = %g at -10 dBm (9 +-1), %g at -5 dBm (16 +-1)", n10.value, n5.value)};
}

// 4. Maximum feasible frequency 950 MHz (N=10) and 1.9 GHz (N=20), +-10%.
Outcome figure_three_thresholds() {
  FeasibilityQuery q;
  q.free_variable = FreeVariable::carrier_hz;
  q.fixed = table_one(10);
  const auto f10 = max_frequency(q);
  q.fixed = table_one(20);
  const auto f20 = max_frequency(q);
  const bool ok = f10.status == SolveStatus::found && f20.status == SolveStatus::found &&
                  within_fraction(f10.value, 950e6, 0.10) && within_fraction(f20.value, 1.9e9, 0.10);
  return {ok, fmt("f_max = %g MHz (N=10, 950 +-10%%), %g MHz (N=20, 1900 +-10%%)", f10.value / 1e6,
                  f20.value / 1e6)};
}

// 5. Maximum feasible altitude 220 km (N=10) and 440 km (N=20), +-10%.
Outcome figure_four_thresholds() {
  FeasibilityQuery q;
  q.free_variable = FreeVariable::altitude_m;
  q.fixed = table_one(10);
  const auto h10 = max_altitude(q);
  q.fixed = table_one(20);
  const auto h20 = max_altitude(q);
  const bool ok = h10.status == SolveStatus::found && h20.status == SolveStatus::found &&
                  within_fraction(h10.value, 220e3, 0.10) && within_fraction(h20.value, 440e3, 0.10);
  return {ok, fmt("H_max = %g km (N=10, 220 +-10%%), %g km (N=20, 440 +-10%%)", h10.value / 1e3,
                  h20.value / 1e3)};
}

// 6. N=20, M=4, d=200 km received power about -3 dBm, +-1 dB.
Outcome received_power_spot_check() {
  const auto approx = gamma_params(FadingParams{});
  const double gain = array_gain(ArrayConfig{20, 4, 0.0});
  const double dbm = watts_to_dbm(received_power(LinkBudget{}, approx, 200e3, gain));
  return {std::abs(dbm + 3.0) <= 1.0, fmt("P_r = %.3f dBm (-3 +-1 dB)", dbm)};
}

// 7. Table I, N=10, M=4, zero azimuth, ideal circuit at 868 MHz: more than 10 mJ.
Outcome headline_energy() {
  PassParameters p;
  p.array = ArrayConfig{10, 4, 0.0};
  const auto full = compute_pass(p);
  p.pass_mode = PassMode::half;
  const auto half = compute_pass(p);
  return {full.harvested_j > 10e-3,
          fmt("E_h = %.4f mJ full pass (%.4f mJ half pass), required > 10 mJ",
              full.harvested_j * 1e3, half.harvested_j * 1e3)};
}

// 8. Monte-Carlo mean within 3 standard errors; mean identity to 1e-12.
Outcome channel_oracle() {
  const FadingParams fading;
  const auto approx = gamma_params(fading);
  const double mean = mean_channel_power(approx);
  const double identity = std::abs(mean - (2.0 * fading.b0 + fading.omega)) / mean;
  const std::size_t n = 1'000'000;
  const auto draws = sample_channel_power(approx, 8, n);
  const double sample_mean = std::accumulate(draws.begin(), draws.end(), 0.0) / double(n);
  const double se = std::sqrt(approx.alpha_s) * approx.beta_s / std::sqrt(double(n));
  const double z = std::abs(sample_mean - 1.606) / se;
  return {z <= 3.0 && identity <= 1e-12,
          fmt("sample mean %.6f, |z| = %.3f (<= 3), identity err %.2e (<= 1e-12)", sample_mean, z,
              identity)};
}

// 9. Monotonicity of E_h, efficiency range and misalignment limits.
Outcome monotonicity_suite() {
  std::vector<std::string> failures;
  int passes = 0;
  bool efficiency_ok = true;

  auto energy = [&](const PassParameters& p) {
    const auto r = compute_pass(p);
    ++passes;
    efficiency_ok = efficiency_ok && r.efficiency >= 0.0 && r.efficiency <= 1.0;
    return r.harvested_j;
  };

  // sign +1: non-decreasing along the sweep, -1: non-increasing.
  auto sweep = [&](const std::string& name, int sign, int steps,
                   const std::function<void(PassParameters&, int)>& apply) {
    for (double pth : {-1.0, -20.0, -10.0, -5.0}) {
      for (int n : {10, 20, 40}) {
        PassParameters p = table_one(n, pth);
        if (pth == -1.0) p.link.sensitivity_w = 0.0;  // ideal circuit
        double prev = 0.0;
        for (int k = 0; k < steps; ++k) {
          PassParameters q = p;
          apply(q, k);
          const double e = energy(q);
          if (k > 0 && sign * (e - prev) < -1e-12 * std::max(std::abs(e), std::abs(prev))) {
            failures.push_back(name + " at step " + std::to_string(k));
            break;
          }
          prev = e;
        }
      }
    }
  };

  sweep("N", +1, 120, [](PassParameters& p, int k) { p.array.num_satellites = 1 + k; });
  sweep("M", +1, 64, [](PassParameters& p, int k) { p.array.antennas_per_satellite = 1 + k; });
  sweep("P_t", +1, 121, [](PassParameters& p, int k) { p.link.tx_power_w = dbm_to_watts(k * 0.5); });
  sweep("f", -1, 200, [](PassParameters& p, int k) { p.link.carrier_hz = 100e6 * std::pow(1.025, k); });
  sweep("P_th", -1, 161, [](PassParameters& p, int k) {
    p.link.sensitivity_w = dbm_to_watts(-40.0 + 0.25 * k);
  });
  sweep("phi", -1, 201, [](PassParameters& p, int k) {
    p.geometry.azimuth_offset_rad = deg_to_rad(0.025 * k);
  });
  sweep("sigma2", -1, 201, [](PassParameters& p, int k) { p.array.phase_error_var = 0.05 * k; });

  // Window length through the closed form directly.
  for (double h : {200e3, 600e3, 1500e3}) {
    for (double phi_deg : {0.0, 1.0, 4.0}) {
      const auto g = orbit(h, deg_to_rad(phi_deg));
      const double t_max = horizon_angle(g) / angular_velocity(g);
      double prev = -1.0;
      for (int k = 0; k <= 200; ++k) {
        const double e = closed_form_energy(g, 1.0, t_max * k / 200.0, PassMode::full);
        if (e < prev) {
          failures.push_back("T at step " + std::to_string(k));
          break;
        }
        prev = e;
      }
    }
  }

  double limit_err = 0.0;
  for (int n : {1, 2, 10, 20, 100}) {
    limit_err = std::max(limit_err, std::abs(misalignment_efficiency({n, 4, 0.0}) - 1.0));
    limit_err = std::max(limit_err, std::abs(misalignment_efficiency({n, 4, 1e3}) - 1.0 / n));
  }

  const bool ok = failures.empty() && efficiency_ok && limit_err <= 1e-6;
  std::string detail = std::to_string(passes) + " passes; ";
  detail += failures.empty() ? "all sweeps monotone" : "violations: " + failures.front();
  detail += efficiency_ok ? "; efficiency in [0,1]" : "; efficiency out of range";
  detail += fmt("; misalignment limit err %.1e (<= 1e-6)", limit_err);
  return {ok, detail};
}

// 10. `figure fig2` twice: byte-identical CSV bodies.
Outcome figure_determinism() {
  auto body = [] {
    std::ostringstream out, err;
    const int code = cli::run(std::vector<std::string>{"figure", "fig2"}, out, err);
    std::istringstream in(out.str());
    std::string line, text;
    while (std::getline(in, line)) {
      if (!line.starts_with("#")) text += line + "\n";
    }
    return std::make_pair(code, text);
  };
  const auto first = body();
  const auto second = body();
  const bool ok = first.first == 0 && second.first == 0 && !first.second.empty() &&
                  first.second == second.second;
  return {ok, fmt("%g body bytes, identical: %g", double(first.second.size()),
                  double(first.second == second.second))};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed form matches quadrature", 10.0, closed_form_oracle},
      {2, "zero-azimuth identity", 1.0, zero_azimuth_identity},
      {3, "minimum constellation size", 5.0, figure_two_thresholds},
      {4, "maximum feasible frequency", 5.0, figure_three_thresholds},
      {5, "maximum feasible altitude", 5.0, figure_four_thresholds},
      {6, "received power spot check", 1.0, received_power_spot_check},
      {7, "headline harvested energy", 1.0, headline_energy},
      {8, "channel Monte-Carlo oracle", 5.0, channel_oracle},
      {9, "monotonicity suite", 10.0, monotonicity_suite},
      {10, "figure determinism", 5.0, figure_determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed <= c.time_limit_s;
    const bool passed = outcome.passed && in_time;
    if (!passed) ++failed;
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << ": "
              << outcome.detail
              << fmt(" (%.3f s, limit %g s)", elapsed, c.time_limit_s)
              << (in_time ? "" : " TIME LIMIT EXCEEDED") << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
