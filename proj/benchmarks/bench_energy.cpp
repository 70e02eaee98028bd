#include <benchmark/benchmark.h>

#include "satwet/energy.hpp"
#include "satwet/scenario.hpp"
#include "satwet/solvers.hpp"

namespace {

using namespace satwet;

OrbitGeometry offset_orbit() {
  OrbitGeometry g;
  g.altitude_m = 550e3;
  g.azimuth_offset_rad = deg_to_rad(1.5);
  return g;
}

static void ClosedFormEnergy(benchmark::State& state) {
  const auto g = offset_orbit();
  const double window = 0.8 * horizon_angle(g) / angular_velocity(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_energy(g, 1e6, window, PassMode::full));
  }
}
BENCHMARK(ClosedFormEnergy);

static void NumericEnergy(benchmark::State& state) {
  const auto g = offset_orbit();
  const double window = 0.8 * horizon_angle(g) / angular_velocity(g);
  const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_energy(g, 1e6, window, PassMode::full, tol));
  }
}
BENCHMARK(NumericEnergy)->DenseRange(6, 14, 4);

static void ComputePass(benchmark::State& state) {
  PassParameters p;
  p.link.sensitivity_w = dbm_to_watts(-10.0);
  p.array.num_satellites = 20;
  for (auto _ : state) benchmark::DoNotOptimize(compute_pass(p));
}
BENCHMARK(ComputePass);

static void MinSatellites(benchmark::State& state) {
  FeasibilityQuery q;
  q.fixed.link.sensitivity_w = dbm_to_watts(-5.0);
  for (auto _ : state) benchmark::DoNotOptimize(min_satellites(q));
}
BENCHMARK(MinSatellites);

static void FigureSweep(benchmark::State& state) {
  const auto spec = builtin_figure("fig3");
  const SweepOptions options{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, options));
}
BENCHMARK(FigureSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
