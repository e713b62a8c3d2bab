#include <benchmark/benchmark.h>

#include "attsteer/chebyshev.hpp"
#include "attsteer/command_source.hpp"
#include "attsteer/maneuver.hpp"
#include "attsteer/simulation.hpp"
#include "attsteer/zdomain.hpp"

namespace {

using namespace attsteer;

void BM_BarycentricEval(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const CglGrid grid(order);
  std::vector<double> coeffs(order + 1);
  for (int j = 0; j <= order; ++j) coeffs[j] = std::sin(0.3 * j);
  double tau = -0.999;
  for (auto _ : state) {
    benchmark::DoNotOptimize(barycentric_eval(coeffs, grid, tau));
    tau = tau > 0.999 ? -0.999 : tau + 1e-3;
  }
}
BENCHMARK(BM_BarycentricEval)->Arg(5)->Arg(49)->Arg(200);

void BM_LagrangeEval(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const CglGrid grid(order);
  std::vector<double> coeffs(order + 1, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(lagrange_eval(coeffs, grid, 0.123));
}
BENCHMARK(BM_LagrangeEval)->Arg(5)->Arg(49);

void BM_CglFilterCommand(benchmark::State& state) {
  const SyntheticManeuver man;
  const CommandSource src = CglFilter(encode_trajectory(man, Interval{0.0, 708.0}, 49));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(command_at(t, src));
    t = t > 708.0 ? 0.0 : t + 0.2;
  }
}
BENCHMARK(BM_CglFilterCommand);

void BM_RipplePeakClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ripple_peak(0.24, 0.85, 10.0, 0.13));
}
BENCHMARK(BM_RipplePeakClosedForm);

void BM_RipplePeakGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ripple_peak_grid(0.24, 0.85, 10.0, 0.13, 1e-4));
}
BENCHMARK(BM_RipplePeakGrid);

void BM_ClosedLoopStep(benchmark::State& state) {
  SimulationConfig cfg;
  cfg.duration = 100.0;
  cfg.limiter_on = true;
  WaypointTable t;
  t.times = {0.0};
  t.quats = {Quaternion::from_axis_angle(Eigen::Vector3d::UnitZ(), 0.1)};
  const CommandSource src = FullRateHold{t};
  for (auto _ : state) benchmark::DoNotOptimize(integrate_closed_loop(cfg, src));
  state.SetItemsProcessed(state.iterations() * 5000);
}
BENCHMARK(BM_ClosedLoopStep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
