#include <benchmark/benchmark.h>

#include "relay_rates/mcp_rate.hpp"
#include "relay_rates/relay_power.hpp"
#include "relay_rates/scp_rate.hpp"
#include "relay_rates/simulator.hpp"

namespace rr = relay_rates;

namespace {

void BM_RelayPowerClosed(benchmark::State& state) {
  const rr::SystemParams p = rr::reference_params(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(rr::relay_power_closed(p, 0.4));
}
BENCHMARK(BM_RelayPowerClosed);

void BM_RelayPowerIntegral1d(benchmark::State& state) {
  const rr::SystemParams p = rr::reference_params(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(rr::relay_power_integral_1d(p, 0.4));
}
BENCHMARK(BM_RelayPowerIntegral1d);

void BM_RelayPowerIntegral2d(benchmark::State& state) {
  const rr::SystemParams p = rr::reference_params(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(rr::relay_power_integral_2d(p, 0.4, 1));
}
BENCHMARK(BM_RelayPowerIntegral2d)->Unit(benchmark::kMillisecond);

void BM_GainSolver(benchmark::State& state) {
  const rr::SystemParams p = rr::reference_params(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(rr::solve_optimal_gain_mcp(p));
}
BENCHMARK(BM_GainSolver);

// Loop gain 2 mu g swept toward the stability edge.
void BM_McpRateClosed(benchmark::State& state) {
  const rr::SystemParams p = rr::reference_params(0.25);
  const double g = state.range(0) / 100.0 / (2 * p.mu);
  for (auto _ : state) benchmark::DoNotOptimize(rr::mcp_rate_closed(p, g));
}
BENCHMARK(BM_McpRateClosed)->Arg(50)->Arg(90)->Arg(99);

void BM_McpRateIntegral2d(benchmark::State& state) {
  const rr::SystemParams p = rr::reference_params(0.25);
  const double g = state.range(0) / 100.0 / (2 * p.mu);
  for (auto _ : state) benchmark::DoNotOptimize(rr::mcp_rate_integral_2d(p, g, 1));
}
BENCHMARK(BM_McpRateIntegral2d)->Arg(50)->Arg(90)->Unit(benchmark::kMillisecond);

void BM_ScpRate(benchmark::State& state) {
  const rr::SystemParams p = rr::reference_params(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(rr::scp_rate(p, 0.4));
}
BENCHMARK(BM_ScpRate)->Unit(benchmark::kMillisecond);

void BM_ScpOptimalGain(benchmark::State& state) {
  const rr::SystemParams p = rr::reference_params(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(rr::scp_optimal_gain(p));
}
BENCHMARK(BM_ScpOptimalGain)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_RunRing(benchmark::State& state) {
  const rr::SystemParams p = rr::reference_params(0.1);
  rr::RingConfig cfg;
  cfg.num_cells = 64;
  cfg.num_symbols = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(rr::run_ring(p, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.num_cells * cfg.num_symbols);
}
BENCHMARK(BM_RunRing)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_OutputPsd(benchmark::State& state) {
  const rr::SystemParams p = rr::reference_params(0.1);
  rr::RingConfig cfg;
  const rr::Trajectory traj = rr::run_ring(p, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(rr::estimate_output_psd(traj));
}
BENCHMARK(BM_OutputPsd)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
