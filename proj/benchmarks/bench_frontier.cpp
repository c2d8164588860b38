#include <benchmark/benchmark.h>

#include <vector>

#include "frontier/estimators.hpp"
#include "frontier/experiment.hpp"
#include "frontier/numerics.hpp"
#include "frontier/simulation.hpp"

namespace {

using namespace frontier;

Sample make_sample(std::size_t n) {
  FrontierModel model;
  model.frontier = FrontierKind::G2;
  model.gamma = 1.0;
  model.covariate = CovariateLaw::Beta22;
  model.seed = 42;
  return generate_sample(model, n);
}

void BM_EstimatePoint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Sample sample = make_sample(n);
  EstimatorConfig cfg;
  cfg.p = rule_power(n);
  cfg.h = rule_bandwidth(sample);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_frontier(sample, cfg, 0.5));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(n));
}
BENCHMARK(BM_EstimatePoint)->Arg(200)->Arg(1000)->Arg(5000);

void BM_EstimateGrid(benchmark::State& state) {
  const std::size_t n = 1000;
  const Sample sample = make_sample(n);
  EstimatorConfig cfg;
  cfg.p = rule_power(n);
  cfg.h = rule_bandwidth(sample);
  const std::vector<double> grid = uniform_grid(201);
  for (auto _ : state) {
    double acc = 0.0;
    for (double x : grid) {
      const PointEstimate est = estimate_frontier(sample, cfg, x);
      if (est.defined) acc += est.value;
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_EstimateGrid)->Unit(benchmark::kMicrosecond);

void BM_GenerateSample(benchmark::State& state) {
  FrontierModel model;
  model.frontier = FrontierKind::G1;
  model.gamma = 2.0;
  model.covariate = CovariateLaw::Beta22;
  model.seed = 7;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_sample(model, n));
  }
}
BENCHMARK(BM_GenerateSample)->Arg(1000)->Arg(10000);

void BM_LogSumExp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    terms[i] = -500.0 + static_cast<double>(i % 997);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_sum_exp(terms));
  }
}
BENCHMARK(BM_LogSumExp)->Arg(64)->Arg(1024);

void BM_RunCell(benchmark::State& state) {
  ExperimentConfig config;
  config.m = 5;
  config.grid_size = 201;
  config.base_seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_cell(config, EstimatorKind::PowerKernel,
                 static_cast<std::size_t>(state.range(0)), 1.0));
  }
}
BENCHMARK(BM_RunCell)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
