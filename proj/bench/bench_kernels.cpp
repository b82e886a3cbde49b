// OpenMP kernels against their serial references.

#include "patree/golden.hpp"
#include "patree/harness.hpp"

#include <benchmark/benchmark.h>

namespace {

std::vector<patree::GoldenCase> all_cases() {
  auto cases = patree::table1_cases();
  auto appendix = patree::appendix_cases();
  cases.insert(cases.end(), appendix.begin(), appendix.end());
  return cases;
}

void BM_VerifyCases(benchmark::State& state) {
  const auto cases = all_cases();
  for (auto _ : state) benchmark::DoNotOptimize(patree::verify_cases(cases));
}

void BM_VerifyCasesSerial(benchmark::State& state) {
  const auto cases = all_cases();
  for (auto _ : state) benchmark::DoNotOptimize(patree::verify_cases_serial(cases));
}

patree::ExperimentConfig experiment(int method) {
  static const char* methods[] = {"euler", "euler-pre3", "lrk3-pre4c"};
  patree::ExperimentConfig cfg;
  cfg.problem = "so3-mixed";
  cfg.method = methods[method];
  return cfg;
}

void BM_RunExperiment(benchmark::State& state) {
  const auto cfg = experiment(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(patree::run_experiment(cfg));
  state.SetLabel(cfg.method);
}

void BM_RunExperimentSerial(benchmark::State& state) {
  const auto cfg = experiment(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(patree::run_experiment_serial(cfg));
  state.SetLabel(cfg.method);
}

}  // namespace

BENCHMARK(BM_VerifyCases)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyCasesSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RunExperiment)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RunExperimentSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
