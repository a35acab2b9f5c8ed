#include <benchmark/benchmark.h>

#include "evdkit/special_functions.hpp"

namespace {

void BM_LogGamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evdkit::log_gamma(x));
    x = x < 50.0 ? x + 0.91 : 0.37;
  }
}
BENCHMARK(BM_LogGamma);

void BM_Polygamma(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evdkit::polygamma(order, x));
    x = x < 50.0 ? x + 0.91 : 0.37;
  }
}
BENCHMARK(BM_Polygamma)->DenseRange(0, 3);

}  // namespace

namespace {

void BM_UpperIncompleteGamma(benchmark::State& state) {
  double x = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evdkit::upper_incomplete_gamma_regularized(0.7, x));
    x = x < 30.0 ? x * 1.3 : 0.05;
  }
}
BENCHMARK(BM_UpperIncompleteGamma);

void BM_IncompleteBeta(benchmark::State& state) {
  double w = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evdkit::incomplete_beta_regularized(0.65, 15.0, w));
    w = w < 0.98 ? w + 0.0137 : 0.01;
  }
}
BENCHMARK(BM_IncompleteBeta);

}  // namespace
