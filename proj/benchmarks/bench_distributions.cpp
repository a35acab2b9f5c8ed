#include <benchmark/benchmark.h>

#include <vector>

#include "evdkit/distribution.hpp"

namespace {

const std::vector<evdkit::NamedSpec>& presets() {
  static const auto p = evdkit::table3_presets();
  return p;
}

void label(benchmark::State& state) { state.SetLabel(presets()[static_cast<std::size_t>(state.range(0))].label); }

void BM_LogPdf(benchmark::State& state) {
  const auto& spec = presets()[static_cast<std::size_t>(state.range(0))].spec;
  double x = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evdkit::log_pdf(spec, x));
    x = x < 12.0 ? x + 0.173 : -1.0;
  }
  label(state);
}

void BM_Quantile(benchmark::State& state) {
  const auto& spec = presets()[static_cast<std::size_t>(state.range(0))].spec;
  double p = 0.001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evdkit::quantile(spec, p));
    p = p < 0.98 ? p + 0.0173 : 0.001;
  }
  label(state);
}

void BM_Sample1000(benchmark::State& state) {
  const auto& spec = presets()[static_cast<std::size_t>(state.range(0))].spec;
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(evdkit::sample(spec, 1000, seed++));
  label(state);
}

void BM_Moments(benchmark::State& state) {
  const auto& spec = presets()[static_cast<std::size_t>(state.range(0))].spec;
  for (auto _ : state) benchmark::DoNotOptimize(evdkit::moments(spec));
  label(state);
}

BENCHMARK(BM_LogPdf)->DenseRange(0, 7);
BENCHMARK(BM_Quantile)->DenseRange(0, 7);
BENCHMARK(BM_Sample1000)->DenseRange(0, 7);
BENCHMARK(BM_Moments)->DenseRange(0, 7)->Unit(benchmark::kMicrosecond);

}  // namespace
