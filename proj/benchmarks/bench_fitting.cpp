#include <benchmark/benchmark.h>

#include <vector>

#include "evdkit/dataio.hpp"
#include "evdkit/estimation.hpp"
#include "evdkit/gof.hpp"
#include "evdkit/montecarlo.hpp"

namespace {

const std::vector<double>& wind() {
  static const auto data =
      evdkit::seasonal_adjust(evdkit::load_embedded_wind(), evdkit::Adjustment::MonthlyMedian);
  return data;
}

void BM_FitWind(benchmark::State& state) {
  const auto fitter = static_cast<evdkit::Fitter>(state.range(0));
  const evdkit::FitConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(evdkit::run_fitter(fitter, wind(), config));
  state.SetLabel(std::string(evdkit::fitter_name(fitter)));
}
BENCHMARK(BM_FitWind)->DenseRange(0, 9)->Unit(benchmark::kMillisecond);

void BM_StudyReplicate(benchmark::State& state) {
  const auto data = evdkit::sample(evdkit::DistributionSpec::gev(0, 1, 0.1), 500, 42);
  const auto config = evdkit::study_fit_config();
  for (auto _ : state) {
    for (auto f : evdkit::default_fitters()) {
      benchmark::DoNotOptimize(evdkit::run_fitter(f, data, config));
    }
  }
}
BENCHMARK(BM_StudyReplicate)->Unit(benchmark::kMillisecond);

void BM_RightTailAD(benchmark::State& state) {
  const auto spec = evdkit::fit_mle(wind(), evdkit::Family::EV).spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evdkit::adr(wind(), spec));
    benchmark::DoNotOptimize(evdkit::ad2r(wind(), spec));
  }
}
BENCHMARK(BM_RightTailAD);

}  // namespace
