#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "evdkit/error.hpp"
#include "evdkit/gof.hpp"
#include "evdkit/montecarlo.hpp"

using namespace evdkit;

namespace {

StudyConfig small_config() {
  StudyConfig c;
  c.generators = {table3_presets()[0], table3_presets()[1]};
  c.fitters = {Fitter::EV, Fitter::GEV_MLE, Fitter::GEV_PWM};
  c.n_per_sample = 60;
  c.n_replicates = 12;
  c.seed = 5;
  return c;
}

std::string csv(const StudyReport& r) {
  std::ostringstream os;
  write_long_csv(os, r);
  return os.str();
}

NamedSpec preset(std::string_view label) {
  for (const auto& p : table3_presets()) {
    if (p.label == label) return p;
  }
  throw std::runtime_error("no preset");
}

}  // namespace

TEST_SUITE("montecarlo") {
  TEST_CASE("fitter names") {
    CHECK(parse_fitter("gev-pwm") == Fitter::GEV_PWM);
    CHECK(parse_fitter("GEV") == Fitter::GEV_MLE);
    CHECK(parse_fitter("tcev") == Fitter::TCEV);
    CHECK_FALSE(parse_fitter("weibull").has_value());
    CHECK(fitter_family(Fitter::GEV_PWM) == Family::GEV);
    const auto d = default_fitters();
    CHECK(std::find(d.begin(), d.end(), Fitter::GTIEV3) == d.end());
    CHECK(d.size() == 9);
  }

  TEST_CASE("config validation") {
    auto c = small_config();
    c.n_per_sample = 19;
    CHECK_THROWS_AS(validate_study_config(c), InvalidSpecError);
    c = small_config();
    c.n_replicates = 9;
    CHECK_THROWS_AS(validate_study_config(c), InvalidSpecError);
    c = small_config();
    c.fitters.clear();
    CHECK_THROWS_AS(run_study(c), InvalidSpecError);
  }

  TEST_CASE("report layout and determinism") {
    auto c = small_config();
    c.threads = 1;
    const auto a = run_study(c);
    c.threads = 3;
    const auto b = run_study(c);
    CHECK(csv(a) == csv(b));
    CHECK(a.cells.size() == 6);
    for (const auto& cell : a.cells) CHECK(cell.replicates.size() == 12);
    REQUIRE(a.cell("GEV", Fitter::GEV_PWM) != nullptr);
    CHECK(a.cell("GEV", Fitter::TCEV) == nullptr);

    const std::string text = csv(a);
    CHECK(text.rfind("generator,fitter,replicate,metric,value\n", 0) == 0);
    c.seed = 6;
    CHECK(csv(run_study(c)) != text);
  }

  TEST_CASE("summaries") {
    const auto r = run_study(small_config());
    const auto s = r.cell("EV", Fitter::EV)->summary(Metric::AIC);
    REQUIRE(s.has_value());
    CHECK(s->count == 12);
    CHECK(s->min <= s->q1);
    CHECK(s->q1 <= s->median);
    CHECK(s->median <= s->q3);
    CHECK(s->q3 <= s->max);
  }

  TEST_CASE("Gumbel samples: Gumbel fit has no upper-quantile bias") {
    StudyConfig c;
    c.generators = {preset("EV")};
    c.fitters = {Fitter::EV};
    const auto r = run_study(c);
    const auto s = r.cell("EV", Fitter::EV)->summary(Metric::Q999);
    REQUIRE(s.has_value());
    CHECK(std::fabs(s->median) <= 0.05);
  }

  TEST_CASE("GEV samples: Gumbel and TEV fits underestimate the upper quantile") {
    StudyConfig c;
    c.generators = {preset("GEV")};
    c.fitters = {Fitter::EV, Fitter::TEV, Fitter::GEV_PWM};
    const auto r = run_study(c);
    CHECK(r.cell("GEV", Fitter::EV)->summary(Metric::Q999)->median < -0.05);
    CHECK(r.cell("GEV", Fitter::TEV)->summary(Metric::Q999)->median < -0.05);
    CHECK(r.cell("GEV", Fitter::GEV_PWM)->summary(Metric::ADR)->median <=
          r.cell("GEV", Fitter::EV)->summary(Metric::ADR)->median);
  }

  TEST_CASE("Gumbel samples: parameter penalty bound on AIC") {
    StudyConfig c;
    c.generators = {preset("EV")};
    c.fitters = {Fitter::EV, Fitter::GLIV, Fitter::TCEV};
    c.n_replicates = 50;
    const auto r = run_study(c);
    const double ev = r.cell("EV", Fitter::EV)->summary(Metric::AIC)->median;
    CHECK(ev <= r.cell("EV", Fitter::GLIV)->summary(Metric::AIC)->median + 6);
    CHECK(ev <= r.cell("EV", Fitter::TCEV)->summary(Metric::AIC)->median + 6);
  }

  TEST_CASE("large-sample consistency of the upper quantile") {
    FitConfig config;
    for (const auto& [label, spec] : table3_presets()) {
      const Fitter fitter = *parse_fitter(label);
      if (fitter == Fitter::TCEV || fitter == Fitter::GLIV || fitter == Fitter::TEV) continue;
      INFO(label);
      const auto x = sample(spec, 100000, 314);
      const auto fit = run_fitter(fitter, x, config);
      CHECK(std::fabs(q999_discrepancy(fit.spec, spec)) <= 0.05);
    }
  }

  TEST_CASE("failures are recorded, not dropped") {
    ReplicateMetrics m;
    m.error = "boom";
    CHECK_FALSE(m.get(Metric::AIC).has_value());
    CellReport cell;
    cell.replicates.resize(3);
    cell.replicates[0].aic = 1.0;
    CHECK(cell.summary(Metric::AIC)->count == 1);
    CHECK_FALSE(cell.summary(Metric::ADR).has_value());
  }
}
