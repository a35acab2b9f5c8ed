#include "evdkit/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <ostream>

#include "evdkit/error.hpp"
#include "evdkit/format.hpp"
#include "evdkit/gof.hpp"
#include "evdkit/parallel.hpp"
#include "evdkit/random.hpp"

namespace evdkit {

namespace {

constexpr std::array<std::string_view, 10> kFitterNames = {
    "EV", "GEV-MLE", "GEV-PWM", "EGu", "TEV", "GTIEV3", "EGa", "GGu", "GLIV", "TCEV"};

double type7(const std::vector<double>& sorted, double q) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::string_view fitter_name(Fitter fitter) {
  return kFitterNames.at(static_cast<std::size_t>(fitter));
}

std::optional<Fitter> parse_fitter(std::string_view name) {
  auto norm = [](std::string_view s) {
    std::string out;
    for (char c : s) {
      if (c == '-' || c == '_') continue;
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
  };
  const std::string key = norm(name);
  if (key == "gev") return Fitter::GEV_MLE;
  for (std::size_t i = 0; i < kFitterNames.size(); ++i) {
    if (norm(kFitterNames[i]) == key) return static_cast<Fitter>(i);
  }
  return std::nullopt;
}

Family fitter_family(Fitter fitter) {
  switch (fitter) {
    case Fitter::EV: return Family::EV;
    case Fitter::GEV_MLE:
    case Fitter::GEV_PWM: return Family::GEV;
    case Fitter::EGu: return Family::EGu;
    case Fitter::TEV: return Family::TEV;
    case Fitter::GTIEV3: return Family::GTIEV3;
    case Fitter::EGa: return Family::EGa;
    case Fitter::GGu: return Family::GGu;
    case Fitter::GLIV: return Family::GLIV;
    case Fitter::TCEV: return Family::TCEV;
  }
  return Family::EV;
}

std::vector<Fitter> default_fitters() {
  return {Fitter::EV,  Fitter::GEV_MLE, Fitter::GEV_PWM, Fitter::EGu,  Fitter::TEV,
          Fitter::EGa, Fitter::GGu,     Fitter::GLIV,    Fitter::TCEV};
}

FitResult run_fitter(Fitter fitter, std::span<const double> data, const FitConfig& config) {
  switch (fitter) {
    case Fitter::GEV_PWM: return fit_gev_pwm(data);
    case Fitter::TEV: return fit_tev_profile(data, config);
    default: return fit_mle(data, fitter_family(fitter), config);
  }
}

void validate_study_config(const StudyConfig& c) {
  if (c.n_per_sample < 20) throw InvalidSpecError("n_per_sample must be at least 20");
  if (c.n_replicates < 10) throw InvalidSpecError("n_replicates must be at least 10");
  if (c.generators.empty()) throw InvalidSpecError("no generators configured");
  if (c.fitters.empty()) throw InvalidSpecError("no fitters configured");
}

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::LogLik: return "loglik";
    case Metric::AIC: return "aic";
    case Metric::ADR: return "adr";
    case Metric::AD2R: return "ad2r";
    case Metric::Q999: return "q999_discrepancy";
  }
  return "?";
}

std::optional<double> ReplicateMetrics::get(Metric metric) const {
  switch (metric) {
    case Metric::LogLik: return loglik;
    case Metric::AIC: return aic;
    case Metric::ADR: return adr;
    case Metric::AD2R: return ad2r;
    case Metric::Q999: return q999_discrepancy;
  }
  return std::nullopt;
}

std::optional<FiveNumber> CellReport::summary(Metric metric) const {
  std::vector<double> v;
  for (const auto& r : replicates) {
    if (auto x = r.get(metric); x && std::isfinite(*x)) v.push_back(*x);
  }
  if (v.empty()) return std::nullopt;
  std::sort(v.begin(), v.end());
  return FiveNumber{v.front(), type7(v, 0.25), type7(v, 0.5), type7(v, 0.75), v.back(), v.size()};
}

const CellReport* StudyReport::cell(std::string_view generator, Fitter fitter) const {
  for (const auto& c : cells) {
    if (c.generator == generator && c.fitter == fitter) return &c;
  }
  return nullptr;
}

StudyReport run_study(const StudyConfig& config) {
  validate_study_config(config);
  const std::size_t G = config.generators.size();
  const std::size_t F = config.fitters.size();
  const std::size_t R = config.n_replicates;
  StudyReport report;
  report.n_per_sample = config.n_per_sample;
  report.n_replicates = R;
  report.seed = config.seed;
  report.cells.resize(G * F);
  for (std::size_t g = 0; g < G; ++g) {
    for (std::size_t f = 0; f < F; ++f) {
      auto& c = report.cells[g * F + f];
      c.generator = config.generators[g].label;
      c.fitter = config.fitters[f];
      c.replicates.resize(R);
    }
  }
  parallel_for(
      G * R,
      [&](std::size_t unit) {
        const std::size_t g = unit / R, r = unit % R;
        const auto& gen = config.generators[g].spec;
        const auto data = sample(gen, config.n_per_sample, derive_seed(config.seed, g, r));
        for (std::size_t f = 0; f < F; ++f) {
          ReplicateMetrics m;
          try {
            const auto fit = run_fitter(config.fitters[f], data, config.fit_config);
            const auto gof = evaluate_fit(data, fit.spec, gen);
            m.loglik = gof.loglik;
            m.aic = gof.aic;
            m.adr = gof.adr;
            m.ad2r = gof.ad2r;
            m.q999_discrepancy = gof.q999_discrepancy;
            m.converged = fit.converged;
          } catch (const Error& e) {
            m.error = e.what();
          }
          report.cells[g * F + f].replicates[r] = std::move(m);
        }
      },
      config.threads);
  for (auto& c : report.cells) {
    for (const auto& m : c.replicates) {
      if (!m.error.empty()) {
        ++c.fit_errors;
      } else if (!m.converged) {
        ++c.nonconverged;
      }
    }
  }
  return report;
}

void write_long_csv(std::ostream& out, const StudyReport& report) {
  out << "generator,fitter,replicate,metric,value\n";
  for (const auto& c : report.cells) {
    for (std::size_t r = 0; r < c.replicates.size(); ++r) {
      for (Metric m : kAllMetrics) {
        const auto v = c.replicates[r].get(m);
        out << c.generator << ',' << fitter_name(c.fitter) << ',' << (r + 1) << ','
            << metric_name(m) << ',' << (v ? format_double(*v) : std::string("NA")) << '\n';
      }
    }
  }
}

}  // namespace evdkit
