#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evdkit/distribution.hpp"
#include "evdkit/estimation.hpp"

namespace evdkit {

/// Competing models of the simulation study. GEV appears twice, once per
/// estimation method; TEV is fitted through its profile likelihood.
enum class Fitter { EV, GEV_MLE, GEV_PWM, EGu, TEV, GTIEV3, EGa, GGu, GLIV, TCEV };

std::string_view fitter_name(Fitter fitter);
std::optional<Fitter> parse_fitter(std::string_view name);
Family fitter_family(Fitter fitter);

/// Every fitter except GTIEV3.
std::vector<Fitter> default_fitters();

/// Fits one sample. Exceptions from the estimators propagate.
FitResult run_fitter(Fitter fitter, std::span<const double> data, const FitConfig& config);

/// Fit settings used by the study: TEV profiled on a 41-point grid.
inline FitConfig study_fit_config() {
  FitConfig config;
  config.profile_grid = 41;
  return config;
}

struct StudyConfig {
  std::vector<NamedSpec> generators = table3_presets();
  std::vector<Fitter> fitters = default_fitters();
  std::size_t n_per_sample = 500;
  std::size_t n_replicates = 200;
  std::uint64_t seed = 1;
  FitConfig fit_config = study_fit_config();
  std::size_t threads = 0;  ///< 0: worker_threads()
};

/// Throws InvalidSpecError when n_per_sample < 20, n_replicates < 10 or a
/// list is empty.
void validate_study_config(const StudyConfig& config);

enum class Metric { LogLik, AIC, ADR, AD2R, Q999 };
inline constexpr std::array<Metric, 5> kAllMetrics = {Metric::LogLik, Metric::AIC, Metric::ADR,
                                                      Metric::AD2R, Metric::Q999};
std::string_view metric_name(Metric metric);

struct ReplicateMetrics {
  std::optional<double> loglik;
  std::optional<double> aic;
  std::optional<double> adr;
  std::optional<double> ad2r;
  std::optional<double> q999_discrepancy;
  bool converged = false;
  std::string error;  ///< non-empty when the fit threw

  [[nodiscard]] std::optional<double> get(Metric metric) const;
};

struct FiveNumber {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

struct CellReport {
  std::string generator;
  Fitter fitter = Fitter::EV;
  std::vector<ReplicateMetrics> replicates;  ///< one entry per replicate, in order
  std::size_t fit_errors = 0;
  std::size_t nonconverged = 0;

  /// Five-number summary over the defined values; empty if none.
  [[nodiscard]] std::optional<FiveNumber> summary(Metric metric) const;
};

struct StudyReport {
  std::size_t n_per_sample = 0;
  std::size_t n_replicates = 0;
  std::uint64_t seed = 0;
  std::vector<CellReport> cells;  ///< generator-major, fitter order as configured

  [[nodiscard]] const CellReport* cell(std::string_view generator, Fitter fitter) const;
};

/// Replicate r of generator g is drawn from derive_seed(seed, g, r), so the
/// report does not depend on scheduling or thread count.
StudyReport run_study(const StudyConfig& config);

/// Long format: generator,fitter,replicate,metric,value ("NA" when undefined).
void write_long_csv(std::ostream& out, const StudyReport& report);

}  // namespace evdkit
