#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "evdkit/distribution.hpp"
#include "evdkit/optimizer.hpp"

namespace evdkit {

enum class FitMethod { MLE, PWM, ProfileMLE };

std::string_view method_name(FitMethod method);

struct FitConfig {
  /// Per-parameter (lo, hi) in data units. Empty means default_bounds().
  std::vector<Bound> bounds;
  std::optional<std::vector<double>> start;
  double tol = 1e-8;
  int max_iters = 500;
  /// TEV profile grid size over (-1, 1].
  std::size_t profile_grid = 201;
};

/// GEV alpha in [-0.6, 0.6]; GLIV alpha in (0, 1] and beta in (0, 20];
/// TEV alpha in (-1, 1]; GTIEV3 alpha up to 1e10. Scales are positive,
/// locations free. The TCEV entry for sigma1 bounds the ratio sigma1/sigma
/// (default [1, 1e4]), and its weight stays below 0.5.
std::vector<Bound> default_bounds(Family family);

struct FitResult {
  DistributionSpec spec;
  std::vector<std::optional<double>> std_errors;
  double loglik = 0.0;
  FitMethod method = FitMethod::MLE;
  bool converged = false;
  std::size_t n_evals = 0;
  std::vector<bool> bounds_active;
};

double log_likelihood(std::span<const double> data, const DistributionSpec& spec);

/// Bound-constrained maximum likelihood with several starting points,
/// always including the point at which the family collapses to the
/// fitted Gumbel law.
FitResult fit_mle(std::span<const double> data, Family family, const FitConfig& config = {});

/// TEV by profiling alpha over a grid, then polishing the best grid point.
FitResult fit_tev_profile(std::span<const double> data, const FitConfig& config = {});

/// GEV by probability-weighted moments with plotting positions (j - a)/n.
FitResult fit_gev_pwm(std::span<const double> data, double plotting_offset = 0.35);

struct ProfilePoint {
  double value = 0.0;
  double loglik = 0.0;
  std::vector<double> params;  ///< full parameter vector at the inner optimum
  bool ok = false;
};

/// Maximized log-likelihood with parameter `param_index` held at each grid
/// value. Failed grid points come back with ok = false.
std::vector<ProfilePoint> profile_loglik_curve(std::span<const double> data, Family family,
                                               std::size_t param_index,
                                               std::span<const double> grid,
                                               const FitConfig& config = {});

/// Standard errors from the inverse of the central-difference Hessian of
/// the negative log-likelihood. Entries for parameters flagged in
/// `fixed` are left empty; all are empty when the Hessian is not positive
/// definite.
std::vector<std::optional<double>> standard_errors(std::span<const double> data,
                                                   const DistributionSpec& spec,
                                                   const std::vector<bool>& fixed);

}  // namespace evdkit
