#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace evdkit {

struct Bound {
  double lo;
  double hi;
};

struct OptimizerOptions {
  double gtol = 1e-8;   ///< projected-gradient tolerance, scaled by 1 + |f|
  double xtol = 1e-10;  ///< step tolerance, scaled by 1 + |x|
  double ftol = 1e-14;  ///< relative function-change tolerance
  int max_iters = 500;
  /// Stop after `stall_iters` consecutive steps that each lower f by less
  /// than stall_tol * (1 + |f|) (flat ridges of mixture likelihoods).
  double stall_tol = 1e-10;
  int stall_iters = 5;
};

struct OptimizerResult {
  std::vector<double> x;
  double f = 0.0;
  bool converged = false;
  int iterations = 0;
  std::size_t evaluations = 0;
  std::string message;
};

using Objective = std::function<double(std::span<const double>)>;

/// Central-difference gradient, falling back to a one-sided difference at a
/// bound or where the objective is not finite on one side.
std::vector<double> numerical_gradient(const Objective& f, std::span<const double> x, double fx,
                                       std::span<const Bound> bounds, std::size_t* evaluations);

/// Minimize f over the box by projected BFGS with an Armijo backtracking
/// search along the projected path. Non-finite objective values are treated
/// as +inf. x0 is projected into the box first.
OptimizerResult minimize_box(const Objective& f, std::vector<double> x0,
                             std::span<const Bound> bounds, const OptimizerOptions& options = {});

}  // namespace evdkit
