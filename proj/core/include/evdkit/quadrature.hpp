#pragma once

#include <cstddef>
#include <functional>

namespace evdkit {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::size_t max_intervals = 4000;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Either limit may be infinite; infinite ranges are mapped onto finite
/// ones (x = a + t/(1-t), x = t/(1-t^2)) before subdivision.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

}  // namespace evdkit
