#pragma once

// Small numerically careful helpers shared by the core sources.

#include <cmath>
#include <functional>
#include <limits>

namespace evdkit::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ln(1 + e^t)
inline double softplus(double t) {
  return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

// 1 / (1 + e^-t)
inline double logistic(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

// ln(1 - e^-u) for u = e^lu > 0, given lu = ln u. Accurate for tiny u.
inline double log_one_minus_exp_neg(double lu) {
  if (lu < -18.0) {
    const double u = std::exp(lu);
    return lu - 0.5 * u;
  }
  const double u = std::exp(lu);
  if (u > 700.0) return -std::exp(-u);
  return std::log(-std::expm1(-u));
}

// ln(e^u - 1) for u = e^lu > 0.
inline double log_expm1_of_exp(double lu) {
  if (lu < -18.0) return lu + 0.5 * std::exp(lu);
  const double u = std::exp(lu);
  if (u > 35.0) return u + std::log1p(-std::exp(-u));
  return std::log(std::expm1(u));
}

inline double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = a > b ? a : b;
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

struct RootResult {
  double x = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Brent's method on [a, b] with f(a), f(b) of opposite sign (or zero).
RootResult brent_root(const std::function<double(double)>& f, double a, double b, double fa,
                      double fb, double xtol, double ftol, int max_iter = 300);

}  // namespace evdkit::detail
