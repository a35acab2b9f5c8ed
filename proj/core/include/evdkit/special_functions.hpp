#pragma once

#include <cstddef>

namespace evdkit {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kZeta3 = 1.20205690315959428539973816151144999;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

// Iteration cap shared by the series and continued-fraction evaluators.
inline constexpr std::size_t kSpecialFnMaxIterations = 500;

struct SpecialFnResult {
  double value = 0.0;
  bool converged = true;
  std::size_t iterations = 0;
};

/// ln Gamma(x) for x > 0 (Lanczos approximation). Throws DomainError otherwise.
double log_gamma(double x);

/// Gamma(x) for x > 0.
double gamma_fn(double x);

/// Polygamma psi^(n)(x) for n in {0,1,2,3}, x > 0. n = 0 is the digamma function.
double polygamma(int n, double x);

inline double digamma(double x) { return polygamma(0, x); }
inline double trigamma(double x) { return polygamma(1, x); }

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s).
SpecialFnResult upper_incomplete_gamma(double s, double x);
/// Regularized lower incomplete gamma P(s, x) = 1 - Q(s, x), computed directly.
SpecialFnResult lower_incomplete_gamma(double s, double x);

double upper_incomplete_gamma_regularized(double s, double x);
double lower_incomplete_gamma_regularized(double s, double x);

/// I_w(a, b) together with its complement, each evaluated on the side where
/// it is accurate. `w_complement` must equal 1 - w; passing it separately
/// keeps precision when w is within rounding of 1.
struct IncompleteBetaPair {
  double value = 0.0;
  double complement = 1.0;
  bool converged = true;
  std::size_t iterations = 0;
};
IncompleteBetaPair incomplete_beta_pair(double a, double b, double w, double w_complement);

SpecialFnResult incomplete_beta(double a, double b, double w);
double incomplete_beta_regularized(double a, double b, double w);

/// ln B(a, b).
double log_beta(double a, double b);

}  // namespace evdkit
