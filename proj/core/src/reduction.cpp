#include "evdkit/reduction.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "evdkit/error.hpp"
#include "evdkit/quadrature.hpp"
#include "evdkit/special_functions.hpp"
#include "numeric.hpp"

namespace evdkit {

namespace {

constexpr std::array<std::string_view, 6> kNames = {"KumGum", "GTIEV", "ExpGama",
                                                    "EGGu",   "BG",    "KBGGu"};

constexpr double kSliceTol = 1e-12;

void check(NonIdentifiableFamily family, std::span<const double> p) {
  const std::string name(family_name(family));
  if (p.size() != parameter_count(family)) {
    throw DomainError(name + " takes " + std::to_string(parameter_count(family)) + " parameters");
  }
  for (double v : p) {
    if (!std::isfinite(v)) throw DomainError(name + ": parameters must be finite");
  }
  if (!(p[1] > 0.0)) throw DomainError(name + ": sigma must be positive");
  if (!(p[2] > 0.0) || !(p[3] > 0.0)) throw DomainError(name + ": shapes must be positive");
}

// KBGGu normalizing integral over [0, g] after t = s^(1/alpha), which
// removes the t^(alpha-1) endpoint singularity.
double kummer_beta_integral(double a, double b, double c, double g) {
  auto f = [&](double s) {
    const double t = std::pow(s, 1.0 / a);
    return std::pow(1.0 - t, b - 1.0) * std::exp(-c * t) / a;
  };
  const double upper = std::pow(g, a);
  if (upper <= 0.0) return 0.0;
  QuadratureOptions opt;
  opt.abs_tol = 1e-15;
  opt.rel_tol = 1e-13;
  const auto r = integrate(f, 0.0, upper, opt);
  if (!r.converged) throw NonConvergenceError("KBGGu cdf: quadrature did not converge");
  return r.value;
}

}  // namespace

std::string_view family_name(NonIdentifiableFamily family) {
  return kNames.at(static_cast<std::size_t>(family));
}

std::optional<NonIdentifiableFamily> parse_nonidentifiable_family(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
  };
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (lower(kNames[i]) == lower(name)) return static_cast<NonIdentifiableFamily>(i);
  }
  return std::nullopt;
}

std::size_t parameter_count(NonIdentifiableFamily family) {
  return family == NonIdentifiableFamily::KBGGu ? 5 : 4;
}

DistributionSpec reduce_to_identifiable(NonIdentifiableFamily family,
                                        std::span<const double> p) {
  check(family, p);
  const double mu = p[0], sigma = p[1], a = p[2], b = p[3];
  switch (family) {
    case NonIdentifiableFamily::KumGum:
      return DistributionSpec::egu(mu + sigma * std::log(a), sigma, b);
    case NonIdentifiableFamily::GTIEV:
      return DistributionSpec::gtiev3(mu + sigma * std::log(sigma * a / b), sigma, a);
    case NonIdentifiableFamily::ExpGama:
      return DistributionSpec::ega(mu + sigma * std::log(a), sigma, b);
    case NonIdentifiableFamily::EGGu:
      if (std::fabs(a - 1.0) > kSliceTol) {
        throw DomainError("EGGu reduces to EV only when alpha = 1");
      }
      return DistributionSpec::ev(mu + sigma * std::log(b), sigma);
    case NonIdentifiableFamily::BG:
      if (std::fabs(b - 1.0) > kSliceTol) {
        throw DomainError("BG reduces to EV only when beta = 1");
      }
      return DistributionSpec::ev(mu + sigma * std::log(a), sigma);
    case NonIdentifiableFamily::KBGGu:
      if (std::fabs(b - 1.0) > kSliceTol || std::fabs(p[4]) > kSliceTol) {
        throw DomainError("KBGGu reduces to EV only when beta = 1 and gamma = 0");
      }
      return DistributionSpec::ev(mu + sigma * std::log(a), sigma);
  }
  throw DomainError("unknown family");
}

double nonidentifiable_cdf(NonIdentifiableFamily family, std::span<const double> p, double x) {
  check(family, p);
  const double z = (x - p[0]) / p[1];
  const double u = std::exp(-z);
  const double a = p[2], b = p[3];
  switch (family) {
    case NonIdentifiableFamily::KumGum: {
      // 1 - (1 - G^a)^b
      const double one_minus_ga = -std::expm1(-a * u);
      return -std::expm1(b * std::log(one_minus_ga));
    }
    case NonIdentifiableFamily::GTIEV:
      return std::exp(-a * std::log1p(p[1] / b * u));
    case NonIdentifiableFamily::ExpGama:
      return upper_incomplete_gamma_regularized(b, a * u);
    case NonIdentifiableFamily::EGGu: {
      // [1 - (1 - G)^a]^b
      const double one_minus_g = -std::expm1(-u);
      return std::exp(b * std::log1p(-std::pow(one_minus_g, a)));
    }
    case NonIdentifiableFamily::BG:
      return incomplete_beta_pair(a, b, std::exp(-u), -std::expm1(-u)).value;
    case NonIdentifiableFamily::KBGGu: {
      const double c = p[4];
      const double g = std::exp(-u);
      return kummer_beta_integral(a, b, c, g) / kummer_beta_integral(a, b, c, 1.0);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace evdkit
