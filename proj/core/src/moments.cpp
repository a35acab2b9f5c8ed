#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "evdkit/distribution.hpp"
#include "evdkit/error.hpp"
#include "evdkit/quadrature.hpp"
#include "evdkit/special_functions.hpp"

namespace evdkit {

namespace {

// Mean and central moments 2..4 in x units.
struct Central {
  double mean;
  double c2;
  double c3;
  double c4;
};

MomentSummary summarize(const Central& c) {
  MomentSummary m;
  m.mean = c.mean;
  m.variance = c.c2;
  m.skewness = c.c3 / std::pow(c.c2, 1.5);
  m.kurtosis = c.c4 / (c.c2 * c.c2);
  return m;
}

// Location-scale transform of standardized cumulants (kappa1..kappa4).
Central from_cumulants(double mu, double sigma, double k1, double k2, double k3, double k4) {
  const double s2 = sigma * sigma;
  return {mu + sigma * k1, s2 * k2, s2 * sigma * k3, s2 * s2 * (k4 + 3.0 * k2 * k2)};
}

struct GumbelComponent {
  double weight;
  double location;
  double scale;
};

// Finite signed mixture of Gumbel laws. Weights must sum to one.
Central gumbel_mixture(std::span<const GumbelComponent> parts) {
  const double k2 = kPi * kPi / 6.0;
  const double k3 = 2.0 * kZeta3;
  const double k4 = std::pow(kPi, 4) / 15.0;
  double mean = 0.0;
  for (const auto& c : parts) mean += c.weight * (c.location + c.scale * kEulerGamma);
  Central out{mean, 0.0, 0.0, 0.0};
  for (const auto& c : parts) {
    const double d = c.location + c.scale * kEulerGamma - mean;
    const double s = c.scale;
    const double m2 = s * s * k2;
    const double m3 = s * s * s * k3;
    const double m4 = s * s * s * s * (k4 + 3.0 * k2 * k2);
    out.c2 += c.weight * (m2 + d * d);
    out.c3 += c.weight * (m3 + 3.0 * d * m2 + d * d * d);
    out.c4 += c.weight * (m4 + 4.0 * d * m3 + 6.0 * d * d * m2 + d * d * d * d);
  }
  return out;
}

// Moments by direct integration of the standardized density, split at the
// mean so both tails are resolved.
Central by_quadrature(const DistributionSpec& spec) {
  const auto p = spec.params();
  std::vector<double> std_params(p.begin(), p.end());
  std_params[0] = 0.0;
  std_params[1] = 1.0;
  const Family fam = spec.family();
  auto dens = [&](double z) {
    return std::exp(detail::log_pdf_unchecked(fam, std_params, z));
  };
  QuadratureOptions opt;
  opt.abs_tol = 1e-14;
  opt.rel_tol = 1e-13;
  auto moment = [&](double centre, int k) {
    auto f = [&](double z) {
      const double d = dens(z);
      return d == 0.0 ? 0.0 : std::pow(z - centre, k) * d;
    };
    const auto lo = integrate(f, -std::numeric_limits<double>::infinity(), centre, opt);
    const auto hi = integrate(f, centre, std::numeric_limits<double>::infinity(), opt);
    if (!lo.converged || !hi.converged) {
      throw NonConvergenceError("moments: quadrature did not converge for " + to_string(spec));
    }
    return lo.value + hi.value;
  };
  const double mean_guess = moment(0.0, 1);
  const double shift = moment(mean_guess, 1);
  const double mean = mean_guess + shift;
  const double c2 = moment(mean, 2);
  const double c3 = moment(mean, 3);
  const double c4 = moment(mean, 4);
  const double mu = p[0], sigma = p[1];
  return {mu + sigma * mean, sigma * sigma * c2, std::pow(sigma, 3) * c3, std::pow(sigma, 4) * c4};
}

MomentSummary gev_moments(const DistributionSpec& spec) {
  const double mu = spec.mu(), sigma = spec.sigma(), a = spec.param(2);
  if (a == 0.0) return summarize(gumbel_mixture(std::array{GumbelComponent{1.0, mu, sigma}}));
  // Differences of Gamma(1 - k alpha) lose every digit as alpha -> 0.
  if (std::fabs(a) < 1e-2) return summarize(by_quadrature(spec));
  MomentSummary m;
  auto g = [a](int k) { return gamma_fn(1.0 - k * a); };
  if (a < 1.0) m.mean = mu + sigma * (g(1) - 1.0) / a;
  if (a < 0.5) {
    const double g1 = g(1), g2 = g(2);
    const double v = g2 - g1 * g1;
    m.variance = sigma * sigma * v / (a * a);
    if (a < 1.0 / 3.0) {
      const double g3 = g(3);
      const double sign = a > 0.0 ? 1.0 : -1.0;
      m.skewness = sign * (g3 - 3.0 * g1 * g2 + 2.0 * g1 * g1 * g1) / std::pow(v, 1.5);
      if (a < 0.25) {
        const double g4 = g(4);
        m.kurtosis =
            (g4 - 4.0 * g1 * g3 + 6.0 * g1 * g1 * g2 - 3.0 * g1 * g1 * g1 * g1) / (v * v);
      }
    }
  }
  return m;
}

}  // namespace

MomentSummary moments(const DistributionSpec& spec) {
  const double mu = spec.mu(), sigma = spec.sigma();
  switch (spec.family()) {
    case Family::EV:
      return summarize(gumbel_mixture(std::array{GumbelComponent{1.0, mu, sigma}}));
    case Family::GEV: return gev_moments(spec);
    case Family::TEV: {
      const double a = spec.param(2);
      // F = (1 + a) G(z) - a G(z)^2 and G^2 is Gumbel shifted by ln 2.
      return summarize(gumbel_mixture(std::array{GumbelComponent{1.0 + a, mu, sigma},
                                                 GumbelComponent{-a, mu + sigma * kLn2, sigma}}));
    }
    case Family::TCEV: {
      const double a = spec.param(4);
      return summarize(gumbel_mixture(std::array{
          GumbelComponent{1.0 - a, mu, sigma},
          GumbelComponent{a, spec.param(2), spec.param(3)}}));
    }
    case Family::GTIEV3: {
      const double a = spec.param(2);
      const double k1 = kEulerGamma - std::log(a) + digamma(a);
      const double k2 = polygamma(1, 1.0) + polygamma(1, a);
      const double k3 = polygamma(2, a) - polygamma(2, 1.0);
      const double k4 = polygamma(3, a) + polygamma(3, 1.0);
      return summarize(from_cumulants(mu, sigma, k1, k2, k3, k4));
    }
    case Family::EGa: {
      const double a = spec.param(2);
      return summarize(from_cumulants(mu, sigma, -digamma(a), polygamma(1, a), -polygamma(2, a),
                                      polygamma(3, a)));
    }
    case Family::GLIV: {
      const double a = spec.param(2), b = spec.param(3);
      return summarize(from_cumulants(mu, sigma, digamma(b) - digamma(a) + std::log(a / b),
                                      polygamma(1, a) + polygamma(1, b),
                                      polygamma(2, b) - polygamma(2, a),
                                      polygamma(3, a) + polygamma(3, b)));
    }
    case Family::EGu:
    case Family::GGu: return summarize(by_quadrature(spec));
  }
  return {};
}

}  // namespace evdkit
