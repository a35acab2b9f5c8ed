#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "evdkit/distribution.hpp"

namespace evdkit {

/// cdf values are clamped to [kZClamp, 1 - kZClamp] before the AD sums.
inline constexpr double kZClamp = 1e-12;

struct GofReport {
  Family family = Family::EV;
  std::size_t n = 0;
  double loglik = 0.0;
  double aic = 0.0;
  double adr = 0.0;
  double ad2r = 0.0;
  std::optional<double> q999_discrepancy;
};

/// -2 loglik + 2k.
double aic(double loglik, std::size_t k);

/// Right-tail Anderson-Darling statistic from probability-integral values
/// (any order):
///   n/2 - 2 sum z_(i) - (1/n) sum (2i-1) ln(1 - z_(n+1-i)).
double adr_from_z(std::span<const double> z);

/// Second-order right-tail statistic:
///   2 sum ln(1 - z_(i)) + (1/n) sum (2i-1) / (1 - z_(n+1-i)).
double ad2r_from_z(std::span<const double> z);

double adr(std::span<const double> data, const DistributionSpec& spec);
double ad2r(std::span<const double> data, const DistributionSpec& spec);

/// (q_fit(.999) - q_ref(.999)) / q_ref(.999). Throws DomainError if the
/// reference quantile is zero.
double q999_discrepancy(const DistributionSpec& fitted, const DistributionSpec& reference);

GofReport evaluate_fit(std::span<const double> data, const DistributionSpec& fitted,
                       const std::optional<DistributionSpec>& reference = std::nullopt);

struct QqEnvelope {
  std::vector<double> p;
  std::vector<double> theoretical_q;
  std::vector<double> empirical_q;
  std::vector<double> lower_band;
  std::vector<double> upper_band;
  double coverage = 0.90;
  std::size_t replicates = 0;
};

/// Parametric-bootstrap QQ envelope at plotting positions (i - 0.5)/n.
/// Replicate r draws from derive_seed(seed, r), so the output does not
/// depend on the thread count.
QqEnvelope qq_envelope(std::span<const double> data, const DistributionSpec& spec,
                       std::size_t replicates = 1000, double coverage = 0.90,
                       std::uint64_t seed = 1, std::size_t threads = 0);

/// Fraction of points with lower <= empirical <= upper.
double envelope_inside_fraction(const QqEnvelope& env);

/// CSV with header index,p,theoretical_q,empirical_q,lower,upper.
void write_envelope_csv(std::ostream& os, const QqEnvelope& env);

}  // namespace evdkit
