#include "evdkit/gof.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "evdkit/error.hpp"
#include "evdkit/estimation.hpp"
#include "evdkit/format.hpp"
#include "evdkit/parallel.hpp"
#include "evdkit/random.hpp"

namespace evdkit {

namespace {

std::vector<double> sorted_clamped(std::span<const double> z) {
  if (z.empty()) throw DataError("AD statistic of an empty sample");
  std::vector<double> out(z.begin(), z.end());
  for (double& v : out) {
    if (std::isnan(v)) throw DataError("AD statistic: cdf value is NaN");
    v = std::clamp(v, kZClamp, 1.0 - kZClamp);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> cdf_values(std::span<const double> data, const DistributionSpec& spec) {
  std::vector<double> z(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) z[i] = cdf(spec, data[i]);
  return z;
}

// Linear interpolation between order statistics (sample quantile type 7).
double type7_quantile(const std::vector<double>& sorted, double q) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

double aic(double loglik, std::size_t k) { return -2.0 * loglik + 2.0 * static_cast<double>(k); }

double adr_from_z(std::span<const double> zin) {
  const auto z = sorted_clamped(zin);
  const std::size_t n = z.size();
  const double nd = static_cast<double>(n);
  double sum_z = 0.0, weighted = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    sum_z += z[i - 1];
    weighted += (2.0 * static_cast<double>(i) - 1.0) * std::log1p(-z[n - i]);
  }
  return nd / 2.0 - 2.0 * sum_z - weighted / nd;
}

double ad2r_from_z(std::span<const double> zin) {
  const auto z = sorted_clamped(zin);
  const std::size_t n = z.size();
  const double nd = static_cast<double>(n);
  double sum_log = 0.0, weighted = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    sum_log += std::log1p(-z[i - 1]);
    weighted += (2.0 * static_cast<double>(i) - 1.0) / (1.0 - z[n - i]);
  }
  return 2.0 * sum_log + weighted / nd;
}

double adr(std::span<const double> data, const DistributionSpec& spec) {
  return adr_from_z(cdf_values(data, spec));
}

double ad2r(std::span<const double> data, const DistributionSpec& spec) {
  return ad2r_from_z(cdf_values(data, spec));
}

double q999_discrepancy(const DistributionSpec& fitted, const DistributionSpec& reference) {
  const double qr = quantile(reference, 0.999);
  if (qr == 0.0) throw DomainError("q999_discrepancy: reference quantile is zero");
  return (quantile(fitted, 0.999) - qr) / qr;
}

GofReport evaluate_fit(std::span<const double> data, const DistributionSpec& fitted,
                       const std::optional<DistributionSpec>& reference) {
  GofReport r;
  r.family = fitted.family();
  r.n = data.size();
  r.loglik = log_likelihood(data, fitted);
  r.aic = aic(r.loglik, parameter_count(fitted.family()));
  const auto z = cdf_values(data, fitted);
  r.adr = adr_from_z(z);
  r.ad2r = ad2r_from_z(z);
  if (reference) r.q999_discrepancy = q999_discrepancy(fitted, *reference);
  return r;
}

QqEnvelope qq_envelope(std::span<const double> data, const DistributionSpec& spec,
                       std::size_t replicates, double coverage, std::uint64_t seed,
                       std::size_t threads) {
  if (replicates < 100) throw DomainError("qq_envelope: at least 100 replicates are required");
  if (!(coverage > 0.0 && coverage < 1.0)) throw DomainError("qq_envelope: coverage must be in (0, 1)");
  if (data.empty()) throw DataError("qq_envelope: empty data");
  const std::size_t n = data.size();
  QqEnvelope env;
  env.coverage = coverage;
  env.replicates = replicates;
  env.empirical_q.assign(data.begin(), data.end());
  std::sort(env.empirical_q.begin(), env.empirical_q.end());
  env.p.resize(n);
  env.theoretical_q.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    env.p[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    env.theoretical_q[i] = quantile(spec, env.p[i]);
  }
  // boot[r * n + i] is the i-th order statistic of replicate r.
  std::vector<double> boot(replicates * n);
  parallel_for(
      replicates,
      [&](std::size_t r) {
        Rng rng(derive_seed(seed, r));
        auto s = sample(spec, n, rng);
        std::sort(s.begin(), s.end());
        std::copy(s.begin(), s.end(), boot.begin() + static_cast<std::ptrdiff_t>(r * n));
      },
      threads);
  env.lower_band.resize(n);
  env.upper_band.resize(n);
  std::vector<double> column(replicates);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < replicates; ++r) column[r] = boot[r * n + i];
    std::sort(column.begin(), column.end());
    env.lower_band[i] = type7_quantile(column, (1.0 - coverage) / 2.0);
    env.upper_band[i] = type7_quantile(column, (1.0 + coverage) / 2.0);
  }
  return env;
}

double envelope_inside_fraction(const QqEnvelope& env) {
  if (env.empirical_q.empty()) return 0.0;
  std::size_t inside = 0;
  for (std::size_t i = 0; i < env.empirical_q.size(); ++i) {
    if (env.empirical_q[i] >= env.lower_band[i] && env.empirical_q[i] <= env.upper_band[i]) {
      ++inside;
    }
  }
  return static_cast<double>(inside) / static_cast<double>(env.empirical_q.size());
}

void write_envelope_csv(std::ostream& os, const QqEnvelope& env) {
  os << "index,p,theoretical_q,empirical_q,lower,upper\n";
  for (std::size_t i = 0; i < env.p.size(); ++i) {
    os << (i + 1) << ',' << format_double(env.p[i]) << ',' << format_double(env.theoretical_q[i])
       << ',' << format_double(env.empirical_q[i]) << ',' << format_double(env.lower_band[i])
       << ',' << format_double(env.upper_band[i]) << '\n';
  }
}

}  // namespace evdkit
