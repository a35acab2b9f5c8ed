#include "evdkit/distribution.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "evdkit/error.hpp"
#include "evdkit/special_functions.hpp"
#include "numeric.hpp"

namespace evdkit {

namespace {

using detail::kInf;
using detail::kNaN;

constexpr std::array<std::string_view, 9> kNames = {"EV",  "GEV", "EGu",  "TEV", "GTIEV3",
                                                    "EGa", "GGu", "GLIV", "TCEV"};

std::size_t index_of(Family f) { return static_cast<std::size_t>(f); }

// Gumbel pieces in terms of z = (x - mu) / sigma. lu = ln u = -z.
double ev_log_pdf(double z) { return -z - std::exp(-z); }
double ev_cdf(double z) { return std::exp(-std::exp(-z)); }
double ev_survival(double z) { return -std::expm1(-std::exp(-z)); }
double ev_quantile(double p) { return -std::log(-std::log(p)); }

}  // namespace

std::string_view family_name(Family family) { return kNames.at(index_of(family)); }

std::optional<Family> parse_family(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
  };
  const std::string key = lower(name);
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (lower(kNames[i]) == key) return static_cast<Family>(i);
  }
  return std::nullopt;
}

std::size_t parameter_count(Family family) {
  switch (family) {
    case Family::EV: return 2;
    case Family::GLIV: return 4;
    case Family::TCEV: return 5;
    default: return 3;
  }
}

std::vector<std::string> parameter_names(Family family) {
  switch (family) {
    case Family::EV: return {"mu", "sigma"};
    case Family::GLIV: return {"mu", "sigma", "alpha", "beta"};
    case Family::TCEV: return {"mu", "sigma", "mu1", "sigma1", "alpha"};
    default: return {"mu", "sigma", "alpha"};
  }
}

namespace {

// Empty string when valid, otherwise the reason.
std::string check_parameters(Family family, std::span<const double> p) {
  if (p.size() != parameter_count(family)) {
    return std::string(family_name(family)) + " takes " + std::to_string(parameter_count(family)) +
           " parameters, got " + std::to_string(p.size());
  }
  for (double v : p) {
    if (!std::isfinite(v)) return "parameters must be finite";
  }
  if (!(p[1] > 0.0)) return "sigma must be positive";
  switch (family) {
    case Family::EV:
    case Family::GEV: break;
    case Family::EGu:
    case Family::GTIEV3:
    case Family::EGa:
    case Family::GGu:
      if (!(p[2] > 0.0)) return "alpha must be positive";
      break;
    case Family::TEV:
      if (!(p[2] > -1.0 && p[2] <= 1.0)) return "TEV alpha must lie in (-1, 1]";
      break;
    case Family::GLIV:
      if (!(p[2] > 0.0 && p[3] > 0.0)) return "GLIV alpha and beta must be positive";
      break;
    case Family::TCEV:
      if (!(p[3] > 0.0)) return "sigma1 must be positive";
      if (!(p[4] > 0.0 && p[4] < 0.5)) return "TCEV alpha must lie in (0, 0.5)";
      break;
  }
  return {};
}

}  // namespace

void validate_parameters(Family family, std::span<const double> params) {
  const std::string why = check_parameters(family, params);
  if (!why.empty()) throw InvalidSpecError(std::string(family_name(family)) + ": " + why);
}

bool parameters_valid(Family family, std::span<const double> params) noexcept {
  try {
    return check_parameters(family, params).empty();
  } catch (...) {
    return false;
  }
}

DistributionSpec::DistributionSpec(Family family, std::vector<double> params)
    : family_(family), params_(std::move(params)) {
  validate_parameters(family_, params_);
}

DistributionSpec DistributionSpec::ev(double mu, double sigma) { return {Family::EV, {mu, sigma}}; }
DistributionSpec DistributionSpec::gev(double mu, double sigma, double alpha) {
  return {Family::GEV, {mu, sigma, alpha}};
}
DistributionSpec DistributionSpec::egu(double mu, double sigma, double alpha) {
  return {Family::EGu, {mu, sigma, alpha}};
}
DistributionSpec DistributionSpec::tev(double mu, double sigma, double alpha) {
  return {Family::TEV, {mu, sigma, alpha}};
}
DistributionSpec DistributionSpec::gtiev3(double mu, double sigma, double alpha) {
  return {Family::GTIEV3, {mu, sigma, alpha}};
}
DistributionSpec DistributionSpec::ega(double mu, double sigma, double alpha) {
  return {Family::EGa, {mu, sigma, alpha}};
}
DistributionSpec DistributionSpec::ggu(double mu, double sigma, double alpha) {
  return {Family::GGu, {mu, sigma, alpha}};
}
DistributionSpec DistributionSpec::gliv(double mu, double sigma, double alpha, double beta) {
  return {Family::GLIV, {mu, sigma, alpha, beta}};
}
DistributionSpec DistributionSpec::tcev(double mu, double sigma, double mu1, double sigma1,
                                        double alpha) {
  return {Family::TCEV, {mu, sigma, mu1, sigma1, alpha}};
}

std::string to_string(const DistributionSpec& spec) {
  std::ostringstream os;
  os.precision(10);
  os << family_name(spec.family()) << '(';
  for (std::size_t i = 0; i < spec.params().size(); ++i) {
    if (i) os << ", ";
    os << spec.params()[i];
  }
  os << ')';
  return os.str();
}

namespace detail {

double log_pdf_unchecked(Family family, std::span<const double> p, double x) noexcept {
  const double mu = p[0], sigma = p[1];
  if (!(sigma > 0.0)) return kNaN;
  if (family != Family::EV && family != Family::GEV && family != Family::TEV &&
      family != Family::TCEV && !(p[2] > 0.0)) {
    return kNaN;
  }
  if (family == Family::GLIV && !(p[3] > 0.0)) return kNaN;
  const double z = (x - mu) / sigma;
  const double log_sigma = std::log(sigma);
  switch (family) {
    case Family::EV: return ev_log_pdf(z) - log_sigma;
    case Family::GEV: {
      const double a = p[2];
      if (a == 0.0) return ev_log_pdf(z) - log_sigma;
      const double az = a * z;
      if (!(az > -1.0)) return -kInf;
      const double lt = std::log1p(az) / a;
      return -log_sigma - (1.0 + a) * lt - std::exp(-lt);
    }
    case Family::EGu: {
      const double a = p[2];
      const double log_h = log_one_minus_exp_neg(-z);
      return std::log(a) - log_sigma + ev_log_pdf(z) + (a - 1.0) * log_h;
    }
    case Family::TEV: {
      const double a = p[2];
      const double h = -std::expm1(-std::exp(-z));
      return ev_log_pdf(z) - log_sigma + std::log((1.0 - a) + 2.0 * a * h);
    }
    case Family::GTIEV3: {
      const double a = p[2];
      const double l = softplus(-z - std::log(a));  // ln(1 + u / alpha)
      return -log_sigma - z - (a + 1.0) * l;
    }
    case Family::EGa: {
      const double a = p[2];
      return -log_gamma(a) - log_sigma - std::exp(-z) - a * z;
    }
    case Family::GGu: {
      const double a = p[2];
      const double s = a * log_expm1_of_exp(-z);
      return std::log(a) - log_sigma - z - log_one_minus_exp_neg(-z) - softplus(s) -
             softplus(-s);
    }
    case Family::GLIV: {
      const double a = p[2], b = p[3];
      const double lr = std::log(a / b) - z;
      return a * std::log(a / b) - log_beta(a, b) - log_sigma - a * z - (a + b) * softplus(lr);
    }
    case Family::TCEV: {
      const double mu1 = p[2], sigma1 = p[3], a = p[4];
      if (!(sigma1 > 0.0) || !(a > 0.0 && a < 1.0)) return kNaN;
      const double l0 = std::log1p(-a) + ev_log_pdf(z) - log_sigma;
      const double l1 = std::log(a) + ev_log_pdf((x - mu1) / sigma1) - std::log(sigma1);
      return log_add_exp(l0, l1);
    }
  }
  return kNaN;
}

double cdf_unchecked(Family family, std::span<const double> p, double x) {
  const double z = (x - p[0]) / p[1];
  switch (family) {
    case Family::EV: return ev_cdf(z);
    case Family::GEV: {
      const double a = p[2];
      if (a == 0.0) return ev_cdf(z);
      const double az = a * z;
      if (!(az > -1.0)) return a > 0.0 ? 0.0 : 1.0;
      return std::exp(-std::exp(-std::log1p(az) / a));
    }
    case Family::EGu: return -std::expm1(p[2] * log_one_minus_exp_neg(-z));
    case Family::TEV: {
      const double g = ev_cdf(z);
      return g * (1.0 + p[2] - p[2] * g);
    }
    case Family::GTIEV3: {
      const double a = p[2];
      return std::exp(-a * softplus(-z - std::log(a)));
    }
    case Family::EGa: return upper_incomplete_gamma_regularized(p[2], std::exp(-z));
    case Family::GGu: return logistic(-p[2] * log_expm1_of_exp(-z));
    case Family::GLIV: {
      const double a = p[2], b = p[3];
      const double lr = std::log(a / b) - z;
      return incomplete_beta_pair(b, a, logistic(-lr), logistic(lr)).value;
    }
    case Family::TCEV: {
      const double a = p[4];
      return (1.0 - a) * ev_cdf(z) + a * ev_cdf((x - p[2]) / p[3]);
    }
  }
  return kNaN;
}

double survival_unchecked(Family family, std::span<const double> p, double x) {
  const double z = (x - p[0]) / p[1];
  switch (family) {
    case Family::EV: return ev_survival(z);
    case Family::GEV: {
      const double a = p[2];
      if (a == 0.0) return ev_survival(z);
      const double az = a * z;
      if (!(az > -1.0)) return a > 0.0 ? 1.0 : 0.0;
      return -std::expm1(-std::exp(-std::log1p(az) / a));
    }
    case Family::EGu: return std::exp(p[2] * log_one_minus_exp_neg(-z));
    case Family::TEV: {
      const double h = ev_survival(z);
      return h * (1.0 - p[2] + p[2] * h);
    }
    case Family::GTIEV3: {
      const double a = p[2];
      return -std::expm1(-a * softplus(-z - std::log(a)));
    }
    case Family::EGa: return lower_incomplete_gamma_regularized(p[2], std::exp(-z));
    case Family::GGu: return logistic(p[2] * log_expm1_of_exp(-z));
    case Family::GLIV: {
      const double a = p[2], b = p[3];
      const double lr = std::log(a / b) - z;
      return incomplete_beta_pair(b, a, logistic(-lr), logistic(lr)).complement;
    }
    case Family::TCEV: {
      const double a = p[4];
      return (1.0 - a) * ev_survival(z) + a * ev_survival((x - p[2]) / p[3]);
    }
  }
  return kNaN;
}

namespace {

double root_quantile(Family family, std::span<const double> p, double prob) {
  const bool upper = prob > 0.5;
  const double q = 1.0 - prob;
  auto g = [&](double x) {
    return upper ? q - survival_unchecked(family, p, x) : cdf_unchecked(family, p, x) - prob;
  };
  const double scale = family == Family::TCEV ? std::max(p[1], p[3]) : p[1];
  double x0 = p[0] + p[1] * ev_quantile(prob);
  if (family == Family::TCEV) x0 = std::max(x0, p[2] + p[3] * ev_quantile(prob) - scale);
  double g0 = g(x0);
  if (g0 == 0.0) return x0;
  double step = scale;
  double lo = x0, hi = x0, glo = g0, ghi = g0;
  int expansions = 0;
  while ((glo > 0.0) == (ghi > 0.0)) {
    if (++expansions > 400 || !std::isfinite(step)) {
      throw NonConvergenceError("quantile: could not bracket the root");
    }
    if (g0 < 0.0) {
      lo = hi;
      glo = ghi;
      hi += step;
      ghi = g(hi);
    } else {
      hi = lo;
      ghi = glo;
      lo -= step;
      glo = g(lo);
    }
    step *= 2.0;
  }
  const auto r = brent_root(g, lo, hi, glo, ghi, 1e-13 * (1.0 + std::fabs(x0)), 1e-16);
  if (!r.converged) throw NonConvergenceError("quantile: root search did not converge");
  return r.x;
}

}  // namespace

double quantile_unchecked(Family family, std::span<const double> p, double prob) {
  const double mu = p[0], sigma = p[1];
  switch (family) {
    case Family::EV: return mu + sigma * ev_quantile(prob);
    case Family::GEV: {
      const double a = p[2];
      if (a == 0.0) return mu + sigma * ev_quantile(prob);
      return mu + sigma * std::expm1(-a * std::log(-std::log(prob))) / a;
    }
    case Family::EGu: {
      const double h = -std::expm1(std::log1p(-prob) / p[2]);
      return mu - sigma * std::log(-std::log(h));
    }
    case Family::TEV: {
      const double a = p[2];
      const double g = 2.0 * prob / (1.0 + a + std::sqrt((1.0 + a) * (1.0 + a) - 4.0 * a * prob));
      return mu - sigma * std::log(-std::log(g));
    }
    case Family::GTIEV3: {
      const double a = p[2];
      return mu - sigma * std::log(a * std::expm1(-std::log(prob) / a));
    }
    case Family::GGu: {
      const double t = (std::log1p(-prob) - std::log(prob)) / p[2];
      return mu - sigma * std::log(softplus(t));
    }
    case Family::EGa:
    case Family::GLIV:
    case Family::TCEV: return root_quantile(family, p, prob);
  }
  return kNaN;
}

}  // namespace detail

double log_pdf(const DistributionSpec& spec, double x) {
  return detail::log_pdf_unchecked(spec.family(), spec.params(), x);
}

double pdf(const DistributionSpec& spec, double x) { return std::exp(log_pdf(spec, x)); }

double cdf(const DistributionSpec& spec, double x) {
  return detail::cdf_unchecked(spec.family(), spec.params(), x);
}

double survival(const DistributionSpec& spec, double x) {
  return detail::survival_unchecked(spec.family(), spec.params(), x);
}

double quantile(const DistributionSpec& spec, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile: p must lie in (0, 1)");
  return detail::quantile_unchecked(spec.family(), spec.params(), p);
}

double draw(const DistributionSpec& spec, Rng& rng) {
  const auto p = spec.params();
  switch (spec.family()) {
    case Family::EGa: return p[0] - p[1] * rng.log_gamma_variate(p[2]);
    case Family::GLIV: {
      const double a = p[2], b = p[3];
      const double log_y = rng.log_gamma_variate(a) - std::log(a) - rng.log_gamma_variate(b) +
                           std::log(b);
      return p[0] - p[1] * log_y;
    }
    case Family::TCEV: {
      const bool second = rng.bernoulli(p[4]);
      const double e = ev_quantile(rng.uniform());
      return second ? p[2] + p[3] * e : p[0] + p[1] * e;
    }
    default: return detail::quantile_unchecked(spec.family(), p, rng.uniform());
  }
}

std::vector<double> sample(const DistributionSpec& spec, std::size_t n, Rng& rng) {
  std::vector<double> out(n);
  for (auto& v : out) v = draw(spec, rng);
  return out;
}

std::vector<double> sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample(spec, n, rng);
}

std::vector<NamedSpec> table3_presets() {
  return {
      {"EV", DistributionSpec::ev(0, 1)},
      {"GEV", DistributionSpec::gev(0, 1, 0.1)},
      {"EGu", DistributionSpec::egu(0, 1, 0.7)},
      {"TEV", DistributionSpec::tev(0, 1, -0.99)},
      {"EGa", DistributionSpec::ega(0, 1, 0.7)},
      {"GGu", DistributionSpec::ggu(0, 1, 0.7)},
      {"GLIV", DistributionSpec::gliv(0, 1, 0.65, 15)},
      {"TCEV", DistributionSpec::tcev(0, 1, 10, 5, 0.0016)},
  };
}

std::vector<NamedSpec> supplement_presets() {
  return {
      {"EV", DistributionSpec::ev(0, 1)},
      {"GEV", DistributionSpec::gev(0, 1, 0.1)},
      {"EGu", DistributionSpec::egu(0, 1, 0.6)},
      {"TEV", DistributionSpec::tev(0, 1, -0.99)},
      {"EGa", DistributionSpec::ega(0, 1, 0.6)},
      {"GGu", DistributionSpec::ggu(0, 1, 0.7)},
      {"GLIV", DistributionSpec::gliv(0, 1, 0.55, 10)},
      {"TCEV", DistributionSpec::tcev(0, 1, 10, 5, 0.0125)},
  };
}

}  // namespace evdkit
