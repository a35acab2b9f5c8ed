#include "evdkit/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "evdkit/error.hpp"
#include "evdkit/special_functions.hpp"
#include "numeric.hpp"

namespace evdkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogFloor = 1e-8;
constexpr double kLogCeiling = 1e10;

enum class Transform { Identity, Log, LogRatioToScale };

struct Standardized {
  std::vector<double> y;
  double m = 0.0;
  double s = 1.0;
};

Standardized standardize(std::span<const double> data) {
  if (data.size() < 10) throw DataError("at least 10 observations are required");
  for (double v : data) {
    if (!std::isfinite(v)) throw DataError("data contain non-finite values");
  }
  const double n = static_cast<double>(data.size());
  const double m = std::accumulate(data.begin(), data.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : data) ss += (v - m) * (v - m);
  const double s = std::sqrt(ss / (n - 1.0));
  if (!(s > 0.0) || s < 1e-12 * (1.0 + std::fabs(m))) {
    throw DataError("data are (numerically) constant; the scale is not estimable");
  }
  Standardized out{std::vector<double>(data.size()), m, s};
  for (std::size_t i = 0; i < data.size(); ++i) out.y[i] = (data[i] - m) / s;
  return out;
}

bool is_location(Family f, std::size_t i) { return i == 0 || (f == Family::TCEV && i == 2); }
bool is_scale(Family f, std::size_t i) { return i == 1 || (f == Family::TCEV && i == 3); }

// TCEV sigma1 is carried as ln(sigma1 / sigma).
Transform transform_of(Family f, std::size_t i) {
  if (f == Family::TCEV && i == 3) return Transform::LogRatioToScale;
  if (is_location(f, i)) return Transform::Identity;
  if (is_scale(f, i)) return Transform::Log;
  switch (f) {
    case Family::GEV:
    case Family::TEV:
    case Family::TCEV: return Transform::Identity;
    default: return Transform::Log;
  }
}

std::vector<double> to_data_units(Family f, std::span<const double> p, double m, double s) {
  std::vector<double> out(p.begin(), p.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (is_location(f, i)) out[i] = m + s * p[i];
    if (is_scale(f, i)) out[i] = s * p[i];
  }
  return out;
}

std::vector<double> to_standard_units(Family f, std::span<const double> p, double m, double s) {
  std::vector<double> out(p.begin(), p.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (is_location(f, i)) out[i] = (p[i] - m) / s;
    if (is_scale(f, i)) out[i] = p[i] / s;
  }
  return out;
}

// Valid for likelihood evaluation. Wider than the identifiable space only
// for the TCEV weight, which is relabeled after fitting.
bool usable(Family f, std::span<const double> p) {
  if (f != Family::TCEV) return parameters_valid(f, p);
  for (double v : p) {
    if (!std::isfinite(v)) return false;
  }
  return p[1] > 0.0 && p[3] > 0.0 && p[4] > 0.0 && p[4] < 1.0;
}

double negloglik(Family f, std::span<const double> p, std::span<const double> y) {
  double acc = 0.0;
  for (double v : y) acc += detail::log_pdf_unchecked(f, p, v);
  return std::isfinite(acc) ? -acc : kInf;
}

// Parameter handling for one fit: natural standardized parameters <->
// unconstrained-ish internal coordinates with box bounds.
class Problem {
 public:
  Problem(Family f, const Standardized& st, const std::vector<Bound>& data_bounds)
      : family_(f), st_(st) {
    const std::size_t k = parameter_count(f);
    if (data_bounds.size() != k) {
      throw InvalidSpecError("bounds must list one (lo, hi) pair per parameter");
    }
    // Bounds in standardized units.
    std::vector<double> lo(k), hi(k);
    for (std::size_t i = 0; i < k; ++i) {
      lo[i] = data_bounds[i].lo;
      hi[i] = data_bounds[i].hi;
      if (!(lo[i] <= hi[i])) throw InvalidSpecError("bound with lo > hi");
      if (is_location(f, i)) {
        lo[i] = (lo[i] - st.m) / st.s;
        hi[i] = (hi[i] - st.m) / st.s;
      } else if (is_scale(f, i) && transform_of(f, i) != Transform::LogRatioToScale) {
        lo[i] /= st.s;
        hi[i] /= st.s;
      }
    }
    tr_.resize(k);
    internal_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      tr_[i] = transform_of(f, i);
      if (tr_[i] != Transform::Identity) {
        internal_[i] = {std::log(std::max(lo[i], kLogFloor)),
                        std::log(std::min(hi[i], kLogCeiling))};
      } else {
        internal_[i] = {lo[i], hi[i]};
      }
    }
  }

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] std::size_t size() const { return tr_.size(); }
  [[nodiscard]] const std::vector<Bound>& bounds() const { return internal_; }
  [[nodiscard]] const Standardized& data() const { return st_; }

  [[nodiscard]] std::vector<double> to_internal(std::span<const double> natural) const {
    std::vector<double> t(natural.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      switch (tr_[i]) {
        case Transform::Identity: t[i] = natural[i]; break;
        case Transform::Log: t[i] = std::log(natural[i]); break;
        case Transform::LogRatioToScale: t[i] = std::log(natural[i] / natural[1]); break;
      }
      t[i] = std::clamp(t[i], internal_[i].lo, internal_[i].hi);
    }
    return t;
  }

  [[nodiscard]] std::vector<double> to_natural(std::span<const double> t) const {
    std::vector<double> p(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      switch (tr_[i]) {
        case Transform::Identity: p[i] = t[i]; break;
        case Transform::Log: p[i] = std::exp(t[i]); break;
        case Transform::LogRatioToScale: p[i] = p[1] * std::exp(t[i]); break;
      }
    }
    return p;
  }

  [[nodiscard]] double objective_natural(std::span<const double> p) const {
    if (!usable(family_, p)) return kInf;
    return negloglik(family_, p, st_.y);
  }

  [[nodiscard]] double objective_internal(std::span<const double> t) const {
    const auto p = to_natural(t);
    return objective_natural(p);
  }

  [[nodiscard]] std::vector<bool> active(std::span<const double> t) const {
    std::vector<bool> a(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double tol = 1e-7 * (1.0 + std::fabs(t[i]));
      a[i] = (std::isfinite(internal_[i].lo) && t[i] <= internal_[i].lo + tol) ||
             (std::isfinite(internal_[i].hi) && t[i] >= internal_[i].hi - tol);
    }
    return a;
  }

 private:
  Family family_;
  const Standardized& st_;
  std::vector<Transform> tr_;
  std::vector<Bound> internal_;
};

// Exact Gumbel MLE on standardized data: sigma solves
// sigma = mean(y) - sum(y w) / sum(w), w = exp(-y / sigma).
std::pair<double, double> ev_mle(std::span<const double> y) {
  const double ymin = *std::min_element(y.begin(), y.end());
  const double ybar = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
  auto weights = [&](double sigma, double& sw, double& swy) {
    sw = 0.0;
    swy = 0.0;
    for (double v : y) {
      const double w = std::exp(-(v - ymin) / sigma);
      sw += w;
      swy += w * v;
    }
  };
  auto h = [&](double sigma) {
    double sw, swy;
    weights(sigma, sw, swy);
    return sigma - ybar + swy / sw;
  };
  double lo = 0.05, hi = 2.0;
  double flo = h(lo), fhi = h(hi);
  for (int i = 0; i < 60 && flo > 0.0; ++i) {
    lo *= 0.5;
    flo = h(lo);
  }
  for (int i = 0; i < 60 && fhi < 0.0; ++i) {
    hi *= 2.0;
    fhi = h(hi);
  }
  const auto r = detail::brent_root(h, lo, hi, flo, fhi, 1e-15, 0.0);
  if (!r.converged) throw NonConvergenceError("Gumbel likelihood equation did not converge");
  const double sigma = r.x;
  double sw, swy;
  weights(sigma, sw, swy);
  const double mu = ymin - sigma * std::log(sw / static_cast<double>(y.size()));
  return {mu, sigma};
}

struct PwmEstimate {
  double mu, sigma, alpha;
};

PwmEstimate pwm_estimate(std::span<const double> data, double a) {
  std::vector<double> x(data.begin(), data.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double b0 = 0.0, b1 = 0.0, b2 = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double p = (static_cast<double>(j + 1) - a) / n;
    b0 += x[j];
    b1 += p * x[j];
    b2 += p * p * x[j];
  }
  b0 /= n;
  b1 /= n;
  b2 /= n;
  const double c = (2.0 * b1 - b0) / (3.0 * b2 - b0) - std::log(2.0) / std::log(3.0);
  const double k = 7.8590 * c + 2.9554 * c * c;
  double sigma, mu;
  if (std::fabs(k) < 1e-8) {
    sigma = (2.0 * b1 - b0) / kLn2;
    mu = b0 - kEulerGamma * sigma;
  } else {
    const double g = gamma_fn(1.0 + k);
    sigma = (2.0 * b1 - b0) * k / (g * (1.0 - std::pow(2.0, -k)));
    mu = b0 + sigma * (g - 1.0) / k;
  }
  return {mu, sigma, -k};
}

std::vector<std::vector<double>> default_starts(Family f, const Standardized& st,
                                                std::pair<double, double> ev) {
  const auto [a, b] = ev;
  const double s0 = std::sqrt(6.0) / kPi;
  const double m0 = -kEulerGamma * s0;
  switch (f) {
    case Family::EV: return {{a, b}};
    case Family::GEV: {
      std::vector<std::vector<double>> s = {{a, b, 0.0}, {m0, s0, 0.1}, {a, b, -0.1}};
      const auto pwm = pwm_estimate(st.y, 0.35);
      s.push_back({pwm.mu, pwm.sigma, pwm.alpha});
      return s;
    }
    case Family::EGu:
    case Family::EGa:
    case Family::GGu: return {{a, b, 1.0}, {m0, s0, 1.0}, {a, b, 0.5}, {a, b, 2.0}};
    case Family::TEV: return {{a, b, 0.0}, {m0, s0, 0.01}, {a, b, -0.9}, {a, b, 0.9}};
    case Family::GTIEV3:
      return {{a, b, kLogCeiling}, {m0, s0, 10.0}, {a, b, 1.0}, {a, b, 100.0}};
    case Family::GLIV:
      return {{m0, s0, 1.0, 10.0}, {a, b, 1.0, 19.9}, {a, b, 0.65, 15.0}, {a, b, 0.5, 5.0},
              {a, b, 0.3, 2.0}};
    case Family::TCEV:
      return {{a, b, a, b, 0.05},
              {m0, s0, m0 + 2.0 * s0, 2.0 * s0, 0.05},
              {a, b, a + 3.0 * b, 2.0 * b, 0.02},
              {a, b, a + 2.0 * b, 3.0 * b, 0.1},
              {a, b, a + b, 1.5 * b, 0.3},
              {a, b, a + 5.0 * b, 2.5 * b, 0.01}};
  }
  return {};
}

struct InnerFit {
  std::vector<double> natural;  // standardized units
  std::vector<double> internal;
  double f = kInf;
  bool converged = false;
  std::size_t evals = 0;
};

// Optimize over the coordinates not listed in `fixed`.
InnerFit optimize_from(const Problem& prob, std::span<const double> start_natural,
                       const std::vector<bool>& fixed, const FitConfig& cfg) {
  const auto t0 = prob.to_internal(start_natural);
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < t0.size(); ++i) {
    if (!fixed[i]) free_idx.push_back(i);
  }
  InnerFit out;
  std::vector<double> full = t0;
  if (free_idx.empty()) {
    out.internal = t0;
    out.natural = prob.to_natural(t0);
    out.f = prob.objective_internal(t0);
    out.converged = std::isfinite(out.f);
    out.evals = 1;
    return out;
  }
  std::vector<Bound> b;
  std::vector<double> x0;
  for (auto i : free_idx) {
    b.push_back(prob.bounds()[i]);
    x0.push_back(t0[i]);
  }
  Objective obj = [&](std::span<const double> x) {
    std::vector<double> t = full;
    for (std::size_t j = 0; j < free_idx.size(); ++j) t[free_idx[j]] = x[j];
    return prob.objective_internal(t);
  };
  OptimizerOptions opt;
  opt.gtol = cfg.tol;
  opt.max_iters = cfg.max_iters;
  const auto r = minimize_box(obj, x0, b, opt);
  for (std::size_t j = 0; j < free_idx.size(); ++j) full[free_idx[j]] = r.x[j];
  out.internal = full;
  out.natural = prob.to_natural(full);
  out.f = r.f;
  out.converged = r.converged;
  out.evals = r.evaluations;
  return out;
}

std::vector<double> canonical_tcev(std::vector<double> p) {
  if (p[4] > 0.5) {
    std::swap(p[0], p[2]);
    std::swap(p[1], p[3]);
    p[4] = 1.0 - p[4];
  }
  if (p[4] >= 0.5) p[4] = std::nextafter(0.5, 0.0);
  return p;
}

FitResult finish(Family f, std::span<const double> data, const Standardized& st,
                 const Problem& prob, const InnerFit& best, FitMethod method,
                 std::size_t evals) {
  std::vector<double> p = to_data_units(f, best.natural, st.m, st.s);
  std::vector<bool> active = prob.active(best.internal);
  if (f == Family::TCEV) {
    const bool swapped = p[4] > 0.5;
    p = canonical_tcev(std::move(p));
    if (swapped) {
      std::swap(active[0], active[2]);
      std::swap(active[1], active[3]);
    }
  }
  DistributionSpec spec(f, p);
  FitResult res{spec, {}, log_likelihood(data, spec), method, best.converged, evals, active};
  res.std_errors = standard_errors(data, spec, active);
  return res;
}

std::vector<Bound> resolve_bounds(Family f, const FitConfig& cfg) {
  return cfg.bounds.empty() ? default_bounds(f) : cfg.bounds;
}

}  // namespace

std::string_view method_name(FitMethod method) {
  switch (method) {
    case FitMethod::MLE: return "MLE";
    case FitMethod::PWM: return "PWM";
    case FitMethod::ProfileMLE: return "ProfileMLE";
  }
  return "?";
}

std::vector<Bound> default_bounds(Family family) {
  const Bound free{-kInf, kInf};
  const Bound positive{0.0, kInf};
  switch (family) {
    case Family::EV: return {free, positive};
    case Family::GEV: return {free, positive, {-0.6, 0.6}};
    case Family::TEV: return {free, positive, {-1.0 + 1e-9, 1.0}};
    case Family::GTIEV3: return {free, positive, {0.0, 1e10}};
    case Family::GLIV: return {free, positive, {0.0, 1.0}, {0.0, 20.0}};
    case Family::TCEV: return {free, positive, free, {1.0, 1e4}, {1e-10, 0.5 - 1e-10}};
    default: return {free, positive, positive};
  }
}

double log_likelihood(std::span<const double> data, const DistributionSpec& spec) {
  double acc = 0.0;
  for (double v : data) acc += log_pdf(spec, v);
  return acc;
}

FitResult fit_mle(std::span<const double> data, Family family, const FitConfig& config) {
  const Standardized st = standardize(data);
  const Problem prob(family, st, resolve_bounds(family, config));
  const auto ev = ev_mle(st.y);
  auto starts = default_starts(family, st, ev);
  if (config.start) {
    if (config.start->size() != parameter_count(family)) {
      throw InvalidSpecError("start vector has the wrong length");
    }
    starts.insert(starts.begin(), to_standard_units(family, *config.start, st.m, st.s));
  }
  const std::vector<bool> none(prob.size(), false);
  InnerFit best;
  std::size_t evals = 0;
  for (const auto& s : starts) {
    bool finite = true;
    for (double v : s) finite = finite && std::isfinite(v);
    if (!finite || !usable(family, s)) continue;
    auto r = optimize_from(prob, s, none, config);
    evals += r.evals;
    if (r.f < best.f) best = std::move(r);
  }
  if (!std::isfinite(best.f)) {
    throw NonConvergenceError(std::string("no finite likelihood found for ") +
                              std::string(family_name(family)));
  }
  return finish(family, data, st, prob, best, FitMethod::MLE, evals);
}

namespace {

struct ProfileRun {
  std::vector<ProfilePoint> points;
  std::vector<InnerFit> fits;
  std::size_t evals = 0;
};

// Cold starts are tried at every grid point when `cold_each_point`, and
// otherwise only at the first point and at `collapse_value`.
ProfileRun profile_impl(const Problem& prob, std::size_t idx, std::span<const double> grid,
                        const std::vector<std::vector<double>>& cold_starts,
                        const FitConfig& cfg, bool cold_each_point,
                        std::optional<double> collapse_value) {
  const Family f = prob.family();
  const Standardized& st = prob.data();
  std::vector<bool> fixed(prob.size(), false);
  fixed[idx] = true;
  ProfileRun run;
  std::vector<double> warm;
  for (double v : grid) {
    ProfilePoint pt;
    pt.value = v;
    // Value in standardized units for locations and scales.
    double vs = v;
    if (is_location(f, idx)) vs = (v - st.m) / st.s;
    if (is_scale(f, idx)) vs = v / st.s;
    InnerFit best;
    auto attempt = [&](std::vector<double> s) {
      s[idx] = vs;
      if (!usable(f, s)) return;
      auto r = optimize_from(prob, s, fixed, cfg);
      run.evals += r.evals;
      // Hold the profiled coordinate exactly (to_internal may clamp it).
      if (std::fabs(r.natural[idx] - vs) > 1e-9 * (1.0 + std::fabs(vs))) return;
      if (r.f < best.f) best = std::move(r);
    };
    if (!warm.empty()) attempt(warm);
    if (warm.empty() || cold_each_point || (collapse_value && v == *collapse_value)) {
      for (const auto& s : cold_starts) attempt(s);
    }
    if (std::isfinite(best.f)) {
      warm = best.natural;
      pt.loglik = -best.f - static_cast<double>(st.y.size()) * std::log(st.s);
      pt.params = to_data_units(f, best.natural, st.m, st.s);
      pt.params[idx] = v;
      pt.ok = true;
    } else {
      pt.loglik = -kInf;
    }
    run.points.push_back(std::move(pt));
    run.fits.push_back(std::move(best));
  }
  return run;
}

}  // namespace

std::vector<ProfilePoint> profile_loglik_curve(std::span<const double> data, Family family,
                                               std::size_t param_index,
                                               std::span<const double> grid,
                                               const FitConfig& config) {
  if (param_index >= parameter_count(family)) {
    throw InvalidSpecError("profiled parameter index out of range");
  }
  if (family == Family::TCEV && param_index == 3) {
    throw InvalidSpecError("TCEV sigma1 is fitted through sigma1/sigma and cannot be profiled");
  }
  const Standardized st = standardize(data);
  // The profiled coordinate must be free to take every grid value.
  auto bounds = resolve_bounds(family, config);
  bounds[param_index] = {-kInf, kInf};
  if (transform_of(family, param_index) == Transform::Log) bounds[param_index] = {0.0, kInf};
  const Problem prob(family, st, bounds);
  const auto ev = ev_mle(st.y);
  auto cold = default_starts(family, st, ev);
  try {
    const auto full = fit_mle(data, family, config);
    cold.push_back(to_standard_units(family, full.spec.params(), st.m, st.s));
  } catch (const NonConvergenceError&) {
  }
  return profile_impl(prob, param_index, grid, cold, config, true, std::nullopt).points;
}

FitResult fit_tev_profile(std::span<const double> data, const FitConfig& config) {
  const Standardized st = standardize(data);
  const Problem prob(Family::TEV, st, resolve_bounds(Family::TEV, config));
  const auto ev = ev_mle(st.y);
  const std::size_t g = std::max<std::size_t>(config.profile_grid, 3);
  std::vector<double> grid(g);
  for (std::size_t k = 0; k < g; ++k) {
    grid[k] = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(g - 1);
  }
  grid[0] = -1.0 + 1e-6;
  if (g % 2 == 1) grid[g / 2] = 0.0;
  const std::vector<std::vector<double>> cold = {{ev.first, ev.second, 0.0}};
  auto run = profile_impl(prob, 2, grid, cold, config, false, 0.0);

  std::size_t best_k = run.fits.size();
  for (std::size_t k = 0; k < run.fits.size(); ++k) {
    if (std::isfinite(run.fits[k].f) && (best_k == run.fits.size() || run.fits[k].f < run.fits[best_k].f)) {
      best_k = k;
    }
  }
  if (best_k == run.fits.size()) throw NonConvergenceError("TEV profile: no finite likelihood");
  InnerFit best = run.fits[best_k];
  const std::vector<bool> none(3, false);
  auto polished = optimize_from(prob, best.natural, none, config);
  std::size_t evals = run.evals + polished.evals;
  if (polished.f <= best.f) {
    best = std::move(polished);
  } else {
    best.converged = polished.converged;
  }
  return finish(Family::TEV, data, st, prob, best, FitMethod::ProfileMLE, evals);
}

FitResult fit_gev_pwm(std::span<const double> data, double plotting_offset) {
  if (data.size() < 10) throw DataError("at least 10 observations are required");
  for (double v : data) {
    if (!std::isfinite(v)) throw DataError("data contain non-finite values");
  }
  const auto e = pwm_estimate(data, plotting_offset);
  if (!(e.sigma > 0.0) || !std::isfinite(e.mu) || !std::isfinite(e.alpha)) {
    throw NonConvergenceError("PWM estimate is degenerate");
  }
  DistributionSpec spec = DistributionSpec::gev(e.mu, e.sigma, e.alpha);
  FitResult res{spec, std::vector<std::optional<double>>(3), log_likelihood(data, spec),
                FitMethod::PWM, true, 0, std::vector<bool>(3, false)};
  return res;
}

std::vector<std::optional<double>> standard_errors(std::span<const double> data,
                                                   const DistributionSpec& spec,
                                                   const std::vector<bool>& fixed) {
  const Family f = spec.family();
  const std::vector<double> theta(spec.params().begin(), spec.params().end());
  const std::size_t k = theta.size();
  std::vector<std::optional<double>> se(k);
  auto nll = [&](const std::vector<double>& p) {
    if (!usable(f, p)) return kInf;
    double acc = 0.0;
    for (double v : data) acc += detail::log_pdf_unchecked(f, p, v);
    return std::isfinite(acc) ? -acc : kInf;
  };
  std::vector<double> h(k);
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < k; ++i) {
    h[i] = std::max(1e-4, 1e-4 * std::fabs(theta[i]));
    if (fixed.size() == k && fixed[i]) continue;
    auto up = theta, dn = theta;
    up[i] += h[i];
    dn[i] -= h[i];
    if (!usable(f, up) || !usable(f, dn)) continue;
    free_idx.push_back(i);
  }
  const std::size_t m = free_idx.size();
  if (m == 0) return se;
  const double f0 = nll(theta);
  std::vector<double> H(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t i = free_idx[a];
    auto p = theta;
    p[i] = theta[i] + h[i];
    const double fp = nll(p);
    p[i] = theta[i] - h[i];
    const double fm = nll(p);
    H[a * m + a] = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
    for (std::size_t b = a + 1; b < m; ++b) {
      const std::size_t j = free_idx[b];
      double v[4];
      int idx = 0;
      for (double si : {1.0, -1.0}) {
        for (double sj : {1.0, -1.0}) {
          auto q = theta;
          q[i] += si * h[i];
          q[j] += sj * h[j];
          v[idx++] = nll(q);
        }
      }
      H[a * m + b] = H[b * m + a] = (v[0] - v[1] - v[2] + v[3]) / (4.0 * h[i] * h[j]);
    }
  }
  for (double v : H) {
    if (!std::isfinite(v)) return se;
  }
  // Cholesky factor, then invert column by column.
  std::vector<double> L(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = H[i * m + j];
      for (std::size_t r = 0; r < j; ++r) s -= L[i * m + r] * L[j * m + r];
      if (i == j) {
        if (!(s > 0.0)) return se;
        L[i * m + i] = std::sqrt(s);
      } else {
        L[i * m + j] = s / L[j * m + j];
      }
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<double> e(m, 0.0), z(m), x(m);
    e[c] = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      double s = e[i];
      for (std::size_t r = 0; r < i; ++r) s -= L[i * m + r] * z[r];
      z[i] = s / L[i * m + i];
    }
    for (std::size_t i = m; i-- > 0;) {
      double s = z[i];
      for (std::size_t r = i + 1; r < m; ++r) s -= L[r * m + i] * x[r];
      x[i] = s / L[i * m + i];
    }
    if (x[c] > 0.0) se[free_idx[c]] = std::sqrt(x[c]);
  }
  return se;
}

}  // namespace evdkit
