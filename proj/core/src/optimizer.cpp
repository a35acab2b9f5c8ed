#include "evdkit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "evdkit/error.hpp"

namespace evdkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_eval(const Objective& f, std::span<const double> x, std::size_t* count) {
  if (count) ++*count;
  const double v = f(x);
  return std::isfinite(v) ? v : kInf;
}

void project(std::vector<double>& x, std::span<const Bound> b) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], b[i].lo, b[i].hi);
}

bool at_lower(double x, const Bound& b) { return x <= b.lo + 1e-12 * (1.0 + std::fabs(b.lo)); }
bool at_upper(double x, const Bound& b) { return x >= b.hi - 1e-12 * (1.0 + std::fabs(b.hi)); }

}  // namespace

std::vector<double> numerical_gradient(const Objective& f, std::span<const double> x, double fx,
                                       std::span<const Bound> bounds, std::size_t* evaluations) {
  const std::size_t k = x.size();
  std::vector<double> g(k, 0.0);
  std::vector<double> xp(x.begin(), x.end());
  for (std::size_t i = 0; i < k; ++i) {
    const double h = 1e-6 * std::max(1.0, std::fabs(x[i]));
    const double up = std::min(x[i] + h, bounds[i].hi);
    const double dn = std::max(x[i] - h, bounds[i].lo);
    xp[i] = up;
    const double fu = up > x[i] ? safe_eval(f, xp, evaluations) : kInf;
    xp[i] = dn;
    const double fd = dn < x[i] ? safe_eval(f, xp, evaluations) : kInf;
    xp[i] = x[i];
    if (std::isfinite(fu) && std::isfinite(fd)) {
      g[i] = (fu - fd) / (up - dn);
    } else if (std::isfinite(fu)) {
      g[i] = (fu - fx) / (up - x[i]);
    } else if (std::isfinite(fd)) {
      g[i] = (fx - fd) / (x[i] - dn);
    } else {
      g[i] = 0.0;
    }
  }
  return g;
}

OptimizerResult minimize_box(const Objective& f, std::vector<double> x0,
                             std::span<const Bound> bounds, const OptimizerOptions& options) {
  const std::size_t k = x0.size();
  if (bounds.size() != k) throw DomainError("minimize_box: bounds size mismatch");
  OptimizerResult res;
  project(x0, bounds);
  std::vector<double> x = std::move(x0);
  double fx = safe_eval(f, x, &res.evaluations);
  if (!std::isfinite(fx)) {
    res.x = x;
    res.f = fx;
    res.message = "objective not finite at the starting point";
    return res;
  }
  std::vector<double> g = numerical_gradient(f, x, fx, bounds, &res.evaluations);

  // Inverse Hessian approximation (row-major), restarted as a scaled
  // identity whenever the active set changes or the search stalls.
  std::vector<double> H(k * k, 0.0);
  bool fresh = true;
  double scale = 0.0;
  auto reset_h = [&] {
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::fabs(v));
    const double diag = scale > 0.0 ? scale : 1.0 / std::max(1.0, gmax);
    std::fill(H.begin(), H.end(), 0.0);
    for (std::size_t i = 0; i < k; ++i) H[i * k + i] = diag;
    fresh = true;
  };
  reset_h();

  std::vector<double> d(k), xn(k), gn(k), s(k), y(k), hy(k);
  std::vector<bool> active(k), previous_active(k, false);
  int stalled = 0;
  for (int iter = 0; iter < options.max_iters; ++iter) {
    res.iterations = iter;
    double pg = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double step = std::clamp(x[i] - g[i], bounds[i].lo, bounds[i].hi) - x[i];
      pg = std::max(pg, std::fabs(step));
      active[i] = (at_lower(x[i], bounds[i]) && g[i] > 0.0) ||
                  (at_upper(x[i], bounds[i]) && g[i] < 0.0);
    }
    if (pg <= options.gtol * (1.0 + std::fabs(fx))) {
      res.converged = true;
      res.message = "projected gradient below tolerance";
      break;
    }
    if (active != previous_active && !fresh) reset_h();
    previous_active = active;

    auto direction = [&] {
      double slope = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        d[i] = 0.0;
        if (active[i]) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (!active[j]) d[i] -= H[i * k + j] * g[j];
        }
        slope += d[i] * g[i];
      }
      return slope;
    };
    double slope = direction();
    if (!(slope < 0.0) && !fresh) {
      reset_h();
      slope = direction();
    }
    if (!(slope < 0.0)) {
      res.converged = true;
      res.message = "no descent direction";
      break;
    }

    // Backtracking along the projected path.
    double t = 1.0;
    double fn = kInf;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      for (std::size_t i = 0; i < k; ++i) xn[i] = x[i] + t * d[i];
      project(xn, bounds);
      double decrease = 0.0;
      for (std::size_t i = 0; i < k; ++i) decrease += g[i] * (xn[i] - x[i]);
      fn = safe_eval(f, xn, &res.evaluations);
      if (std::isfinite(fn) && fn <= fx + 1e-4 * decrease) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (!fresh) {
        reset_h();
        continue;
      }
      res.converged = pg <= 1e3 * options.gtol * (1.0 + std::fabs(fx));
      res.message = "line search failed";
      break;
    }

    gn = numerical_gradient(f, xn, fn, bounds, &res.evaluations);
    double sy = 0.0, ss = 0.0, yy = 0.0, max_step = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      s[i] = xn[i] - x[i];
      y[i] = gn[i] - g[i];
      sy += s[i] * y[i];
      ss += s[i] * s[i];
      yy += y[i] * y[i];
      max_step = std::max(max_step, std::fabs(s[i]) / (1.0 + std::fabs(x[i])));
    }
    const double fchange = fx - fn;
    x = xn;
    g = gn;
    fx = fn;
    res.iterations = iter + 1;
    if (sy > 1e-12 * std::sqrt(ss * yy)) {
      if (fresh) {
        // Shanno-Phua scaling of the first update.
        scale = sy / yy;
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) H[i * k + j] = i == j ? scale : 0.0;
        }
      }
      for (std::size_t i = 0; i < k; ++i) {
        hy[i] = 0.0;
        for (std::size_t j = 0; j < k; ++j) hy[i] += H[i * k + j] * y[j];
      }
      double yhy = 0.0;
      for (std::size_t i = 0; i < k; ++i) yhy += y[i] * hy[i];
      const double rho = 1.0 / sy;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          H[i * k + j] +=
              (1.0 + yhy * rho) * rho * s[i] * s[j] - rho * (hy[i] * s[j] + s[i] * hy[j]);
        }
      }
      fresh = false;
    }
    if (max_step <= options.xtol && fchange <= options.ftol * (1.0 + std::fabs(fx))) {
      res.converged = true;
      res.message = "step and function change below tolerance";
      break;
    }
    stalled = fchange <= options.stall_tol * (1.0 + std::fabs(fx)) ? stalled + 1 : 0;
    if (stalled >= options.stall_iters) {
      res.converged = true;
      res.message = "function change stalled";
      break;
    }
  }
  if (res.message.empty()) res.message = "iteration limit reached";
  res.x = std::move(x);
  res.f = fx;
  return res;
}

}  // namespace evdkit
