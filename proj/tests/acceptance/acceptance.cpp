#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "evdkit/dataio.hpp"
#include "evdkit/distribution.hpp"
#include "evdkit/estimation.hpp"
#include "evdkit/gof.hpp"
#include "evdkit/montecarlo.hpp"
#include "evdkit/reduction.hpp"
#include "evdkit/tails.hpp"
#include "evdkit_cli/cli.hpp"
#include "oracles.hpp"

using namespace evdkit;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

bool within(double value, double target, double tol) { return std::fabs(value - target) <= tol; }

const std::vector<double>& wind() {
  static const auto data = seasonal_adjust(load_embedded_wind(), Adjustment::MonthlyMedian);
  return data;
}

// 1. EV moment constants.
Outcome ev_constants() {
  Outcome o;
  const auto m = moments(DistributionSpec::ev(0, 1));
  const double skew = m.skewness.value_or(NAN);
  const double kurt = m.kurtosis.value_or(NAN);
  o.require(within(skew, 1.139547, 1e-5), "skewness " + fmt(skew, 10));
  o.require(within(kurt, 5.4, 1e-6), "kurtosis " + fmt(kurt, 10));
  o.summary = "skewness " + fmt(skew, 8) + ", kurtosis " + fmt(kurt, 8);
  return o;
}

// 2. Upper quantiles of the simulation presets.
Outcome table3_quantiles() {
  const std::map<std::string, double> expected{{"EV", 6.91},   {"GEV", 9.95}, {"EGu", 9.87},
                                               {"TEV", 7.60},  {"EGa", 9.99}, {"GGu", 9.87},
                                               {"GLIV", 10.38}, {"TCEV", 10.28}};
  Outcome o;
  for (const auto& [label, spec] : table3_presets()) {
    const double q = quantile(spec, 0.999);
    const auto it = expected.find(label);
    if (it == expected.end()) {
      o.require(false, "unexpected preset " + label);
      continue;
    }
    o.require(within(q, it->second, 0.01),
              label + " q999 " + fmt(q, 7) + " expected " + fmt(it->second) + " +/- 0.01");
    o.summary += label + "=" + fmt(q, 5) + " ";
  }
  return o;
}

// 3. Kurtosis of the simulation presets.
Outcome table3_kurtosis() {
  const std::map<std::string, double> expected{{"GEV", 10.98}, {"EGu", 6.28}, {"TEV", 5.39},
                                               {"EGa", 6.22},  {"GGu", 5.72}, {"GLIV", 6.26},
                                               {"TCEV", 5.38}};
  Outcome o;
  for (const auto& [label, spec] : table3_presets()) {
    const auto it = expected.find(label);
    if (it == expected.end()) continue;
    const double k = moments(spec).kurtosis.value_or(NAN);
    o.require(within(k, it->second, 0.01),
              label + " kurtosis " + fmt(k, 7) + " expected " + fmt(it->second) + " +/- 0.01");
    o.summary += label + "=" + fmt(k, 5) + " ";
  }
  return o;
}

// 4. Reduction maps of the non-identifiable families.
Outcome reductions() {
  Outcome o;
  std::mt19937_64 gen(20240917);
  std::uniform_real_distribution<double> loc(-5.0, 5.0), scale(0.2, 4.0), shape(0.2, 5.0);
  double worst = 0.0;
  for (auto family : {NonIdentifiableFamily::KumGum, NonIdentifiableFamily::GTIEV,
                      NonIdentifiableFamily::ExpGama, NonIdentifiableFamily::EGGu,
                      NonIdentifiableFamily::BG, NonIdentifiableFamily::KBGGu}) {
    for (int draw = 0; draw < 3; ++draw) {
      std::vector<double> p{loc(gen), scale(gen), shape(gen), shape(gen)};
      if (family == NonIdentifiableFamily::EGGu) p[2] = 1.0;
      if (family == NonIdentifiableFamily::BG) p[3] = 1.0;
      if (family == NonIdentifiableFamily::KBGGu) {
        p[3] = 1.0;
        p.push_back(0.0);
      }
      const DistributionSpec reduced = reduce_to_identifiable(family, p);
      const double lo = quantile(reduced, 1e-6);
      const double hi = quantile(reduced, 1.0 - 1e-9);
      double gap = 0.0;
      for (int i = 0; i < 1000; ++i) {
        const double x = lo + (hi - lo) * i / 999.0;
        gap = std::max(gap, std::fabs(nonidentifiable_cdf(family, p, x) - cdf(reduced, x)));
      }
      worst = std::max(worst, gap);
      o.require(gap < 1e-12, std::string(family_name(family)) + " draw " +
                                 std::to_string(draw) + " sup gap " + fmt(gap));
    }
  }
  o.summary = "6 maps x 3 draws, worst sup gap " + fmt(worst, 3);
  return o;
}

double integrate_pdf(const DistributionSpec& s) {
  auto f = [&](double x) { return pdf(s, x); };
  if (s.family() == Family::GEV && s.param(2) > 0) {
    return oracle::tanh_sinh_upper(f, s.mu() - s.sigma() / s.param(2), 1e-12);
  }
  if (s.family() == Family::TCEV) {
    return oracle::tanh_sinh_lower(f, s.mu(), 1e-12) +
           oracle::tanh_sinh(f, s.mu(), s.param(2), 1e-12) +
           oracle::tanh_sinh_upper(f, s.param(2), 1e-12);
  }
  return oracle::tanh_sinh_real_line(f, quantile(s, 0.5), 1e-12);
}

double ev_pdf(double x, double mu, double sigma) {
  const double z = (x - mu) / sigma;
  return std::exp(-z - std::exp(-z)) / sigma;
}

// 5. Distribution property suites.
Outcome property_suites() {
  Outcome o;
  std::vector<NamedSpec> presets = table3_presets();
  for (auto& s : supplement_presets()) presets.push_back(s);

  std::size_t checks = 0;
  for (const auto& [label, spec] : presets) {
    for (double p : {0.001, 0.01, 0.1, 0.5, 0.9, 0.99, 0.999}) {
      const double err = std::fabs(cdf(spec, quantile(spec, p)) - p);
      o.require(err <= 1e-8, "round trip " + label + " p=" + fmt(p) + " error " + fmt(err));
      ++checks;
    }
    const double mass = integrate_pdf(spec);
    o.require(std::fabs(mass - 1.0) <= 1e-6, "normalization " + label + " mass " + fmt(mass, 12));
    ++checks;

    const double mu = spec.mu(), sigma = spec.sigma();
    std::vector<DistributionSpec> collapsed{
        DistributionSpec::egu(mu, sigma, 1.0), DistributionSpec::ega(mu, sigma, 1.0),
        DistributionSpec::ggu(mu, sigma, 1.0), DistributionSpec::tev(mu, sigma, 0.0)};
    for (const auto& c : collapsed) {
      for (int k = 0; k <= 60; ++k) {
        const double x = mu + sigma * (-4.0 + 0.25 * k);
        const double err = std::fabs(pdf(c, x) - ev_pdf(x, mu, sigma));
        o.require(err <= 1e-12, "collapse " + to_string(c) + " x=" + fmt(x) + " error " + fmt(err));
        ++checks;
      }
    }

    if (spec.family() == Family::GLIV) {
      const double a = spec.param(2), b = spec.param(3);
      const auto swapped = DistributionSpec::gliv(0, 1, b, a);
      const auto standard = DistributionSpec::gliv(0, 1, a, b);
      for (int k = 0; k <= 32; ++k) {
        const double x = -8.0 + 0.5 * k;
        const double err = std::fabs(pdf(standard, x) - pdf(swapped, -x));
        o.require(err <= 1e-12, "reflection " + label + " x=" + fmt(x) + " error " + fmt(err));
        ++checks;
      }
    }
  }
  o.summary = std::to_string(presets.size()) + " presets, " + std::to_string(checks) + " checks";
  return o;
}

// 6. Right-tail AD statistics against numerical integration.
Outcome ad_oracle() {
  Outcome o;
  double worst = 0.0;
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t n : {10u, 50u}) {
    std::vector<std::vector<double>> sequences;
    for (int r = 0; r < 3; ++r) {
      std::vector<double> z(n);
      for (auto& v : z) v = u(gen);
      sequences.push_back(std::move(z));
    }
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    sequences.push_back(grid);
    std::vector<double> skewed(n);
    for (std::size_t i = 0; i < n; ++i) skewed[i] = std::pow(grid[i], 0.3);
    sequences.push_back(skewed);

    for (const auto& z : sequences) {
      const double e1 = std::fabs(adr_from_z(z) - oracle::ad_right_integral(z, 1));
      const double e2 = std::fabs(ad2r_from_z(z) - oracle::ad_right_integral(z, 2));
      worst = std::max({worst, e1, e2});
      o.require(e1 < 1e-3, "ADR n=" + std::to_string(n) + " error " + fmt(e1));
      o.require(e2 < 1e-3, "AD2R n=" + std::to_string(n) + " error " + fmt(e2));
    }
  }
  o.summary = "n in {10, 50}, 5 sequences each, worst error " + fmt(worst, 3);
  return o;
}

// 7. Wind-speed fits.
Outcome wind_fits() {
  Outcome o;
  const auto& data = wind();
  struct Row {
    Fitter fitter;
    double neg_loglik;
    double ad2r;
  };
  std::vector<Row> rows;
  std::map<Fitter, FitResult> fits;
  for (Fitter f : {Fitter::EV, Fitter::GEV_MLE, Fitter::GEV_PWM, Fitter::EGu, Fitter::TEV,
                   Fitter::GTIEV3, Fitter::EGa, Fitter::GGu, Fitter::GLIV, Fitter::TCEV}) {
    try {
      const FitResult fit = run_fitter(f, data, FitConfig{});
      rows.push_back({f, -fit.loglik, ad2r(data, fit.spec)});
      fits.emplace(f, fit);
    } catch (const std::exception& e) {
      o.require(false, std::string(fitter_name(f)) + " fit threw: " + e.what());
    }
  }
  if (!fits.contains(Fitter::EV) || !fits.contains(Fitter::TCEV) || !fits.contains(Fitter::GTIEV3)) {
    o.require(false, "required fits missing");
    return o;
  }
  const auto& ev = fits.at(Fitter::EV).spec;
  o.require(within(ev.mu(), 36.94, 0.5), "EV mu " + fmt(ev.mu()) + " expected 36.94 +/- 0.5");
  o.require(within(ev.sigma(), 5.83, 0.3), "EV sigma " + fmt(ev.sigma()) + " expected 5.83 +/- 0.3");

  const auto min_nll = std::min_element(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.neg_loglik < b.neg_loglik;
  });
  o.require(min_nll->fitter == Fitter::TCEV,
            "minimal -loglik is " + std::string(fitter_name(min_nll->fitter)) + " (" +
                fmt(min_nll->neg_loglik, 7) + "), not TCEV");

  const auto max_ad2r = std::max_element(
      rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.ad2r < b.ad2r; });
  o.require(max_ad2r->fitter == Fitter::EV || max_ad2r->fitter == Fitter::GTIEV3,
            "maximal AD2R is " + std::string(fitter_name(max_ad2r->fitter)) + " (" +
                fmt(max_ad2r->ad2r, 5) + "), not EV or GTIEV3");

  double ev_ad2r = NAN, tcev_ad2r = NAN;
  for (const auto& r : rows) {
    if (r.fitter == Fitter::EV) ev_ad2r = r.ad2r;
    if (r.fitter == Fitter::TCEV) tcev_ad2r = r.ad2r;
  }
  o.require(tcev_ad2r < 10.0, "TCEV AD2R " + fmt(tcev_ad2r) + " not below 10");
  o.require(ev_ad2r > 100.0, "EV AD2R " + fmt(ev_ad2r) + " not above 100");

  o.summary = "EV (" + fmt(ev.mu(), 5) + ", " + fmt(ev.sigma(), 4) + "); AD2R EV " +
              fmt(ev_ad2r, 5) + ", TCEV " + fmt(tcev_ad2r, 4) + "; -loglik";
  for (const auto& r : rows) o.summary += " " + std::string(fitter_name(r.fitter)) + "=" + fmt(r.neg_loglik, 6);
  return o;
}

// 8. GEV by probability-weighted moments on the wind series.
Outcome wind_pwm() {
  Outcome o;
  const double alpha = fit_gev_pwm(wind()).spec.param(2);
  o.require(within(alpha, 0.09, 0.05), "alpha " + fmt(alpha) + " expected 0.09 +/- 0.05");
  o.summary = "alpha " + fmt(alpha, 5);
  return o;
}

// 9. Desk-scale simulation study.
Outcome study() {
  Outcome o;
  const StudyConfig config;
  const StudyReport report = run_study(config);

  const auto cell = [&](const std::string& generator, Fitter fitter) -> const CellReport* {
    for (const auto& c : report.cells) {
      if (c.generator == generator && c.fitter == fitter) return &c;
    }
    return nullptr;
  };

  std::size_t nesting_checks = 0, nesting_violations = 0;
  std::size_t pwm_checks = 0, pwm_violations = 0;
  for (const auto& [generator, spec] : config.generators) {
    const CellReport* ev = cell(generator, Fitter::EV);
    if (ev == nullptr) {
      o.require(false, generator + ": EV cell missing");
      continue;
    }
    for (Fitter f : {Fitter::GEV_MLE, Fitter::EGu, Fitter::TEV, Fitter::EGa, Fitter::GGu,
                     Fitter::TCEV}) {
      const CellReport* c = cell(generator, f);
      if (c == nullptr) {
        o.require(false, generator + ": " + std::string(fitter_name(f)) + " cell missing");
        continue;
      }
      for (std::size_t r = 0; r < report.n_replicates; ++r) {
        ++nesting_checks;
        const auto& a = c->replicates[r].loglik;
        const auto& b = ev->replicates[r].loglik;
        if (!a || !b || *a < *b - 1e-6) {
          ++nesting_violations;
          if (nesting_violations <= 5) {
            o.require(false, "nesting " + generator + "/" + std::string(fitter_name(f)) +
                                 " replicate " + std::to_string(r) + ": " +
                                 (a ? fmt(*a, 10) : std::string("no fit")) + " vs EV " +
                                 (b ? fmt(*b, 10) : std::string("no fit")));
          }
        }
      }
    }
    const CellReport* mle = cell(generator, Fitter::GEV_MLE);
    const CellReport* pwm = cell(generator, Fitter::GEV_PWM);
    if (mle != nullptr && pwm != nullptr) {
      for (std::size_t r = 0; r < report.n_replicates; ++r) {
        ++pwm_checks;
        const auto& a = mle->replicates[r].loglik;
        const auto& b = pwm->replicates[r].loglik;
        if (!a || (b && *a < *b - 1e-6)) {
          ++pwm_violations;
          if (pwm_violations <= 5) {
            o.require(false, "GEV MLE vs PWM " + generator + " replicate " + std::to_string(r));
          }
        }
      }
    }
  }
  o.require(nesting_violations == 0, std::to_string(nesting_violations) + " of " +
                                         std::to_string(nesting_checks) + " nesting checks failed");
  o.require(pwm_violations == 0, std::to_string(pwm_violations) + " of " +
                                     std::to_string(pwm_checks) + " MLE vs PWM checks failed");

  const auto median_q999 = [&](Fitter f) {
    const CellReport* c = cell("GEV", f);
    std::vector<double> v;
    if (c != nullptr) {
      for (const auto& r : c->replicates) {
        if (r.q999_discrepancy) v.push_back(*r.q999_discrepancy);
      }
    }
    return v.empty() ? NAN : median(v);
  };
  const double ev_med = median_q999(Fitter::EV);
  const double gev_med = median_q999(Fitter::GEV_MLE);
  o.require(ev_med < -0.05, "EV median q999 discrepancy " + fmt(ev_med) + " not below -0.05");
  o.require(within(gev_med, 0.0, 0.05), "GEV-MLE median q999 discrepancy " + fmt(gev_med) +
                                            " outside +/- 0.05");

  o.summary = std::to_string(report.n_replicates) + " replicates x n=" +
              std::to_string(report.n_per_sample) + "; nesting " +
              std::to_string(nesting_checks - nesting_violations) + "/" +
              std::to_string(nesting_checks) + ", MLE>=PWM " +
              std::to_string(pwm_checks - pwm_violations) + "/" + std::to_string(pwm_checks) +
              "; GEV data median q999 discrepancy EV " + fmt(ev_med, 4) + ", GEV-MLE " +
              fmt(gev_med, 4);
  return o;
}

// 10. Rigby classification table and the tail-index survival ratio.
Outcome tail_table() {
  Outcome o;
  std::size_t cells = 0;
  const auto check_k = [&](const TailClassification& c, const std::string& name, double expected,
                           const std::string& where) {
    const auto k = c.k(name);
    ++cells;
    o.require(k && std::fabs(*k - expected) <= 1e-12 * std::max(1.0, std::fabs(expected)),
              where + " " + name + " = " + (k ? fmt(*k, 12) : std::string("missing")) +
                  " expected " + fmt(expected, 12));
  };
  const auto check_type = [&](const TailClassification& c, RigbyType t, const std::string& where) {
    ++cells;
    o.require(c.rigby_type == t, where + " type " + std::string(rigby_type_name(c.rigby_type)));
  };

  for (double sigma : {0.5, 1.0, 2.5}) {
    for (double a : {0.2, 0.7, 3.0}) {
      const auto gev = rigby_classify(DistributionSpec::gev(0, sigma, a));
      const std::string g = "GEV(" + fmt(sigma) + "," + fmt(a) + ")";
      check_type(gev, RigbyType::I, g);
      check_k(gev, "k1", 1.0, g);
      check_k(gev, "k2", 1.0 + 1.0 / a, g);

      for (const auto& spec : {DistributionSpec::egu(0, sigma, a), DistributionSpec::ega(0, sigma, a),
                               DistributionSpec::ggu(0, sigma, a),
                               DistributionSpec::gliv(0, sigma, a, 2.0)}) {
        const auto c = rigby_classify(spec);
        check_type(c, RigbyType::II, to_string(spec));
        check_k(c, "k3", 1.0, to_string(spec));
        check_k(c, "k4", a / sigma, to_string(spec));
      }
      const auto gt = rigby_classify(DistributionSpec::gtiev3(0, sigma, a));
      check_type(gt, RigbyType::II, "GTIEV3");
      check_k(gt, "k3", 1.0, "GTIEV3");
      check_k(gt, "k4", 1.0 / sigma, "GTIEV3");
      ++cells;
      o.require(gt.second_order == TailVerdict::Lighter, "GTIEV3 second order not lighter");
    }
    const auto ev = rigby_classify(DistributionSpec::ev(0, sigma));
    check_type(ev, RigbyType::II, "EV");
    check_k(ev, "k3", 1.0, "EV");
    check_k(ev, "k4", 1.0 / sigma, "EV");

    for (double a : {-0.9, -0.3, 0.4, 1.0}) {
      const auto tev = rigby_classify(DistributionSpec::tev(0, sigma, a));
      const std::string t = "TEV(" + fmt(sigma) + "," + fmt(a) + ")";
      check_type(tev, RigbyType::II, t);
      check_k(tev, "k3", 1.0, t);
      check_k(tev, "k4", 1.0 / sigma, t);
      if (a < 0) {
        ++cells;
        o.require(tev.second_order == TailVerdict::Heavier, t + " second order not heavier");
      }
    }

    for (double ratio : {1.5, 5.0}) {
      for (double a : {0.0016, 0.2, 0.45}) {
        const auto tc = rigby_classify(DistributionSpec::tcev(0, sigma, 10, ratio * sigma, a));
        const std::string t = "TCEV(" + fmt(sigma) + "," + fmt(ratio * sigma) + "," + fmt(a) + ")";
        check_type(tc, RigbyType::II, t);
        check_k(tc, "k3", 1.0, t);
        check_k(tc, "k4", 1.0 / (ratio * sigma), t);
        ++cells;
        o.require(tc.second_order == TailVerdict::Heavier, t + " second order not heavier");
      }
    }
  }

  double worst = 0.0;
  for (double a : {0.25, 0.5, 1.0}) {
    const double ratio = survival_ratio(DistributionSpec::gev(0, 1, a), 1e3, 2.0);
    const double rel = std::fabs(ratio / std::pow(2.0, -1.0 / a) - 1.0);
    worst = std::max(worst, rel);
    o.require(rel < 0.05, "survival ratio at alpha " + fmt(a) + " relative error " + fmt(rel));
  }
  o.summary = std::to_string(cells) + " table checks; survival ratio worst relative error " +
              fmt(worst, 3);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Capture {
  int code = -1;
  std::string out;
  std::map<std::string, std::string> files;
};

Capture capture(const std::vector<std::string>& args, const std::filesystem::path& dir) {
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ostringstream out, err;
  Capture c;
  std::vector<std::string> full = args;
  full.insert(full.end(), {"--out", dir.string()});
  c.code = cli::run(full, out, err);
  c.out = out.str();
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    c.files[entry.path().filename().string()] = slurp(entry.path());
  }
  return c;
}

// 11. Deterministic CLI outputs.
Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "evdkit_acceptance_determinism";
  const std::vector<std::vector<std::string>> commands{
      {"simulate", "--preset", "table3", "--replicates", "10", "--n", "100", "--seed", "7",
       "--format", "json"},
      {"envelope", "--family", "gev", "--replicates", "200", "--seed", "7", "--format", "json"}};
  std::size_t files = 0;
  for (const auto& args : commands) {
    const Capture first = capture(args, dir);
    const Capture second = capture(args, dir);
    o.require(first.code == 0 && second.code == 0,
              args.front() + " exit codes " + std::to_string(first.code) + ", " +
                  std::to_string(second.code));
    o.require(!first.files.empty(), args.front() + " wrote no files");
    o.require(first.out == second.out, args.front() + " stdout differs");
    o.require(first.files == second.files, args.front() + " output files differ");
    files += first.files.size();
  }
  std::filesystem::remove_all(dir);
  o.summary = "simulate and envelope run twice, " + std::to_string(files) + " files compared";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const double no_limit = std::numeric_limits<double>::infinity();
  const std::vector<Criterion> criteria{
      {1, "EV moment constants", 1.0, ev_constants},
      {2, "preset 0.999 quantiles", 5.0, table3_quantiles},
      {3, "preset kurtosis", 30.0, table3_kurtosis},
      {4, "identifiability reductions", no_limit, reductions},
      {5, "distribution property suites", no_limit, property_suites},
      {6, "AD statistics vs numerical integration", no_limit, ad_oracle},
      {7, "wind-speed fits", 120.0, wind_fits},
      {8, "wind-speed GEV-PWM shape", no_limit, wind_pwm},
      {9, "simulation study properties", 1200.0, study},
      {10, "tail classification", no_limit, tail_table},
      {11, "CLI determinism", no_limit, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      o.require(false, "runtime " + fmt(seconds, 4) + " s exceeds " + fmt(c.limit_seconds) + " s");
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d: %s  %-40s %9.2f s  %s\n", c.id, o.pass ? "PASS" : "FAIL",
                c.name.c_str(), seconds, o.summary.c_str());
    for (const auto& f : o.failures) std::printf("    - %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
