#include "evdkit_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "evdkit/evdkit.hpp"

namespace evdkit::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string data = "embedded";
  std::string adjust;
  std::string column = "value";
  std::string family;
  std::string families;
  std::string method = "mle";
  std::string params;
  std::string p;
  std::string bounds;
  std::uint64_t seed = 1;
  std::size_t replicates = 0;
  std::size_t n = 500;
  std::string preset = "table3";
  std::string fitters;
  std::string out;
  std::string format = "text";
  double coverage = 0.90;
  std::string param;
  std::string range;
  std::size_t points = 41;
  std::string scale;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;
  std::ostringstream text;

  [[nodiscard]] Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["warnings"] = warnings;
    return j;
  }
};

// ---- parsing helpers -------------------------------------------------------

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(const std::string& text, std::string_view what) {
  std::string_view s = text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ConfigError("invalid number '" + text + "' for " + std::string(what));
  }
  return v;
}

std::vector<double> parse_list(const std::string& text, std::string_view what) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) values.push_back(parse_number(part, what));
  return values;
}

Family require_family(const std::string& name) {
  if (name.empty()) throw ConfigError("--family is required");
  const auto family = parse_family(name);
  if (!family) throw ConfigError("unknown family '" + name + "'");
  return *family;
}

DistributionSpec require_spec(const Options& o) {
  const Family family = require_family(o.family);
  if (o.params.empty()) throw ConfigError("--params is required");
  auto params = parse_list(o.params, "--params");
  if (params.size() != parameter_count(family)) {
    throw ConfigError(std::string(family_name(family)) + " takes " +
                      std::to_string(parameter_count(family)) + " parameters, got " +
                      std::to_string(params.size()));
  }
  return DistributionSpec(family, std::move(params));
}

FitMethod parse_method(const std::string& name) {
  if (name == "mle") return FitMethod::MLE;
  if (name == "pwm") return FitMethod::PWM;
  if (name == "profile") return FitMethod::ProfileMLE;
  throw ConfigError("unknown method '" + name + "' (mle, pwm, profile)");
}

// "lo:hi" per parameter, comma separated; an empty entry keeps the default.
std::vector<Bound> parse_bounds(const std::string& text, Family family) {
  std::vector<Bound> bounds = default_bounds(family);
  if (text.empty()) return bounds;
  const auto parts = split(text, ',');
  if (parts.size() != bounds.size()) {
    throw ConfigError("--bounds needs " + std::to_string(bounds.size()) + " entries");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) continue;
    const auto ends = split(parts[i], ':');
    if (ends.size() != 2) throw ConfigError("bound '" + parts[i] + "' is not lo:hi");
    if (!ends[0].empty()) bounds[i].lo = parse_number(ends[0], "--bounds");
    if (!ends[1].empty()) bounds[i].hi = parse_number(ends[1], "--bounds");
    if (!(bounds[i].lo <= bounds[i].hi)) throw ConfigError("bound '" + parts[i] + "' is empty");
  }
  return bounds;
}

std::vector<Fitter> parse_fitters(const std::string& text, std::vector<Fitter> fallback) {
  if (text.empty()) return fallback;
  std::vector<Fitter> fitters;
  for (const auto& name : split(text, ',')) {
    const auto f = parse_fitter(name);
    if (!f) throw ConfigError("unknown fitter '" + name + "'");
    fitters.push_back(*f);
  }
  return fitters;
}

// ---- data ------------------------------------------------------------------

struct Dataset {
  std::vector<double> values;
  Adjustment adjustment = Adjustment::None;
};

Dataset load_data(const Options& o, Report& report) {
  std::optional<Adjustment> adjust;
  if (!o.adjust.empty()) {
    adjust = parse_adjustment(o.adjust);
    if (!adjust) throw ConfigError("unknown adjustment '" + o.adjust + "'");
  }
  Dataset d;
  if (o.data == "embedded") {
    d.adjustment = adjust.value_or(Adjustment::MonthlyMedian);
    if (d.adjustment == Adjustment::MonthlyMedian) {
      report.warnings.push_back(
          "seasonality removed with monthly medians rather than an stl decomposition; "
          "estimates differ from stl-adjusted analyses");
    }
    d.values = seasonal_adjust(load_embedded_wind(), d.adjustment);
  } else {
    const fs::path path(o.data);
    if (!fs::exists(path)) throw DataError("data file not found: " + o.data);
    d.adjustment = adjust.value_or(Adjustment::None);
    if (csv_has_calendar(path)) {
      d.values = seasonal_adjust(read_csv(path), d.adjustment);
    } else {
      if (d.adjustment != Adjustment::None) {
        throw ConfigError("--adjust monthly_median needs year and month columns");
      }
      d.values = read_value_column(path, o.column);
    }
  }
  if (d.values.size() < 2) throw DataError("dataset has fewer than two observations");
  report.inputs["data"] = o.data;
  report.inputs["adjust"] = adjustment_name(d.adjustment);
  report.inputs["n"] = d.values.size();
  return d;
}

// ---- output helpers --------------------------------------------------------

std::string fixed(double v, int digits = 4) {
  if (!std::isfinite(v)) return format_double(v);
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string fixed(const std::optional<double>& v, int digits = 4) {
  return v ? fixed(*v, digits) : std::string("-");
}

Json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

Json number(const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); }

void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        os << "  " << std::right << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    os << '\n';
  }
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path.string());
  f << content;
}

std::optional<fs::path> out_dir(const Options& o) {
  if (o.out.empty()) return std::nullopt;
  fs::create_directories(o.out);
  return fs::path(o.out);
}

Json fit_json(const FitResult& fit, std::size_t n, double p) {
  Json params = Json::array();
  const auto names = parameter_names(fit.spec.family());
  for (std::size_t i = 0; i < names.size(); ++i) {
    Json entry;
    entry["name"] = names[i];
    entry["estimate"] = number(fit.spec.param(i));
    entry["std_error"] = i < fit.std_errors.size() ? number(fit.std_errors[i]) : Json(nullptr);
    entry["at_bound"] = i < fit.bounds_active.size() && fit.bounds_active[i];
    params.push_back(entry);
  }
  Json j;
  j["family"] = family_name(fit.spec.family());
  j["method"] = method_name(fit.method);
  j["parameters"] = params;
  j["loglik"] = number(fit.loglik);
  j["neg_loglik"] = number(-fit.loglik);
  j["aic"] = number(aic(fit.loglik, parameter_count(fit.spec.family())));
  j["return_level"] = {{"p", p}, {"value", number(quantile(fit.spec, p))}};
  j["converged"] = fit.converged;
  j["n"] = n;
  return j;
}

double parse_probability(const Options& o) {
  const double p = o.p.empty() ? 0.999 : parse_number(o.p, "--p");
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("--p must lie in (0, 1)");
  return p;
}

// ---- commands --------------------------------------------------------------

void cmd_fit(const Options& o, Report& r) {
  const Family family = require_family(o.family);
  const FitMethod method = parse_method(o.method);
  const double p = parse_probability(o);
  const Dataset d = load_data(o, r);
  FitConfig config;
  config.bounds = parse_bounds(o.bounds, family);
  r.inputs["family"] = family_name(family);
  r.inputs["method"] = method_name(method);
  r.inputs["p"] = p;
  if (!o.bounds.empty()) r.inputs["bounds"] = o.bounds;

  FitResult fit = [&] {
    switch (method) {
      case FitMethod::PWM:
        if (family != Family::GEV) throw ConfigError("--method pwm applies to gev only");
        return fit_gev_pwm(d.values);
      case FitMethod::ProfileMLE:
        if (family != Family::TEV) throw ConfigError("--method profile applies to tev only");
        return fit_tev_profile(d.values, config);
      case FitMethod::MLE:
        break;
    }
    return fit_mle(d.values, family, config);
  }();
  if (!fit.converged) r.warnings.push_back("optimizer did not report convergence");
  r.results = fit_json(fit, d.values.size(), p);

  std::vector<std::vector<std::string>> rows{{"parameter", "estimate", "std_error"}};
  const auto names = parameter_names(family);
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::optional<double> se;
    if (i < fit.std_errors.size()) se = fit.std_errors[i];
    rows.push_back({names[i], fixed(fit.spec.param(i)), fixed(se)});
  }
  r.text << to_string(fit.spec) << "  [" << method_name(method) << ", n=" << d.values.size()
         << "]\n";
  print_table(r.text, rows);
  r.text << "loglik        " << fixed(fit.loglik) << "\n"
         << "aic           " << fixed(aic(fit.loglik, names.size())) << "\n"
         << "return level  " << fixed(quantile(fit.spec, p)) << "  (p=" << format_double(p)
         << ")\n";
}

void cmd_gof(const Options& o, Report& r) {
  std::vector<Fitter> all;
  for (int i = 0; i <= static_cast<int>(Fitter::TCEV); ++i) all.push_back(static_cast<Fitter>(i));
  const auto fitters = parse_fitters(o.families, all);
  const double p = parse_probability(o);
  const Dataset d = load_data(o, r);
  Json names = Json::array();
  for (Fitter f : fitters) names.push_back(fitter_name(f));
  r.inputs["families"] = names;
  r.inputs["p"] = p;

  struct Row {
    Fitter fitter;
    FitResult fit;
    GofReport gof;
  };
  std::vector<Row> rows;
  for (Fitter f : fitters) {
    try {
      FitResult fit = run_fitter(f, d.values, FitConfig{});
      GofReport gof = evaluate_fit(d.values, fit.spec);
      gof.loglik = fit.loglik;
      gof.aic = aic(fit.loglik, parameter_count(fit.spec.family()));
      if (!fit.converged) {
        r.warnings.push_back(std::string(fitter_name(f)) + ": optimizer did not converge");
      }
      rows.push_back({f, std::move(fit), gof});
    } catch (const Error& e) {
      r.warnings.push_back(std::string(fitter_name(f)) + ": " + e.what());
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.gof.aic < b.gof.aic; });
  if (rows.empty()) throw NonConvergenceError("no family could be fitted");

  Json table = Json::array();
  std::vector<std::vector<std::string>> text{
      {"family", "k", "-loglik", "aic", "adr", "ad2r", "return_level"}};
  for (const auto& row : rows) {
    const std::size_t k = parameter_count(row.fit.spec.family());
    const double level = quantile(row.fit.spec, p);
    Json j;
    j["family"] = fitter_name(row.fitter);
    j["spec"] = to_string(row.fit.spec);
    j["k"] = k;
    j["neg_loglik"] = number(-row.gof.loglik);
    j["aic"] = number(row.gof.aic);
    j["adr"] = number(row.gof.adr);
    j["ad2r"] = number(row.gof.ad2r);
    j["return_level"] = number(level);
    j["converged"] = row.fit.converged;
    table.push_back(j);
    text.push_back({std::string(fitter_name(row.fitter)), std::to_string(k),
                    fixed(-row.gof.loglik, 2), fixed(row.gof.aic, 2), fixed(row.gof.adr, 3),
                    fixed(row.gof.ad2r, 3), fixed(level, 2)});
  }
  r.results["rows"] = table;
  print_table(r.text, text);
}

void cmd_simulate(const Options& o, Report& r) {
  StudyConfig config;
  if (o.preset == "table3") {
    config.generators = table3_presets();
  } else if (o.preset == "supplement") {
    config.generators = supplement_presets();
  } else {
    throw ConfigError("unknown preset '" + o.preset + "' (table3, supplement)");
  }
  config.fitters = parse_fitters(o.fitters, default_fitters());
  config.n_per_sample = o.n;
  config.n_replicates = o.replicates == 0 ? 200 : o.replicates;
  config.seed = o.seed;
  validate_study_config(config);

  r.inputs["preset"] = o.preset;
  r.inputs["replicates"] = config.n_replicates;
  r.inputs["n"] = config.n_per_sample;
  r.inputs["seed"] = config.seed;
  Json fitter_names = Json::array();
  for (Fitter f : config.fitters) fitter_names.push_back(fitter_name(f));
  r.inputs["fitters"] = fitter_names;

  const StudyReport study = run_study(config);
  Json cells = Json::array();
  std::vector<std::vector<std::string>> text{
      {"generator", "fitter", "errors", "median_aic", "median_adr", "median_ad2r",
       "median_q999"}};
  for (const auto& cell : study.cells) {
    Json c;
    c["generator"] = cell.generator;
    c["fitter"] = fitter_name(cell.fitter);
    c["fit_errors"] = cell.fit_errors;
    c["nonconverged"] = cell.nonconverged;
    Json metrics;
    for (Metric m : kAllMetrics) {
      const auto s = cell.summary(m);
      if (!s) {
        metrics[std::string(metric_name(m))] = nullptr;
        continue;
      }
      metrics[std::string(metric_name(m))] = {{"min", number(s->min)},     {"q1", number(s->q1)},
                                              {"median", number(s->median)}, {"q3", number(s->q3)},
                                              {"max", number(s->max)},       {"count", s->count}};
    }
    c["metrics"] = metrics;
    cells.push_back(c);
    auto med = [&](Metric m) {
      const auto s = cell.summary(m);
      return s ? fixed(s->median, 3) : std::string("-");
    };
    text.push_back({cell.generator, std::string(fitter_name(cell.fitter)),
                    std::to_string(cell.fit_errors), med(Metric::AIC), med(Metric::ADR),
                    med(Metric::AD2R), med(Metric::Q999)});
  }
  r.results["cells"] = cells;
  print_table(r.text, text);

  if (const auto dir = out_dir(o)) {
    std::ostringstream csv;
    write_long_csv(csv, study);
    write_text_file(*dir / "study_long.csv", csv.str());
    write_text_file(*dir / "study_summary.json", r.to_json().dump(2) + "\n");
    r.results["files"] = {(*dir / "study_long.csv").string(),
                          (*dir / "study_summary.json").string()};
  }
}

void cmd_quantile(const Options& o, Report& r) {
  const DistributionSpec spec = require_spec(o);
  const auto ps = o.p.empty() ? std::vector<double>{0.999} : parse_list(o.p, "--p");
  r.inputs["family"] = family_name(spec.family());
  r.inputs["params"] = std::vector<double>(spec.params().begin(), spec.params().end());
  r.inputs["p"] = ps;
  r.results["spec"] = to_string(spec);
  Json list = Json::array();
  std::vector<std::vector<std::string>> text{{"p", "quantile"}};
  for (double p : ps) {
    if (!(p > 0.0 && p < 1.0)) throw ConfigError("--p values must lie in (0, 1)");
    const double q = quantile(spec, p);
    list.push_back({{"p", p}, {"value", number(q)}});
    text.push_back({format_double(p), fixed(q, 6)});
  }
  r.results["quantiles"] = list;
  r.text << to_string(spec) << '\n';
  print_table(r.text, text);
}

void cmd_tail(const Options& o, Report& r) {
  const DistributionSpec spec = require_spec(o);
  r.inputs["family"] = family_name(spec.family());
  r.inputs["params"] = std::vector<double>(spec.params().begin(), spec.params().end());
  const TailClassification t = rigby_classify(spec);
  Json k = Json::object();
  for (const auto& kv : t.k_values) k[kv.name] = number(kv.value);
  r.results["family"] = family_name(spec.family());
  r.results["tail_index"] = number(t.tail_index);
  r.results["rigby_type"] = rigby_type_name(t.rigby_type);
  r.results["k_values"] = k;
  r.results["verdict_vs_gumbel"] = verdict_name(t.verdict_vs_gumbel);
  r.results["second_order"] =
      t.second_order ? Json(verdict_name(*t.second_order)) : Json(nullptr);
  if (!t.note.empty()) r.results["note"] = t.note;

  std::vector<std::vector<std::string>> text{
      {"family", std::string(family_name(spec.family()))},
      {"tail_index", fixed(t.tail_index)},
      {"rigby_type", std::string(rigby_type_name(t.rigby_type))},
      {"vs_gumbel", std::string(verdict_name(t.verdict_vs_gumbel))}};
  for (const auto& kv : t.k_values) text.push_back({kv.name, fixed(kv.value)});
  if (t.second_order) text.push_back({"second_order", std::string(verdict_name(*t.second_order))});
  print_table(r.text, text);
  if (!t.note.empty()) r.text << t.note << '\n';
}

void cmd_envelope(const Options& o, Report& r) {
  const Family family = require_family(o.family);
  const Dataset d = load_data(o, r);
  const std::size_t replicates = o.replicates == 0 ? 1000 : o.replicates;
  if (!(o.coverage > 0.0 && o.coverage < 1.0)) throw ConfigError("--coverage must lie in (0, 1)");
  const DistributionSpec spec =
      o.params.empty() ? fit_mle(d.values, family).spec : require_spec(o);
  r.inputs["family"] = family_name(family);
  r.inputs["replicates"] = replicates;
  r.inputs["coverage"] = o.coverage;
  r.inputs["seed"] = o.seed;

  const QqEnvelope env = qq_envelope(d.values, spec, replicates, o.coverage, o.seed);
  const double inside = envelope_inside_fraction(env);
  r.results["spec"] = to_string(spec);
  r.results["inside_fraction"] = inside;
  Json points = Json::array();
  for (std::size_t i = 0; i < env.p.size(); ++i) {
    points.push_back({{"index", i + 1},
                      {"p", env.p[i]},
                      {"theoretical_q", number(env.theoretical_q[i])},
                      {"empirical_q", number(env.empirical_q[i])},
                      {"lower", number(env.lower_band[i])},
                      {"upper", number(env.upper_band[i])}});
  }
  r.results["points"] = points;

  std::ostringstream csv;
  write_envelope_csv(csv, env);
  if (const auto dir = out_dir(o)) {
    write_text_file(*dir / "envelope.csv", csv.str());
    r.results["files"] = {(*dir / "envelope.csv").string()};
  }
  r.text << to_string(spec) << "  replicates=" << replicates << " coverage=" << o.coverage
         << " inside=" << fixed(inside, 3) << '\n'
         << csv.str();
}

struct ProfileRange {
  double lo;
  double hi;
  bool log;
};

std::optional<ProfileRange> default_profile_range(Family family, std::size_t index) {
  if (index != 2) return std::nullopt;
  switch (family) {
    case Family::GEV: return ProfileRange{-0.5, 0.5, false};
    case Family::TEV: return ProfileRange{-1.0 + 1e-6, 1.0, false};
    case Family::GTIEV3: return ProfileRange{1.0, 1e4, true};
    case Family::EGu:
    case Family::EGa:
    case Family::GGu: return ProfileRange{0.1, 10.0, true};
    case Family::GLIV: return ProfileRange{0.05, 1.0, false};
    default: return std::nullopt;
  }
}

void cmd_profile(const Options& o, Report& r) {
  const Family family = require_family(o.family);
  const auto names = parameter_names(family);
  std::size_t index = names.size() > 2 ? 2 : 0;
  if (!o.param.empty()) {
    const auto it = std::find(names.begin(), names.end(), o.param);
    if (it == names.end()) throw ConfigError("unknown parameter '" + o.param + "'");
    index = static_cast<std::size_t>(it - names.begin());
  }
  auto range = default_profile_range(family, index);
  if (!o.range.empty()) {
    const auto ends = parse_list(o.range, "--range");
    if (ends.size() != 2 || !(ends[0] < ends[1])) throw ConfigError("--range needs lo,hi");
    range = ProfileRange{ends[0], ends[1], range && range->log};
  }
  if (!range) throw ConfigError("--range is required for this parameter");
  if (o.scale == "log") range->log = true;
  if (o.scale == "linear") range->log = false;
  if (!o.scale.empty() && o.scale != "log" && o.scale != "linear") {
    throw ConfigError("--scale must be linear or log");
  }
  if (range->log && !(range->lo > 0.0)) throw ConfigError("log grid needs a positive range");
  if (o.points < 2) throw ConfigError("--points must be at least 2");

  std::vector<double> grid(o.points);
  for (std::size_t i = 0; i < o.points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(o.points - 1);
    grid[i] = range->log ? std::exp(std::log(range->lo) + t * std::log(range->hi / range->lo))
                         : range->lo + t * (range->hi - range->lo);
  }
  const Dataset d = load_data(o, r);
  r.inputs["family"] = family_name(family);
  r.inputs["parameter"] = names[index];
  r.inputs["range"] = {range->lo, range->hi};
  r.inputs["points"] = o.points;
  r.inputs["scale"] = range->log ? "log" : "linear";

  const auto curve = profile_loglik_curve(d.values, family, index, grid);
  Json points = Json::array();
  std::ostringstream csv;
  csv << "value,loglik,ok";
  for (const auto& name : names) csv << ',' << name;
  csv << '\n';
  std::vector<std::vector<std::string>> text{{names[index], "loglik"}};
  std::size_t failed = 0;
  for (const auto& pt : curve) {
    if (!pt.ok) ++failed;
    points.push_back({{"value", pt.value},
                      {"loglik", pt.ok ? number(pt.loglik) : Json(nullptr)},
                      {"params", pt.params}});
    csv << format_double(pt.value) << ',' << (pt.ok ? format_double(pt.loglik) : "NA") << ','
        << (pt.ok ? 1 : 0);
    for (std::size_t i = 0; i < names.size(); ++i) {
      csv << ',' << (i < pt.params.size() ? format_double(pt.params[i]) : "NA");
    }
    csv << '\n';
    text.push_back({fixed(pt.value, 6), pt.ok ? fixed(pt.loglik) : "-"});
  }
  if (failed > 0) r.warnings.push_back(std::to_string(failed) + " grid points failed");
  r.results["points"] = points;
  if (const auto dir = out_dir(o)) {
    write_text_file(*dir / "profile.csv", csv.str());
    r.results["files"] = {(*dir / "profile.csv").string()};
  }
  print_table(r.text, text);
}

// ---- wiring ----------------------------------------------------------------

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output form")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out, "Directory for report files");
  sub->add_option("--seed", o.seed, "Random seed");
}

void add_data(CLI::App* sub, Options& o) {
  sub->add_option("--data", o.data, "embedded or a CSV path");
  sub->add_option("--adjust", o.adjust, "none or monthly_median");
  sub->add_option("--column", o.column, "Value column of a CSV without calendar columns");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const InvalidSpecError*>(&e) ||
      dynamic_cast<const DomainError*>(&e)) {
    return kConfigError;
  }
  if (dynamic_cast<const DataError*>(&e) || dynamic_cast<const fs::filesystem_error*>(&e)) {
    return kDataError;
  }
  return kNumericalFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extreme value distributions: fitting, diagnostics and simulation", "evdkit"};
  app.require_subcommand(1);
  Options o;

  auto* fit = app.add_subcommand("fit", "Fit one family to a dataset");
  add_common(fit, o);
  add_data(fit, o);
  fit->add_option("--family", o.family)->required();
  fit->add_option("--method", o.method, "mle, pwm (gev) or profile (tev)");
  fit->add_option("--bounds", o.bounds, "lo:hi per parameter, comma separated");
  fit->add_option("--p", o.p, "Probability of the reported return level (default 0.999)");

  auto* gof = app.add_subcommand("gof", "Fit and score several families");
  add_common(gof, o);
  add_data(gof, o);
  gof->add_option("--families", o.families, "Comma-separated fitters (default all)");
  gof->add_option("--p", o.p, "Probability of the reported return level (default 0.999)");

  auto* simulate = app.add_subcommand("simulate", "Run the Monte Carlo model comparison");
  add_common(simulate, o);
  simulate->add_option("--preset", o.preset, "table3 or supplement");
  simulate->add_option("--replicates", o.replicates, "Replicates per generator (default 200)");
  simulate->add_option("--n", o.n, "Sample size (default 500)");
  simulate->add_option("--fitters", o.fitters, "Comma-separated fitters");

  auto* quant = app.add_subcommand("quantile", "Evaluate quantiles");
  add_common(quant, o);
  quant->add_option("--family", o.family)->required();
  quant->add_option("--params", o.params)->required();
  quant->add_option("--p", o.p, "Comma-separated probabilities (default 0.999)");

  auto* tail = app.add_subcommand("tail", "Classify the right tail");
  add_common(tail, o);
  tail->add_option("--family", o.family)->required();
  tail->add_option("--params", o.params)->required();

  auto* envelope = app.add_subcommand("envelope", "Parametric bootstrap QQ envelope");
  add_common(envelope, o);
  add_data(envelope, o);
  envelope->add_option("--family", o.family)->required();
  envelope->add_option("--params", o.params, "Use these parameters instead of the MLE");
  envelope->add_option("--replicates", o.replicates, "Bootstrap replicates (default 1000)");
  envelope->add_option("--coverage", o.coverage, "Pointwise band coverage");

  auto* profile = app.add_subcommand("profile", "Profile log-likelihood curve");
  add_common(profile, o);
  add_data(profile, o);
  profile->add_option("--family", o.family)->required();
  profile->add_option("--param", o.param, "Parameter to profile (default: first shape)");
  profile->add_option("--range", o.range, "lo,hi");
  profile->add_option("--points", o.points, "Grid size");
  profile->add_option("--scale", o.scale, "linear or log");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Report report;
  report.command = chosen->get_name();
  try {
    if (chosen == fit) cmd_fit(o, report);
    else if (chosen == gof) cmd_gof(o, report);
    else if (chosen == simulate) cmd_simulate(o, report);
    else if (chosen == quant) cmd_quantile(o, report);
    else if (chosen == tail) cmd_tail(o, report);
    else if (chosen == envelope) cmd_envelope(o, report);
    else cmd_profile(o, report);

    if (const auto dir = out_dir(o); dir && chosen != simulate) {
      write_text_file(*dir / (report.command + ".json"), report.to_json().dump(2) + "\n");
    }
  } catch (const std::exception& e) {
    err << "evdkit " << report.command << ": " << e.what() << '\n';
    return exit_code_for(e);
  }

  if (o.format == "json") {
    out << report.to_json().dump(2) << '\n';
  } else {
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    out << report.text.str();
  }
  return kOk;
}

}  // namespace evdkit::cli
