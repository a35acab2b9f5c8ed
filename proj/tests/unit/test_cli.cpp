#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "evdkit/distribution.hpp"
#include "evdkit_cli/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  [[nodiscard]] json report() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = evdkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "evdkit_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Every report carries the same envelope.
void check_envelope(const json& j, const std::string& command) {
  REQUIRE(j.is_object());
  CHECK(j.at("command") == command);
  CHECK(j.at("inputs").is_object());
  CHECK(j.at("results").is_object());
  CHECK(j.at("warnings").is_array());
}

double return_level(const std::string& family) {
  const auto r = run({"fit", "--family", family, "--format", "json"});
  REQUIRE(r.code == 0);
  return r.report()["results"]["return_level"]["value"].get<double>();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("quantile") {
    const auto r = run({"quantile", "--family", "gev", "--params", "0,1,0.1", "--p", "0.999", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    check_envelope(j, "quantile");
    const double q = j["results"]["quantiles"][0]["value"].get<double>();
    CHECK(std::fabs(q - 9.95) < 0.005);
  }

  TEST_CASE("tail") {
    const auto r = run({"tail", "--family", "egu", "--params", "0,1,0.5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    check_envelope(j, "tail");
    const auto& res = j["results"];
    for (const char* key : {"family", "tail_index", "rigby_type", "k_values", "verdict_vs_gumbel"}) {
      CHECK(res.contains(key));
    }
    CHECK(res["rigby_type"] == "II");
    CHECK(res["k_values"]["k4"].get<double>() == doctest::Approx(0.5));
  }

  TEST_CASE("fit on the embedded series") {
    const auto r = run({"fit", "--data", "embedded", "--adjust", "monthly_median", "--family", "ev",
                        "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    check_envelope(j, "fit");
    const auto& res = j["results"];
    CHECK(res["parameters"].size() == 2);
    for (const auto& p : res["parameters"]) {
      CHECK(p["name"].is_string());
      CHECK(p["estimate"].is_number());
      CHECK(p["std_error"].is_number());
    }
    for (const char* key : {"loglik", "aic", "return_level", "converged", "n"}) CHECK(res.contains(key));
    CHECK(std::fabs(res["return_level"]["value"].get<double>() - 77.23) <= 2.0);
    CHECK(j["warnings"].size() == 1);
  }

  TEST_CASE("default adjustment warns in text mode") {
    const auto r = run({"fit", "--family", "ev"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning:") != std::string::npos);
    CHECK(r.out.find("return level") != std::string::npos);
    const auto none = run({"fit", "--family", "ev", "--adjust", "none"});
    CHECK(none.err.empty());
  }

  TEST_CASE("TCEV return level exceeds the Gumbel one") {
    CHECK(return_level("tcev") > return_level("ev"));
  }

  TEST_CASE("PWM fit from a value-only CSV") {
    const auto dir = scratch("pwm");
    const auto x = evdkit::sample(evdkit::DistributionSpec::gev(0, 1, 0.1), 10000, 2);
    {
      std::ofstream f(dir / "x.csv");
      f << "value\n";
      for (double v : x) f << v << '\n';
    }
    const auto r = run({"fit", "--data", (dir / "x.csv").string(), "--family", "gev", "--method", "pwm",
                        "--format", "json"});
    REQUIRE(r.code == 0);
    const double a = r.report()["results"]["parameters"][2]["estimate"].get<double>();
    CHECK(std::fabs(a - 0.1) <= 0.03);
    CHECK(run({"fit", "--data", (dir / "x.csv").string(), "--family", "gev", "--adjust",
               "monthly_median"}).code == 2);
  }

  TEST_CASE("bounds and methods") {
    const auto r = run({"fit", "--family", "gev", "--bounds", ",,0:0", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.report()["results"]["parameters"][2]["estimate"].get<double>() == 0.0);
    CHECK(run({"fit", "--family", "ev", "--method", "pwm"}).code == 2);
    CHECK(run({"fit", "--family", "tev", "--method", "profile"}).code == 0);
    CHECK(run({"fit", "--family", "gev", "--bounds", "1:0,,"}).code == 2);
  }

  TEST_CASE("gof table") {
    const auto r = run({"gof", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    check_envelope(j, "gof");
    const auto& rows = j["results"]["rows"];
    CHECK(rows.size() == 10);
    double best_nll = 1e300, prev_aic = -1e300;
    std::string best;
    for (const auto& row : rows) {
      CHECK(row["aic"].get<double>() >= prev_aic);
      prev_aic = row["aic"].get<double>();
      if (row["neg_loglik"].get<double>() < best_nll) {
        best_nll = row["neg_loglik"].get<double>();
        best = row["family"];
      }
    }
    CHECK(best == "TCEV");

    const auto one = run({"gof", "--families", "ev", "--format", "json"});
    CHECK(one.report()["results"]["rows"].size() == 1);
  }

  TEST_CASE("gof: Gumbel has the worst second-order tail statistic" * doctest::may_fail()) {
    const auto rows = run({"gof", "--format", "json"}).report()["results"]["rows"];
    double worst = -1;
    std::string family;
    for (const auto& row : rows) {
      if (row["ad2r"].get<double>() > worst) {
        worst = row["ad2r"].get<double>();
        family = row["family"];
      }
    }
    CHECK(family == "EV");
  }

  TEST_CASE("simulate is reproducible") {
    const auto a = scratch("sim_a");
    const auto b = scratch("sim_b");
    const std::vector<std::string> base{"simulate", "--preset", "table3", "--replicates", "10", "--n", "60",
                                        "--fitters", "ev,gev-mle,gev-pwm", "--seed", "1", "--format", "json"};
    auto args_a = base;
    args_a.insert(args_a.end(), {"--out", a.string()});
    auto args_b = base;
    args_b.insert(args_b.end(), {"--out", b.string()});
    const auto ra = run(args_a);
    const auto rb = run(args_b);
    REQUIRE(ra.code == 0);
    CHECK(slurp(a / "study_long.csv") == slurp(b / "study_long.csv"));
    CHECK(slurp(a / "study_summary.json") == slurp(b / "study_summary.json"));
    const auto j = ra.report();
    check_envelope(j, "simulate");
    CHECK(j["results"]["cells"].size() == 24);
    const auto& cell = j["results"]["cells"][0];
    for (const char* key : {"generator", "fitter", "fit_errors", "nonconverged", "metrics"}) {
      CHECK(cell.contains(key));
    }
    CHECK(cell["metrics"]["aic"]["count"] == 10);
  }

  TEST_CASE("envelope output") {
    const auto a = scratch("env_a");
    const auto b = scratch("env_b");
    const auto ra = run({"envelope", "--family", "ev", "--replicates", "200", "--seed", "4", "--out", a.string()});
    const auto rb = run({"envelope", "--family", "ev", "--replicates", "200", "--seed", "4", "--out", b.string()});
    REQUIRE(ra.code == 0);
    CHECK(ra.out == rb.out);
    CHECK(slurp(a / "envelope.csv") == slurp(b / "envelope.csv"));
    CHECK(slurp(a / "envelope.csv").rfind("index,p,theoretical_q,empirical_q,lower,upper\n", 0) == 0);
    const auto rc = run({"envelope", "--family", "ev", "--replicates", "200", "--seed", "5"});
    CHECK(rc.out != ra.out);
  }

  TEST_CASE("profile output") {
    const auto dir = scratch("profile");
    const auto r = run({"profile", "--family", "gev", "--points", "11", "--out", dir.string(), "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.report()["results"]["points"].size() == 11);
    CHECK(slurp(dir / "profile.csv").rfind("value,loglik,ok,mu,sigma,alpha\n", 0) == 0);
    CHECK(run({"profile", "--family", "ev"}).code == 2);
  }

  TEST_CASE("GTIEV3 profile is nondecreasing for large alpha" * doctest::may_fail()) {
    const auto r = run({"profile", "--family", "gtiev3", "--range", "100,10000", "--points", "21",
                        "--scale", "log", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    double prev = -1e300;
    for (const auto& p : j["results"]["points"]) {
      CHECK(p["loglik"].get<double>() >= prev - 1e-9);
      prev = p["loglik"].get<double>();
    }
  }

  TEST_CASE("exit codes") {
    CHECK(run({"quantile", "--family", "nope", "--params", "1"}).code == 2);
    CHECK(run({"quantile", "--family", "ev", "--params", "0,-1"}).code == 2);
    CHECK(run({"quantile", "--family", "ev", "--params", "0,1", "--p", "1.5"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"fit", "--family", "ev", "--format", "yaml"}).code == 2);
    CHECK(run({"fit", "--family", "ev", "--data", "/nonexistent/evdkit.csv"}).code == 3);
    const auto dir = scratch("bad");
    {
      std::ofstream f(dir / "bad.csv");
      f << "year,month,value\n2000,1,3\n2000,2,x\n";
    }
    const auto bad = run({"fit", "--family", "ev", "--data", (dir / "bad.csv").string()});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("row 3") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
  }
}
