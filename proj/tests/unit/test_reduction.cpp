#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "evdkit/distribution.hpp"
#include "evdkit/error.hpp"
#include "evdkit/reduction.hpp"

using namespace evdkit;
using doctest::Approx;

namespace {

double sup_cdf_gap(NonIdentifiableFamily family, const std::vector<double>& params) {
  const DistributionSpec reduced = reduce_to_identifiable(family, params);
  const double lo = quantile(reduced, 1e-6);
  const double hi = quantile(reduced, 1.0 - 1e-9);
  double gap = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = lo + (hi - lo) * i / 999.0;
    gap = std::max(gap, std::fabs(nonidentifiable_cdf(family, params, x) - cdf(reduced, x)));
  }
  return gap;
}

std::vector<double> draw_params(NonIdentifiableFamily family, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> loc(-5.0, 5.0), scale(0.2, 4.0), shape(0.2, 5.0);
  std::vector<double> p{loc(gen), scale(gen), shape(gen), shape(gen)};
  switch (family) {
    case NonIdentifiableFamily::EGGu: p[2] = 1.0; break;
    case NonIdentifiableFamily::BG: p[3] = 1.0; break;
    case NonIdentifiableFamily::KBGGu:
      p[3] = 1.0;
      p.push_back(0.0);
      break;
    default: break;
  }
  return p;
}

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("worked reductions") {
    const auto k = reduce_to_identifiable(NonIdentifiableFamily::KumGum, std::vector{0.0, 1.0, 2.0, 3.0});
    CHECK(k.family() == Family::EGu);
    CHECK(k.mu() == Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(k.param(2) == 3.0);

    const auto e = reduce_to_identifiable(NonIdentifiableFamily::ExpGama, std::vector{0.0, 1.0, 1.0, 2.5});
    CHECK(e == DistributionSpec::ega(0, 1, 2.5));

    const std::vector<double> g{1.0, 2.0, 3.0, 5.0};
    const auto t = reduce_to_identifiable(NonIdentifiableFamily::GTIEV, g);
    CHECK(t.family() == Family::GTIEV3);
    CHECK(t.mu() == Approx(1.0 + 2.0 * std::log(2.0 * 3.0 / 5.0)).epsilon(1e-15));
    CHECK(t.sigma() == 2.0);
    CHECK(t.param(2) == 3.0);
    CHECK(sup_cdf_gap(NonIdentifiableFamily::GTIEV, g) < 1e-12);
  }

  TEST_CASE("every reduction preserves the cdf") {
    std::mt19937_64 gen(2024);
    for (auto family : {NonIdentifiableFamily::KumGum, NonIdentifiableFamily::GTIEV,
                        NonIdentifiableFamily::ExpGama, NonIdentifiableFamily::EGGu,
                        NonIdentifiableFamily::BG, NonIdentifiableFamily::KBGGu}) {
      for (int draw = 0; draw < 3; ++draw) {
        const auto p = draw_params(family, gen);
        INFO(family_name(family) << " draw " << draw);
        CHECK(sup_cdf_gap(family, p) < 1e-12);
      }
    }
  }

  TEST_CASE("collapsing families off their slice") {
    CHECK_THROWS_AS(reduce_to_identifiable(NonIdentifiableFamily::EGGu, std::vector{0.0, 1.0, 2.0, 3.0}),
                    DomainError);
    CHECK_THROWS_AS(reduce_to_identifiable(NonIdentifiableFamily::BG, std::vector{0.0, 1.0, 2.0, 3.0}),
                    DomainError);
    CHECK_THROWS_AS(
        reduce_to_identifiable(NonIdentifiableFamily::KBGGu, std::vector{0.0, 1.0, 2.0, 1.0, 0.5}),
        DomainError);
    CHECK_THROWS_AS(reduce_to_identifiable(NonIdentifiableFamily::KumGum, std::vector{0.0, -1.0, 2.0, 3.0}),
                    DomainError);
  }

  TEST_CASE("KBGGu off the slice is still a distribution") {
    const std::vector<double> p{0.0, 1.0, 1.5, 2.0, 0.7};
    double prev = 0.0;
    for (double x = -5.0; x <= 20.0; x += 0.5) {
      const double f = nonidentifiable_cdf(NonIdentifiableFamily::KBGGu, p, x);
      CHECK(f >= prev - 1e-12);
      CHECK(f <= 1.0 + 1e-12);
      prev = f;
    }
    CHECK(prev > 0.999);
  }

  TEST_CASE("names and parameter counts") {
    CHECK(parse_nonidentifiable_family("kumgum") == NonIdentifiableFamily::KumGum);
    CHECK(parameter_count(NonIdentifiableFamily::KBGGu) == 5);
    CHECK(parameter_count(NonIdentifiableFamily::BG) == 4);
  }
}
