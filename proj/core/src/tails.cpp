#include "evdkit/tails.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "evdkit/error.hpp"

namespace evdkit {

namespace {

bool close(double a, double b) { return std::fabs(a - b) <= 1e-12 * std::max(std::fabs(a), std::fabs(b)); }

int type_rank(RigbyType t) {
  switch (t) {
    case RigbyType::I: return 0;
    case RigbyType::II: return 1;
    case RigbyType::III: return 2;
    case RigbyType::BoundedSupport: return 3;
  }
  return 3;
}

int verdict_score(const std::optional<TailVerdict>& v) {
  if (!v) return 0;
  switch (*v) {
    case TailVerdict::Heavier: return 1;
    case TailVerdict::Lighter: return -1;
    case TailVerdict::EqualFirstOrder: return 0;
  }
  return 0;
}

TailVerdict compare_rate(double k4, double sigma) {
  const double gumbel = 1.0 / sigma;
  if (close(k4, gumbel)) return TailVerdict::EqualFirstOrder;
  return k4 < gumbel ? TailVerdict::Heavier : TailVerdict::Lighter;
}

}  // namespace

std::optional<double> TailClassification::k(std::string_view name) const {
  for (const auto& kv : k_values) {
    if (kv.name == name) return kv.value;
  }
  return std::nullopt;
}

std::string_view rigby_type_name(RigbyType type) {
  switch (type) {
    case RigbyType::I: return "I";
    case RigbyType::II: return "II";
    case RigbyType::III: return "III";
    case RigbyType::BoundedSupport: return "bounded";
  }
  return "?";
}

std::string_view verdict_name(TailVerdict verdict) {
  switch (verdict) {
    case TailVerdict::Heavier: return "heavier";
    case TailVerdict::EqualFirstOrder: return "equal_first_order";
    case TailVerdict::Lighter: return "lighter";
  }
  return "?";
}

std::string_view comparison_name(TailComparison comparison) {
  switch (comparison) {
    case TailComparison::AHeavier: return "a_heavier";
    case TailComparison::BHeavier: return "b_heavier";
    case TailComparison::TieUnresolved: return "tie_unresolved";
  }
  return "?";
}

double tail_index(const DistributionSpec& spec) {
  if (spec.family() == Family::GEV && spec.param(2) > 0.0) return spec.param(2);
  return 0.0;
}

TailClassification rigby_classify(const DistributionSpec& spec) {
  TailClassification c;
  c.family = spec.family();
  c.tail_index = tail_index(spec);
  const double sigma = spec.sigma();
  auto type_two = [&](double k4) {
    c.rigby_type = RigbyType::II;
    c.k_values = {{"k3", 1.0}, {"k4", k4}};
    c.verdict_vs_gumbel = compare_rate(k4, sigma);
  };
  switch (spec.family()) {
    case Family::GEV: {
      const double a = spec.param(2);
      if (a > 0.0) {
        c.rigby_type = RigbyType::I;
        c.k_values = {{"k1", 1.0}, {"k2", 1.0 + 1.0 / a}};
        c.verdict_vs_gumbel = TailVerdict::Heavier;
      } else if (a < 0.0) {
        c.rigby_type = RigbyType::BoundedSupport;
        c.k_values = {{"endpoint", spec.mu() - sigma / a}};
        c.verdict_vs_gumbel = TailVerdict::Lighter;
      } else {
        type_two(1.0 / sigma);
      }
      break;
    }
    case Family::EV: type_two(1.0 / sigma); break;
    case Family::TEV: {
      type_two(1.0 / sigma);
      const double a = spec.param(2);
      if (a < 0.0) {
        c.second_order = TailVerdict::Heavier;
      } else if (a > 0.0) {
        c.second_order = TailVerdict::Lighter;
      } else {
        c.second_order = TailVerdict::EqualFirstOrder;
        c.note = "alpha = 0 is the Gumbel law";
      }
      break;
    }
    case Family::GTIEV3:
      type_two(1.0 / sigma);
      c.second_order = TailVerdict::Lighter;
      break;
    case Family::EGu:
    case Family::EGa:
    case Family::GGu:
    case Family::GLIV: type_two(spec.param(2) / sigma); break;
    case Family::TCEV: {
      const double s1 = spec.param(3);
      type_two(1.0 / std::max(sigma, s1));
      if (close(s1, sigma)) {
        c.second_order = TailVerdict::EqualFirstOrder;
        c.note = "equal component scales: second-order comparison unresolved";
      } else {
        c.second_order = TailVerdict::Heavier;
      }
      break;
    }
  }
  return c;
}

TailClassification type_one_tail(double k1, double k2) {
  if (!(k1 > 0.0 && k2 > 0.0)) throw DomainError("type_one_tail: k1 and k2 must be positive");
  TailClassification c;
  c.rigby_type = RigbyType::I;
  c.k_values = {{"k1", k1}, {"k2", k2}};
  c.tail_index = k1 == 1.0 && k2 > 1.0 ? 1.0 / (k2 - 1.0) : 0.0;
  c.verdict_vs_gumbel = TailVerdict::Heavier;
  return c;
}

TailComparison compare_right_tails(const TailClassification& a, const TailClassification& b) {
  const int ra = type_rank(a.rigby_type), rb = type_rank(b.rigby_type);
  if (ra != rb) return ra < rb ? TailComparison::AHeavier : TailComparison::BHeavier;
  auto by_smaller = [](double x, double y) -> std::optional<TailComparison> {
    if (close(x, y)) return std::nullopt;
    return x < y ? TailComparison::AHeavier : TailComparison::BHeavier;
  };
  switch (a.rigby_type) {
    case RigbyType::I: {
      if (auto r = by_smaller(*a.k("k1"), *b.k("k1"))) return *r;
      if (auto r = by_smaller(*a.k("k2"), *b.k("k2"))) return *r;
      return TailComparison::TieUnresolved;
    }
    case RigbyType::II: {
      if (auto r = by_smaller(*a.k("k3"), *b.k("k3"))) return *r;
      if (auto r = by_smaller(*a.k("k4"), *b.k("k4"))) return *r;
      const int sa = verdict_score(a.second_order), sb = verdict_score(b.second_order);
      if (sa != sb) return sa > sb ? TailComparison::AHeavier : TailComparison::BHeavier;
      return TailComparison::TieUnresolved;
    }
    case RigbyType::III: {
      if (auto r = by_smaller(*a.k("k5"), *b.k("k5"))) return *r;
      if (auto r = by_smaller(*a.k("k6"), *b.k("k6"))) return *r;
      return TailComparison::TieUnresolved;
    }
    case RigbyType::BoundedSupport: {
      const double ea = *a.k("endpoint"), eb = *b.k("endpoint");
      if (close(ea, eb)) return TailComparison::TieUnresolved;
      return ea > eb ? TailComparison::AHeavier : TailComparison::BHeavier;
    }
  }
  return TailComparison::TieUnresolved;
}

TailComparison compare_right_tails(const DistributionSpec& a, const DistributionSpec& b) {
  return compare_right_tails(rigby_classify(a), rigby_classify(b));
}

double survival_ratio(const DistributionSpec& spec, double t, double x) {
  const double st = survival(spec, t);
  if (!(st > 0.0)) throw DomainError("survival_ratio: survival at t is zero");
  return survival(spec, t * x) / st;
}

}  // namespace evdkit
