#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evdkit/distribution.hpp"

namespace evdkit {

/// Rigby ordering of right tails by the asymptotic form of ln f(x):
/// type I  ~ -k2 (ln x)^k1, type II ~ -k4 x^k3, type III ~ -k6 exp(k5 x).
/// BoundedSupport marks a finite right endpoint (GEV with alpha < 0),
/// lighter than all three.
enum class RigbyType { I, II, III, BoundedSupport };

/// First-order comparison with the Gumbel law of the same scale.
enum class TailVerdict { Heavier, EqualFirstOrder, Lighter };

enum class TailComparison { AHeavier, BHeavier, TieUnresolved };

struct KValue {
  std::string name;  ///< "k1" ... "k6", or "endpoint" for bounded support
  double value = 0.0;
};

struct TailClassification {
  std::optional<Family> family;  ///< empty for hand-built reference tails
  double tail_index = 0.0;       ///< xi; may be +inf for slowly varying tails
  RigbyType rigby_type = RigbyType::II;
  std::vector<KValue> k_values;
  TailVerdict verdict_vs_gumbel = TailVerdict::EqualFirstOrder;
  /// Set when the first-order comparison ties and a second-order argument
  /// decides (TEV, GTIEV3, TCEV). TieUnresolved is reported as such.
  std::optional<TailVerdict> second_order;
  std::string note;

  [[nodiscard]] std::optional<double> k(std::string_view name) const;
};

std::string_view rigby_type_name(RigbyType type);
std::string_view verdict_name(TailVerdict verdict);
std::string_view comparison_name(TailComparison comparison);

/// alpha for GEV with alpha > 0, otherwise 0.
double tail_index(const DistributionSpec& spec);

TailClassification rigby_classify(const DistributionSpec& spec);

/// A Paretian reference tail, ln f ~ -k2 (ln x)^k1 (e.g. Cauchy: k1 = 1, k2 = 2).
TailClassification type_one_tail(double k1, double k2);

TailComparison compare_right_tails(const TailClassification& a, const TailClassification& b);
TailComparison compare_right_tails(const DistributionSpec& a, const DistributionSpec& b);

/// survival(t x) / survival(t), evaluated from the closed survival function.
double survival_ratio(const DistributionSpec& spec, double t, double x);

}  // namespace evdkit
