#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evdkit/random.hpp"

namespace evdkit {

/// The nine identifiable generalizations of the maximum Gumbel law.
enum class Family { EV, GEV, EGu, TEV, GTIEV3, EGa, GGu, GLIV, TCEV };

inline constexpr std::array<Family, 9> kAllFamilies = {
    Family::EV,  Family::GEV, Family::EGu,  Family::TEV,  Family::GTIEV3,
    Family::EGa, Family::GGu, Family::GLIV, Family::TCEV};

std::string_view family_name(Family family);

/// Case-insensitive lookup ("ev", "GEV", "gtiev3", ...).
std::optional<Family> parse_family(std::string_view name);

/// EV 2; GEV, EGu, TEV, GTIEV3, EGa, GGu 3; GLIV 4; TCEV 5.
std::size_t parameter_count(Family family);

/// Parameter labels in storage order. Location and scale always come first;
/// TCEV stores (mu, sigma, mu1, sigma1, alpha).
std::vector<std::string> parameter_names(Family family);

/// Throws InvalidSpecError when `params` is outside the identifiable
/// parameter space of `family`.
void validate_parameters(Family family, std::span<const double> params);
bool parameters_valid(Family family, std::span<const double> params) noexcept;

/// A family tag with a validated parameter vector. Immutable.
class DistributionSpec {
 public:
  DistributionSpec(Family family, std::vector<double> params);

  static DistributionSpec ev(double mu, double sigma);
  static DistributionSpec gev(double mu, double sigma, double alpha);
  static DistributionSpec egu(double mu, double sigma, double alpha);
  static DistributionSpec tev(double mu, double sigma, double alpha);
  static DistributionSpec gtiev3(double mu, double sigma, double alpha);
  static DistributionSpec ega(double mu, double sigma, double alpha);
  static DistributionSpec ggu(double mu, double sigma, double alpha);
  static DistributionSpec gliv(double mu, double sigma, double alpha, double beta);
  static DistributionSpec tcev(double mu, double sigma, double mu1, double sigma1, double alpha);

  [[nodiscard]] Family family() const noexcept { return family_; }
  [[nodiscard]] std::span<const double> params() const noexcept { return params_; }
  [[nodiscard]] double param(std::size_t i) const { return params_.at(i); }
  [[nodiscard]] double mu() const noexcept { return params_[0]; }
  [[nodiscard]] double sigma() const noexcept { return params_[1]; }

  bool operator==(const DistributionSpec&) const = default;

 private:
  Family family_;
  std::vector<double> params_;
};

std::string to_string(const DistributionSpec& spec);

double pdf(const DistributionSpec& spec, double x);
double log_pdf(const DistributionSpec& spec, double x);
double cdf(const DistributionSpec& spec, double x);
/// 1 - cdf, evaluated without cancellation in the right tail.
double survival(const DistributionSpec& spec, double x);

/// Closed form where one exists; otherwise a bracketed Brent search on the
/// cdf (tolerance 1e-10 on the probability scale). p must lie in (0, 1).
double quantile(const DistributionSpec& spec, double p);

/// n i.i.d. draws; deterministic for a fixed seed.
std::vector<double> sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed);
std::vector<double> sample(const DistributionSpec& spec, std::size_t n, Rng& rng);
double draw(const DistributionSpec& spec, Rng& rng);

/// Moments of the distribution. Entries are empty where they do not exist
/// (GEV: mean for alpha < 1, variance < 1/2, skewness < 1/3, kurtosis < 1/4).
struct MomentSummary {
  std::optional<double> mean;
  std::optional<double> variance;
  std::optional<double> skewness;
  std::optional<double> kurtosis;
};

MomentSummary moments(const DistributionSpec& spec);

struct NamedSpec {
  std::string label;
  DistributionSpec spec;
};

/// Simulation-study generators: EV(0,1), GEV(0,1,0.1), EGu(0,1,0.7),
/// TEV(0,1,-0.99), EGa(0,1,0.7), GGu(0,1,0.7), GLIV(0,1,0.65,15),
/// TCEV(0,1,10,5,0.0016).
std::vector<NamedSpec> table3_presets();

/// Alternate generator set: EGu/EGa alpha 0.6, GLIV(0,1,0.55,10),
/// TCEV alpha 0.0125; the remaining generators as in table3_presets().
std::vector<NamedSpec> supplement_presets();

namespace detail {

// Unvalidated evaluation used inside likelihood loops. Returns -inf (or NaN)
// instead of throwing when the parameters are unusable.
double log_pdf_unchecked(Family family, std::span<const double> params, double x) noexcept;
double cdf_unchecked(Family family, std::span<const double> params, double x);
double survival_unchecked(Family family, std::span<const double> params, double x);
double quantile_unchecked(Family family, std::span<const double> params, double p);

}  // namespace detail

}  // namespace evdkit
