#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "evdkit/distribution.hpp"

namespace evdkit {

/// Published four- and five-parameter Gumbel generalizations that are
/// overparameterized (or collapse on a slice) and therefore reduce to one
/// of the identifiable families.
enum class NonIdentifiableFamily {
  KumGum,     ///< (mu, sigma, alpha, beta) -> EGu
  GTIEV,      ///< (mu, sigma, alpha, beta) -> GTIEV3
  ExpGama,    ///< (mu, sigma, alpha, beta) -> EGa
  EGGu,       ///< (mu, sigma, alpha, beta), alpha = 1 -> EV
  BG,         ///< (mu, sigma, alpha, beta), beta = 1 -> EV
  KBGGu,      ///< (mu, sigma, alpha, beta, gamma), beta = 1, gamma = 0 -> EV
};

std::string_view family_name(NonIdentifiableFamily family);
std::optional<NonIdentifiableFamily> parse_nonidentifiable_family(std::string_view name);
std::size_t parameter_count(NonIdentifiableFamily family);

/// The identifiable spec whose cdf equals the source cdf everywhere.
/// Throws DomainError for parameters outside the source parameter space or,
/// for EGGu/BG/KBGGu, off the collapsing slice.
DistributionSpec reduce_to_identifiable(NonIdentifiableFamily family,
                                        std::span<const double> params);

/// cdf of the source family evaluated from its own definition (no
/// reparameterization). KBGGu off the gamma = 0, beta = 1 slice uses
/// adaptive quadrature.
double nonidentifiable_cdf(NonIdentifiableFamily family, std::span<const double> params, double x);

}  // namespace evdkit
