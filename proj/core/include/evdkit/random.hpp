#pragma once

#include <cstdint>
#include <random>

namespace evdkit {

/// Mixes a base seed with stream coordinates (splitmix64 finalizer), so
/// replicate r of cell g gets the same stream regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// Seeded generator with portable variate algorithms. Only the raw 64-bit
/// engine comes from the standard library; uniform, normal and gamma draws
/// are implemented here so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on the open interval (0, 1).
  double uniform();

  double normal();

  /// ln Y for Y ~ gamma(shape, 1). Working on the log scale keeps tiny
  /// shapes (where Y underflows) usable.
  double log_gamma_variate(double shape);

  double gamma_variate(double shape);

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace evdkit
