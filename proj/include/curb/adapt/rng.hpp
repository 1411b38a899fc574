#pragma once

#include <cstdint>
#include <random>

namespace curb::adapt {

/// Seeded generator with platform-independent draws: the engine is the
/// fully specified mt19937_64 and bounded draws use plain rejection instead
/// of the implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t draws() const noexcept { return draws_; }

  std::uint64_t next();
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [0, 1) with 53 bits.
  double unit();
  bool coin() { return below(2) == 1; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace curb::adapt
