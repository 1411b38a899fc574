#include "curb/adapt/rng.hpp"

#include <limits>

#include "curb/error.hpp"

namespace curb::adapt {

std::uint64_t Rng::next() {
  ++draws_;
  return engine_();
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::Usage, "Rng::below(0)");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;
  std::uint64_t x = next();
  while (x > limit) x = next();
  return x % n;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

}  // namespace curb::adapt
