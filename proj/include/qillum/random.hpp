#pragma once

// Seeded sampling for the randomized checks. The generator is the 64-bit
// linear congruential recurrence
//   x <- 6364136223846793005 x + 1442695040888963407 (mod 2^64)
// and a uniform double in [0, 1) is (x >> 11) * 2^-53, so any
// implementation of the same recurrence draws the same samples.

#include <cstdint>

#include "qillum/states.hpp"

namespace qillum {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t state_;
};

/// Uniform on the cube [-1, 1]^3, rejected until physical.
CorrelationVector random_physical_state(Lcg& rng);

/// Uniform on the cube, rejected until at least two components exceed
/// min_component in magnitude.
CorrelationVector random_direction(Lcg& rng, double min_component = 1e-3);

}  // namespace qillum
