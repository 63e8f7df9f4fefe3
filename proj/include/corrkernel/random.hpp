#pragma once

#include <cstdint>

#include "corrkernel/distribution.hpp"
#include "corrkernel/feature.hpp"

namespace corrkernel {

// SplitMix64 (Steele/Lea/Flood 2014 reference constants). Chosen because the
// algorithm is fully specified by these few lines, so seeded fixtures are
// reproducible across platforms and languages without trusting any library's
// engine.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Deterministic positive random table, entries 0.05 + U[0,1) normalized to
// unit mass. Labels are x0..x{nx-1} / y0..y{ny-1}. Requires nx, ny >= 2.
JointDistribution seeded_random_joint(std::uint64_t seed, int nx, int ny);

// Random joint with Y-labels ("1","-1") and both column masses exactly 1/2.
JointDistribution seeded_random_balanced_binary(std::uint64_t seed, int nx);

// dim x |alphabet| table with entries uniform in [lo, hi).
Feature seeded_random_feature(std::uint64_t seed, const Alphabet& alphabet, int dim,
                              double lo = -1.0, double hi = 1.0);

}  // namespace corrkernel
