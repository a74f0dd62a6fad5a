#pragma once

#include <cstdint>
#include <random>

namespace rsd {

// Seeded generator used by every sampler in the library.
//
// Engine: std::mt19937_64 seeded directly with the 64-bit seed. The engine's
// output sequence is fixed by the C++ standard, so it reproduces across
// standard libraries. Doubles are derived by hand instead of through
// std::uniform_real_distribution, whose algorithm is implementation-defined:
//
//   uniform01() = (next() >> 11) * 2^-53        in [0, 1)
//   uniform(a, b) = a + (b - a) * uniform01()
//
// Per-item streams (trials, sweep cells) use derive_seed(seed, index), a
// SplitMix64 finalizer over seed + golden-ratio * (index + 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  // Uniform integer in [lo, hi] (inclusive); modulo bias is negligible for the
  // small ranges used here.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace rsd
