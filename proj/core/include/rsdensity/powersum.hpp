#pragma once

// Turan's second theorem for power sums: the maximum of |sum_j z_j^k| over
// a window of N consecutive exponents against max_j |z_j|^k.

#include <complex>
#include <cstdint>
#include <vector>

namespace rsd {

using Complex = std::complex<double>;

struct PowerSumInstance {
  std::vector<Complex> z;  // N = z.size()
  std::int64_t M = 1;      // window [M + 1, M + N]

  std::int64_t N() const { return static_cast<std::int64_t>(z.size()); }
};

struct TuranMax {
  std::int64_t k_star = 0;  // smallest maximizing exponent
  double value = 0.0;
};

// Throws InputError for an empty z or M < 1.
TuranMax turan_lhs(const PowerSumInstance& inst);

// value / (M^{-N} max_j |z_j|^{k_star}); throws InputError if every z_j is 0.
double turan_ratio(const PowerSumInstance& inst);

struct TuranCell {
  std::int64_t N = 1;
  std::int64_t M = 1;
  double min_ratio = 0.0;
  std::vector<Complex> argmin;  // instance attaining min_ratio
};

struct TuranSweepReport {
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  std::vector<TuranCell> cells;
};

// M = 1, 2, 4, ..., 64.
std::vector<std::int64_t> default_turan_m_range();

// For each M, `trials` instances with z_j uniform in the unit disc, rescaled
// so that max_j |z_j| = 1. Trial streams come from
// derive_seed(derive_seed(seed, M), trial).
TuranSweepReport turan_sweep(std::int64_t N, const std::vector<std::int64_t>& M_range, std::int64_t trials,
                             std::uint64_t seed);

}  // namespace rsd
