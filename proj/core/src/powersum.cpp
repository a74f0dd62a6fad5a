#include "rsdensity/powersum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rsdensity/error.hpp"
#include "rsdensity/rng.hpp"

namespace rsd {

namespace {

void require_valid(const PowerSumInstance& inst) {
  if (inst.z.empty()) throw InputError("power sum needs at least one z_j");
  if (inst.M < 1) throw InputError("power sum window needs M >= 1");
}

double max_abs(const std::vector<Complex>& z) {
  double m = 0.0;
  for (const auto& x : z) m = std::max(m, std::abs(x));
  return m;
}

// |sum_j z_j^k| for k = M+1..M+N. A single nonzero term is evaluated as
// |z|^k.
std::vector<double> window_values(const std::vector<Complex>& z, std::int64_t M) {
  const auto N = static_cast<std::int64_t>(z.size());
  const auto nonzero = std::count_if(z.begin(), z.end(), [](const Complex& x) { return x != Complex(0.0); });
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(N));
  if (nonzero <= 1) {
    const double r = max_abs(z);
    for (std::int64_t k = M + 1; k <= M + N; ++k) out.push_back(std::pow(r, static_cast<double>(k)));
    return out;
  }
  std::vector<Complex> power(z.size(), 1.0);
  for (std::int64_t k = 1; k <= M + N; ++k) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      power[j] *= z[j];
      sum += power[j];
    }
    if (k > M) out.push_back(std::abs(sum));
  }
  return out;
}

}  // namespace

TuranMax turan_lhs(const PowerSumInstance& inst) {
  require_valid(inst);
  const auto values = window_values(inst.z, inst.M);
  TuranMax best{inst.M + 1, values.front()};
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > best.value) best = {inst.M + 1 + static_cast<std::int64_t>(i), values[i]};
  }
  return best;
}

double turan_ratio(const PowerSumInstance& inst) {
  require_valid(inst);
  const double scale = max_abs(inst.z);
  if (scale == 0.0) throw InputError("turan_ratio: all z_j are zero");
  const auto nonzero = std::count_if(inst.z.begin(), inst.z.end(), [](const Complex& x) { return x != Complex(0.0); });
  // One nonzero term: |z|^k / |z|^k cancels exactly.
  if (nonzero == 1) return std::pow(static_cast<double>(inst.M), static_cast<double>(inst.N()));
  const auto best = turan_lhs(inst);
  // Evaluate |sum (z_j / max|z|)^{k*}| to stay clear of under/overflow.
  std::vector<Complex> normalized(inst.z);
  for (auto& x : normalized) x /= scale;
  const auto values = window_values(normalized, best.k_star - 1);
  return values.front() * std::pow(static_cast<double>(inst.M), static_cast<double>(inst.N()));
}

std::vector<std::int64_t> default_turan_m_range() { return {1, 2, 4, 8, 16, 32, 64}; }

TuranSweepReport turan_sweep(std::int64_t N, const std::vector<std::int64_t>& M_range, std::int64_t trials,
                             std::uint64_t seed) {
  if (N < 1) throw InputError("turan sweep needs N >= 1");
  if (trials < 1) throw InputError("turan sweep needs trials >= 1");
  if (M_range.empty()) throw InputError("turan sweep needs a nonempty M range");
  TuranSweepReport report{seed, trials, {}};
  for (const auto M : M_range) {
    if (M < 1) throw InputError("turan sweep needs M >= 1");
    TuranCell cell{N, M, std::numeric_limits<double>::infinity(), {}};
    const auto cell_seed = derive_seed(seed, static_cast<std::uint64_t>(M));
    for (std::int64_t t = 0; t < trials; ++t) {
      Rng rng(derive_seed(cell_seed, static_cast<std::uint64_t>(t)));
      std::vector<Complex> z(static_cast<std::size_t>(N));
      for (auto& x : z) {
        const double radius = std::sqrt(rng.uniform01());
        const double angle = 2.0 * std::numbers::pi * rng.uniform01();
        x = std::polar(radius, angle);
      }
      const double m = max_abs(z);
      if (m == 0.0) continue;
      for (auto& x : z) x /= m;
      const double ratio = turan_ratio({z, M});
      if (ratio < cell.min_ratio) {
        cell.min_ratio = ratio;
        cell.argmin = z;
      }
    }
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace rsd
