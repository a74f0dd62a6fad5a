#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rsdensity/error.hpp"
#include "rsdensity/powersum.hpp"
#include "rsdensity/rng.hpp"

namespace {

using rsd::Complex;
using rsd::PowerSumInstance;

// Window maximum by repeated multiplication, for comparison with turan_lhs.
std::pair<std::int64_t, double> enumerate_window(const PowerSumInstance& inst) {
  std::int64_t best_k = 0;
  double best = -1.0;
  for (std::int64_t k = inst.M + 1; k <= inst.M + inst.N(); ++k) {
    Complex s = 0.0;
    for (const auto& z : inst.z) {
      Complex p = 1.0;
      for (std::int64_t i = 0; i < k; ++i) p *= z;
      s += p;
    }
    if (std::abs(s) > best) {
      best = std::abs(s);
      best_k = k;
    }
  }
  return {best_k, best};
}

TEST(TuranLhs, Examples) {
  auto r = rsd::turan_lhs({{1.0}, 3});
  EXPECT_EQ(r.k_star, 4);
  EXPECT_DOUBLE_EQ(r.value, 1.0);

  r = rsd::turan_lhs({{1.0, -1.0}, 1});
  EXPECT_EQ(r.k_star, 2);
  EXPECT_DOUBLE_EQ(r.value, 2.0);

  r = rsd::turan_lhs({{0.5, Complex(0, 0.5)}, 2});
  EXPECT_EQ(r.k_star, 3);
  EXPECT_NEAR(r.value, 0.1767767, 1e-7);
}

TEST(TuranLhs, TiesGoToSmallestK) {
  const auto r = rsd::turan_lhs({{1.0, 1.0}, 1});
  EXPECT_EQ(r.k_star, 2);
  EXPECT_DOUBLE_EQ(r.value, 2.0);
}

TEST(TuranLhs, Errors) {
  EXPECT_THROW(rsd::turan_lhs({{}, 1}), rsd::InputError);
  EXPECT_THROW(rsd::turan_lhs({{1.0}, 0}), rsd::InputError);
}

TEST(TuranRatio, Examples) {
  EXPECT_EQ(rsd::turan_ratio({{2.0}, 5}), 5.0);
  EXPECT_DOUBLE_EQ(rsd::turan_ratio({{1.0, -1.0}, 1}), 2.0);
  EXPECT_DOUBLE_EQ(rsd::turan_ratio({{1.0, 1.0}, 1}), 2.0);
  EXPECT_THROW(rsd::turan_ratio({{0.0, 0.0}, 1}), rsd::InputError);
}

TEST(TuranProperty, MatchesEnumerationAndIsPositive) {
  rsd::Rng rng(77);
  for (int trial = 0; trial < 10000; ++trial) {
    PowerSumInstance inst;
    inst.M = rng.uniform_int(1, 64);
    const auto N = rng.uniform_int(1, 5);
    for (std::int64_t j = 0; j < N; ++j) {
      const double radius = rng.uniform(0.0, 1.5);
      const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
      inst.z.push_back(std::polar(radius, angle));
    }
    EXPECT_GT(rsd::turan_ratio(inst), 0.0) << "trial " << trial;
    if (trial % 20 == 0) {
      const auto [k, v] = enumerate_window(inst);
      const auto got = rsd::turan_lhs(inst);
      EXPECT_NEAR(got.value, v, 1e-9 * std::max(v, 1e-300) + 1e-300);
    }
  }
}

TEST(TuranProperty, SingleTermRatioIsExactlyM) {
  rsd::Rng rng(78);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto M = rng.uniform_int(1, 64);
    const Complex z = std::polar(rng.uniform(0.01, 3.0), rng.uniform(0.0, 6.0));
    EXPECT_EQ(rsd::turan_ratio({{z}, M}), static_cast<double>(M));
  }
}

TEST(TuranProperty, RatioInvariantUnderRotation) {
  rsd::Rng rng(79);
  for (int trial = 0; trial < 500; ++trial) {
    PowerSumInstance inst;
    inst.M = rng.uniform_int(1, 32);
    const auto N = rng.uniform_int(1, 5);
    for (std::int64_t j = 0; j < N; ++j) inst.z.push_back({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    auto rotated = inst;
    const Complex u = std::polar(1.0, rng.uniform(0.0, 6.0));
    for (auto& z : rotated.z) z *= u;
    const double a = rsd::turan_ratio(inst);
    const double b = rsd::turan_ratio(rotated);
    EXPECT_NEAR(a, b, 1e-9 * a);
  }
}

TEST(TuranSweep, Examples) {
  const auto one = rsd::turan_sweep(1, {1, 3, 17}, 5, 1);
  ASSERT_EQ(one.cells.size(), 3u);
  EXPECT_EQ(one.cells[0].min_ratio, 1.0);
  EXPECT_EQ(one.cells[1].min_ratio, 3.0);
  EXPECT_EQ(one.cells[2].min_ratio, 17.0);

  const auto two = rsd::turan_sweep(2, {4}, 1000, 7);
  EXPECT_GT(two.cells.at(0).min_ratio, 0.0);
  EXPECT_EQ(two.cells[0].argmin.size(), 2u);
  EXPECT_DOUBLE_EQ(rsd::turan_ratio({two.cells[0].argmin, 4}), two.cells[0].min_ratio);
}

TEST(TuranSweep, Deterministic) {
  const auto a = rsd::turan_sweep(3, rsd::default_turan_m_range(), 1, 11);
  const auto b = rsd::turan_sweep(3, rsd::default_turan_m_range(), 1, 11);
  ASSERT_EQ(a.cells.size(), 7u);
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    EXPECT_EQ(a.cells[i].min_ratio, b.cells[i].min_ratio);
    EXPECT_EQ(a.cells[i].argmin, b.cells[i].argmin);
  }
  EXPECT_NE(rsd::turan_sweep(3, {4}, 10, 12).cells[0].min_ratio, rsd::turan_sweep(3, {4}, 10, 13).cells[0].min_ratio);
}

TEST(TuranSweep, SamplesLieInUnitDiscWithUnitMaximum) {
  const auto r = rsd::turan_sweep(4, {2, 8}, 50, 3);
  for (const auto& cell : r.cells) {
    double mx = 0.0;
    for (const auto& z : cell.argmin) mx = std::max(mx, std::abs(z));
    EXPECT_NEAR(mx, 1.0, 1e-15);
  }
}

}  // namespace
