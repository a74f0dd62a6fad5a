#include <gtest/gtest.h>

#include <cmath>

#include "rsdensity/dseries.hpp"
#include "rsdensity/error.hpp"
#include "rsdensity/rng.hpp"

namespace {

using rsd::Complex;
using rsd::FamilySeries;
using rsd::LocalSeries;

LocalSeries series(std::vector<Complex> c) { return LocalSeries(2, std::move(c)); }

void expect_coeffs(const LocalSeries& s, const std::vector<double>& expected, double tol) {
  ASSERT_EQ(s.truncation() + 1, static_cast<int>(expected.size()));
  for (int k = 0; k <= s.truncation(); ++k) {
    EXPECT_NEAR(s[k].real(), expected[static_cast<std::size_t>(k)], tol) << "k=" << k;
    EXPECT_NEAR(s[k].imag(), 0.0, tol) << "k=" << k;
  }
}

LocalSeries random_series(rsd::Rng& rng, int K, double bound) {
  auto s = LocalSeries::zero(2, K);
  for (int k = 0; k <= K; ++k) s[k] = {rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
  return s;
}

TEST(LocalSeries, CauchyProductOfOnePlusX) {
  expect_coeffs(rsd::mul(series({1, 1, 0}), series({1, 1, 0})), {1, 2, 1}, 0.0);
}

TEST(LocalSeries, UnitIsMultiplicativeIdentity) {
  rsd::Rng rng(1);
  const auto a = random_series(rng, 5, 2.0);
  EXPECT_EQ(rsd::mul(a, LocalSeries::unit(2, 5)), a);
}

TEST(LocalSeries, GeometricTimesOneMinusX) {
  expect_coeffs(rsd::mul(LocalSeries::geometric(2, 5, 1.0), series({1, -1, 0, 0, 0, 0})), {1, 0, 0, 0, 0, 0}, 0.0);
}

TEST(LocalSeries, MismatchedPrimeOrTruncationIsRejected) {
  EXPECT_THROW(rsd::mul(LocalSeries::unit(2, 3), LocalSeries::unit(3, 3)), rsd::InputError);
  EXPECT_THROW(rsd::mul(LocalSeries::unit(2, 3), LocalSeries::unit(2, 4)), rsd::InputError);
  EXPECT_THROW(rsd::add(LocalSeries::unit(2, 3), LocalSeries::unit(2, 4)), rsd::InputError);
  EXPECT_THROW(LocalSeries::zero(2, -1), rsd::InputError);
}

TEST(LocalSeries, MercatorSeries) {
  expect_coeffs(rsd::log_series(series({1, 1, 0, 0})), {0, 1, -0.5, 1.0 / 3.0}, 1e-15);
}

TEST(LocalSeries, ExpOfZeroIsUnit) { expect_coeffs(rsd::exp_series(LocalSeries::zero(2, 4)), {1, 0, 0, 0, 0}, 0.0); }

TEST(LocalSeries, ExpLogOfGeometricSeries) {
  const auto g = LocalSeries::geometric(2, 6, 0.5);
  expect_coeffs(rsd::exp_series(rsd::log_series(g)), {1, .5, .25, .125, .0625, .03125, .015625}, 1e-15);
}

TEST(LocalSeries, ConstantTermPreconditions) {
  EXPECT_THROW(rsd::log_series(series({2, 1})), rsd::InputError);
  EXPECT_THROW(rsd::exp_series(series({1e-6, 1})), rsd::InputError);
  EXPECT_NO_THROW(rsd::log_series(series({1.0 + 1e-13, 1})));
}

TEST(LocalSeriesProperty, MulAssociativeAndCommutative) {
  rsd::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int K = static_cast<int>(rng.uniform_int(0, 10));
    const auto a = random_series(rng, K, 1.0);
    const auto b = random_series(rng, K, 1.0);
    const auto c = random_series(rng, K, 1.0);
    const auto ab_c = rsd::mul(rsd::mul(a, b), c);
    const auto a_bc = rsd::mul(a, rsd::mul(b, c));
    const auto ab = rsd::mul(a, b);
    const auto ba = rsd::mul(b, a);
    for (int k = 0; k <= K; ++k) {
      EXPECT_LE(std::abs(ab_c[k] - a_bc[k]), 1e-12);
      EXPECT_LE(std::abs(ab[k] - ba[k]), 1e-12);
    }
  }
}

TEST(LocalSeriesProperty, ExpInvertsLog) {
  rsd::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int K = static_cast<int>(rng.uniform_int(1, 12));
    auto a = random_series(rng, K, 1.0);
    a[0] = 1.0;
    const auto back = rsd::exp_series(rsd::log_series(a));
    for (int k = 0; k <= K; ++k) EXPECT_LE(std::abs(back[k] - a[k]), 1e-10) << "K=" << K << " k=" << k;
  }
}

FamilySeries constant_grid(std::size_t F, const LocalSeries& s) {
  return FamilySeries(F, std::vector<LocalSeries>(F * F, s));
}

TEST(PsdCheck, OneByOneGeometric) {
  const auto r = rsd::psd_check(constant_grid(1, LocalSeries::geometric(2, 4, 1.0)), 3, 1e-9);
  EXPECT_DOUBLE_EQ(r.min_eigenvalue, 1.0);
  EXPECT_TRUE(r.pass);
}

TEST(PsdCheck, AllOnesRankOne) {
  const auto r = rsd::psd_check(constant_grid(2, LocalSeries::geometric(2, 4, 1.0)), 1, 1e-9);
  EXPECT_NEAR(r.min_eigenvalue, 0.0, 1e-15);
  EXPECT_NEAR(r.trace, 2.0, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(PsdCheck, IndefiniteMatrixFails) {
  const FamilySeries fs(2, {series({1, 1}), series({1, 2}), series({1, 2}), series({1, 1})});
  const auto r = rsd::psd_check(fs, 1, 1e-9);
  EXPECT_NEAR(r.min_eigenvalue, -1.0, 1e-14);
  EXPECT_FALSE(r.pass);
}

TEST(PsdCheck, RejectsNonHermitianGridAndBadDegree) {
  const FamilySeries fs(2, {series({1, 1}), series({1, Complex(0, 1)}), series({1, Complex(0, 1)}), series({1, 1})});
  EXPECT_THROW(rsd::psd_check(fs, 1, 1e-9), rsd::InputError);
  EXPECT_THROW(rsd::psd_check(fs, 2, 1e-9), rsd::InputError);
  EXPECT_THROW(rsd::psd_check(fs, -1, 1e-9), rsd::InputError);
}

TEST(PsdCheck, ToleranceScalesWithTrace) {
  // diag(1000, -1e-7): fails with an absolute 1e-9 but passes relative to trace.
  rsd::ComplexMatrix m(2);
  m(0, 0) = 1000.0;
  m(1, 1) = -1e-7;
  EXPECT_TRUE(rsd::psd_check(m, 1e-9).pass);
  m(1, 1) = -1e-5;
  EXPECT_FALSE(rsd::psd_check(m, 1e-9).pass);
}

TEST(PsdProperty, PositiveCombinationsOfRankOneTermsPass) {
  rsd::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto F = static_cast<std::size_t>(rng.uniform_int(1, 6));
    const int K = static_cast<int>(rng.uniform_int(1, 8));
    const auto fs = rsd::random_psd_family(F, 3, K, 3, rng);
    EXPECT_LE(fs.hermitian_defect(), 1e-12);
    for (int k = 0; k <= K; ++k) EXPECT_TRUE(rsd::psd_check(fs, k, 1e-9).pass);
  }
}

TEST(ClosureSuite, RankOneSquareAndZeroScaling) {
  const std::vector<Complex> w = {{1, 2}, {-0.5, 0.3}, {0, -1}};
  std::vector<LocalSeries> grid;
  for (const auto& wi : w)
    for (const auto& wj : w) grid.push_back(series({0, wi * std::conj(wj), 0, 0}));
  const FamilySeries fs(3, grid);
  const auto prod = rsd::hadamard(fs, fs);
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(rsd::psd_check(prod, k, 1e-12).pass);
  const auto zero = rsd::scale(fs, 0.0);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(rsd::psd_check(zero, k, 0.0).min_eigenvalue, 0.0);
}

TEST(ClosureSuite, RandomPairsHaveNoFailures) {
  rsd::Rng rng(42);
  const auto fs1 = rsd::random_psd_family(5, 2, 6, 3, rng);
  const auto fs2 = rsd::random_psd_family(5, 2, 6, 3, rng);
  const auto report = rsd::psd_closure_suite(fs1, fs2, 100, 42);
  EXPECT_EQ(report.failures, 0);
  ASSERT_EQ(report.records.size(), 4u);
  EXPECT_EQ(report.records[0].construction, "scale");
  EXPECT_EQ(report.records[0].checks, 101 * 7);
}

TEST(ClosureSuite, ReportsFailuresOnIndefiniteInput) {
  const FamilySeries bad(2, {series({1, 1}), series({1, 2}), series({1, 2}), series({1, 1})});
  const auto report = rsd::psd_closure_suite(bad, bad, 1, 0);
  EXPECT_GT(report.failures, 0);
}

}  // namespace
