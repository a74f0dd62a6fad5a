#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rsdensity/analytic.hpp"
#include "rsdensity/error.hpp"
#include "rsdensity/rng.hpp"

namespace {

using rsd::Complex;
using rsd::SmoothKernel;

// int_0^inf x^{s-1} Phi(x) dx after x = e^t, trapezoid in t. Independent of
// any Gamma evaluation.
Complex mellin_quadrature(const SmoothKernel& phi, Complex s) {
  const double lo = -120.0;
  const double hi = 9.0;
  const double h = 2e-3;
  Complex acc = 0.0;
  const auto n = static_cast<int>((hi - lo) / h);
  for (int i = 0; i <= n; ++i) {
    const double t = lo + h * i;
    const double x = std::exp(t);
    const Complex f = std::exp(s * t) * phi(x);
    acc += (i == 0 || i == n ? 0.5 : 1.0) * f;
  }
  return acc * h;
}

TEST(LogGamma, Examples) {
  EXPECT_NEAR(std::abs(rsd::log_gamma(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(rsd::log_gamma(0.5).real(), 0.5723649429247001, 1e-14);
  EXPECT_NEAR(rsd::log_gamma(5.0).real(), std::log(24.0), 1e-14);
  EXPECT_NEAR(rsd::log_gamma(50.0).real(), std::lgamma(50.0), 1e-12 * std::lgamma(50.0));
}

TEST(LogGamma, MatchesLgammaOnRealAxis) {
  for (double x = 0.05; x < 50.0; x += 0.37) {
    const double want = std::lgamma(x);
    EXPECT_NEAR(rsd::log_gamma(x).real(), want, 1e-12 * std::max(1.0, std::abs(want))) << x;
  }
  for (double x = -9.7; x < 0.0; x += 0.61) {
    if (std::abs(x - std::round(x)) < 1e-3) continue;
    EXPECT_NEAR(std::abs(rsd::gamma(x)), std::exp(std::lgamma(x)), 1e-11 * std::exp(std::lgamma(x))) << x;
  }
}

TEST(LogGamma, PolesAreErrors) {
  EXPECT_THROW(rsd::log_gamma(0.0), rsd::InputError);
  EXPECT_THROW(rsd::log_gamma(-3.0), rsd::InputError);
  EXPECT_THROW(rsd::log_gamma(Complex(-3.0, 1e-10)), rsd::InputError);
  EXPECT_NO_THROW(rsd::log_gamma(Complex(-3.0, 1e-6)));
}

TEST(GammaR, Examples) {
  EXPECT_NEAR(rsd::gamma_r(2.0).real(), 1.0 / std::numbers::pi, 1e-14);
  EXPECT_NEAR(rsd::gamma_r(4.0).real(), 1.0 / (std::numbers::pi * std::numbers::pi), 1e-14);
  EXPECT_NEAR(rsd::gamma_r(1.0).real(), 1.0, 1e-14);
}

TEST(GammaProperty, Recurrence) {
  for (double re = -29.75; re <= 29.0; re += 0.5) {
    for (double im = -20.0; im <= 20.0; im += 2.5) {
      const Complex s(re, im);
      if (std::abs(s) > 30.0) continue;
      const Complex g1 = rsd::gamma(s + 1.0);
      EXPECT_LE(std::abs(g1 - s * rsd::gamma(s)), 1e-10 * std::abs(g1)) << s;
    }
  }
}

TEST(GammaProperty, Reflection) {
  for (double re = -14.8; re <= 15.0; re += 0.4) {
    for (double im = -1.5; im <= 1.5; im += 0.5) {
      const Complex s(re, im);
      if (im == 0.0 && std::abs(re - std::round(re)) < 1e-6) continue;
      const Complex v = rsd::gamma(s) * rsd::gamma(1.0 - s) * std::sin(std::numbers::pi * s) / std::numbers::pi;
      EXPECT_LE(std::abs(v - 1.0), 1e-10) << s;
    }
  }
}

TEST(Stirling, Examples) {
  EXPECT_NEAR(rsd::stirling_ratio(0.5, 50.0), 1.0, 0.01);
  EXPECT_THROW(rsd::stirling_ratio(0.5, 0.5), rsd::InputError);
}

TEST(StirlingProperty, GridEnvelope) {
  for (double sigma = -2.0; sigma <= 2.0; sigma += 0.25) {
    for (double t = 10.0; t <= 200.0; t += 0.25) {
      for (const double st : {t, -t}) {
        const double r = rsd::stirling_ratio(sigma, st);
        EXPECT_GE(r, 0.9);
        EXPECT_LE(r, 1.1);
        EXPECT_LE(std::abs(r - 1.0), 0.5 / t) << sigma << " " << st;
      }
    }
  }
}

TEST(GammaQuotient, Examples) {
  EXPECT_EQ(rsd::gamma_quotient(0.0, 0.0), Complex(0.0));
  const double r = rsd::gamma_quotient_ratio(Complex(0.25, 10.0), 0.0);
  EXPECT_GT(r, 0.0);
  EXPECT_LE(r, 10.0);
  // s = 1/2, z = 0: Gamma_R(1/2) / Gamma_R(1/2) = 1.
  EXPECT_NEAR(std::abs(rsd::gamma_quotient(0.5, 0.0) - 1.0), 0.0, 1e-14);
  EXPECT_THROW(rsd::gamma_quotient(Complex(0.99, 0.0), 0.0), rsd::InputError);
}

TEST(GammaQuotient, RatioBoundedOnGrid) {
  for (double sigma = -0.5; sigma <= 0.75; sigma += 0.25) {
    for (double t = -100.0; t <= 100.0; t += 5.0) {
      const double r = rsd::gamma_quotient_ratio(Complex(sigma, t), Complex(0.1, 0.0));
      EXPECT_TRUE(std::isfinite(r));
      EXPECT_LE(r, 10.0) << sigma << " " << t;
    }
  }
}

TEST(Mellin, Examples) {
  EXPECT_NEAR(rsd::mellin_kernel(SmoothKernel::gauss_power(1.0), 2.0).real(), std::sqrt(std::numbers::pi) / 4.0,
              1e-14);
  EXPECT_NEAR(rsd::mellin_kernel(SmoothKernel::gauss_power(0.0), 2.0).real(), 0.5, 1e-14);
  EXPECT_NEAR(rsd::mellin_kernel(SmoothKernel::sqrt_exp_power(0.0), 1.0).real(), 2.0, 1e-13);
  EXPECT_THROW(SmoothKernel::gauss_power(-1.5), rsd::InputError);
}

TEST(Mellin, GaussPowerMatchesQuadrature) {
  EXPECT_NEAR(mellin_quadrature(SmoothKernel::gauss_power(1.0), 2.0).real(), std::sqrt(std::numbers::pi) / 4.0,
              1e-10);
  rsd::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Complex beta(rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 1.0));
    const double target = rng.uniform(0.5, 6.0);
    const Complex s(target - beta.real(), rng.uniform(-5.0, 5.0));
    const auto k = SmoothKernel::gauss_power(beta);
    const Complex want = mellin_quadrature(k, s);
    EXPECT_LE(std::abs(rsd::mellin_kernel(k, s) - want), 1e-8 * std::abs(want)) << beta << " " << s;
  }
}

TEST(Mellin, SqrtExpMatchesQuadrature) {
  for (const double B : {0.0, 0.5, 1.5}) {
    const auto k = SmoothKernel::sqrt_exp_power(B);
    for (const Complex s : {Complex(1.0, 0.0), Complex(2.0, 3.0), Complex(0.5, -1.0)}) {
      const Complex want = mellin_quadrature(k, s);
      EXPECT_LE(std::abs(rsd::mellin_kernel(k, s) - want), 1e-8 * std::abs(want));
    }
  }
}

TEST(SmoothSum, DirectExamples) {
  const auto k = SmoothKernel::gauss_power(1.0);
  const auto ones = [](std::uint64_t) { return Complex(1.0); };
  EXPECT_NEAR(rsd::smooth_sum_direct(ones, 10.0, k).real(), 4.991667, 1e-3);
  EXPECT_NEAR(rsd::smooth_sum_direct(rsd::CoeffMap{{1, 1.0}}, 10.0, k).real(), 0.1 * std::exp(-0.01), 1e-15);
}

TEST(SmoothSum, ContourExamples) {
  const auto k = SmoothKernel::gauss_power(1.0);
  const rsd::ContourSpec spec;
  EXPECT_NEAR(rsd::smooth_sum_contour(rsd::CoeffMap{{1, 1.0}}, 10.0, k, spec).real(), 0.0990050, 1e-6);

  rsd::CoeffMap block;
  for (std::uint64_t m = 1; m <= 50; ++m) block[m] = 1.0;
  const Complex direct = rsd::smooth_sum_direct(block, 10.0, k);
  EXPECT_LE(std::abs(rsd::smooth_sum_contour(block, 10.0, k, spec) - direct), 1e-6 * std::abs(direct));
}

TEST(SmoothSum, ContourMatchesDirectOnRandomSeries) {
  rsd::Rng rng(55);
  const rsd::ContourSpec spec;
  for (int trial = 0; trial < 50; ++trial) {
    // Support inside [1, 4M] keeps the sum away from the Gaussian tail, where
    // a relative comparison is meaningless.
    const double M = rng.uniform(1.0, 100.0);
    const auto top = static_cast<std::int64_t>(std::ceil(4.0 * M));
    rsd::CoeffMap c;
    const auto support = rng.uniform_int(1, 60);
    for (std::int64_t i = 0; i < support; ++i) {
      c[static_cast<std::uint64_t>(rng.uniform_int(1, top))] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    const auto k = trial % 2 == 0 ? SmoothKernel::gauss_power(rng.uniform(0.0, 2.0))
                                  : SmoothKernel::sqrt_exp_power(rng.uniform(0.0, 2.0));
    const Complex direct = rsd::smooth_sum_direct(c, M, k);
    const Complex contour = rsd::smooth_sum_contour(c, M, k, spec);
    EXPECT_LE(std::abs(contour - direct), 1e-6 * std::abs(direct)) << "trial " << trial;
  }
}

TEST(SmoothSum, ContourPreconditions) {
  const auto k = SmoothKernel::gauss_power(1.0);
  const rsd::CoeffMap c{{1, 1.0}, {2, 1.0}};
  EXPECT_THROW(rsd::smooth_sum_contour(c, 10.0, k, {1.0, 60.0, 0.05}), rsd::InputError);
  EXPECT_THROW(rsd::smooth_sum_contour(c, 10.0, k, {2.0, 60.0, 1.0}), rsd::InputError);
  EXPECT_THROW(rsd::smooth_sum_contour(c, 10.0, k, {2.0, 3.0, 0.01}), rsd::NumericalError);
}

}  // namespace
