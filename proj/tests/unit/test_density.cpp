#include <gtest/gtest.h>

#include <cmath>

#include "rsdensity/density.hpp"
#include "rsdensity/error.hpp"
#include "rsdensity/ranksel.hpp"
#include "test_support.hpp"

namespace {

using rsd::Complex;

rsd::Family infty_family(const std::vector<double>& betas) {
  rsd::Family f;
  f.rank = 2;
  int i = 0;
  for (const double b : betas) {
    rsd::Representation r;
    r.id = "pi" + std::to_string(i++);
    r.archimedean.mu = {Complex(b, 0.2), Complex(-b, 0.2)};
    f.reps.push_back(r);
  }
  return f;
}

TEST(Exponents, Examples) {
  EXPECT_DOUBLE_EQ(rsd::exponent_lfn(3, 0.25), 3.0);
  EXPECT_LT(rsd::exponent_lfn(3, 0.5 - 1e-12), 1e-10);
  EXPECT_NEAR(rsd::exponent_lfn(5, 6.0 / 13.0), 5.0 / 12.0, 1e-12);
  EXPECT_NEAR(rsd::exponent_spectral(3, 0.3), 0.8, 1e-15);
  EXPECT_DOUBLE_EQ(rsd::exponent_spectral(2, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(rsd::exponent_spectral_summed(3, 0.25), 2.0);
  EXPECT_DOUBLE_EQ(rsd::exponent_rs(0.25), 0.5);
}

TEST(Exponents, Errors) {
  EXPECT_THROW(rsd::exponent_lfn(3, 0.0), rsd::InputError);
  EXPECT_THROW(rsd::exponent_lfn(3, 0.5), rsd::InputError);
  EXPECT_THROW(rsd::exponent_lfn(1, 0.2), rsd::InputError);
  EXPECT_THROW(rsd::exponent_spectral(3, -0.1), rsd::InputError);
  EXPECT_THROW(rsd::pointwise_threshold(1), rsd::InputError);
}

TEST(Exponents, LfnStrictlyDecreasing) {
  double prev = rsd::exponent_lfn(4, 0.01);
  for (int i = 1; i < 1000; ++i) {
    const double theta = 0.01 + 0.48 * i / 999.0;
    const double v = rsd::exponent_lfn(4, theta);
    EXPECT_LT(v, prev);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GE(v, 0.0);
    prev = v;
  }
}

TEST(PointwiseThreshold, Examples) {
  EXPECT_EQ(rsd::pointwise_threshold(2), 7.0 / 64.0);
  EXPECT_NEAR(rsd::pointwise_threshold(3), 5.0 / 14.0, 1e-15);
  EXPECT_NEAR(rsd::pointwise_threshold(4), 0.5 - 1.0 / 11.0, 1e-15);
  EXPECT_NEAR(rsd::pointwise_threshold(5), 0.5 - 1.0 / 26.0, 1e-15);
}

TEST(Crossover, Examples) {
  EXPECT_NEAR(rsd::crossover_theta(3), (3.0 - std::sqrt(3.0)) / 4.0, 1e-15);
  EXPECT_NEAR(rsd::crossover_theta(1000), 0.25, 1e-3);
  try {
    rsd::crossover_theta(2);
    FAIL();
  } catch (const rsd::InputError& e) {
    EXPECT_NE(std::string(e.what()).find("crossover analysis requires n >= 3"), std::string::npos);
  }
}

TEST(Crossover, IdentityAndBelowThreshold) {
  for (int n = 3; n <= 12; ++n) {
    const double t = rsd::crossover_theta(n);
    EXPECT_NEAR(rsd::exponent_lfn(n, t), rsd::exponent_spectral_summed(n, t), 1e-12) << n;
    EXPECT_LT(t, rsd::pointwise_threshold(n)) << n;
  }
}

TEST(Amplified, Examples) {
  const auto at_boundary = rsd::amplified_exponents(3, 0.4, 2.0);
  EXPECT_NEAR(at_boundary.q_exponent_twisted, 1.0, 1e-15);
  EXPECT_NEAR(at_boundary.boundary_theta, 0.4, 1e-15);
  const auto amp = rsd::amplified_exponents(3, 0.45, 2.0);
  EXPECT_NEAR(amp.q_exponent_twisted, 8.0 * 0.1 / 1.8, 1e-14);
  EXPECT_FALSE(amp.pick_q_one);
  const auto q1 = rsd::amplified_exponents(3, 0.3, 2.0);
  EXPECT_NEAR(q1.q_exponent_twisted, 8.0 * 0.4 / 1.2, 1e-14);
  EXPECT_TRUE(q1.pick_q_one);
  EXPECT_NEAR(q1.q_exponent_untwisted, 9.0 * 0.4 / 1.2, 1e-14);
  EXPECT_NEAR(q1.q_factor_twisted, std::pow(2.0, 8.0 / 3.0), 1e-12);
  EXPECT_THROW(rsd::amplified_exponents(3, 0.3, 0.5), rsd::InputError);
}

TEST(Amplified, BoundaryLocation) {
  for (int n = 3; n <= 6; ++n) {
    const double b = 0.5 - 1.0 / (n * n + 1.0);
    EXPECT_NEAR(rsd::amplified_exponents(n, b, 1.0).q_exponent_twisted, 1.0, 1e-12);
    EXPECT_TRUE(rsd::amplified_exponents(n, b - 1e-6, 1.0).pick_q_one);
    EXPECT_FALSE(rsd::amplified_exponents(n, b + 1e-6, 1.0).pick_q_one);
  }
}

TEST(Selection, Rules) {
  auto f = infty_family({0.3});
  f.reps[0].arith_conductor = 4;
  f.reps[0].archimedean.mu = {0.0, 0.0};
  // cap = (4 * 4)^2 = 256, sqrt = 16, |F| sqrt = 16.
  EXPECT_DOUBLE_EQ(rsd::rs_conductor_cap(f), 256.0);
  EXPECT_DOUBLE_EQ(rsd::select_ell(f), 16.0);
  EXPECT_EQ(rsd::select_k0(f, 2, 8), 4);
  EXPECT_EQ(rsd::select_k0(f, 2, 5), 3);
  EXPECT_EQ(rsd::select_k0(f, 1000, 8), 1);
}

TEST(PhaseAlign, TriangleEquality) {
  rsd::Rng rng(4);
  const auto u = rsd::testing::random_weights(6, rng);
  const auto w = rsd::phase_align_weights(u);
  Complex s = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    s += w[i] * u[i];
    total += std::abs(u[i]);
  }
  EXPECT_NEAR(s.real(), total, 1e-14);
  EXPECT_NEAR(s.imag(), 0.0, 1e-14);
  EXPECT_EQ(rsd::phase_align_weights({0.0})[0], Complex(1.0));
}

TEST(ChainFinite, SingleMemberDiagonal) {
  rsd::SampleOptions o;
  o.places = {rsd::Place::prime(2)};
  o.seed = 9;
  const auto f = rsd::sample_family(o);
  const auto r = rsd::simulate_chain_finite(f, 2, 1, {1.0});
  ASSERT_EQ(r.steps.size(), 2u);
  for (const auto& s : r.steps) {
    EXPECT_NEAR(s.S, rsd::rs_coefficient({f[0], f[0]}, static_cast<std::uint64_t>(s.m)).real(), 1e-12);
    EXPECT_TRUE(s.nonnegative);
  }
  EXPECT_TRUE(r.ok);
}

TEST(ChainFinite, SeededExample) {
  rsd::SampleOptions o;
  o.n = 2;
  o.size = 4;
  o.theta_floor = 0.3;
  o.places = {rsd::Place::prime(2)};
  o.seed = 3;
  const auto f = rsd::sample_family(o);
  const std::vector<Complex> w(4, 1.0);
  const auto r = rsd::simulate_chain_finite(f, 2, 2, w);
  EXPECT_EQ(r.steps.size(), 2u);
  for (const auto& s : r.steps) {
    EXPECT_GE(s.slack, -1e-9);
    EXPECT_TRUE(s.bound_holds);
  }
  EXPECT_EQ(r.turan.size(), 4u);
  EXPECT_GT(r.turan_window_max, 0.0);
  EXPECT_TRUE(r.ok);
}

TEST(ChainFinite, Preconditions) {
  rsd::SampleOptions o;
  o.places = {rsd::Place::prime(2)};
  o.ramified_primes = {3};
  const auto f = rsd::sample_family(o);
  EXPECT_THROW(rsd::simulate_chain_finite(f, 3, 1, {1.0}), rsd::InputError);
  EXPECT_THROW(rsd::simulate_chain_finite(f, 2, 1, {0.5}), rsd::InputError);
  EXPECT_THROW(rsd::simulate_chain_finite(f, 2, 7, {1.0}), rsd::InputError);
  EXPECT_THROW(rsd::simulate_chain_finite(f, 2, 0, {1.0}), rsd::InputError);
}

TEST(ChainFinite, HoldsOnSeededConfigurations) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    rsd::Rng rng(rsd::derive_seed(2024, i));
    rsd::SampleOptions o;
    o.n = static_cast<int>(rng.uniform_int(2, 3));
    o.size = static_cast<int>(rng.uniform_int(1, 6));
    o.theta_floor = rng.uniform(0.0, 0.45);
    const std::uint64_t p = rng.uniform_int(0, 1) == 0 ? 2 : 3;
    o.places = {rsd::Place::prime(p)};
    o.seed = rng.next();
    const auto f = rsd::sample_family(o);
    const auto k0 = rng.uniform_int(1, 4);
    const auto w = rsd::testing::random_unit_weights(f.size(), rng);
    const auto r = rsd::simulate_chain_finite(f, p, k0, w);
    EXPECT_TRUE(r.ok) << "config " << i;
    for (const auto& s : r.steps) EXPECT_LE(std::abs(s.S_imag), 1e-10 * std::max(1.0, std::abs(s.S)));
  }
}

TEST(ChainInfty, Examples) {
  const auto one = rsd::simulate_chain_infty(infty_family({0.3}), 4, 0.3);
  EXPECT_NEAR(one.steps.at(0).S, 2.2973967, 1e-7);
  EXPECT_NEAR(one.steps[0].slack, 0.0, 1e-10);
  EXPECT_TRUE(one.ok);

  const auto equal = rsd::simulate_chain_infty(infty_family({0.3, 0.3, 0.3}), 9, 0.3);
  EXPECT_NEAR(equal.steps[0].S, std::pow(9.0, 0.6), 1e-10);

  const auto mixed = rsd::simulate_chain_infty(infty_family({0.3, 0.4}), 10, 0.3);
  const double expect = std::pow((std::pow(10.0, 0.3) + std::pow(10.0, 0.4)) / 2.0, 2.0);
  EXPECT_NEAR(mixed.steps[0].S, expect, 1e-12 * expect);
  EXPECT_GT(mixed.steps[0].S, std::pow(10.0, 0.6));
  EXPECT_THROW(rsd::simulate_chain_infty(infty_family({0.2}), 4, 0.3), rsd::InputError);
}

TEST(ChainInfty, HoldsOnSeededConfigurations) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    rsd::Rng rng(rsd::derive_seed(77, i));
    rsd::SampleOptions o;
    o.n = static_cast<int>(rng.uniform_int(2, 4));
    o.size = static_cast<int>(rng.uniform_int(1, 8));
    o.theta_floor = rng.uniform(0.0, 0.45);
    o.places = {rsd::Place::infinity()};
    o.seed = rng.next();
    const auto f = rsd::sample_family(o);
    const auto ell = rng.uniform_int(1, 1000);
    const auto r = rsd::simulate_chain_infty(f, ell, o.theta_floor);
    EXPECT_GE(r.steps[0].slack, -1e-9 * std::max(1.0, r.steps[0].lower_bound)) << "config " << i;
    double sum = 0.0;
    for (const double b : r.beta) sum += std::pow(static_cast<double>(ell), b);
    const double oracle = sum * sum / static_cast<double>(f.size() * f.size());
    EXPECT_NEAR(r.steps[0].S, oracle, 1e-12 * oracle);
  }
}

}  // namespace
