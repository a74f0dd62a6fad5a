#include <benchmark/benchmark.h>

#include "rsdensity/analytic.hpp"
#include "rsdensity/hermitian.hpp"
#include "rsdensity/ranksel.hpp"
#include "rsdensity/rng.hpp"

namespace {

rsd::Family bench_family(int n, int size, bool ramified) {
  rsd::SampleOptions o;
  o.n = n;
  o.size = size;
  o.theta_floor = 0.3;
  o.places = {rsd::Place::prime(3), rsd::Place::infinity()};
  if (ramified) {
    o.ramified_primes = {2};
  } else {
    o.places.push_back(rsd::Place::prime(2));
  }
  o.seed = 1;
  return rsd::sample_family(o);
}

void BM_RsMatrix(benchmark::State& state) {
  const auto f = bench_family(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), state.range(2) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(rsd::rs_matrix(f, 64 * 27));
}
BENCHMARK(BM_RsMatrix)->Args({2, 8, 0})->Args({4, 8, 0})->Args({4, 8, 1})->Args({4, 32, 0});

void BM_HermitianEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  rsd::Rng rng(3);
  rsd::ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.uniform(-1.0, 1.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(rsd::hermitian_eigenvalues(m));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(4)->Arg(8)->Arg(32);

void BM_LogGamma(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsd::log_gamma({0.5, t}));
    t += 0.37;
    if (t > 100.0) t = 0.0;
  }
}
BENCHMARK(BM_LogGamma);

void BM_SmoothSumContour(benchmark::State& state) {
  rsd::CoeffMap c;
  for (std::uint64_t m = 1; m <= 100; ++m) c[m] = 1.0 / static_cast<double>(m);
  const auto k = rsd::SmoothKernel::gauss_power(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(rsd::smooth_sum_contour(c, 30.0, k, {}));
}
BENCHMARK(BM_SmoothSumContour);

}  // namespace

BENCHMARK_MAIN();
