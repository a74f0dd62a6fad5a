#include "rsdensity/dseries.hpp"

#include <algorithm>
#include <cmath>

#include "rsdensity/error.hpp"
#include "rsdensity/rng.hpp"

namespace rsd {

using Complex = std::complex<double>;

namespace {

void require_compatible(const LocalSeries& a, const LocalSeries& b, const char* op) {
  if (a.prime() != b.prime()) {
    throw InputError(std::string(op) + ": series at different primes (" + std::to_string(a.prime()) +
                     " vs " + std::to_string(b.prime()) + ")");
  }
  if (a.truncation() != b.truncation()) {
    throw InputError(std::string(op) + ": truncation mismatch (" + std::to_string(a.truncation()) +
                     " vs " + std::to_string(b.truncation()) + ")");
  }
}

void require_compatible(const FamilySeries& a, const FamilySeries& b, const char* op) {
  if (a.size() != b.size()) throw InputError(std::string(op) + ": family sizes differ");
  require_compatible(a.at(0, 0), b.at(0, 0), op);
}

template <typename F>
FamilySeries map_grid(const FamilySeries& a, F f) {
  std::vector<LocalSeries> grid;
  grid.reserve(a.size() * a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) grid.push_back(f(i, j));
  return FamilySeries(a.size(), std::move(grid));
}

}  // namespace

LocalSeries::LocalSeries(std::uint64_t p, std::vector<Complex> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("LocalSeries: need at least the constant coefficient");
}

LocalSeries LocalSeries::zero(std::uint64_t p, int K) {
  if (K < 0) throw InputError("LocalSeries: truncation must be >= 0");
  return LocalSeries(p, std::vector<Complex>(static_cast<std::size_t>(K) + 1, 0.0));
}

LocalSeries LocalSeries::unit(std::uint64_t p, int K) {
  auto s = zero(p, K);
  s[0] = 1.0;
  return s;
}

LocalSeries LocalSeries::geometric(std::uint64_t p, int K, Complex alpha) {
  auto s = zero(p, K);
  Complex power = 1.0;
  for (int k = 0; k <= K; ++k) {
    s[k] = power;
    power *= alpha;
  }
  return s;
}

LocalSeries add(const LocalSeries& a, const LocalSeries& b) {
  require_compatible(a, b, "add");
  auto out = a;
  for (int k = 0; k <= a.truncation(); ++k) out[k] += b[k];
  return out;
}

LocalSeries scale(const LocalSeries& a, Complex c) {
  auto out = a;
  for (int k = 0; k <= a.truncation(); ++k) out[k] *= c;
  return out;
}

LocalSeries mul(const LocalSeries& a, const LocalSeries& b) {
  require_compatible(a, b, "mul");
  const int K = a.truncation();
  auto out = LocalSeries::zero(a.prime(), K);
  for (int i = 0; i <= K; ++i) {
    if (a[i] == Complex(0.0)) continue;
    for (int j = 0; i + j <= K; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

LocalSeries log_series(const LocalSeries& a) {
  if (std::abs(a[0] - 1.0) > 1e-12) throw InputError("log_series: constant term must be 1");
  const int K = a.truncation();
  auto b = LocalSeries::zero(a.prime(), K);
  // a' = a b'  =>  k b_k = k a_k - sum_{j=1}^{k-1} j b_j a_{k-j}
  for (int k = 1; k <= K; ++k) {
    Complex acc = static_cast<double>(k) * a[k];
    for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) * b[j] * a[k - j];
    b[k] = acc / static_cast<double>(k);
  }
  return b;
}

LocalSeries exp_series(const LocalSeries& a) {
  if (std::abs(a[0]) > 1e-12) throw InputError("exp_series: constant term must be 0");
  const int K = a.truncation();
  auto b = LocalSeries::zero(a.prime(), K);
  b[0] = 1.0;
  // b' = a' b  =>  k b_k = sum_{j=1}^{k} j a_j b_{k-j}
  for (int k = 1; k <= K; ++k) {
    Complex acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * b[k - j];
    b[k] = acc / static_cast<double>(k);
  }
  return b;
}

FamilySeries::FamilySeries(std::size_t size, std::vector<LocalSeries> grid)
    : size_(size), grid_(std::move(grid)) {
  if (size_ == 0) throw InputError("FamilySeries: empty family");
  if (grid_.size() != size_ * size_) throw InputError("FamilySeries: grid must hold size^2 series");
  for (const auto& s : grid_) require_compatible(grid_.front(), s, "FamilySeries");
}

ComplexMatrix FamilySeries::degree_matrix(int k) const {
  if (k < 0 || k > truncation()) {
    throw InputError("degree " + std::to_string(k) + " outside [0, " + std::to_string(truncation()) + "]");
  }
  ComplexMatrix m(size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) m(i, j) = at(i, j)[k];
  return m;
}

double FamilySeries::hermitian_defect() const {
  double d = 0.0;
  for (int k = 0; k <= truncation(); ++k) d = std::max(d, degree_matrix(k).hermitian_defect());
  return d;
}

FamilySeries add(const FamilySeries& a, const FamilySeries& b) {
  require_compatible(a, b, "add");
  return map_grid(a, [&](std::size_t i, std::size_t j) { return add(a.at(i, j), b.at(i, j)); });
}

FamilySeries scale(const FamilySeries& a, double c) {
  return map_grid(a, [&](std::size_t i, std::size_t j) { return scale(a.at(i, j), c); });
}

FamilySeries hadamard(const FamilySeries& a, const FamilySeries& b) {
  require_compatible(a, b, "hadamard");
  return map_grid(a, [&](std::size_t i, std::size_t j) { return mul(a.at(i, j), b.at(i, j)); });
}

FamilySeries exp_entrywise(const FamilySeries& a) {
  return map_grid(a, [&](std::size_t i, std::size_t j) {
    auto s = a.at(i, j);
    s[0] = 0.0;
    return exp_series(s);
  });
}

PsdResult psd_check(const ComplexMatrix& m, double tol) {
  double max_abs = 0.0;
  for (const auto& z : m.data()) max_abs = std::max(max_abs, std::abs(z));
  if (m.hermitian_defect() > 1e-10 * std::max(1.0, max_abs)) {
    throw InputError("psd_check: matrix is not Hermitian");
  }
  PsdResult r;
  const auto eig = hermitian_eigenvalues(m);
  r.min_eigenvalue = eig.empty() ? 0.0 : eig.front();
  r.trace = m.trace().real();
  r.pass = r.min_eigenvalue >= -tol * std::max(1.0, r.trace);
  return r;
}

PsdResult psd_check(const FamilySeries& fs, int k, double tol) { return psd_check(fs.degree_matrix(k), tol); }

ClosureReport psd_closure_suite(const FamilySeries& fs1, const FamilySeries& fs2, int trials, std::uint64_t seed,
                                double tol) {
  require_compatible(fs1, fs2, "psd_closure_suite");
  ClosureReport report;
  auto check_all = [&](const std::string& name, const FamilySeries& fs) {
    auto it = std::find_if(report.records.begin(), report.records.end(),
                           [&](const ClosureRecord& r) { return r.construction == name; });
    if (it == report.records.end()) {
      report.records.push_back({name, 0.0, 0.0, 0, 0});
      it = std::prev(report.records.end());
      it->min_eigenvalue = INFINITY;
      it->worst_margin = INFINITY;
    }
    for (int k = 0; k <= fs.truncation(); ++k) {
      const auto r = psd_check(fs, k, tol);
      it->min_eigenvalue = std::min(it->min_eigenvalue, r.min_eigenvalue);
      it->worst_margin = std::min(it->worst_margin, r.min_eigenvalue / std::max(1.0, r.trace));
      ++it->checks;
      if (!r.pass) {
        ++it->failures;
        ++report.failures;
      }
    }
  };

  Rng rng(seed);
  check_all("scale", scale(fs1, 0.0));
  for (int t = 0; t < trials; ++t) check_all("scale", scale(fs1, rng.uniform(0.0, 10.0)));
  check_all("sum", add(fs1, fs2));
  check_all("hadamard", hadamard(fs1, fs2));
  check_all("exp", exp_entrywise(fs1));
  return report;
}

FamilySeries random_psd_family(std::size_t size, std::uint64_t p, int K, int terms_per_degree, Rng& rng) {
  std::vector<LocalSeries> grid(size * size, LocalSeries::zero(p, K));
  for (int k = 0; k <= K; ++k) {
    const auto terms = rng.uniform_int(0, terms_per_degree);
    for (std::int64_t t = 0; t < terms; ++t) {
      const double weight = rng.uniform(0.0, 1.0);
      std::vector<Complex> w(size);
      for (auto& z : w) z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) grid[i * size + j][k] += weight * w[i] * std::conj(w[j]);
    }
  }
  return FamilySeries(size, std::move(grid));
}

}  // namespace rsd
