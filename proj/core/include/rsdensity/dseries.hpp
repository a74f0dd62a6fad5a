#pragma once

// Truncated power series at a single prime, X = p^{-s}: the coefficient of
// X^k is the Dirichlet coefficient at p^k. FamilySeries is a square grid of
// such series indexed by ordered pairs of family members, together with the
// nonnegative-definiteness test on its degree-k coefficient matrices.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "rsdensity/hermitian.hpp"

namespace rsd {

class Rng;

using Complex = std::complex<double>;

inline constexpr int kDefaultTruncation = 8;

class LocalSeries {
 public:
  // Coefficients c_0..c_K; must be non-empty.
  LocalSeries(std::uint64_t p, std::vector<Complex> coeffs);

  static LocalSeries zero(std::uint64_t p, int K);
  static LocalSeries unit(std::uint64_t p, int K);
  // (1 - alpha X)^{-1} truncated at degree K.
  static LocalSeries geometric(std::uint64_t p, int K, Complex alpha);

  std::uint64_t prime() const { return p_; }
  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  const Complex& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Complex& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  bool operator==(const LocalSeries&) const = default;

 private:
  std::uint64_t p_;
  std::vector<Complex> coeffs_;
};

// All binary operations require equal prime and truncation (InputError).
LocalSeries add(const LocalSeries& a, const LocalSeries& b);
LocalSeries scale(const LocalSeries& a, std::complex<double> c);
// Cauchy product truncated at K.
LocalSeries mul(const LocalSeries& a, const LocalSeries& b);
// Formal logarithm; requires c_0 = 1 within 1e-12.
LocalSeries log_series(const LocalSeries& a);
// Formal exponential; requires c_0 = 0 within 1e-12.
LocalSeries exp_series(const LocalSeries& a);

class FamilySeries {
 public:
  // Row-major grid of size*size series, all with the same prime and truncation.
  FamilySeries(std::size_t size, std::vector<LocalSeries> grid);

  std::size_t size() const { return size_; }
  std::uint64_t prime() const { return grid_.front().prime(); }
  int truncation() const { return grid_.front().truncation(); }
  const LocalSeries& at(std::size_t i, std::size_t j) const { return grid_[i * size_ + j]; }
  LocalSeries& at(std::size_t i, std::size_t j) { return grid_[i * size_ + j]; }

  // Matrix of degree-k coefficients.
  ComplexMatrix degree_matrix(int k) const;
  // max over degrees and entries of |c_ij(k) - conj(c_ji(k))|.
  double hermitian_defect() const;

 private:
  std::size_t size_;
  std::vector<LocalSeries> grid_;
};

FamilySeries add(const FamilySeries& a, const FamilySeries& b);
FamilySeries scale(const FamilySeries& a, double c);
// Entrywise series product (degreewise Schur products of the coefficient
// matrices combined by Cauchy convolution).
FamilySeries hadamard(const FamilySeries& a, const FamilySeries& b);
// Entrywise exp after zeroing every constant term.
FamilySeries exp_entrywise(const FamilySeries& a);

struct PsdResult {
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  bool pass = false;
};

// pass iff the minimum eigenvalue is >= -tol * max(1, trace). Throws
// InputError when the matrix is not Hermitian to 1e-10 relative.
PsdResult psd_check(const ComplexMatrix& m, double tol);
PsdResult psd_check(const FamilySeries& fs, int k, double tol);

struct ClosureRecord {
  std::string construction;  // "scale", "sum", "hadamard", "exp"
  double min_eigenvalue = 0.0;
  double worst_margin = 0.0;  // min over checks of min_eig / max(1, trace)
  int checks = 0;
  int failures = 0;
};

struct ClosureReport {
  std::vector<ClosureRecord> records;
  int failures = 0;
};

// Checks that c * fs1 (c = 0 and `trials` draws c ~ U[0, 10]), fs1 + fs2,
// fs1 (.) fs2 and exp(fs1 with zero constant terms) pass psd_check at every
// degree <= K.
ClosureReport psd_closure_suite(const FamilySeries& fs1, const FamilySeries& fs2, int trials,
                                std::uint64_t seed, double tol = 1e-9);

// Random nonnegative definite grid: each degree k carries a positive
// combination of rank-one terms w_i conj(w_j) with w uniform in the unit
// square of C. `terms_per_degree` bounds the number of terms (>= 0 each).
FamilySeries random_psd_family(std::size_t size, std::uint64_t p, int K, int terms_per_degree, Rng& rng);

}  // namespace rsd
