#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace rsd {

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n, std::complex<double> fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  std::complex<double>& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  const std::vector<std::complex<double>>& data() const { return data_; }

  std::complex<double> trace() const;
  // max_{i,j} |A_ij - conj(A_ji)|.
  double hermitian_defect() const;
  double frobenius_norm() const;

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::complex<double>> data_;
};

// Eigenvalues of a Hermitian matrix in ascending order, computed by the
// cyclic complex Jacobi method. Only the Hermitian part (A + A^*)/2 is used.
// Deterministic: fixed sweep order, no randomization.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

}  // namespace rsd
