#include "rsdensity/hermitian.hpp"

#include <algorithm>
#include <cmath>

#include "rsdensity/error.hpp"

namespace rsd {

using Complex = std::complex<double>;

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermitian_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& input) {
  const std::size_t n = input.size();
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  const double scale = std::max(a.frobenius_norm(), 1e-300);
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-16 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq_abs = std::abs(a(p, q));
        if (apq_abs <= 1e-19 * scale) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase D = diag(1, conj(e)) makes the (p, q) entry real and
        // positive; a real rotation then annihilates it.
        const Complex e = a(p, q) / apq_abs;
        const double theta = (aqq - app) / (2.0 * apq_abs);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = D R acting on columns p, q:
        //   J_pp = c, J_pq = s, J_qp = -s conj(e), J_qq = c conj(e).
        const Complex jpp = c, jpq = s, jqp = -s * std::conj(e), jqq = c * std::conj(e);
        for (std::size_t k = 0; k < n; ++k) {  // A <- A J
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- J^H A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace rsd
