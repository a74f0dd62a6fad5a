#pragma once

// Rankin-Selberg Dirichlet coefficients a_{pi x pi'~}(m) assembled from local
// data, and the quadratic forms built from them.

#include <cstdint>
#include <map>
#include <vector>

#include "rsdensity/dseries.hpp"
#include "rsdensity/hermitian.hpp"
#include "rsdensity/repmodel.hpp"

namespace rsd {

// The ordered pair (pi, pi'); coefficients are those of L(s, pi x pi'~).
// Non-owning.
struct RSPair {
  const Representation& a;
  const Representation& b;
};

// Degree-q coefficient (1/q) P_q(a) conj(P_q(b)), P_q = sum_j p^{q mu_j}.
// Throws InputError if p is ramified (or missing) for either side.
LocalSeries rs_log_local_unramified(const RSPair& pair, std::uint64_t p, int K);

// Log of the product over segment pairs in shared twist classes. For a class
// of order r, each l >= 1 and q >= 1 with q r <= K contribute
// (1/q) A conj(B) at degree q r, where
//   A = sum over segments of a in the class with L >= l of p^{-q r (s + (L - l)/2)}
// and B likewise for b.
LocalSeries rs_log_local_ramified(const std::vector<RamifiedSegment>& segs_a,
                                  const std::vector<RamifiedSegment>& segs_b, std::uint64_t p, int K);

// Segment form of the local component at p. An unramified tuple becomes n
// segments in class kUnramifiedClass with r = 1, L = 1, s = -mu_j.
std::vector<RamifiedSegment> local_segments(const Representation& rep, std::uint64_t p);

// Unramified formula when both sides are unramified at p, segment formula
// otherwise.
LocalSeries rs_log_local(const RSPair& pair, std::uint64_t p, int K);

// Local Euler factor L_p(s, pi x pi'~) as a series in p^{-s}.
LocalSeries rs_local_series(const RSPair& pair, std::uint64_t p, int K);

// a(m) = prod over p^k || m of the degree-k coefficient of the local factor.
Complex rs_coefficient(const RSPair& pair, std::uint64_t m, int K = kDefaultTruncation);

struct CoeffMatrix {
  std::uint64_t m = 1;
  ComplexMatrix entries;  // entries(i, j) = a_{pi_i x pi_j~}(m)
};

CoeffMatrix rs_matrix(const Family& family, std::uint64_t m, int K = kDefaultTruncation);

// Grid of local factors at p for every ordered pair in the family.
FamilySeries rs_family_series(const Family& family, std::uint64_t p, int K = kDefaultTruncation);

struct LowerBoundResult {
  double lhs = 0.0;  // sum w_i conj(w_j) a_ij(p^k)
  double rhs = 0.0;  // (1/k) |sum_i w_i P_k(pi_i)|^2
  double slack = 0.0;
  double lhs_imag = 0.0;

  // slack >= -1e-9 max(1, |lhs|)
  bool holds() const;
};

// Requires k >= 1 and p unramified for every member.
LowerBoundResult explicit_lower_bound(const Family& family, const std::vector<Complex>& w, std::uint64_t p,
                                      int k, int K = kDefaultTruncation);

struct TripleSumResult {
  Complex value;
  // ||w||_inf |F|^2 ||u||_inf M (|F|^{-1} + (1 + M / sqrt(C_RS))^{-1}) with
  // C_RS the declared-conductor cap and implied constant 1. Reported only.
  double reference_bound = 0.0;
};

// sum_{i,j} w_ij sum_m u_m a_ij(m) (M/m)^{beta_i + conj(beta_j)}.
TripleSumResult rs_triple_sum(const Family& family, const ComplexMatrix& w, const std::map<std::uint64_t, Complex>& u,
                              const std::vector<Complex>& beta, double M, int K = kDefaultTruncation);

}  // namespace rsd
