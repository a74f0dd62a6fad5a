#pragma once

// Exponents of the density bounds and the computable lower-bound halves of
// the finite-place and archimedean arguments.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsdensity/dseries.hpp"
#include "rsdensity/repmodel.hpp"

namespace rsd {

// n (1 - 2 theta) / (2 theta); theta in (0, 1/2), n >= 2.
double exponent_lfn(int n, double theta);
// (1 - 2 theta) / (4 theta): exponent of the Rankin-Selberg conductor.
double exponent_rs(double theta);
// n - 1 - 4 theta and n - 4 theta; theta in [0, 1/2).
double exponent_spectral(int n, double theta);
double exponent_spectral_summed(int n, double theta);

// Best known bound towards Ramanujan at unramified places.
double pointwise_threshold(int n);

// (n - sqrt((n - 2) n)) / 4, where exponent_lfn meets exponent_spectral_summed.
// Requires n >= 3.
double crossover_theta(int n);

struct ExponentReport {
  int n = 2;
  double theta = 0.0;
  double exponent_lfn = 0.0;
  double exponent_rs = 0.0;
  double exponent_spectral = 0.0;
  double exponent_spectral_summed = 0.0;
  double pointwise_threshold = 0.0;
  std::optional<double> crossover;  // absent for n = 2
};

ExponentReport exponent_report(int n, double theta);

struct AmplifiedReport {
  int n = 2;
  double theta = 0.0;
  double q = 1.0;
  double rs_exponent = 0.0;           // exponent of C_RS in both variants
  double q_exponent_untwisted = 0.0;  // n^2 (1 - 2 theta) / (4 theta)
  double q_exponent_twisted = 0.0;    // (n^2 - 1) (1 - 2 theta) / (4 theta)
  double q_factor_untwisted = 0.0;    // q^{q_exponent_untwisted}
  double q_factor_twisted = 0.0;      // q^{q_exponent_twisted}
  // True when the twisted q-exponent exceeds 1, i.e. amplification does not
  // pay and q = 1 is optimal.
  bool pick_q_one = false;
  double boundary_theta = 0.0;  // 1/2 - 1/(n^2 + 1)
};

AmplifiedReport amplified_exponents(int n, double theta, double q);

// Selection rules, with C the declared-conductor cap of the family:
//   k0 = round(log_p(|F| sqrt(C))) clamped to [1, K - n]
//   ell = ceil(|F| sqrt(C))
std::int64_t select_k0(const Family& family, std::uint64_t p, int K = kDefaultTruncation);
double select_ell(const Family& family);

// w_i = conj(u_i) / |u_i| (1 where u_i = 0), so that |sum w u| = sum |u|.
std::vector<Complex> phase_align_weights(const std::vector<Complex>& u);

struct ChainStep {
  std::int64_t k = 0;     // exponent of p (0 at infinity)
  double m = 1.0;         // p^k, or ell at infinity
  double S = 0.0;         // normalized quadratic form, real part
  double S_imag = 0.0;
  double lower_bound = 0.0;
  double slack = 0.0;
  double upper_reference = 0.0;  // m/|F| + sqrt(C), reported only
  bool nonnegative = false;
  bool bound_holds = false;
};

struct TuranSide {
  std::string rep_id;
  std::int64_t M = 1;
  std::int64_t N = 1;
  std::int64_t k_star = 0;
  double value = 0.0;
  double ratio = 0.0;
};

struct ChainReport {
  std::string place;  // "p=<prime>" or "inf"
  std::size_t family_size = 0;
  int n = 2;
  double conductor_cap = 0.0;
  std::string parameter_name;  // "k0" or "ell"
  std::int64_t parameter = 0;
  double rule_value = 0.0;  // value the selection rule suggests
  double theta = 0.0;       // archimedean chain only
  std::vector<Complex> weights;
  std::vector<double> beta;  // archimedean chain only
  std::vector<ChainStep> steps;
  // Finite chain only: per-member Turan windows [k0+1, k0+n] on the Satake
  // parameters, plus the weighted window maximum max_k |sum_i w_i P_k(pi_i)|
  // against k0^{-n} max_i max_j |alpha_ij|^{k0}.
  std::vector<TuranSide> turan;
  double turan_window_max = 0.0;
  double turan_reference = 0.0;
  bool ok = false;
};

// Weights must have unit modulus (1e-9). Requires p unramified for every
// member, k0 >= 1 and k0 + n <= K.
ChainReport simulate_chain_finite(const Family& family, std::uint64_t p, std::int64_t k0,
                                  const std::vector<Complex>& w, int K = kDefaultTruncation);

// beta_i = max_j Re mu_ij(inf) must be >= theta. Checks
// S >= ell^{2 theta} - 1e-9 max(1, ell^{2 theta}).
ChainReport simulate_chain_infty(const Family& family, std::int64_t ell, double theta);

}  // namespace rsd
