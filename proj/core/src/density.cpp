#include "rsdensity/density.hpp"

#include <algorithm>
#include <cmath>

#include "rsdensity/error.hpp"
#include "rsdensity/powersum.hpp"
#include "rsdensity/ranksel.hpp"

namespace rsd {

namespace {

void require_rank(int n) {
  if (n < 2) throw InputError("rank n must be >= 2");
}

void require_theta_open(double theta) {
  if (!(theta > 0.0 && theta < 0.5)) throw InputError("theta must lie in (0, 1/2)");
}

void require_theta_halfopen(double theta) {
  if (!(theta >= 0.0 && theta < 0.5)) throw InputError("theta must lie in [0, 1/2)");
}

double sqrt_cap(const Family& family) { return std::sqrt(rs_conductor_cap(family)); }

}  // namespace

double exponent_lfn(int n, double theta) {
  require_rank(n);
  require_theta_open(theta);
  return n * (1.0 - 2.0 * theta) / (2.0 * theta);
}

double exponent_rs(double theta) {
  require_theta_open(theta);
  return (1.0 - 2.0 * theta) / (4.0 * theta);
}

double exponent_spectral(int n, double theta) {
  require_rank(n);
  require_theta_halfopen(theta);
  return n - 1.0 - 4.0 * theta;
}

double exponent_spectral_summed(int n, double theta) {
  require_rank(n);
  require_theta_halfopen(theta);
  return n - 4.0 * theta;
}

double pointwise_threshold(int n) {
  require_rank(n);
  if (n == 2) return 7.0 / 64.0;
  if (n <= 4) return 0.5 - 1.0 / (n * (n + 1) / 2.0 + 1.0);
  return 0.5 - 1.0 / (static_cast<double>(n) * n + 1.0);
}

double crossover_theta(int n) {
  if (n < 3) throw InputError("crossover analysis requires n >= 3");
  const double nd = n;
  return (nd - std::sqrt((nd - 2.0) * nd)) / 4.0;
}

ExponentReport exponent_report(int n, double theta) {
  ExponentReport r;
  r.n = n;
  r.theta = theta;
  r.exponent_lfn = exponent_lfn(n, theta);
  r.exponent_rs = exponent_rs(theta);
  r.exponent_spectral = exponent_spectral(n, theta);
  r.exponent_spectral_summed = exponent_spectral_summed(n, theta);
  r.pointwise_threshold = pointwise_threshold(n);
  if (n >= 3) r.crossover = crossover_theta(n);
  return r;
}

AmplifiedReport amplified_exponents(int n, double theta, double q) {
  require_rank(n);
  require_theta_open(theta);
  if (!(q >= 1.0)) throw InputError("q must be >= 1");
  AmplifiedReport r;
  r.n = n;
  r.theta = theta;
  r.q = q;
  const double n2 = static_cast<double>(n) * n;
  r.rs_exponent = exponent_rs(theta);
  r.q_exponent_untwisted = n2 * r.rs_exponent;
  r.q_exponent_twisted = (n2 - 1.0) * r.rs_exponent;
  r.q_factor_untwisted = std::pow(q, r.q_exponent_untwisted);
  r.q_factor_twisted = std::pow(q, r.q_exponent_twisted);
  r.pick_q_one = r.q_exponent_twisted > 1.0;
  r.boundary_theta = 0.5 - 1.0 / (n2 + 1.0);
  return r;
}

std::int64_t select_k0(const Family& family, std::uint64_t p, int K) {
  const int hi = K - family.rank;
  if (hi < 1) throw InputError("truncation K leaves no room for a window of length n (need K >= n + 1)");
  const double target = static_cast<double>(family.size()) * sqrt_cap(family);
  const double k0 = std::round(std::log(target) / std::log(static_cast<double>(p)));
  return static_cast<std::int64_t>(std::clamp(k0, 1.0, static_cast<double>(hi)));
}

double select_ell(const Family& family) { return std::ceil(static_cast<double>(family.size()) * sqrt_cap(family)); }

std::vector<Complex> phase_align_weights(const std::vector<Complex>& u) {
  std::vector<Complex> w;
  w.reserve(u.size());
  for (const auto& x : u) w.push_back(x == Complex(0.0) ? Complex(1.0) : std::conj(x) / std::abs(x));
  return w;
}

ChainReport simulate_chain_finite(const Family& family, std::uint64_t p, std::int64_t k0, const std::vector<Complex>& w,
                                  int K) {
  const auto F = family.size();
  if (F == 0) throw InputError("empty family");
  if (w.size() != F) throw InputError("need one weight per family member");
  for (const auto& x : w) {
    if (std::abs(std::abs(x) - 1.0) > 1e-9) throw InputError("weights must have unit modulus");
  }
  const int n = family.rank;
  if (k0 < 1 || k0 + n > K) {
    throw InputError("k0 must satisfy 1 <= k0 and k0 + n <= K (K=" + std::to_string(K) + ")");
  }
  for (const auto& rep : family.reps) {
    if (!rep.is_unramified_at(p)) {
      throw InputError("chain at p=" + std::to_string(p) + " needs every member unramified there; '" + rep.id +
                       "' is not");
    }
  }

  ChainReport report;
  report.place = "p=" + std::to_string(p);
  report.family_size = F;
  report.n = n;
  report.conductor_cap = rs_conductor_cap(family);
  report.parameter_name = "k0";
  report.parameter = k0;
  report.rule_value = static_cast<double>(select_k0(family, p, K));
  report.weights = w;

  const double f2 = static_cast<double>(F) * static_cast<double>(F);
  const double pd = static_cast<double>(p);
  report.ok = true;
  for (std::int64_t k = k0 + 1; k <= k0 + n; ++k) {
    const auto lb = explicit_lower_bound(family, w, p, static_cast<int>(k), K);
    ChainStep step;
    step.k = k;
    step.m = std::pow(pd, static_cast<double>(k));
    step.S = lb.lhs / f2;
    step.S_imag = lb.lhs_imag / f2;
    step.lower_bound = lb.rhs / f2;
    step.slack = step.S - step.lower_bound;
    step.upper_reference = step.m / static_cast<double>(F) + std::sqrt(report.conductor_cap);
    const double tol = 1e-9 * std::max(1.0, std::abs(step.S));
    step.nonnegative = step.S >= -tol;
    step.bound_holds = step.slack >= -tol;
    report.ok = report.ok && step.nonnegative && step.bound_holds;
    report.steps.push_back(step);
  }

  // Turan side: Satake parameters over the window [k0+1, k0+n].
  const double logp = std::log(pd);
  double max_alpha = 0.0;
  std::vector<std::vector<Complex>> alphas;
  for (const auto& rep : family.reps) {
    std::vector<Complex> z;
    for (const auto& mu : rep.satake(p).mu) z.push_back(std::exp(mu * logp));
    for (const auto& a : z) max_alpha = std::max(max_alpha, std::abs(a));
    TuranSide side;
    side.rep_id = rep.id;
    side.M = k0;
    side.N = static_cast<std::int64_t>(z.size());
    const PowerSumInstance inst{z, k0};
    const auto best = turan_lhs(inst);
    side.k_star = best.k_star;
    side.value = best.value;
    side.ratio = turan_ratio(inst);
    report.turan.push_back(side);
    alphas.push_back(std::move(z));
  }
  for (std::int64_t k = k0 + 1; k <= k0 + n; ++k) {
    Complex total = 0.0;
    for (std::size_t i = 0; i < F; ++i) {
      Complex pk = 0.0;
      for (const auto& a : alphas[i]) pk += std::pow(a, static_cast<double>(k));
      total += w[i] * pk;
    }
    report.turan_window_max = std::max(report.turan_window_max, std::abs(total));
  }
  report.turan_reference = std::pow(max_alpha, static_cast<double>(k0)) /
                           std::pow(static_cast<double>(k0), static_cast<double>(n));
  return report;
}

ChainReport simulate_chain_infty(const Family& family, std::int64_t ell, double theta) {
  const auto F = family.size();
  if (F == 0) throw InputError("empty family");
  if (ell < 1) throw InputError("ell must be >= 1");
  require_theta_halfopen(theta);

  ChainReport report;
  report.place = "inf";
  report.family_size = F;
  report.n = family.rank;
  report.conductor_cap = rs_conductor_cap(family);
  report.parameter_name = "ell";
  report.parameter = ell;
  report.rule_value = select_ell(family);
  report.theta = theta;

  const double L = static_cast<double>(ell);
  const double logl = std::log(L);
  std::vector<Complex> beta;
  for (const auto& rep : family.reps) {
    if (rep.archimedean.mu.empty()) throw InputError("'" + rep.id + "' has no archimedean parameters");
    double b = rep.archimedean.mu.front().real();
    for (const auto& mu : rep.archimedean.mu) b = std::max(b, mu.real());
    if (b < theta) {
      throw InputError("beta = max Re mu(inf) of '" + rep.id + "' is below theta (" + std::to_string(b) + " < " +
                       std::to_string(theta) + ")");
    }
    report.beta.push_back(b);
    beta.push_back(b);
    const Complex ell_beta = std::exp(beta.back() * logl);
    report.weights.push_back(std::abs(ell_beta) / ell_beta);
  }

  ComplexMatrix wmat(F);
  for (std::size_t i = 0; i < F; ++i)
    for (std::size_t j = 0; j < F; ++j) wmat(i, j) = report.weights[i] * std::conj(report.weights[j]);
  const auto triple = rs_triple_sum(family, wmat, {{1, Complex(1.0)}}, beta, L);

  const double f2 = static_cast<double>(F) * static_cast<double>(F);
  ChainStep step;
  step.k = 0;
  step.m = L;
  step.S = triple.value.real() / f2;
  step.S_imag = triple.value.imag() / f2;
  step.lower_bound = std::pow(L, 2.0 * theta);
  step.slack = step.S - step.lower_bound;
  step.upper_reference = L / static_cast<double>(F) + std::sqrt(report.conductor_cap);
  const double tol = 1e-9 * std::max(1.0, step.lower_bound);
  step.nonnegative = step.S >= -tol;
  step.bound_holds = step.slack >= -tol;
  report.ok = step.nonnegative && step.bound_holds;
  report.steps.push_back(step);
  return report;
}

}  // namespace rsd
