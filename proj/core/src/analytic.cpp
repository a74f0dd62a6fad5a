#include "rsdensity/analytic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "rsdensity/error.hpp"

namespace rsd {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k (2k - 1)) for k = 1..10.
constexpr std::array<double, 10> kStirlingCoeffs = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

constexpr double kStirlingShift = 15.0;

bool near_pole(Complex s, double dist) {
  const double n = std::round(s.real());
  return n <= 0.0 && std::abs(s - n) < dist;
}

Complex stirling(Complex z) {
  Complex out = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex term = inv;
  for (double c : kStirlingCoeffs) {
    out += c * term;
    term *= inv2;
  }
  return out;
}

}  // namespace

Complex log_gamma(Complex s) {
  if (near_pole(s, 1e-8)) throw InputError("log_gamma: argument within 1e-8 of a pole of Gamma");
  // Shift up until the asymptotic series is accurate, then undo the shift
  // with Gamma(s) = Gamma(s + N) / (s (s+1) ... (s+N-1)).
  Complex shift = 0.0;
  Complex z = s;
  while (z.real() < kStirlingShift) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

Complex gamma(Complex s) { return std::exp(log_gamma(s)); }

Complex gamma_r(Complex s) { return std::exp(-0.5 * s * std::log(kPi) + log_gamma(0.5 * s)); }

double stirling_ratio(double sigma, double t) {
  if (std::abs(t) < 1.0) throw InputError("stirling_ratio: need |t| >= 1");
  const double at = std::abs(t);
  const double log_abs = log_gamma(Complex(sigma, t)).real();
  return std::exp(log_abs - 0.5 * std::log(2.0 * kPi) - (sigma - 0.5) * std::log(at) + 0.5 * kPi * at);
}

Complex gamma_quotient(Complex s, Complex z) {
  const Complex num_arg = 1.0 - s + std::conj(z);
  const Complex den_arg = s + z;
  if ((1.0 - s + z).real() < 0.05) throw InputError("gamma_quotient: need Re(1 - s + z) >= 0.05");
  if (near_pole(0.5 * num_arg, 1e-6)) throw InputError("gamma_quotient: numerator at a pole");
  // 1 / Gamma_R vanishes at the poles of the denominator.
  if (near_pole(0.5 * den_arg, 1e-8)) return 0.0;
  const Complex log_num = -0.5 * num_arg * std::log(kPi) + log_gamma(0.5 * num_arg);
  const Complex log_den = -0.5 * den_arg * std::log(kPi) + log_gamma(0.5 * den_arg);
  return std::exp(log_num - log_den);
}

double gamma_quotient_ratio(Complex s, Complex z) {
  const double scale = std::pow(1.0 + std::abs((s + z).imag()), 0.5 - s.real());
  return std::abs(gamma_quotient(s, z)) / scale;
}

SmoothKernel SmoothKernel::gauss_power(Complex beta) {
  if (beta.real() < -1.0) throw InputError("GaussPower kernel needs Re beta >= -1");
  return {Kind::GaussPower, beta};
}

SmoothKernel SmoothKernel::sqrt_exp_power(double B) { return {Kind::SqrtExpPower, B}; }

Complex SmoothKernel::operator()(double x) const {
  if (!(x > 0.0)) throw InputError("kernel evaluated at x <= 0");
  const double lx = std::log(x);
  if (kind == Kind::GaussPower) return std::exp(exponent * lx - x * x);
  return std::exp(exponent * lx - std::sqrt(x));
}

Complex mellin_kernel(const SmoothKernel& kernel, Complex s) {
  if (kernel.kind == SmoothKernel::Kind::GaussPower) {
    if (kernel.exponent.real() < -1.0) throw InputError("GaussPower kernel needs Re beta >= -1");
    return 0.5 * gamma(0.5 * (s + kernel.exponent));
  }
  return 2.0 * gamma(2.0 * (s + kernel.exponent));
}

Complex smooth_sum_direct(const CoeffMap& coeffs, double M, const SmoothKernel& kernel) {
  if (!(M > 0.0)) throw InputError("M must be positive");
  Complex sum = 0.0;
  for (const auto& [m, a] : coeffs) {
    if (m == 0) throw InputError("Dirichlet index m must be positive");
    if (a == Complex(0.0)) continue;
    sum += kernel(static_cast<double>(m) / M) * a;
  }
  return sum;
}

Complex smooth_sum_direct(const std::function<Complex(std::uint64_t)>& coeff, double M, const SmoothKernel& kernel) {
  if (!(M > 0.0)) throw InputError("M must be positive");
  constexpr std::uint64_t kMaxTerms = 100'000'000;
  Complex sum = 0.0;
  double peak = 0.0;
  double previous = 0.0;
  for (std::uint64_t m = 1; m <= kMaxTerms; ++m) {
    const Complex phi = kernel(static_cast<double>(m) / M);
    const double mag = std::abs(phi);
    peak = std::max(peak, mag);
    if (m > 1 && mag < previous && mag < 1e-16 * peak) return sum;
    previous = mag;
    sum += phi * coeff(m);
  }
  throw NumericalError("smooth_sum_direct: kernel tail did not decay within 1e8 terms");
}

ContourResult smooth_sum_contour_detailed(const CoeffMap& coeffs, double M, const SmoothKernel& kernel,
                                          const ContourSpec& spec) {
  if (!(M > 0.0)) throw InputError("M must be positive");
  if (spec.sigma < 2.0) throw InputError("contour needs sigma >= 2");
  if (!(spec.T > 0.0) || !(spec.step > 0.0)) throw InputError("contour needs T > 0 and step > 0");
  if (spec.step > spec.T / 100.0) throw InputError("contour step must be <= T/100");

  std::vector<std::pair<double, Complex>> terms;
  for (const auto& [m, a] : coeffs) {
    if (m == 0) throw InputError("Dirichlet index m must be positive");
    if (a != Complex(0.0)) terms.emplace_back(std::log(static_cast<double>(m)), a);
  }
  const double logM = std::log(M);

  auto integrand = [&](double t) {
    const Complex s(spec.sigma, t);
    Complex L = 0.0;
    for (const auto& [logm, a] : terms) L += a * std::exp(-s * logm);
    if (L == Complex(0.0)) return Complex(0.0);
    return std::exp(s * logM) * L * mellin_kernel(kernel, s);
  };

  // Even number of intervals so the coarse rule reuses every other node.
  const auto half = static_cast<std::int64_t>(std::ceil(spec.T / spec.step - 1e-9));
  const std::int64_t n = 2 * half;
  const double h = 2.0 * spec.T / static_cast<double>(n);
  Complex fine = 0.0, coarse = 0.0;
  double abs_integral = 0.0;
  Complex f_lo = 0.0, f_hi = 0.0;
  for (std::int64_t i = 0; i <= n; ++i) {
    const double t = -spec.T + h * static_cast<double>(i);
    const Complex f = integrand(t);
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    fine += w * f;
    abs_integral += w * std::abs(f);
    if (i % 2 == 0) coarse += w * f;
    if (i == 0) f_lo = f;
    if (i == n) f_hi = f;
  }
  const double norm = 1.0 / (2.0 * kPi);
  ContourResult out;
  out.value = fine * h * norm;
  const Complex coarse_value = coarse * (2.0 * h) * norm;
  abs_integral *= h * norm;
  out.error_estimate = std::abs(out.value - coarse_value) + (4.0 / kPi) * (std::abs(f_lo) + std::abs(f_hi));
  if (out.error_estimate > 1e-6 * std::abs(out.value) + 1e-12 * abs_integral) {
    throw NumericalError("smooth_sum_contour: estimated error " + std::to_string(out.error_estimate) +
                             " exceeds tolerance; increase T or decrease step",
                         out.error_estimate);
  }
  return out;
}

Complex smooth_sum_contour(const CoeffMap& coeffs, double M, const SmoothKernel& kernel, const ContourSpec& spec) {
  return smooth_sum_contour_detailed(coeffs, M, kernel, spec).value;
}

}  // namespace rsd
