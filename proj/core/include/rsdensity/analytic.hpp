#pragma once

// Gamma-function numerics and the Mellin-transform machinery for smoothed
// sums of Dirichlet coefficients.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>

namespace rsd {

using Complex = std::complex<double>;

// Principal branch of log Gamma. Throws InputError within 1e-8 of a pole.
Complex log_gamma(Complex s);
Complex gamma(Complex s);

// Gamma_R(s) = pi^{-s/2} Gamma(s/2).
Complex gamma_r(Complex s);

// |Gamma(sigma + it)| / (sqrt(2 pi) |t|^{sigma - 1/2} e^{-pi |t| / 2}); |t| >= 1.
double stirling_ratio(double sigma, double t);

// Gamma_R(1 - s + conj z) / Gamma_R(s + z). Returns 0 when s + z sits on a
// pole of the denominator; throws InputError when Re(1 - s + z) < 0.05 or
// the numerator is within 1e-6 of a pole.
Complex gamma_quotient(Complex s, Complex z);
// |gamma_quotient(s, z)| / (1 + |Im(s + z)|)^{1/2 - Re s}.
double gamma_quotient_ratio(Complex s, Complex z);

struct SmoothKernel {
  enum class Kind { GaussPower, SqrtExpPower };

  Kind kind = Kind::GaussPower;
  // beta for GaussPower (Re beta >= -1), B for SqrtExpPower (imaginary part 0).
  Complex exponent = 0.0;

  static SmoothKernel gauss_power(Complex beta);
  static SmoothKernel sqrt_exp_power(double B);

  // Phi(x) for x > 0: x^beta e^{-x^2} or x^B e^{-sqrt x}.
  Complex operator()(double x) const;
};

// GaussPower: (1/2) Gamma((s + beta)/2); SqrtExpPower: 2 Gamma(2(s + B)).
Complex mellin_kernel(const SmoothKernel& kernel, Complex s);

struct ContourSpec {
  double sigma = 2.0;
  double T = 60.0;
  double step = 0.05;
};

using CoeffMap = std::map<std::uint64_t, Complex>;

// sum_m Phi(m/M) a(m) over a finitely supported map.
Complex smooth_sum_direct(const CoeffMap& coeffs, double M, const SmoothKernel& kernel);

// Same sum for coefficients given by a function of m. Summation stops once
// |Phi(m/M)| is decreasing and below 1e-16 times its largest value so far.
Complex smooth_sum_direct(const std::function<Complex(std::uint64_t)>& coeff, double M, const SmoothKernel& kernel);

struct ContourResult {
  Complex value;
  double error_estimate = 0.0;
};

// (1/2 pi) int_{-T}^{T} M^s L(s) Phi~(s) dt on Re s = sigma with
// L(s) = sum a(m) m^{-s}, by the trapezoid rule. The error estimate is the
// step-halving difference plus the truncated tail (4/pi)(|f(T)| + |f(-T)|)
// using the e^{-|t|/2} decay. Throws NumericalError when the estimate exceeds
// 1e-6 |I| + 1e-12 int |f|.
ContourResult smooth_sum_contour_detailed(const CoeffMap& coeffs, double M, const SmoothKernel& kernel,
                                          const ContourSpec& spec);
Complex smooth_sum_contour(const CoeffMap& coeffs, double M, const SmoothKernel& kernel, const ContourSpec& spec);

}  // namespace rsd
