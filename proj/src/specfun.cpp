/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file specfun.cpp
 *  @brief Self-contained K0/K1 evaluation and the photon-exchange kernels.
 */

#include "hotcarrier/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hotc::specfun {

namespace {

constexpr double kEulerGamma = 0.5772156649015329;
constexpr double kPi = 3.141592653589793238462643383279502884;

struct ScaledK {
  double k0s; ///< e^x K0(x)
  double k1s; ///< e^x K1(x)
};

/// Power series for 0 < x < 2 (Abramowitz & Stegun 9.6.10 / 9.6.11),
/// returned in scaled form.  The companion sums over harmonic numbers are
/// accumulated in the same loop as I0 and I1; terms fall off like
/// (x^2/4)^k / (k!)^2 so convergence to double precision needs < 25 terms.
ScaledK k0k1_series(double x) {
  const double t = 0.25 * x * x;
  const double lh = std::log(0.5 * x);

  double term0 = 1.0;  // t^k / (k!)^2
  double term1 = 1.0;  // t^k / (k! (k+1)!)
  double h_k = 0.0;    // harmonic number H_k
  double h_k1 = 1.0;   // harmonic number H_{k+1}
  double i0 = 1.0;
  double i1_sum = 1.0;
  double s0 = 0.0;                                  // sum_{k>=1} H_k t^k/(k!)^2
  double s1 = (0.0 + 1.0 - 2.0 * kEulerGamma);      // k = 0 term of the K1 companion sum

  for (int k = 1; k <= 40; ++k) {
    term0 *= t / (static_cast<double>(k) * k);
    term1 *= t / (static_cast<double>(k) * (k + 1));
    h_k += 1.0 / k;
    h_k1 += 1.0 / (k + 1);
    i0 += term0;
    i1_sum += term1;
    s0 += h_k * term0;
    s1 += (h_k + h_k1 - 2.0 * kEulerGamma) * term1;
    if (term0 < 1e-19 * i0 && term1 < 1e-19 * i1_sum) break;
  }

  const double i1 = 0.5 * x * i1_sum;
  const double k0 = -(lh + kEulerGamma) * i0 + s0;
  const double k1 = 1.0 / x + lh * i1 - 0.25 * x * s1;
  const double ex = std::exp(x);
  return {k0 * ex, k1 * ex};
}

/// Steed/Thompson–Barnett continued fraction (CF2) for x >= 2 at order
/// nu = 0, following the classical bessik recurrence; returns scaled K0/K1.
ScaledK k0k1_continued_fraction(double x) {
  constexpr double kEps = 1e-16;
  constexpr int kMaxIter = 1000;

  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25; // 1/4 - nu^2 with nu = 0
  double q = a1;
  double ccf = a1;
  double acf = -a1;
  double s = 1.0 + q * delh;

  bool converged = false;
  for (int i = 2; i <= kMaxIter; ++i) {
    acf -= 2.0 * (i - 1);
    ccf = -acf * ccf / i;
    const double qnew = (q1 - b * q2) / acf;
    q1 = q2;
    q2 = qnew;
    q += ccf * qnew;
    b += 2.0;
    d = 1.0 / (b + acf * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::fabs(dels / s) <= kEps) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw std::runtime_error("bessel K: continued fraction did not converge");
  }

  h = a1 * h;
  const double k0s = std::sqrt(kPi / (2.0 * x)) / s;
  const double k1s = k0s * (x + 0.5 - h) / x;
  return {k0s, k1s};
}

ScaledK k0k1_scaled(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("modified Bessel K: argument must be positive");
  }
  return (x < 2.0) ? k0k1_series(x) : k0k1_continued_fraction(x);
}

} // namespace

double bessel_k0_scaled(double x) { return k0k1_scaled(x).k0s; }

double bessel_k1_scaled(double x) { return k0k1_scaled(x).k1s; }

double bessel_k0(double x) { return k0k1_scaled(x).k0s * std::exp(-x); }

double bessel_k1(double x) { return k0k1_scaled(x).k1s * std::exp(-x); }

double kernel_core_scaled(double a) {
  const ScaledK k = k0k1_scaled(a);
  return a * k.k0s + 2.0 * k.k1s;
}

double absorption_kernel(double a) {
  if (!(a > 0.0)) throw std::domain_error("absorption_kernel: a must be positive");
  return -a * kernel_core_scaled(a);
}

double emission_kernel(double a) {
  if (!(a > 0.0)) throw std::domain_error("emission_kernel: a must be positive");
  return a * kernel_core_scaled(a) * std::exp(-2.0 * a);
}

double emission_kernel_quantum_asymptote(double a) {
  if (!(a > 0.0)) throw std::domain_error("emission_kernel_quantum_asymptote: a must be positive");
  return std::sqrt(0.5 * kPi) * a * std::sqrt(a) * std::exp(-2.0 * a);
}

double emission_kernel_quantum_series(double a) {
  if (!(a > 0.0)) throw std::domain_error("emission_kernel_quantum_series: a must be positive");
  const double corr = 1.0 + 15.0 / (8.0 * a) + 75.0 / (128.0 * a * a);
  return emission_kernel_quantum_asymptote(a) * corr;
}

double dda_k1_over_a(double a) {
  if (!(a > 0.0)) throw std::domain_error("dda_k1_over_a: a must be positive");
  return -std::exp(-a) * kernel_core_scaled(a) / (a * a);
}

double legendre_p2(double x) {
  if (std::fabs(x) > 1.0) throw std::domain_error("legendre_p2: argument must satisfy |x| <= 1");
  return 0.5 * (3.0 * x * x - 1.0);
}

} // namespace hotc::specfun
