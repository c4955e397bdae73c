#ifndef HOTCARRIER_SPECFUN_HPP
#define HOTCARRIER_SPECFUN_HPP

/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file specfun.hpp
 *  @brief Modified Bessel functions K0/K1 and the photon-exchange kernels.
 *
 *  The spectral shape of one-phonon emission and absorption is carried by
 *  the dimensionless combination a*K0(a) + 2*K1(a), where
 *      a = hbar*omega / (2*T)
 *  compares the photon energy against the carrier temperature.  All kernels
 *  are evaluated through the exponentially scaled functions e^x K0(x) and
 *  e^x K1(x), so the detailed-balance identity
 *      |absorption_kernel(a)| * exp(-2a) == emission_kernel(a)
 *  holds to the last bit and no intermediate underflows before a ~ 350.
 *
 *  The Bessel evaluations are self-contained (power series below x = 2,
 *  Thompson–Barnett continued fraction above) so the kernel layer carries
 *  no external dependency; unit tests cross-check them against GSL and a
 *  frozen 50-digit reference table.
 */

namespace hotc::specfun {

/// Exponentially scaled modified Bessel function e^x K0(x), x > 0.
double bessel_k0_scaled(double x);

/// Exponentially scaled modified Bessel function e^x K1(x), x > 0.
double bessel_k1_scaled(double x);

/// Modified Bessel function K0(x), x > 0.  Underflows gracefully to 0 for
/// x beyond ~745 where the true value is subnormal.
double bessel_k0(double x);

/// Modified Bessel function K1(x), x > 0.  Underflows gracefully to 0.
double bessel_k1(double x);

/// The shared spectral core a*K0(a) + 2*K1(a) in scaled form:
/// e^a * (a*K0(a) + 2*K1(a)).  Strictly positive and decreasing appears
/// only after removing the e^a factor.
double kernel_core_scaled(double a);

/// Net absorption kernel  -a * e^a * (a*K0(a) + 2*K1(a)), a > 0.
/// Negative by convention: the carrier gas loses the query photon.
double absorption_kernel(double a);

/// Spontaneous-emission kernel  a * e^{-a} * (a*K0(a) + 2*K1(a)), a > 0.
/// Tends to 2 as a -> 0 (classical limit) and to
/// sqrt(pi/2) a^{3/2} e^{-2a} as a -> infinity (quantum limit).
double emission_kernel(double a);

/// Classical (a -> 0) limit of emission_kernel.
inline constexpr double emission_kernel_classical_limit = 2.0;

/// Leading-order quantum asymptote sqrt(pi/2) a^{3/2} e^{-2a} of
/// emission_kernel.  Truncation error is 15/(8a) relatively, i.e. still
/// 16% at a = 12; see emission_kernel_quantum_series for the corrected tail.
double emission_kernel_quantum_asymptote(double a);

/// Quantum asymptote with the next two series corrections,
/// sqrt(pi/2) a^{3/2} e^{-2a} [1 + 15/(8a) + 75/(128 a^2)].
double emission_kernel_quantum_series(double a);

/// Closed-form derivative d/da [ K1(a)/a ] = -(a*K0 + 2*K1)/a^2.
/// The emission kernel equals -a^3 e^{-a} times this derivative.
double dda_k1_over_a(double a);

/// Legendre polynomial P2(x) = (3x^2 - 1)/2; |x| <= 1 enforced.
double legendre_p2(double x);

} // namespace hotc::specfun

#endif // HOTCARRIER_SPECFUN_HPP
