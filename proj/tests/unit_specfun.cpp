/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file unit_specfun.cpp
 *  @brief Modified Bessel functions and spectral kernels against independent
 *         reference values (scipy.special, 17 significant digits).
 */

#include <doctest.h>

#include "hotcarrier/specfun.hpp"

#include "bessel_reference.hpp"

#include <cmath>
#include <stdexcept>

using namespace hotc;
using namespace hotc::specfun;

namespace {
double rel(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}
} // namespace

TEST_CASE("scaled K0/K1 reproduce the reference table across eight decades") {
  for (const auto& row : hotc_test::kBesselReference) {
    CAPTURE(row.x);
    CHECK(rel(bessel_k0_scaled(row.x), row.k0_scaled) < 1e-12);
    CHECK(rel(bessel_k1_scaled(row.x), row.k1_scaled) < 1e-12);
  }
}

TEST_CASE("unscaled K0/K1 at hand-checked points") {
  // Abramowitz & Stegun 9.8 tabulated values at x = 1.
  CHECK(rel(bessel_k0(1.0), 0.42102443824070833) < 1e-12);
  CHECK(rel(bessel_k1(1.0), 0.60190723019723457474) < 1e-12);
  // Deep exponential tail: the scaled form keeps full precision where the
  // unscaled value is within two decades of the smallest normal double.
  CHECK(rel(bessel_k1(700.0), 4.6731107967079661e-306) < 1e-10);
}

TEST_CASE("K0/K1 reject non-positive arguments") {
  CHECK_THROWS_AS((void)bessel_k0_scaled(0.0), std::domain_error);
  CHECK_THROWS_AS((void)bessel_k1_scaled(-1.0), std::domain_error);
}

TEST_CASE("series/continued-fraction handoff at x = 2 is seamless") {
  const double below = bessel_k1_scaled(2.0 - 1e-12);
  const double above = bessel_k1_scaled(2.0 + 1e-12);
  CHECK(rel(below, above) < 1e-10);
  const double b0 = bessel_k0_scaled(2.0 - 1e-12);
  const double a0 = bessel_k0_scaled(2.0 + 1e-12);
  CHECK(rel(b0, a0) < 1e-10);
}

TEST_CASE("emission and absorption kernels at frozen reference points") {
  // E(1) and |A(1)| from the same 17-digit reference evaluation.
  CHECK(rel(emission_kernel(1.0), 0.59774482602353090831) < 1e-12);
  CHECK(rel(std::abs(absorption_kernel(1.0)), 4.4167700523334115077) < 1e-12);
}

TEST_CASE("detailed balance |A(a)| e^{-2a} = E(a) over the full range") {
  for (int i = 0; i <= 99; ++i) {
    const double a = 1e-3 * std::pow(30.0 / 1e-3, i / 99.0);
    CAPTURE(a);
    const double lhs = std::abs(absorption_kernel(a)) * std::exp(-2.0 * a);
    CHECK(rel(lhs, emission_kernel(a)) < 1e-14);
  }
}

TEST_CASE("classical limit E -> 2 as the photon softens") {
  CHECK(std::abs(emission_kernel(1e-8) - emission_kernel_classical_limit) < 1e-6);
  // First correction is already visible at a = 1e-3 but stays below 0.5%.
  CHECK(rel(emission_kernel(1e-3), 2.0) < 5e-3);
}

TEST_CASE("quantum tail: bare asymptote vs corrected series") {
  // Frozen ratios E / [sqrt(pi/2) a^{3/2} e^{-2a}]: the bare asymptote is
  // still 16% low at a = 12 and converges only slowly.
  CHECK(rel(emission_kernel(12.0) / emission_kernel_quantum_asymptote(12.0),
            1.161782) < 1e-5);
  CHECK(rel(emission_kernel(15.0) / emission_kernel_quantum_asymptote(15.0),
            1.128560) < 1e-5);
  // At a = 700 both kernel and asymptote underflow (e^{-1400}), so form the
  // same ratio from the scaled core: E / asym = kernel_core_scaled(a) /
  // [sqrt(pi/2) sqrt(a)].
  const double a_deep = 700.0;
  const double ratio_deep = kernel_core_scaled(a_deep) /
                            (std::sqrt(0.5 * 3.14159265358979324 * a_deep));
  CHECK(rel(ratio_deep, 1.002680) < 1e-5);
  // The two-term corrected series closes most of the gap.
  CHECK(rel(emission_kernel(15.0), emission_kernel_quantum_series(15.0)) < 2e-3);
  CHECK(rel(ratio_deep, 1.0 + 15.0 / (8.0 * a_deep) +
                            75.0 / (128.0 * a_deep * a_deep)) < 1e-6);
}

TEST_CASE("d/da [K1(a)/a] closed form against central differences") {
  for (double a : {0.3, 1.0, 4.0, 9.0}) {
    CAPTURE(a);
    const double h = 1e-6 * a;
    const double fd =
        (bessel_k1(a + h) / (a + h) - bessel_k1(a - h) / (a - h)) / (2.0 * h);
    CHECK(rel(dda_k1_over_a(a), fd) < 1e-7);
  }
}

TEST_CASE("d/da [K1(a)/a] is algebraically -(a K0 + 2 K1)/a^2") {
  for (int i = 0; i <= 99; ++i) {
    const double a = 1e-3 * std::pow(30.0 / 1e-3, i / 99.0);
    CAPTURE(a);
    const double composite = -(a * bessel_k0(a) + 2.0 * bessel_k1(a)) / (a * a);
    CHECK(rel(dda_k1_over_a(a), composite) < 1e-13);
  }
}

TEST_CASE("second Legendre polynomial") {
  CHECK(legendre_p2(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(legendre_p2(0.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(std::abs(legendre_p2(1.0 / std::sqrt(3.0))) < 1e-15);
  CHECK_THROWS_AS((void)legendre_p2(1.5), std::domain_error);
}
