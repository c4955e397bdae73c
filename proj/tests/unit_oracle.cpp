/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file unit_oracle.cpp
 *  @brief Closed forms against the brute-force master-integral evaluators.
 *
 *  These are the in-process spot checks; the acceptance binary runs the
 *  full grids.  Each comparison pits an analytically reduced expression
 *  against a direct multi-dimensional quadrature of the underlying
 *  collision integral with no shared reduction steps.
 */

#include <doctest.h>

#include "hotcarrier/constants.hpp"
#include "hotcarrier/coulomb.hpp"
#include "hotcarrier/hotfield.hpp"
#include "hotcarrier/material.hpp"
#include "hotcarrier/oracle.hpp"

#include <cmath>

using namespace hotc;

namespace {
const double kT10 = kelvin_to_erg(10.0);
}

TEST_CASE("acoustic closed form agrees with the master integral") {
  const MaterialParams mat = germanium(kelvin_to_erg(5.0), 0.0);
  const Vec3 axis = normalized(Vec3{1.0, 1.0, 1.0});
  const double th = 50.0 * cgs::pi / 180.0;
  const Vec3 e2 = normalized(cross(axis, normalized(Vec3{1.0, -1.0, 0.0})));
  const Vec3 g0 = std::cos(th) * axis + std::sin(th) * e2;
  RadiationQuery q;
  q.omega = 2.0 * kT10 / cgs::hbar; // a = 1
  q.g0 = g0;
  (void)q;
  const OracleReport r = oracle_acoustic(mat, axis, 1e14, kT10, q.omega, g0,
                                         Branch::emission);
  CHECK(r.relative_discrepancy < 5e-3);
  CHECK(r.error_estimate > 0.0);
  CHECK(r.closed_form > 0.0);
  CHECK(r.brute_force > 0.0);
  CHECK(r.samples_or_nodes > 0);
}

TEST_CASE("impurity master integral adjudicates the momentum-transfer brace") {
  const MaterialParams mat = germanium(kelvin_to_erg(5.0), 1e15);
  const ScreeningParams scr =
      make_screening(mat, kT10, debye_radius(2e15, kT10, mat.chi0));
  const Vec3 axis{0.0, 0.0, 1.0};
  const double th = 30.0 * cgs::pi / 180.0;
  const Vec3 g0{std::sin(th), 0.0, std::cos(th)};
  const double omega = kT10 / cgs::hbar; // s = 1

  const OracleReport sum =
      oracle_coulomb(mat, axis, 1e15, kT10, omega, g0, scr, CoulombBrace::sum);
  CHECK(sum.relative_discrepancy < 1e-2);

  // The difference combination misses the integral by a large margin: the
  // brute force knows nothing about either closed form.
  const OracleReport diff = oracle_coulomb(mat, axis, 1e15, kT10, omega, g0,
                                           scr, CoulombBrace::difference);
  CHECK(diff.relative_discrepancy > 0.1);
}

TEST_CASE("field-distortion closed form agrees with the master integral") {
  MonoValleyModel m;
  m.m = 0.30 * cgs::m_electron;
  m.tau0 = 4.95002579905129583e-10;
  m.n = 1.0;
  m.T_e = kT10;
  m.T_lattice = kelvin_to_erg(5.0);
  m.theta0 = 0.0;
  m.F = std::sqrt(6.0 * 0.1 * m.m / m.T_lattice) * m.T_e / (cgs::e0 * m.tau0);
  const double omega = 2.0 * m.T_e / cgs::hbar;
  const OracleReport r = oracle_hotfield(m, omega);
  CHECK(r.relative_discrepancy < 1e-2);
}

TEST_CASE("oracle reports serialize to JSON") {
  OracleReport r;
  r.closed_form = 1.5;
  r.brute_force = 1.4999;
  r.error_estimate = 1e-5;
  r.relative_discrepancy = 6.7e-5;
  r.samples_or_nodes = 12345;
  const std::string s = r.to_json_string();
  CHECK(s.find("closed_form") != std::string::npos);
  CHECK(s.find("brute_force") != std::string::npos);
  CHECK(s.find("12345") != std::string::npos);
}
