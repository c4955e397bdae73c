/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file material.cpp
 *  @brief Validation, boundary helpers and the n-Ge parameter preset.
 */

#include "hotcarrier/material.hpp"

#include "hotcarrier/acoustic.hpp"
#include "hotcarrier/constants.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hotc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

} // namespace

void MaterialParams::validate() const {
  require(m_perp > 0.0, "MaterialParams: m_perp must be positive");
  require(m_par > 0.0, "MaterialParams: m_par must be positive");
  require(m_par > m_perp, "MaterialParams: m_par must exceed m_perp (prolate valleys)");
  require(rho > 0.0, "MaterialParams: rho must be positive");
  require(s_par > 0.0, "MaterialParams: s_par must be positive");
  require(s_perp > 0.0, "MaterialParams: s_perp must be positive");
  require(chi0 >= 1.0, "MaterialParams: chi0 must be >= 1");
  require(T_lattice > 0.0, "MaterialParams: T_lattice must be positive");
  require(tau_perp0 > 0.0, "MaterialParams: tau_perp0 must be positive");
  require(tau_par0 > 0.0, "MaterialParams: tau_par0 must be positive");
  require(N_D >= 0.0, "MaterialParams: N_D must be non-negative");
  require(sigma_u * sigma_u + sigma_d * sigma_d > 0.0,
          "MaterialParams: deformation-potential constants cannot both vanish");
}

void ValleySet::validate() const {
  require(!axes.empty(), "ValleySet: at least one valley axis is required");
  constexpr double tol = 1e-12;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    if (std::fabs(norm(axes[k]) - 1.0) > tol) {
      std::ostringstream msg;
      msg << "ValleySet: axis " << k << " is not unit length to 1e-12";
      throw std::invalid_argument(msg.str());
    }
  }
}

double CarrierState::total_concentration() const {
  double n = 0.0;
  for (const ValleyCarriers& v : valleys) n += v.n;
  return n;
}

void CarrierState::validate(std::size_t valley_count) const {
  if (valleys.size() != valley_count) {
    std::ostringstream msg;
    msg << "CarrierState: expected " << valley_count << " valley entries, got "
        << valleys.size();
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t k = 0; k < valleys.size(); ++k) {
    if (!(valleys[k].n >= 0.0) || !(valleys[k].T > 0.0)) {
      std::ostringstream msg;
      msg << "CarrierState: valley " << k
          << " needs n >= 0 and T > 0 (erg)";
      throw std::invalid_argument(msg.str());
    }
  }
}

double RadiationQuery::a(double T) const {
  if (!(T > 0.0)) throw std::invalid_argument("RadiationQuery::a: temperature must be positive");
  return 0.5 * cgs::hbar * omega / T;
}

void RadiationQuery::validate() const {
  require(omega > 0.0, "RadiationQuery: omega must be positive");
  require(std::fabs(norm(g0) - 1.0) <= 1e-9,
          "RadiationQuery: g0 must be a unit vector (|norm-1| <= 1e-9)");
}

double mobility_from_tau(double m, double tau0) {
  require(m > 0.0 && tau0 > 0.0, "mobility_from_tau: m and tau0 must be positive");
  return 4.0 / (3.0 * std::sqrt(cgs::pi)) * cgs::e0 * tau0 / m;
}

double tau_from_mobility(double m, double mobility) {
  require(m > 0.0 && mobility > 0.0, "tau_from_mobility: m and mobility must be positive");
  return mobility * m * 3.0 * std::sqrt(cgs::pi) / (4.0 * cgs::e0);
}

double joule_heating(double n_k, double mu_par, double mu_perp, const Vec3& l_k,
                     const Vec3& F) {
  require(n_k >= 0.0, "joule_heating: concentration must be non-negative");
  require(mu_par > 0.0 && mu_perp > 0.0, "joule_heating: mobilities must be positive");
  require(std::fabs(norm(l_k) - 1.0) <= 1e-9, "joule_heating: valley axis must be unit length");
  const double F2 = dot(F, F);
  const double Fl = dot(l_k, F);
  return n_k * (mu_perp * F2 + (mu_par - mu_perp) * Fl * Fl);
}

MaterialParams germanium(double T_lattice, double N_D,
                         std::optional<double> tau_perp0,
                         std::optional<double> tau_par0) {
  require(T_lattice > 0.0, "germanium: T_lattice must be positive (erg)");
  require(N_D >= 0.0, "germanium: N_D must be non-negative");

  MaterialParams mat;
  mat.m_perp = 0.082 * cgs::m_electron;
  mat.m_par = 1.59 * cgs::m_electron;
  mat.sigma_d = ev_to_erg(-6.4);
  mat.sigma_u = ev_to_erg(16.2);
  mat.rho = 5.323;
  mat.s_par = 5.4e5;
  mat.s_perp = 3.35e5;
  mat.chi0 = 16.0;
  mat.T_lattice = T_lattice;
  mat.N_D = N_D;

  if (tau_perp0 && tau_par0) {
    mat.tau_perp0 = *tau_perp0;
    mat.tau_par0 = *tau_par0;
  } else if (!tau_perp0 && !tau_par0) {
    const auto taus = acoustic_relaxation_times(mat);
    mat.tau_perp0 = taus.first;
    mat.tau_par0 = taus.second;
  } else {
    throw std::invalid_argument(
        "germanium: supply both relaxation-time scales or neither");
  }

  mat.validate();
  return mat;
}

ValleySet ge_valleys() {
  const double r = 1.0 / std::sqrt(3.0);
  ValleySet set;
  set.axes = {
      Vec3{r, r, r},
      Vec3{-r, r, r},
      Vec3{r, -r, r},
      Vec3{-r, -r, r},
  };
  return set;
}

} // namespace hotc
