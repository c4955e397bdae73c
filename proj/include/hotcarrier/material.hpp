#ifndef HOTCARRIER_MATERIAL_HPP
#define HOTCARRIER_MATERIAL_HPP

/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file material.hpp
 *  @brief Material, valley-geometry and carrier-state descriptions.
 *
 *  All quantities are CGS-Gaussian with temperatures in erg; use the
 *  converters in constants.hpp at the boundary.  The bundled n-Ge preset
 *  carries standard literature parameters for the four <111> conduction
 *  valleys of germanium; its acoustic relaxation-time scales are derived
 *  from the deformation-potential constants unless supplied explicitly.
 */

#include "hotcarrier/geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hotc {

/// Static description of a many-valley semiconductor.
struct MaterialParams {
  double m_perp = 0.0;    ///< transverse effective mass [g]
  double m_par = 0.0;     ///< longitudinal effective mass [g], > m_perp
  double sigma_d = 0.0;   ///< dilation deformation-potential constant [erg]
  double sigma_u = 0.0;   ///< uniaxial deformation-potential constant [erg]
  double rho = 0.0;       ///< crystal mass density [g/cm^3]
  double s_par = 0.0;     ///< longitudinal sound speed [cm/s]
  double s_perp = 0.0;    ///< transverse sound speed [cm/s]
  double chi0 = 0.0;      ///< static dielectric constant
  double T_lattice = 0.0; ///< lattice temperature [erg]
  double tau_perp0 = 0.0; ///< transverse acoustic relaxation-time scale [s]
  double tau_par0 = 0.0;  ///< longitudinal acoustic relaxation-time scale [s]
  double N_D = 0.0;       ///< ionized-donor concentration [cm^-3]

  /// Throws std::invalid_argument if any physical invariant is violated
  /// (positive masses, densities, speeds, temperatures, m_par > m_perp, ...).
  void validate() const;
};

/// Valley geometry: the set of ellipsoid rotation axes (unit vectors).
struct ValleySet {
  std::vector<Vec3> axes;

  std::size_t size() const { return axes.size(); }

  /// Throws std::invalid_argument unless every axis is unit length to 1e-12.
  void validate() const;
};

/// Population and temperature of a single valley.
struct ValleyCarriers {
  double n = 0.0; ///< electron concentration [cm^-3]
  double T = 0.0; ///< electron temperature [erg]
};

/// Per-valley hot-carrier state; index-aligned with a ValleySet.
struct CarrierState {
  std::vector<ValleyCarriers> valleys;

  std::size_t size() const { return valleys.size(); }
  double total_concentration() const;

  /// Throws std::invalid_argument unless the state has exactly valley_count
  /// entries with n >= 0 and T > 0.
  void validate(std::size_t valley_count) const;
};

/// One radiation-field query: photon frequency plus polarization direction.
struct RadiationQuery {
  double omega = 0.0; ///< angular frequency [rad/s]
  Vec3 g0;            ///< polarization unit vector

  /// Dimensionless photon-to-thermal ratio a = hbar*omega / (2*T).
  double a(double T) const;

  /// Throws std::invalid_argument unless omega > 0 and g0 is unit length.
  void validate() const;
};

/// Drift mobility of a Maxwellian gas with tau(eps) ~ eps^{-1/2}:
/// mu = (4 / (3 sqrt(pi))) * e0 * tau0 / m.
double mobility_from_tau(double m, double tau0);

/// Inverse of mobility_from_tau.
double tau_from_mobility(double m, double mobility);

/// Joule heating rate density of one valley in a static field F [statV/cm]:
/// n_k * ( mu_perp F^2 + (mu_par - mu_perp) (l_k . F)^2 ).
/// For m_par > m_perp (mu_perp > mu_par) the valley whose axis is most
/// aligned with F is heated least.
double joule_heating(double n_k, double mu_par, double mu_perp, const Vec3& l_k,
                     const Vec3& F);

/// n-Ge material preset at the given lattice temperature [erg] and donor
/// concentration [cm^-3].  Acoustic relaxation-time scales are derived from
/// the deformation constants unless explicit values are passed.
MaterialParams germanium(double T_lattice, double N_D,
                         std::optional<double> tau_perp0 = std::nullopt,
                         std::optional<double> tau_par0 = std::nullopt);

/// The four <111> conduction-valley axes of germanium:
/// (1,1,1), (-1,1,1), (1,-1,1), (-1,-1,1), each normalized.
ValleySet ge_valleys();

} // namespace hotc

#endif // HOTCARRIER_MATERIAL_HPP
