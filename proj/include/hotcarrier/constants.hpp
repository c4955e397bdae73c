#ifndef HOTCARRIER_CONSTANTS_HPP
#define HOTCARRIER_CONSTANTS_HPP

/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file constants.hpp
 *  @brief CGS-Gaussian physical constants and boundary unit conversions.
 *
 *  Everything inside the library works in CGS-Gaussian units with
 *  temperatures and energies expressed in erg.  Kelvin, eV and V/cm are
 *  accepted only at the configuration boundary through the explicit
 *  converters below; they never appear implicitly in physics code.
 */

namespace hotc {

/// Physical constants in CGS-Gaussian units (CODATA 2018 exact values).
namespace cgs {
inline constexpr double e0          = 4.80320425e-10;     ///< elementary charge [statC]
inline constexpr double hbar        = 1.054571817e-27;    ///< reduced Planck constant [erg s]
inline constexpr double c_light     = 2.99792458e10;      ///< speed of light [cm/s]
inline constexpr double k_boltzmann = 1.380649e-16;       ///< Boltzmann constant [erg/K]
inline constexpr double m_electron  = 9.1093837015e-28;   ///< free-electron mass [g]
inline constexpr double erg_per_eV  = 1.602176634e-12;    ///< 1 eV in erg
inline constexpr double euler_gamma = 0.5772156649015329; ///< Euler–Mascheroni constant
inline constexpr double pi          = 3.141592653589793238462643383279502884;
/// 1 statvolt = 299.792458 volt, hence 1 statV/cm = 299.792458 V/cm.
inline constexpr double volt_per_statvolt = 299.792458;
} // namespace cgs

/// Temperature conversion: Kelvin -> erg.
constexpr double kelvin_to_erg(double T_kelvin) { return T_kelvin * cgs::k_boltzmann; }
/// Temperature conversion: erg -> Kelvin.
constexpr double erg_to_kelvin(double T_erg) { return T_erg / cgs::k_boltzmann; }
/// Energy conversion: eV -> erg.
constexpr double ev_to_erg(double E_eV) { return E_eV * cgs::erg_per_eV; }
/// Energy conversion: erg -> eV.
constexpr double erg_to_ev(double E_erg) { return E_erg / cgs::erg_per_eV; }
/// Electric field conversion: V/cm -> statV/cm.
constexpr double volt_per_cm_to_statvolt(double F_V_cm) { return F_V_cm / cgs::volt_per_statvolt; }
/// Electric field conversion: statV/cm -> V/cm.
constexpr double statvolt_to_volt_per_cm(double F_statV_cm) { return F_statV_cm * cgs::volt_per_statvolt; }

} // namespace hotc

#endif // HOTCARRIER_CONSTANTS_HPP
