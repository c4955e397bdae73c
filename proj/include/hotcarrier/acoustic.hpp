#ifndef HOTCARRIER_ACOUSTIC_HPP
#define HOTCARRIER_ACOUSTIC_HPP

/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file acoustic.hpp
 *  @brief Acoustic deformation-potential channel: emission, absorption and
 *         the cos(2 phi) polarization decomposition.
 *
 *  Per valley, both the absorbed power density and the spontaneous emission
 *  rate factor into a polarization weight
 *      (1 - c) / (m_perp tau_perp0) + c / (m_par tau_par0),
 *  where c = (l . g0)^2, times a spectral kernel from specfun.hpp.  For the
 *  four-valley <111> geometry with one cold valley this produces the
 *      W(phi) = A0 + A2 cos(2 phi)
 *  angular law that the sweep scenarios expose.
 *
 *  Emitted power densities are per unit solid angle of the emitted photon
 *  and per unit angular frequency, in erg / (s cm^3 sr); multiply by 4*pi
 *  (kFullSolidAngle) for isotropic totals.
 */

#include "hotcarrier/geometry.hpp"
#include "hotcarrier/material.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hotc {

/// Which side of the photon exchange a rate refers to.
enum class Branch {
  absorption, ///< net power taken from the radiation field (positive)
  emission    ///< spontaneous emission; power returned (reported negative by delta_p_acoustic)
};

/// Solid angle of the full sphere, for integrating per-steradian rates.
inline constexpr double kFullSolidAngle = 4.0 * 3.141592653589793238462643383279502884;

/// Coefficients of the polarization-angle law W(phi) = a0 + a2 cos(2 phi),
/// with phi measured from reference_axis's projection in the sweep plane.
struct AngularDecomposition {
  double a0 = 0.0;     ///< isotropic part, same units as the decomposed rate
  double a2 = 0.0;     ///< cos(2 phi) amplitude; |a2| <= a0 always
  Vec3 reference_axis; ///< cold-valley axis defining phi = 0
};

/// Result of a polarization-resolved emission evaluation over all valleys.
struct AcousticEmission {
  std::vector<double> per_valley; ///< emitted power density per valley, >= 0
  double total = 0.0;             ///< sum over valleys
  /// Present when the valley set is the <111> quartet with valleys 2..4 in a
  /// common state, i.e. when a pure cos(2 phi) law exists.
  std::optional<AngularDecomposition> decomposition;
};

/// Squared acoustic coupling (deformation-potential vertex) for a phonon of
/// wavevector direction q in a valley with axis l0:
///   W_a(q) = T_lattice / (4 pi^2 hbar^4 rho)
///            * [ (sigma_d + sigma_u g)^2 / s_par^2
///                + sigma_u^2 g (1 - g) / s_perp^2 ],   g = (l0 . q-hat)^2.
/// Even in q; for q parallel to l0 only the longitudinal branch survives;
/// for sigma_u = 0 it is direction-independent.
double acoustic_w(const MaterialParams& mat, const Vec3& q, const Vec3& l0);

/// Acoustic relaxation-time scales (tau_perp0, tau_par0) of a Maxwellian at
/// the lattice temperature, from angular averages of acoustic_w over the
/// equilibrium ellipsoid.  1/tau(eps) = (1/tau0) sqrt(eps / T_lattice).
/// In the isotropic limit (m_par -> m_perp, sigma_u -> 0) both collapse to
/// pi rho hbar^4 s_par^2 / (sqrt(2) m^{3/2} sigma_d^2 T^{3/2}).
std::pair<double, double> acoustic_relaxation_times(const MaterialParams& mat);

/// Net absorbed (branch = absorption, positive) or spontaneously emitted
/// (branch = emission, negative) power density of one valley in a classical
/// radiation field of amplitude `amplitude` (statV/cm) polarized along
/// q.g0, in erg / (s cm^3).  The two branches obey the detailed-balance
/// ratio emission/absorption = -exp(-hbar omega / T_e).
double delta_p_acoustic(const MaterialParams& mat, const Vec3& valley_axis,
                        double n, double T_e, const RadiationQuery& q,
                        double amplitude, Branch branch);

/// Spontaneous-emission power density per unit solid angle and angular
/// frequency for polarization q.g0, per valley and total.
AcousticEmission emission_acoustic(const MaterialParams& mat,
                                   const ValleySet& valleys,
                                   const CarrierState& carriers,
                                   const RadiationQuery& q);

/// Free-carrier absorption coefficient [1/cm] of the acoustic channel for a
/// plane wave of frequency q.omega and polarization q.g0.
double absorption_coefficient_acoustic(const MaterialParams& mat,
                                       const ValleySet& valleys,
                                       const CarrierState& carriers,
                                       const RadiationQuery& q);

/// Per-valley polarization channel weights (Q_perp, Q_par) of the acoustic
/// emission, such that W_valley = (1 - c) Q_perp + c Q_par with
/// c = cos2_angle(l, g0).
std::pair<double, double> acoustic_emission_channels(const MaterialParams& mat,
                                                     double n, double T_e,
                                                     double omega);

/// A0/A2 coefficients for the <111> quartet from per-valley channel weights:
/// valley 1 (cold) carries (Qp1, Ql1), valleys 2..4 carry (Qp2, Ql2) each.
AngularDecomposition channel_decomposition_111(double Qp1, double Ql1,
                                               double Qp2, double Ql2);

/// Angular decomposition of the acoustic emission for the <111> quartet with
/// carriers = {(n1, T1), (n2, T2), (n2, T2), (n2, T2)}.
AngularDecomposition decompose_111(const MaterialParams& mat,
                                   const CarrierState& carriers,
                                   const RadiationQuery& q);

} // namespace hotc

#endif // HOTCARRIER_ACOUSTIC_HPP
