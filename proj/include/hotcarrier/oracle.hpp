#ifndef HOTCARRIER_ORACLE_HPP
#define HOTCARRIER_ORACLE_HPP

/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file oracle.hpp
 *  @brief Brute-force master-integral evaluators for cross-checking the
 *         closed forms, with node-refinement error estimates.
 *
 *  Each oracle reduces its master integral (thermal average over initial
 *  momenta, energy-conserving shell over final momenta, squared coupling
 *  vertex) to at most four nested quadratures in deformed valley
 *  coordinates — a derivation independent of the closed forms under test.
 *  Evaluation is deterministic: fixed Gauss–Legendre/midpoint grids and a
 *  pairwise reduction over radial slices in a fixed order.
 *
 *  The reported value is the refined pass (1.5x nodes per dimension, 1.25x
 *  for the impurity channel); the error estimate is the observed change
 *  from the base pass and bounds the next node-count doubling in practice
 *  because the grids converge spectrally.
 */

#include "hotcarrier/acoustic.hpp"
#include "hotcarrier/coulomb.hpp"
#include "hotcarrier/hotfield.hpp"
#include "hotcarrier/material.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace hotc {

/// Closed-form vs brute-force comparison outcome; JSON-serializable.
struct OracleReport {
  double closed_form = 0.0;
  double brute_force = 0.0;
  double error_estimate = 0.0;        ///< node-refinement change, > 0
  double relative_discrepancy = 0.0;  ///< |cf - bf| / max(|cf|, |bf|)
  std::size_t samples_or_nodes = 0;   ///< tensor-grid evaluations of the refined pass

  /// Compact single-object JSON rendering of all fields.
  std::string to_json_string() const;
};

/// Quadrature grid sizes for the brute-force passes.  nz is used only by
/// the impurity oracle (the forward-peaked angle variable); umax is the
/// radial cutoff in thermal units.
struct OracleGrid {
  std::size_t nv = 0;   ///< radial nodes
  std::size_t nmu = 0;  ///< polar nodes per momentum
  std::size_t nphi = 0; ///< relative-azimuth nodes
  std::size_t nz = 0;   ///< log-angle nodes (impurity channel only)
  double umax = 0.0;    ///< radial cutoff [sqrt(T_e) units]
};

/// Acoustic-channel master integral vs delta_p_acoustic for one valley.
/// branch selects photon absorption or spontaneous-emission kinematics;
/// both magnitudes are compared as positive numbers.
OracleReport oracle_acoustic(const MaterialParams& mat, const Vec3& valley_axis,
                             double n, double T_e, double omega, const Vec3& g0,
                             Branch branch,
                             std::optional<OracleGrid> grid = std::nullopt);

/// Screened-impurity master integral vs coulomb_p (absorption branch) for
/// one valley.  The brute force integrates the screened cross-section
/// directly, so comparing against brace_mode = sum adjudicates the
/// momentum-transfer combination: sum agrees, difference does not.
OracleReport oracle_coulomb(const MaterialParams& mat, const Vec3& valley_axis,
                            double n, double T_e, double omega, const Vec3& g0,
                            const ScreeningParams& screening,
                            CoulombBrace brace_mode,
                            std::optional<OracleGrid> grid = std::nullopt);

/// Field-distortion master integral (distorted Maxwellian, emission branch)
/// vs emission_distorted with the validated bracket.
OracleReport oracle_hotfield(const MonoValleyModel& model, double omega,
                             std::optional<OracleGrid> grid = std::nullopt);

} // namespace hotc

#endif // HOTCARRIER_ORACLE_HPP
