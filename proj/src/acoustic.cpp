/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file acoustic.cpp
 *  @brief Acoustic deformation-potential emission/absorption closed forms.
 */

#include "hotcarrier/acoustic.hpp"

#include "hotcarrier/constants.hpp"
#include "hotcarrier/quadrature.hpp"
#include "hotcarrier/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hotc {

namespace {

/// Direction-dependent square of the acoustic vertex, without the common
/// T_lattice / (4 pi^2 hbar^4 rho) factor: both sound branches weighted by
/// their inverse squared speeds.  g = (l0 . q-hat)^2.
double vertex_profile(const MaterialParams& mat, double g) {
  const double longitudinal = mat.sigma_d + mat.sigma_u * g;
  return longitudinal * longitudinal / (mat.s_par * mat.s_par) +
         mat.sigma_u * mat.sigma_u * g * (1.0 - g) / (mat.s_perp * mat.s_perp);
}

/// (l0 . q-hat)^2 on the equilibrium ellipsoid as a function of the
/// direction cosine mu measured in the mass-deformed frame.
double g_of_mu2(const MaterialParams& mat, double mu2) {
  return mat.m_par * mu2 / (mat.m_perp * (1.0 - mu2) + mat.m_par * mu2);
}

void check_deformation_inputs(const MaterialParams& mat) {
  if (!(mat.m_perp > 0.0) || !(mat.m_par > mat.m_perp) || !(mat.rho > 0.0) ||
      !(mat.s_par > 0.0) || !(mat.s_perp > 0.0) || !(mat.T_lattice > 0.0)) {
    throw std::invalid_argument(
        "acoustic_relaxation_times: masses, density, sound speeds and "
        "T_lattice must be positive with m_par > m_perp");
  }
}

/// Common spontaneous-emission prefactor 2 e0^2 / (3 pi^{5/2} c^3 sqrt(T_lattice)).
double emission_prefactor(const MaterialParams& mat) {
  const double c3 = cgs::c_light * cgs::c_light * cgs::c_light;
  return 2.0 * cgs::e0 * cgs::e0 /
         (3.0 * std::pow(cgs::pi, 2.5) * c3 * std::sqrt(mat.T_lattice));
}

bool matches_ge_quartet(const ValleySet& valleys) {
  const ValleySet ge = ge_valleys();
  if (valleys.size() != ge.size()) return false;
  constexpr double tol = 1e-12;
  for (std::size_t k = 0; k < ge.size(); ++k) {
    const Vec3 d = valleys.axes[k] - ge.axes[k];
    if (std::fabs(d.x) > tol || std::fabs(d.y) > tol || std::fabs(d.z) > tol) return false;
  }
  return true;
}

bool hot_valleys_in_common_state(const CarrierState& carriers) {
  if (carriers.size() != 4) return false;
  const ValleyCarriers& v2 = carriers.valleys[1];
  return carriers.valleys[2].n == v2.n && carriers.valleys[2].T == v2.T &&
         carriers.valleys[3].n == v2.n && carriers.valleys[3].T == v2.T;
}

} // namespace

double acoustic_w(const MaterialParams& mat, const Vec3& q, const Vec3& l0) {
  check_deformation_inputs(mat);
  if (norm(q) == 0.0) throw std::invalid_argument("acoustic_w: phonon direction cannot be zero");
  const Vec3 qhat = normalized(q);
  const Vec3 lhat = normalized(l0);
  const double cosql = dot(lhat, qhat);
  double g = cosql * cosql;
  if (g > 1.0) g = 1.0;
  const double hbar4 = cgs::hbar * cgs::hbar * cgs::hbar * cgs::hbar;
  return mat.T_lattice / (4.0 * cgs::pi * cgs::pi * hbar4 * mat.rho) *
         vertex_profile(mat, g);
}

std::pair<double, double> acoustic_relaxation_times(const MaterialParams& mat) {
  check_deformation_inputs(mat);

  // Angular averages of the vertex profile over the equilibrium ellipsoid,
  // weighted for the transverse (1 - mu^2) and longitudinal (mu^2) momentum
  // relaxation channels.
  const auto nodes = quad::gauss_legendre(512, -1.0, 1.0);
  double j_perp = 0.0;
  double j_par = 0.0;
  for (const auto& node : nodes) {
    const double mu2 = node.x * node.x;
    const double wt = vertex_profile(mat, g_of_mu2(mat, mu2));
    j_perp += node.w * (1.0 - mu2) * wt;
    j_par += node.w * mu2 * wt;
  }

  const double hbar4 = cgs::hbar * cgs::hbar * cgs::hbar * cgs::hbar;
  const double c0 = 3.0 / (std::sqrt(2.0) * cgs::pi) * mat.m_perp *
                    std::sqrt(mat.m_par) * std::pow(mat.T_lattice, 1.5) /
                    (mat.rho * hbar4);

  const double inv_tau_perp = 0.5 * c0 * j_perp;
  const double inv_tau_par = c0 * j_par;
  return {1.0 / inv_tau_perp, 1.0 / inv_tau_par};
}

double delta_p_acoustic(const MaterialParams& mat, const Vec3& valley_axis,
                        double n, double T_e, const RadiationQuery& q,
                        double amplitude, Branch branch) {
  mat.validate();
  q.validate();
  if (!(n >= 0.0) || !(T_e > 0.0)) {
    throw std::invalid_argument("delta_p_acoustic: need n >= 0 and T_e > 0");
  }
  if (!std::isfinite(amplitude)) {
    throw std::invalid_argument("delta_p_acoustic: amplitude must be finite");
  }

  const double c0 = cos2_angle(normalized(valley_axis), q.g0);
  const double amp2_par = amplitude * amplitude * c0;
  const double amp2_perp = amplitude * amplitude * (1.0 - c0);
  const double brace = amp2_perp / (mat.m_perp * mat.tau_perp0) +
                       amp2_par / (mat.m_par * mat.tau_par0);

  const double a = q.a(T_e);
  const double pref = 2.0 * cgs::e0 * cgs::e0 / (3.0 * std::sqrt(cgs::pi)) * n *
                      std::pow(T_e, 1.5) /
                      (std::sqrt(mat.T_lattice) * cgs::c_light * cgs::c_light *
                       cgs::hbar * q.omega);

  const double absorbed = pref * brace * a * specfun::kernel_core_scaled(a);
  if (branch == Branch::absorption) return absorbed;
  return -std::exp(-2.0 * a) * absorbed;
}

std::pair<double, double> acoustic_emission_channels(const MaterialParams& mat,
                                                     double n, double T_e,
                                                     double omega) {
  if (!(n >= 0.0) || !(T_e > 0.0) || !(omega > 0.0)) {
    throw std::invalid_argument(
        "acoustic_emission_channels: need n >= 0, T_e > 0, omega > 0");
  }
  const double a = 0.5 * cgs::hbar * omega / T_e;
  const double common = emission_prefactor(mat) * n * std::pow(T_e, 1.5) *
                        specfun::emission_kernel(a);
  return {common / (mat.m_perp * mat.tau_perp0),
          common / (mat.m_par * mat.tau_par0)};
}

AngularDecomposition channel_decomposition_111(double Qp1, double Ql1,
                                               double Qp2, double Ql2) {
  const double dq1 = Ql1 - Qp1;
  const double dq2 = Ql2 - Qp2;
  AngularDecomposition dec;
  dec.a2 = 0.5 * (dq1 - dq2);
  dec.a0 = Qp1 + 3.0 * Qp2 + 0.5 * dq1 + (5.0 / 6.0) * dq2;
  const double r = 1.0 / std::sqrt(3.0);
  dec.reference_axis = Vec3{r, r, r};
  if (std::fabs(dec.a2) > dec.a0 * (1.0 + 1e-12)) {
    throw std::logic_error(
        "channel_decomposition_111: |a2| exceeded a0; channel weights are "
        "inconsistent with a non-negative angular law");
  }
  return dec;
}

AcousticEmission emission_acoustic(const MaterialParams& mat,
                                   const ValleySet& valleys,
                                   const CarrierState& carriers,
                                   const RadiationQuery& q) {
  mat.validate();
  valleys.validate();
  carriers.validate(valleys.size());
  q.validate();

  AcousticEmission out;
  out.per_valley.reserve(valleys.size());
  for (std::size_t k = 0; k < valleys.size(); ++k) {
    const ValleyCarriers& vc = carriers.valleys[k];
    const auto [q_perp, q_par] =
        acoustic_emission_channels(mat, vc.n, vc.T, q.omega);
    const double c = cos2_angle(valleys.axes[k], q.g0);
    const double w = (1.0 - c) * q_perp + c * q_par;
    out.per_valley.push_back(w);
    out.total += w;
  }

  if (matches_ge_quartet(valleys) && hot_valleys_in_common_state(carriers)) {
    const auto [qp1, ql1] = acoustic_emission_channels(
        mat, carriers.valleys[0].n, carriers.valleys[0].T, q.omega);
    const auto [qp2, ql2] = acoustic_emission_channels(
        mat, carriers.valleys[1].n, carriers.valleys[1].T, q.omega);
    out.decomposition = channel_decomposition_111(qp1, ql1, qp2, ql2);
  }
  return out;
}

double absorption_coefficient_acoustic(const MaterialParams& mat,
                                       const ValleySet& valleys,
                                       const CarrierState& carriers,
                                       const RadiationQuery& q) {
  mat.validate();
  valleys.validate();
  carriers.validate(valleys.size());
  q.validate();

  double sum = 0.0;
  for (std::size_t k = 0; k < valleys.size(); ++k) {
    const ValleyCarriers& vc = carriers.valleys[k];
    const double c = cos2_angle(valleys.axes[k], q.g0);
    const double brace = (1.0 - c) / (mat.m_perp * mat.tau_perp0) +
                         c / (mat.m_par * mat.tau_par0);
    const double a = q.a(vc.T);
    sum += vc.n * std::pow(vc.T, 1.5) * brace * (1.0 - std::exp(-2.0 * a)) *
           a * specfun::kernel_core_scaled(a);
  }

  const double pref = 16.0 * std::sqrt(cgs::pi) / 3.0 * cgs::e0 * cgs::e0 /
                      (std::sqrt(mat.chi0) * cgs::c_light * cgs::hbar *
                       q.omega * q.omega * q.omega * std::sqrt(mat.T_lattice));
  return pref * sum;
}

AngularDecomposition decompose_111(const MaterialParams& mat,
                                   const CarrierState& carriers,
                                   const RadiationQuery& q) {
  mat.validate();
  carriers.validate(4);
  if (!(q.omega > 0.0)) throw std::invalid_argument("decompose_111: omega must be positive");
  if (!hot_valleys_in_common_state(carriers)) {
    throw std::invalid_argument(
        "decompose_111: valleys 2..4 must share one (n, T) state");
  }

  const auto [qp1, ql1] = acoustic_emission_channels(
      mat, carriers.valleys[0].n, carriers.valleys[0].T, q.omega);
  const auto [qp2, ql2] = acoustic_emission_channels(
      mat, carriers.valleys[1].n, carriers.valleys[1].T, q.omega);
  return channel_decomposition_111(qp1, ql1, qp2, ql2);
}

} // namespace hotc
