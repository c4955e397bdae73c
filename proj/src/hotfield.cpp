/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file hotfield.cpp
 *  @brief Field-distortion channel: distorted Maxwellian and emission.
 */

#include "hotcarrier/hotfield.hpp"

#include "hotcarrier/acoustic.hpp"
#include "hotcarrier/constants.hpp"
#include "hotcarrier/quadrature.hpp"
#include "hotcarrier/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hotc {

namespace {

double sqr(double x) { return x * x; }

/// Emission prefactor of the isotropic single-valley gas:
/// 2 e0^2 / (3 pi^{5/2} c^3) * n T_e^{3/2} / (m tau0 sqrt(T_lattice)).
double mono_prefactor(const MonoValleyModel& model) {
  const double c3 = cgs::c_light * cgs::c_light * cgs::c_light;
  return 2.0 * sqr(cgs::e0) / (3.0 * std::pow(cgs::pi, 2.5) * c3) * model.n *
         std::pow(model.T_e, 1.5) /
         (model.m * model.tau0 * std::sqrt(model.T_lattice));
}

} // namespace

double MonoValleyModel::beta() const { return beta_tilde() / 6.0; }

double MonoValleyModel::beta_tilde() const {
  return sqr(cgs::e0 * F * tau0) * T_lattice / (m * T_e * T_e);
}

void MonoValleyModel::validate() const {
  if (!(m > 0.0)) throw std::invalid_argument("MonoValleyModel: m must be positive");
  if (!(tau0 > 0.0)) throw std::invalid_argument("MonoValleyModel: tau0 must be positive");
  if (!(F >= 0.0)) throw std::invalid_argument("MonoValleyModel: F must be non-negative");
  if (!std::isfinite(theta0)) throw std::invalid_argument("MonoValleyModel: theta0 must be finite");
  if (!(n >= 0.0)) throw std::invalid_argument("MonoValleyModel: n must be non-negative");
  if (!(T_e > 0.0)) throw std::invalid_argument("MonoValleyModel: T_e must be positive");
  if (!(T_lattice > 0.0)) throw std::invalid_argument("MonoValleyModel: T_lattice must be positive");
}

double f2_correction(const MonoValleyModel& model, double eps) {
  model.validate();
  if (!(eps > 0.0)) throw std::invalid_argument("f2_correction: eps must be positive");

  const double maxwell = model.n /
                         std::pow(2.0 * cgs::pi * model.m * model.T_e, 1.5) *
                         std::exp(-eps / model.T_e);
  const double shape = (4.0 / 3.0) * sqr(cgs::e0 * model.F * model.tau0) *
                       (model.T_lattice / model.T_e) / model.m *
                       (1.0 / model.T_e + 0.5 / eps);
  return shape * maxwell;
}

double emission_isotropic(const MonoValleyModel& model, double omega) {
  model.validate();
  if (!(omega > 0.0)) throw std::invalid_argument("emission_isotropic: omega must be positive");
  const double a = 0.5 * cgs::hbar * omega / model.T_e;
  return mono_prefactor(model) * specfun::emission_kernel(a);
}

double emission_distorted(const MonoValleyModel& model, double omega,
                          DistortionBracket bracket) {
  model.validate();
  if (!(omega > 0.0)) throw std::invalid_argument("emission_distorted: omega must be positive");
  if (!(model.beta() < 1.0)) {
    throw std::domain_error(
        "emission_distorted: distortion strength beta >= 1; the expansion "
        "in the heating field does not apply");
  }

  const double a = 0.5 * cgs::hbar * omega / model.T_e;
  const double p2 = specfun::legendre_p2(std::cos(model.theta0));
  const double k0s = specfun::bessel_k0_scaled(a);
  const double k1s = specfun::bessel_k1_scaled(a);
  const double damp = a * std::exp(-2.0 * a);

  double corr = 0.0;
  switch (bracket) {
    case DistortionBracket::validated:
      corr = (4.0 / 15.0) * model.beta_tilde() * p2 * damp *
             (a * k0s + (a + 2.5) * k1s);
      break;
    case DistortionBracket::printed:
      corr = (2.0 / 15.0) * model.beta_tilde() * p2 * damp *
             (a * k0s + (2.0 * a + 2.5) * k1s);
      break;
  }

  return mono_prefactor(model) * (specfun::emission_kernel(a) + corr);
}

double isotropic_substitution_check(const MaterialParams& mat,
                                    const MonoValleyModel& model, double omega,
                                    double perturb) {
  mat.validate();
  // Only n and T_e are read from the model (the substitution replaces its
  // mass and relaxation time), so do not demand a fully populated model.
  if (!(model.n > 0.0) || !(model.T_e > 0.0)) {
    throw std::invalid_argument(
        "isotropic_substitution_check: model needs positive n and T_e");
  }
  if (!(omega > 0.0) || !(perturb > 0.0)) {
    throw std::invalid_argument(
        "isotropic_substitution_check: omega and perturb must be positive");
  }

  // Single-valley side with the substituted inverse mass-time product.
  const double inv_mtau = perturb / 3.0 *
                          (2.0 / (mat.m_perp * mat.tau_perp0) +
                           1.0 / (mat.m_par * mat.tau_par0));
  const double a = 0.5 * cgs::hbar * omega / model.T_e;
  const double c3 = cgs::c_light * cgs::c_light * cgs::c_light;
  const double mono = 2.0 * sqr(cgs::e0) /
                      (3.0 * std::pow(cgs::pi, 2.5) * c3) * model.n *
                      std::pow(model.T_e, 1.5) * inv_mtau /
                      std::sqrt(mat.T_lattice) * specfun::emission_kernel(a);

  // Four equivalent valleys sharing the same total population.
  const ValleySet valleys = ge_valleys();
  CarrierState carriers;
  carriers.valleys.assign(4, ValleyCarriers{0.25 * model.n, model.T_e});
  RadiationQuery q;
  q.omega = omega;
  q.g0 = Vec3{0.0, 0.0, 1.0};
  const double multi = emission_acoustic(mat, valleys, carriers, q).total;

  const double scale = std::max(std::fabs(mono), std::fabs(multi));
  if (scale == 0.0) return 0.0;
  return std::fabs(mono - multi) / scale;
}

double f1_cancellation_residual(const MonoValleyModel& model) {
  model.validate();

  // Azimuth-averaged polarization weight of the momentum transfer
  // w = p' - p at unit radii: (1/2) sin^2(theta0) w_perp^2
  //                           + cos^2(theta0) w_z^2.
  // The first angular harmonic multiplies this even weight by the odd
  // factor mu_p, so its angular integral cancels identically.
  const double sin2 = sqr(std::sin(model.theta0));
  const double cos2 = sqr(std::cos(model.theta0));
  const double p = 1.0;
  const double pprime = 0.7;

  const auto mu_nodes = quad::gauss_legendre(64, -1.0, 1.0);
  const std::size_t nphi = 64;
  const double dphi = 2.0 * cgs::pi / static_cast<double>(nphi);

  double odd = 0.0;
  double even = 0.0;
  for (const auto& np : mu_nodes) {
    const double mu_p = np.x;
    const double sp = std::sqrt(std::max(0.0, 1.0 - mu_p * mu_p));
    for (const auto& nc : mu_nodes) {
      const double mu_c = nc.x;
      const double sc = std::sqrt(std::max(0.0, 1.0 - mu_c * mu_c));
      for (std::size_t j = 0; j < nphi; ++j) {
        const double phi = (static_cast<double>(j) + 0.5) * dphi;
        const double wz = pprime * mu_c - p * mu_p;
        const double pdot = p * pprime * (mu_p * mu_c + sp * sc * std::cos(phi));
        const double w2 = p * p + pprime * pprime - 2.0 * pdot;
        const double wperp2 = std::max(0.0, w2 - wz * wz);
        const double weight = 0.5 * sin2 * wperp2 + cos2 * wz * wz;
        const double measure = np.w * nc.w * dphi;
        odd += measure * mu_p * weight;
        even += measure * weight;
      }
    }
  }
  return std::fabs(odd) / even;
}

} // namespace hotc
