/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file oracle.cpp
 *  @brief Deterministic brute-force master integrals in deformed valley
 *         coordinates.
 */

#include "hotcarrier/oracle.hpp"

#include "hotcarrier/constants.hpp"
#include "hotcarrier/quadrature.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hotc {

namespace {

double sqr(double x) { return x * x; }

/// Squared deformation-potential vertex weight; g = (l0 . qhat)^2.
double vertex_profile(const MaterialParams& mat, double g) {
  const double lng = mat.sigma_d + mat.sigma_u * g;
  return lng * lng / sqr(mat.s_par) +
         sqr(mat.sigma_u) * g * (1.0 - g) / sqr(mat.s_perp);
}

/// (l0 . qhat)^2 from the deformed-frame direction cosine squared.
double g_of_mu2(const MaterialParams& mat, double mu2) {
  return mat.m_par * mu2 / (mat.m_perp * (1.0 - mu2) + mat.m_par * mu2);
}

OracleGrid scaled(const OracleGrid& g, double factor) {
  const auto scale = [factor](std::size_t n) {
    return n == 0 ? std::size_t{0}
                  : static_cast<std::size_t>(std::lround(factor * static_cast<double>(n)));
  };
  return {scale(g.nv), scale(g.nmu), scale(g.nphi), scale(g.nz), g.umax};
}

/// Midpoint azimuth grid over [0, 2 pi): cos(phi_j) and the common weight.
struct AzimuthGrid {
  std::vector<double> cphi;
  double weight;
};

AzimuthGrid azimuth_grid(std::size_t nphi) {
  AzimuthGrid g;
  g.cphi.resize(nphi);
  g.weight = 2.0 * cgs::pi / static_cast<double>(nphi);
  for (std::size_t j = 0; j < nphi; ++j) {
    g.cphi[j] = std::cos((static_cast<double>(j) + 0.5) * g.weight);
  }
  return g;
}

/// Valley-frame squared polarization components (perp, par) from the
/// invariant angle factor.
std::pair<double, double> polarization_components(const Vec3& valley_axis,
                                                  const Vec3& g0) {
  const double c0 = cos2_angle(normalized(valley_axis), g0);
  return {1.0 - c0, c0};
}

OracleReport assemble_report(double closed_form, double coarse, double fine,
                             std::size_t fine_samples) {
  OracleReport r;
  r.closed_form = closed_form;
  r.brute_force = fine;
  r.error_estimate =
      std::max(std::fabs(fine - coarse), 1e-12 * std::fabs(fine));
  const double scale = std::max(std::fabs(closed_form), std::fabs(fine));
  r.relative_discrepancy =
      scale == 0.0 ? 0.0 : std::fabs(closed_form - fine) / scale;
  r.samples_or_nodes = fine_samples;
  return r;
}

// ---------------------------------------------------------------------------
// Acoustic channel
// ---------------------------------------------------------------------------

double brute_acoustic(const MaterialParams& mat, double n, double T_e,
                      double omega, double ax2, double az2, Branch branch,
                      const OracleGrid& grid) {
  const double kappa2 = mat.m_perp / mat.m_par;
  const double hw = cgs::hbar * omega;

  const double ulo = (branch == Branch::emission) ? std::sqrt(hw / T_e) : 0.0;
  if (ulo >= grid.umax) return 0.0;

  const auto u_nodes = quad::gauss_legendre(grid.nv, ulo, grid.umax);
  const auto mu_nodes = quad::gauss_legendre(grid.nmu, -1.0, 1.0);
  const auto az = azimuth_grid(grid.nphi);

  const double branch_sign = (branch == Branch::emission) ? -1.0 : 1.0;
  const double vth = std::sqrt(2.0 * T_e);

  std::vector<double> s_mu(grid.nmu);
  for (std::size_t i = 0; i < grid.nmu; ++i) {
    s_mu[i] = std::sqrt(std::max(0.0, 1.0 - sqr(mu_nodes[i].x)));
  }

  std::vector<double> slices;
  slices.reserve(grid.nv);
  for (const auto& un : u_nodes) {
    const double v = vth * un.x;
    const double v2 = v * v;
    const double vp2 = v2 + branch_sign * 2.0 * hw;
    if (!(vp2 > 0.0)) {
      slices.push_back(0.0);
      continue;
    }
    const double vp = std::sqrt(vp2);

    double ang = 0.0;
    for (std::size_t iv = 0; iv < grid.nmu; ++iv) {
      const double muv = mu_nodes[iv].x;
      const double sv = s_mu[iv];
      for (std::size_t ip = 0; ip < grid.nmu; ++ip) {
        const double mup = mu_nodes[ip].x;
        const double wz = vp * mup - v * muv;
        const double wz2 = wz * wz;
        const double dot0 = v * vp * muv * mup;
        const double dotc = v * vp * sv * s_mu[ip];
        const double wmu = mu_nodes[iv].w * mu_nodes[ip].w * az.weight;
        double phi_sum = 0.0;
        for (std::size_t j = 0; j < az.cphi.size(); ++j) {
          const double w2 = v2 + vp2 - 2.0 * (dot0 + dotc * az.cphi[j]);
          const double wperp2 = std::max(w2 - wz2, 0.0);
          const double mu2w = (w2 > 0.0) ? wz2 / w2 : 0.0;
          const double wt = vertex_profile(mat, g_of_mu2(mat, mu2w));
          const double gam2 = 0.5 * ax2 * wperp2 + kappa2 * az2 * wz2;
          phi_sum += wt * gam2;
        }
        ang += wmu * phi_sum;
      }
    }
    slices.push_back(un.w * v2 * std::exp(-v2 / (2.0 * T_e)) * vp * ang);
  }

  const double total =
      quad::pairwise_sum(slices) * 2.0 * cgs::pi * vth;
  const double hbar4 = sqr(sqr(cgs::hbar));
  const double pref = hw * n / std::pow(2.0 * cgs::pi * T_e, 1.5) *
                      mat.m_perp * std::sqrt(mat.m_par) *
                      sqr(cgs::e0 / (2.0 * mat.m_perp * omega * cgs::c_light)) *
                      (mat.T_lattice / (4.0 * sqr(cgs::pi) * hbar4 * mat.rho)) *
                      (mat.m_perp / sqr(cgs::hbar));
  return pref * total;
}

// ---------------------------------------------------------------------------
// Screened-impurity channel
// ---------------------------------------------------------------------------

double brute_coulomb(const MaterialParams& mat, double n, double T_e,
                     double omega, double ax2, double az2,
                     const ScreeningParams& screening, const OracleGrid& grid) {
  const double kappa2 = mat.m_perp / mat.m_par;
  const double hw = cgs::hbar * omega;
  const double sc = sqr(cgs::hbar / screening.r_D);
  const double dm = mat.m_par - mat.m_perp;

  const auto u_nodes = quad::gauss_legendre(grid.nv, 0.0, grid.umax);
  const auto mu_nodes = quad::gauss_legendre(grid.nmu, -1.0, 1.0);
  const auto z_base = quad::gauss_legendre(grid.nz, 0.0, 1.0);
  const auto az = azimuth_grid(grid.nphi);

  const double vth = std::sqrt(2.0 * T_e);

  std::vector<double> s_mu(grid.nmu);
  for (std::size_t i = 0; i < grid.nmu; ++i) {
    s_mu[i] = std::sqrt(std::max(0.0, 1.0 - sqr(mu_nodes[i].x)));
  }

  std::vector<double> slices;
  slices.reserve(grid.nv);
  for (const auto& un : u_nodes) {
    const double v = vth * un.x;
    const double v2 = v * v;
    const double vp = std::sqrt(v2 + 2.0 * hw);
    const double zlo = std::log(mat.m_perp * sqr(vp - v) + sc);
    const double zhi = std::log(mat.m_perp * sqr(vp + v) + sc);
    const double zspan = zhi - zlo;
    const double inv_2vvp_m = 1.0 / (2.0 * v * vp * mat.m_perp);

    double ang = 0.0;
    for (const auto& zn : z_base) {
      const double zeta = zlo + zspan * zn.x;
      const double ez = std::exp(zeta);
      const double dz = zspan * zn.w;
      const double w2 = (ez - sc) / mat.m_perp;
      double mur = (v2 + vp * vp - w2) / (2.0 * v * vp);
      mur = std::clamp(mur, -1.0, 1.0);
      const double sr = std::sqrt(std::max(0.0, 1.0 - mur * mur));
      const double measure_z = dz * ez * inv_2vvp_m;

      for (std::size_t iv = 0; iv < grid.nmu; ++iv) {
        const double muv = mu_nodes[iv].x;
        const double sv = s_mu[iv];
        const double axial = vp * mur * muv - v * muv;
        const double swing = vp * sr * sv;
        const double wmeasure = mu_nodes[iv].w * measure_z * az.weight;
        double phi_sum = 0.0;
        for (std::size_t j = 0; j < az.cphi.size(); ++j) {
          const double wzc = axial - swing * az.cphi[j];
          const double wz2 = wzc * wzc;
          const double wperp2 = std::max(w2 - wz2, 0.0);
          const double d = ez + dm * wz2;
          const double gam2 = 0.5 * ax2 * wperp2 + kappa2 * az2 * wz2;
          phi_sum += gam2 / (d * d);
        }
        ang += wmeasure * phi_sum;
      }
    }
    slices.push_back(un.w * v2 * std::exp(-v2 / (2.0 * T_e)) * vp * ang);
  }

  const double total = quad::pairwise_sum(slices) * 2.0 * cgs::pi * vth;
  const double pref = hw * (4.0 * sqr(sqr(cgs::e0)) * mat.N_D / sqr(mat.chi0)) *
                      n / std::pow(2.0 * cgs::pi * T_e, 1.5) * mat.m_perp *
                      std::sqrt(mat.m_par) *
                      sqr(cgs::e0 / (2.0 * mat.m_perp * omega * cgs::c_light)) *
                      (mat.m_perp / sqr(cgs::hbar));
  return pref * total;
}

// ---------------------------------------------------------------------------
// Field-distortion channel
// ---------------------------------------------------------------------------

double brute_hotfield(const MonoValleyModel& model, double omega,
                      const OracleGrid& grid) {
  const double hw = cgs::hbar * omega;
  const double m = model.m;
  const double T_e = model.T_e;
  const double maxwell_norm =
      model.n / std::pow(2.0 * cgs::pi * m * T_e, 1.5);

  const double p_th = std::sqrt(2.0 * m * T_e);
  const double plo = std::sqrt(2.0 * m * hw);
  const double phi_r = grid.umax * p_th;
  if (plo >= phi_r) return 0.0;

  const auto p_nodes = quad::gauss_legendre(grid.nv, plo, phi_r);
  const auto mu_nodes = quad::gauss_legendre(grid.nmu, -1.0, 1.0);
  const auto az = azimuth_grid(grid.nphi);

  const double ax2 = sqr(std::sin(model.theta0));
  const double az2 = sqr(std::cos(model.theta0));
  const double r2_scale = (4.0 / 3.0) * sqr(cgs::e0 * model.F * model.tau0) *
                          (model.T_lattice / T_e) / m;

  std::vector<double> s_mu(grid.nmu), p2_mu(grid.nmu);
  for (std::size_t i = 0; i < grid.nmu; ++i) {
    const double mu = mu_nodes[i].x;
    s_mu[i] = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    p2_mu[i] = 0.5 * (3.0 * mu * mu - 1.0);
  }

  std::vector<double> slices;
  slices.reserve(grid.nv);
  for (const auto& pn : p_nodes) {
    const double p = pn.x;
    const double pp = std::sqrt(std::max(0.0, p * p - 2.0 * m * hw));
    const double eps = p * p / (2.0 * m);
    const double r2 = r2_scale * (1.0 / T_e + 0.5 / eps);

    double ang = 0.0;
    for (std::size_t ip = 0; ip < grid.nmu; ++ip) {
      const double mup = mu_nodes[ip].x;
      const double sp = s_mu[ip];
      const double fac = 1.0 + r2 * p2_mu[ip];
      for (std::size_t iq = 0; iq < grid.nmu; ++iq) {
        const double muq = mu_nodes[iq].x;
        const double wz = pp * muq - p * mup;
        const double wz2 = wz * wz;
        const double dot0 = p * pp * mup * muq;
        const double dotc = p * pp * sp * s_mu[iq];
        const double wmu = mu_nodes[ip].w * mu_nodes[iq].w * az.weight;
        double phi_sum = 0.0;
        for (std::size_t j = 0; j < az.cphi.size(); ++j) {
          const double w2 = p * p + pp * pp - 2.0 * (dot0 + dotc * az.cphi[j]);
          const double aw2 = 0.5 * ax2 * std::max(w2 - wz2, 0.0) + az2 * wz2;
          phi_sum += aw2;
        }
        ang += wmu * fac * phi_sum;
      }
    }
    slices.push_back(pn.w * p * p * std::exp(-eps / T_e) * pp * ang);
  }

  const double total =
      quad::pairwise_sum(slices) * maxwell_norm * 2.0 * cgs::pi * m;
  // Deformation weight scale of the isotropic model, rewritten through
  // tau0: W0 = 1 / (4 sqrt(2) pi m^{3/2} sqrt(T_lattice) tau0).
  const double w0 = 1.0 / (4.0 * std::sqrt(2.0) * cgs::pi *
                           std::pow(m, 1.5) * std::sqrt(model.T_lattice) *
                           model.tau0);
  const double pref =
      hw * w0 * sqr(cgs::e0 / (2.0 * m * omega * cgs::c_light * cgs::hbar));
  return pref * total;
}

} // namespace

std::string OracleReport::to_json_string() const {
  nlohmann::json j;
  j["closed_form"] = closed_form;
  j["brute_force"] = brute_force;
  j["error_estimate"] = error_estimate;
  j["relative_discrepancy"] = relative_discrepancy;
  j["samples_or_nodes"] = samples_or_nodes;
  return j.dump();
}

OracleReport oracle_acoustic(const MaterialParams& mat, const Vec3& valley_axis,
                             double n, double T_e, double omega, const Vec3& g0,
                             Branch branch, std::optional<OracleGrid> grid) {
  mat.validate();
  if (!(n >= 0.0) || !(T_e > 0.0) || !(omega > 0.0)) {
    throw std::invalid_argument("oracle_acoustic: need n >= 0, T_e > 0, omega > 0");
  }

  const OracleGrid base = grid.value_or(OracleGrid{80, 48, 64, 0, 7.0});
  const OracleGrid fine = scaled(base, 1.5);
  const auto [ax2, az2] = polarization_components(valley_axis, g0);

  const double coarse = brute_acoustic(mat, n, T_e, omega, ax2, az2, branch, base);
  const double refined = brute_acoustic(mat, n, T_e, omega, ax2, az2, branch, fine);

  RadiationQuery q;
  q.omega = omega;
  q.g0 = g0;
  const double cf =
      std::fabs(delta_p_acoustic(mat, valley_axis, n, T_e, q, 1.0, branch));

  return assemble_report(cf, coarse, refined,
                         fine.nv * fine.nmu * fine.nmu * fine.nphi);
}

OracleReport oracle_coulomb(const MaterialParams& mat, const Vec3& valley_axis,
                            double n, double T_e, double omega, const Vec3& g0,
                            const ScreeningParams& screening,
                            CoulombBrace brace_mode,
                            std::optional<OracleGrid> grid) {
  mat.validate();
  screening.validate();
  if (!(n >= 0.0) || !(T_e > 0.0) || !(omega > 0.0)) {
    throw std::invalid_argument("oracle_coulomb: need n >= 0, T_e > 0, omega > 0");
  }

  const OracleGrid base = grid.value_or(OracleGrid{64, 40, 48, 96, 7.0});
  const OracleGrid fine = scaled(base, 1.25);
  const auto [ax2, az2] = polarization_components(valley_axis, g0);

  const double coarse =
      brute_coulomb(mat, n, T_e, omega, ax2, az2, screening, base);
  const double refined =
      brute_coulomb(mat, n, T_e, omega, ax2, az2, screening, fine);

  RadiationQuery q;
  q.omega = omega;
  q.g0 = g0;
  const double cf = coulomb_p(mat, valley_axis, n, T_e, q, screening, 1.0,
                              Branch::absorption, brace_mode);

  return assemble_report(cf, coarse, refined,
                         fine.nv * fine.nmu * fine.nz * fine.nphi);
}

OracleReport oracle_hotfield(const MonoValleyModel& model, double omega,
                             std::optional<OracleGrid> grid) {
  model.validate();
  if (!(omega > 0.0)) throw std::invalid_argument("oracle_hotfield: omega must be positive");

  const OracleGrid base = grid.value_or(OracleGrid{96, 48, 64, 0, 7.5});
  const OracleGrid fine = scaled(base, 1.5);

  const double coarse = brute_hotfield(model, omega, base);
  const double refined = brute_hotfield(model, omega, fine);

  // Photon bridge from per-steradian emission back to the emitted power
  // density the master integral produces.
  const double cf = emission_distorted(model, omega) * sqr(cgs::pi) *
                    cgs::c_light / (cgs::hbar * omega);

  return assemble_report(cf, coarse, refined,
                         fine.nv * fine.nmu * fine.nmu * fine.nphi);
}

} // namespace hotc
