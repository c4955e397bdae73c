/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file coulomb.cpp
 *  @brief Screened ionized-impurity channel closed forms and quadratures.
 */

#include "hotcarrier/coulomb.hpp"

#include "hotcarrier/constants.hpp"
#include "hotcarrier/errors.hpp"
#include "hotcarrier/quadrature.hpp"
#include "hotcarrier/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hotc {

namespace {

/// Classical-regime validity bound for the logarithmic formulas.
constexpr double kClassicalGuard = 0.2;

double sqr(double x) { return x * x; }

void check_carrier_inputs(double n, double T_e, const char* where) {
  if (!(n >= 0.0) || !(T_e > 0.0)) {
    throw std::invalid_argument(std::string(where) + ": need n >= 0 and T_e > 0");
  }
}

/// b0^2 = m_perp / (m_par - m_perp), the unscreened floor of b^2.
double b0_squared(const MaterialParams& mat) {
  return mat.m_perp / (mat.m_par - mat.m_perp);
}

/// Coulomb logarithm at electron temperature T_e for a fixed screening
/// radius; throws std::domain_error outside the logarithmic regime.
double coulomb_log(const MaterialParams& mat, double T_e, double r_D) {
  const double x_min =
      sqr(cgs::hbar) / (8.0 * mat.m_perp * T_e * sqr(r_D));
  const double log_value = -cgs::euler_gamma - std::log(x_min);
  if (!(log_value > 0.0)) {
    throw std::domain_error(
        "relaxation_times_coulomb: Coulomb logarithm is non-positive "
        "(screening cutoff x_min >= exp(-gamma_E)); the logarithmic "
        "approximation does not apply at these parameters");
  }
  return log_value;
}

/// Both spectral integrals
///   I_Bj = int_0^inf exp(-x) [Bj(b(q+)) +/- Bj(b(q-))] / sqrt(x (x+s)) dx
/// evaluated as [0,1] (regularized by x = y^2) plus [1,inf) (mapped by
/// u = exp(-x)) adaptive pieces.
struct XIntegrals {
  double i_b1 = 0.0;
  double i_b2 = 0.0;
};

XIntegrals coulomb_x_integrals(const MaterialParams& mat, double T_e,
                               double omega, const ScreeningParams& screening,
                               CoulombBrace brace, double epsrel) {
  const double s = cgs::hbar * omega / T_e;
  const double q_scale = std::sqrt(2.0 * mat.m_perp * T_e) / cgs::hbar;
  const double b0_2 = b0_squared(mat);
  const double inv_rd2 = 1.0 / sqr(screening.r_D);

  const auto b_of_q = [&](double q) {
    return std::sqrt(b0_2 * (1.0 + inv_rd2 / sqr(q)));
  };

  // which = 0 selects B1, which = 1 selects B2.
  const auto branch_combination = [&](double x, int which) {
    const double root_sum = std::sqrt(x + s);
    const double root_x = std::sqrt(x);
    const double q_plus = q_scale * (root_sum + root_x);
    const double q_minus = q_scale * (root_sum - root_x);
    const auto [b1p, b2p] = b1_b2(b_of_q(q_plus));
    const auto [b1m, b2m] = b1_b2(b_of_q(q_minus));
    const double plus = (which == 0) ? b1p : b2p;
    const double minus = (which == 0) ? b1m : b2m;
    return (brace == CoulombBrace::sum) ? plus + minus : plus - minus;
  };

  const auto integral_for = [&](int which) {
    const auto inner = quad::adaptive(
        [&](double y) {
          const double x = y * y;
          return 2.0 * std::exp(-x) * branch_combination(x, which) /
                 std::sqrt(x + s);
        },
        0.0, 1.0, epsrel);
    const auto tail = quad::adaptive(
        [&](double u) {
          if (u <= 0.0) return 0.0;
          const double x = -std::log(u);
          return branch_combination(x, which) / std::sqrt(x * (x + s));
        },
        0.0, std::exp(-1.0), epsrel);
    return inner.value + tail.value;
  };

  return {integral_for(0), integral_for(1)};
}

/// Common prefactor of the absorbed power density at unit field amplitude:
/// e0^6 N_D n / (4 chi0^2 c^2 hbar omega) * sqrt(2 pi m_par / T_e)
///                                        / (m_par - m_perp)^2.
double p_plus_prefactor(const MaterialParams& mat, double n, double T_e,
                        double omega) {
  const double e2 = sqr(cgs::e0);
  const double dm = mat.m_par - mat.m_perp;
  return e2 * e2 * sqr(cgs::e0) * mat.N_D * n /
         (4.0 * sqr(mat.chi0) * sqr(cgs::c_light) * cgs::hbar * omega) *
         std::sqrt(2.0 * cgs::pi * mat.m_par / T_e) / sqr(dm);
}

/// tau_perp bracket (b0/2) [b0 + (1 - b0^2) atan(1/b0)] and tau_par bracket
/// b0 [-b0 + (1 + b0^2) atan(1/b0)]; both positive for all b0 > 0.
std::pair<double, double> mass_brackets(double b0) {
  const double at = std::atan(1.0 / b0);
  const double perp = 0.5 * b0 * (b0 + (1.0 - b0 * b0) * at);
  const double par = b0 * (-b0 + (1.0 + b0 * b0) * at);
  return {perp, par};
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

/// Classical per-valley channel weights at logarithmic accuracy:
/// Q_{perp,par} = 3 e0^2 / (16 pi^{3/2} c^3) * n T / (m_{perp,par} tau_{perp,par}(T)).
std::pair<double, double> classical_channels(const MaterialParams& mat,
                                             double n, double T,
                                             const ScreeningParams& screening) {
  const auto [tau_perp, tau_par] = relaxation_times_coulomb(mat, T, screening);
  const double c3 = cgs::c_light * cgs::c_light * cgs::c_light;
  const double d = 3.0 * sqr(cgs::e0) / (16.0 * std::pow(cgs::pi, 1.5) * c3);
  return {d * n * T / (mat.m_perp * tau_perp), d * n * T / (mat.m_par * tau_par)};
}

} // namespace

void ScreeningParams::validate() const {
  if (!(r_D > 0.0)) throw std::invalid_argument("ScreeningParams: r_D must be positive");
  if (!(x_min > 0.0)) throw std::invalid_argument("ScreeningParams: x_min must be positive");
}

double debye_radius(double n_total, double T_e, double chi0) {
  if (!(n_total > 0.0) || !(T_e > 0.0) || !(chi0 >= 1.0)) {
    throw std::invalid_argument("debye_radius: need n_total > 0, T_e > 0, chi0 >= 1");
  }
  return std::sqrt(chi0 * T_e / (4.0 * cgs::pi * sqr(cgs::e0) * n_total));
}

ScreeningParams make_screening(const MaterialParams& mat, double T_e, double r_D) {
  if (!(T_e > 0.0) || !(r_D > 0.0)) {
    throw std::invalid_argument("make_screening: need T_e > 0 and r_D > 0");
  }
  ScreeningParams sp;
  sp.r_D = r_D;
  sp.x_min = sqr(cgs::hbar) / (8.0 * mat.m_perp * T_e * sqr(r_D));
  sp.validate();
  return sp;
}

std::pair<double, double> b1_b2(double b) {
  if (!(b > 0.0)) throw std::invalid_argument("b1_b2: b must be positive");

  if (b > 20.0) {
    // Asymptotic series; the closed forms lose two leading orders to
    // cancellation here.  Coefficients: B1 term_k = (-1)^{k+1} 4k /
    // ((2k-1)(2k+1)) b^{-2k-2}, B2 term_k = (-1)^{k+1} (2k/(2k+1)) b^{-2k-2}.
    const double ib2 = 1.0 / (b * b);
    double power = ib2 * ib2; // b^{-4}
    double s1 = 0.0;
    double s2 = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 8; ++k) {
      const double two_k = 2.0 * k;
      s1 += sign * 2.0 * two_k / ((two_k - 1.0) * (two_k + 1.0)) * power;
      s2 += sign * two_k / (two_k + 1.0) * power;
      power *= ib2;
      sign = -sign;
    }
    return {s1, s2};
  }

  const double at = std::atan(1.0 / b);
  const double b2 = b * b;
  const double f1 = 1.0 / b2 + (1.0 - b2) / (b2 * b) * at;
  const double f2 = -1.0 / (1.0 + b2) + at / b;
  return {f1, f2};
}

double coulomb_p(const MaterialParams& mat, const Vec3& valley_axis, double n,
                 double T_e, const RadiationQuery& q,
                 const ScreeningParams& screening, double amplitude,
                 Branch branch, CoulombBrace brace, double epsrel) {
  mat.validate();
  q.validate();
  screening.validate();
  check_carrier_inputs(n, T_e, "coulomb_p");
  if (!std::isfinite(amplitude)) {
    throw std::invalid_argument("coulomb_p: amplitude must be finite");
  }

  const double c0 = cos2_angle(normalized(valley_axis), q.g0);
  const auto [i_b1, i_b2] =
      coulomb_x_integrals(mat, T_e, q.omega, screening, brace, epsrel);
  const double psi_integral =
      (1.0 - c0) * i_b1 + c0 * (2.0 * mat.m_perp / mat.m_par) * i_b2;

  const double absorbed = p_plus_prefactor(mat, n, T_e, q.omega) * amplitude *
                          amplitude * psi_integral;
  if (branch == Branch::absorption) return absorbed;
  const double s = cgs::hbar * q.omega / T_e;
  return -std::exp(-s) * absorbed;
}

std::pair<double, double> relaxation_times_coulomb(
    const MaterialParams& mat, double T_e, const ScreeningParams& screening) {
  mat.validate();
  screening.validate();
  if (!(T_e > 0.0)) throw std::invalid_argument("relaxation_times_coulomb: T_e must be positive");

  const double log_value = coulomb_log(mat, T_e, screening.r_D);
  const double b0 = std::sqrt(b0_squared(mat));
  const auto [bracket_perp, bracket_par] = mass_brackets(b0);

  const double base = (8.0 / 3.0) * sqr(sqr(cgs::e0)) *
                      std::sqrt(2.0 * mat.m_par) * mat.N_D /
                      (sqr(mat.chi0) * std::pow(T_e, 1.5));

  const double inv_tau_perp = base / mat.m_perp * bracket_perp * log_value;
  const double inv_tau_par = base / mat.m_par * bracket_par * log_value;
  return {1.0 / inv_tau_perp, 1.0 / inv_tau_par};
}

double absorption_coefficient_coulomb(const MaterialParams& mat,
                                      const ValleySet& valleys,
                                      const CarrierState& carriers,
                                      const RadiationQuery& q,
                                      const ScreeningParams& screening) {
  mat.validate();
  valleys.validate();
  carriers.validate(valleys.size());
  q.validate();
  screening.validate();

  double sum = 0.0;
  for (std::size_t k = 0; k < valleys.size(); ++k) {
    const ValleyCarriers& vc = carriers.valleys[k];
    if (!(cgs::hbar * q.omega / vc.T < kClassicalGuard)) {
      throw std::domain_error(
          "absorption_coefficient_coulomb: classical formula requires "
          "hbar*omega/T < 0.2 in every valley");
    }
    const auto [tau_perp, tau_par] =
        relaxation_times_coulomb(mat, vc.T, screening);
    const double c = cos2_angle(valleys.axes[k], q.g0);
    sum += vc.n * ((1.0 - c) / (mat.m_perp * tau_perp) +
                   c / (mat.m_par * tau_par));
  }

  const double pref = 1.5 * std::pow(cgs::pi, 1.5) * sqr(cgs::e0) /
                      (std::sqrt(mat.chi0) * cgs::c_light * sqr(q.omega));
  return pref * sum;
}

CoulombEmission emission_coulomb_classical(const MaterialParams& mat,
                                           const ValleySet& valleys,
                                           const CarrierState& carriers,
                                           const RadiationQuery& q,
                                           const ScreeningParams& screening) {
  mat.validate();
  valleys.validate();
  carriers.validate(valleys.size());
  q.validate();
  screening.validate();

  CoulombEmission out;
  out.per_valley.reserve(valleys.size());
  for (std::size_t k = 0; k < valleys.size(); ++k) {
    const ValleyCarriers& vc = carriers.valleys[k];
    if (!(cgs::hbar * q.omega / vc.T < kClassicalGuard)) {
      throw std::domain_error(
          "emission_coulomb_classical: classical formula requires "
          "hbar*omega/T < 0.2 in every valley");
    }
    const auto [q_perp, q_par] = classical_channels(mat, vc.n, vc.T, screening);
    const double c = cos2_angle(valleys.axes[k], q.g0);
    const double w = (1.0 - c) * q_perp + c * q_par;
    out.per_valley.push_back(w);
    out.total += w;
  }

  if (matches_ge_quartet(valleys) && hot_valleys_in_common_state(carriers)) {
    const auto [qp1, ql1] = classical_channels(mat, carriers.valleys[0].n,
                                               carriers.valleys[0].T, screening);
    const auto [qp2, ql2] = classical_channels(mat, carriers.valleys[1].n,
                                               carriers.valleys[1].T, screening);
    out.decomposition = channel_decomposition_111(qp1, ql1, qp2, ql2);
  }
  return out;
}

std::pair<double, double> coulomb_emission_channels(
    const MaterialParams& mat, double n, double T_e, double omega,
    const ScreeningParams& screening, CoulombBrace brace, double epsrel) {
  mat.validate();
  screening.validate();
  check_carrier_inputs(n, T_e, "coulomb_emission_channels");
  if (!(omega > 0.0)) {
    throw std::invalid_argument("coulomb_emission_channels: omega must be positive");
  }

  const auto [i_b1, i_b2] =
      coulomb_x_integrals(mat, T_e, omega, screening, brace, epsrel);
  const double s = cgs::hbar * omega / T_e;

  // Photon bridge: spontaneous emission per steradian and unit angular
  // frequency equals the emission-branch power density at unit amplitude
  // times hbar omega / (pi^2 c).
  const double bridge = std::exp(-s) * cgs::hbar * omega /
                        (cgs::pi * cgs::pi * cgs::c_light);
  const double pref = p_plus_prefactor(mat, n, T_e, omega) * bridge;
  return {pref * i_b1, pref * (2.0 * mat.m_perp / mat.m_par) * i_b2};
}

} // namespace hotc
