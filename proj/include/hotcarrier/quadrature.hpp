#ifndef HOTCARRIER_QUADRATURE_HPP
#define HOTCARRIER_QUADRATURE_HPP

/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file quadrature.hpp
 *  @brief Thin deterministic wrappers around GSL integration primitives.
 *
 *  Adaptive 1-D integrals go through adaptive() (Gauss–Kronrod 31-point
 *  QAG); failures raise QuadratureError with the integrator's diagnostics.
 *  Fixed-order Gauss–Legendre node tables feed the multi-dimensional
 *  brute-force oracles, and pairwise_sum() performs the deterministic,
 *  order-fixed reduction used everywhere an accumulation order matters.
 */

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hotc::quad {

/// Outcome of an adaptive 1-D integration.
struct Result {
  double value = 0.0;
  double abserr = 0.0;
};

/// Adaptive Gauss–Kronrod integration of f over [a, b] to relative accuracy
/// epsrel (absolute floor epsabs).  Throws QuadratureError when the
/// requested accuracy cannot be certified.
Result adaptive(const std::function<double(double)>& f, double a, double b,
                double epsrel = 1e-10, double epsabs = 0.0);

/// One Gauss–Legendre node/weight pair mapped to a caller-chosen interval.
struct GLNode {
  double x;
  double w;
};

/// n-point Gauss–Legendre rule on [a, b] (nodes ascending, deterministic).
std::vector<GLNode> gauss_legendre(std::size_t n, double a, double b);

/// Pairwise (cascade) summation with a fixed association order; returns 0
/// for an empty span.  Used for reproducible reductions of large grids.
double pairwise_sum(std::span<const double> values);

} // namespace hotc::quad

#endif // HOTCARRIER_QUADRATURE_HPP
