/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file quadrature.cpp
 *  @brief GSL-backed integration wrappers with explicit error propagation.
 */

#include "hotcarrier/quadrature.hpp"

#include "hotcarrier/errors.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <memory>
#include <mutex>
#include <string>

namespace hotc::quad {

namespace {

/// GSL aborts on error by default; disable that exactly once for the whole
/// process and rely on return codes instead.
void disable_gsl_abort() {
  static std::once_flag flag;
  std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

double invoke_trampoline(double x, void* params) {
  const auto* f = static_cast<const std::function<double(double)>*>(params);
  return (*f)(x);
}

} // namespace

Result adaptive(const std::function<double(double)>& f, double a, double b,
                double epsrel, double epsabs) {
  disable_gsl_abort();

  constexpr std::size_t kWorkspaceSize = 2000;
  std::unique_ptr<gsl_integration_workspace,
                  decltype(&gsl_integration_workspace_free)>
      ws(gsl_integration_workspace_alloc(kWorkspaceSize),
         &gsl_integration_workspace_free);
  if (!ws) throw std::bad_alloc();

  gsl_function gf;
  gf.function = &invoke_trampoline;
  gf.params = const_cast<std::function<double(double)>*>(&f);

  Result r;
  const int status =
      gsl_integration_qag(&gf, a, b, epsabs, epsrel, kWorkspaceSize,
                          GSL_INTEG_GAUSS31, ws.get(), &r.value, &r.abserr);
  if (status != GSL_SUCCESS) {
    throw QuadratureError(
        std::string("adaptive quadrature failed: ") + gsl_strerror(status),
        r.value, r.abserr);
  }
  return r;
}

std::vector<GLNode> gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: need at least one node");

  // GSL ships machine-accurate precomputed tables only for selected sizes
  // (2-20, 32, 64, 96, 100, 128, 256, 512, 1024); other sizes fall back to
  // on-the-fly nodes accurate to ~1e-10.  Callers that feed tight closed-form
  // comparisons should stick to the precomputed sizes.

  std::unique_ptr<gsl_integration_glfixed_table,
                  decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(n),
            &gsl_integration_glfixed_table_free);
  if (!table) throw std::bad_alloc();

  std::vector<GLNode> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    gsl_integration_glfixed_point(a, b, i, &nodes[i].x, &nodes[i].w, table.get());
  }
  return nodes;
}

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n == 1) return values[0];
  if (n == 2) return values[0] + values[1];
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

} // namespace hotc::quad
