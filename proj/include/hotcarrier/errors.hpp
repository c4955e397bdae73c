#ifndef HOTCARRIER_ERRORS_HPP
#define HOTCARRIER_ERRORS_HPP

/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file errors.hpp
 *  @brief Exception types carrying structured diagnostics.
 */

#include <stdexcept>
#include <string>
#include <utility>

namespace hotc {

/// Raised when a configuration document is malformed or physically
/// inconsistent.  Carries the JSON key path of the offending entry so the
/// CLI can emit a machine-readable error report.
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string key_path, const std::string& message)
      : std::runtime_error(message), key_path_(std::move(key_path)) {}

  const std::string& key_path() const noexcept { return key_path_; }

private:
  std::string key_path_;
};

/// Raised when an adaptive quadrature fails to reach its requested accuracy;
/// carries the integrator's best value and error bound instead of silently
/// returning a truncated result.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& message, double best_value, double abserr)
      : std::runtime_error(message), best_value_(best_value), abserr_(abserr) {}

  double best_value() const noexcept { return best_value_; }
  double abserr() const noexcept { return abserr_; }

private:
  double best_value_;
  double abserr_;
};

} // namespace hotc

#endif // HOTCARRIER_ERRORS_HPP
