#ifndef HOTCARRIER_GEOMETRY_HPP
#define HOTCARRIER_GEOMETRY_HPP

/* ============================================================================
   hotcarrier — spontaneous emission and free-carrier absorption by hot
   electrons in multivalley semiconductors.

   Distributed under the MIT License; see LICENSE.
   ============================================================================ */

/** @file geometry.hpp
 *  @brief Minimal 3-vector algebra and the valley/polarization angle factor.
 */

#include <cmath>
#include <stdexcept>

namespace hotc {

/// Plain Cartesian 3-vector (double precision).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
constexpr Vec3 operator*(const Vec3& v, double s) { return s * v; }
constexpr Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Unit vector along v; throws std::invalid_argument for the zero vector.
inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector has no direction");
  return {v.x / n, v.y / n, v.z / n};
}

/// Squared cosine of the angle between a valley axis l and a polarization
/// unit vector g0: (l . g0)^2, clamped into [0, 1] against rounding.
/// Both arguments must be unit vectors; deviations beyond 1e-9 are rejected.
inline double cos2_angle(const Vec3& l, const Vec3& g0) {
  constexpr double unit_tol = 1e-9;
  if (std::fabs(norm(l) - 1.0) > unit_tol || std::fabs(norm(g0) - 1.0) > unit_tol) {
    throw std::invalid_argument("cos2_angle: both directions must be unit vectors (|norm-1| <= 1e-9)");
  }
  const double c = dot(l, g0);
  double c2 = c * c;
  if (c2 > 1.0) c2 = 1.0;
  return c2;
}

} // namespace hotc

#endif // HOTCARRIER_GEOMETRY_HPP
