#pragma once

#include <cmath>
#include <numbers>

namespace llab {

inline constexpr double kTau = 2.0 * std::numbers::pi;

// The single canonical reduction to [0, 2pi). Every angle stored in a
// CirclePoint or Arc has passed through here, so order predicates branch
// consistently.
inline double normalize_angle(double theta) {
  double t = std::fmod(theta, kTau);
  if (t < 0.0) t += kTau;
  if (t >= kTau) t = 0.0;  // fmod can land exactly on 2pi after the add
  return t;
}

// Position of b counterclockwise from a, in [0, 2pi).
inline double ccw_gap(double a, double b) {
  double d = b - a;
  if (d < 0.0) d += kTau;
  if (d >= kTau) d -= kTau;
  return d;
}

// True when walking counterclockwise from a one meets b strictly before c.
// Requires a, b, c pairwise distinct.
inline bool ccw_before(double a, double b, double c) { return ccw_gap(a, b) < ccw_gap(a, c); }

// A point of the circle at infinity, disk-model parametrization.
struct CirclePoint {
  double theta = 0.0;  // in [0, 2pi)

  static CirclePoint of(double t) { return CirclePoint{normalize_angle(t)}; }
  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
};

// Angular (base point at the disk center) distance between two circle points.
inline double angle_distance(CirclePoint a, CirclePoint b) {
  double d = ccw_gap(a.theta, b.theta);
  return std::min(d, kTau - d);
}

}  // namespace llab
