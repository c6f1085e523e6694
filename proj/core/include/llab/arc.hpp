#pragma once

#include <utility>

#include "llab/angles.hpp"

namespace llab {

// A proper arc of the boundary circle, running counterclockwise from start to
// end, with endpoint inclusion flags. Never empty and never the full circle.
struct Arc {
  CirclePoint start;
  CirclePoint end;
  bool includes_start = true;
  bool includes_end = false;

  // Half-open [start, end) counterclockwise arc, the scheme convention.
  static Arc half_open(double start, double end);
  static Arc closed(double start, double end);

  double length() const { return ccw_gap(start.theta, end.theta); }
  CirclePoint midpoint() const { return CirclePoint::of(start.theta + 0.5 * length()); }

  bool contains(CirclePoint p) const;
  // Interior-point test ignoring the flags.
  bool strictly_contains(CirclePoint p) const;

  // Splits at an interior point m into [start, m), [m, end] keeping the outer
  // flags; the two pieces partition the arc. Throws PointNotInArc when m is
  // not strictly inside.
  std::pair<Arc, Arc> split(CirclePoint m) const;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// True when the closures of the two arcs are disjoint.
bool closures_disjoint(const Arc& a, const Arc& b);

}  // namespace llab
