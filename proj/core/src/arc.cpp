#include "llab/arc.hpp"

#include "llab/errors.hpp"

namespace llab {

Arc Arc::half_open(double start, double end) {
  Arc a{CirclePoint::of(start), CirclePoint::of(end), true, false};
  if (a.start == a.end) fail(Errc::InvalidArgument, "Arc endpoints must be distinct");
  return a;
}

Arc Arc::closed(double start, double end) {
  Arc a = half_open(start, end);
  a.includes_end = true;
  return a;
}

bool Arc::contains(CirclePoint p) const {
  double pos = ccw_gap(start.theta, p.theta);
  double len = length();
  if (pos == 0.0) return includes_start;
  if (pos == len) return includes_end;
  return pos < len;
}

bool Arc::strictly_contains(CirclePoint p) const {
  double pos = ccw_gap(start.theta, p.theta);
  return pos > 0.0 && pos < length();
}

std::pair<Arc, Arc> Arc::split(CirclePoint m) const {
  if (!strictly_contains(m)) fail(Errc::PointNotInArc, "Arc::split point not strictly inside");
  Arc first{start, m, includes_start, false};
  Arc second{m, end, true, includes_end};
  return {first, second};
}

bool closures_disjoint(const Arc& a, const Arc& b) {
  Arc ac{a.start, a.end, true, true};
  Arc bc{b.start, b.end, true, true};
  // Closed arcs are disjoint iff neither contains an endpoint of the other.
  return !ac.contains(b.start) && !ac.contains(b.end) && !bc.contains(a.start) &&
         !bc.contains(a.end);
}

}  // namespace llab
