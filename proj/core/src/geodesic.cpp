#include "llab/geodesic.hpp"

#include <cmath>

#include "llab/errors.hpp"

namespace llab {

Geodesic Geodesic::of(CirclePoint from, CirclePoint to) {
  if (from == to) fail(Errc::InvalidArgument, "Geodesic endpoints must be distinct");
  return {from, to};
}

bool geodesics_link(const Geodesic& g, const Geodesic& h) {
  CirclePoint pts[4] = {g.from, g.to, h.from, h.to};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j]) fail(Errc::DegenerateConfiguration, "geodesics share an endpoint");
  double span = ccw_gap(g.from.theta, g.to.theta);
  bool in1 = ccw_gap(g.from.theta, h.from.theta) < span;
  bool in2 = ccw_gap(g.from.theta, h.to.theta) < span;
  return in1 != in2;
}

PlanePoint geodesic_intersection_point(const Geodesic& g, const Geodesic& h) {
  if (!geodesics_link(g, h)) fail(Errc::NoIntersection, "geodesics do not cross");
  // Klein model: both geodesics are straight chords; solve the 2x2 system.
  double ax = std::cos(g.from.theta), ay = std::sin(g.from.theta);
  double bx = std::cos(g.to.theta), by = std::sin(g.to.theta);
  double cx = std::cos(h.from.theta), cy = std::sin(h.from.theta);
  double dx = std::cos(h.to.theta), dy = std::sin(h.to.theta);
  double ux = bx - ax, uy = by - ay;
  double vx = dx - cx, vy = dy - cy;
  double det = ux * (-vy) - uy * (-vx);
  double rx = cx - ax, ry = cy - ay;
  double t = (rx * (-vy) + ry * vx) / det;
  return PlanePoint::from_klein({ax + t * ux, ay + t * uy});
}

double distance_to_geodesic(const PlanePoint& p, const Geodesic& g) {
  double ax = std::cos(g.from.theta), ay = std::sin(g.from.theta);
  double bx = std::cos(g.to.theta), by = std::sin(g.to.theta);
  std::complex<double> k = p.klein();
  double x = k.real(), y = k.imag();
  double num = x * (ay - by) + y * (bx - ax) - (ax * by - ay * bx);
  double cosphi = ax * bx + ay * by;
  double denom = std::sqrt(std::max(0.0, 1.0 - x * x - y * y)) * (1.0 - cosphi);
  return std::asinh(std::abs(num) / denom);
}

double hyperbolic_distance(const PlanePoint& p, const PlanePoint& q) {
  std::complex<double> num = p.disk - q.disk;
  std::complex<double> den = 1.0 - std::conj(p.disk) * q.disk;
  return 2.0 * std::atanh(std::abs(num) / std::abs(den));
}

}  // namespace llab
