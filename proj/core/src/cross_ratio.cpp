#include "llab/cross_ratio.hpp"

#include <cmath>

#include "llab/errors.hpp"

namespace llab {

namespace {
inline double chord(CirclePoint u, CirclePoint v) { return std::sin(0.5 * (u.theta - v.theta)); }
}  // namespace

double classical_cross_ratio(CirclePoint a, CirclePoint b, CirclePoint c, CirclePoint d) {
  CirclePoint pts[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j]) fail(Errc::DegenerateQuadruple, "cross-ratio: coincident points");
  return (chord(a, c) * chord(b, d)) / (chord(a, d) * chord(b, c));
}

double liouville_box_mass(const Arc& i, const Arc& j) {
  if (!closures_disjoint(i, j)) fail(Errc::ArcsNotSeparated, "liouville_box_mass: arcs not separated");
  // Sum of four logs rather than log of a product: splitting an arc then makes
  // the shared terms cancel bitwise, so finite additivity holds to rounding.
  double m = std::log(std::abs(chord(i.start, j.start))) +
             std::log(std::abs(chord(i.end, j.end))) -
             std::log(std::abs(chord(i.start, j.end))) -
             std::log(std::abs(chord(i.end, j.start)));
  return std::abs(m);
}

}  // namespace llab
