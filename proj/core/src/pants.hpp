#pragma once

// Right-angled hexagon construction of pair-of-pants holonomy, in normalized
// position: cuff 1 on the geodesic (0, inf) of the half-plane, the seam to
// cuff 2 meeting it at i. Internal to build_rep.

#include <array>
#include <complex>

namespace llab::pants {

// Raw 2x2 real matrix; reflections have det -1, so this stays outside
// MobiusMap until products are formed.
struct M2 {
  double a = 1, b = 0, c = 0, d = 1;
  friend M2 operator*(const M2& x, const M2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  M2 inv() const {
    double det = a * d - b * c;
    return {d / det, -b / det, -c / det, a / det};
  }
  std::complex<double> apply(std::complex<double> z) const { return (a * z + b) / (c * z + d); }
};

struct Pants {
  // Cuff holonomies, X[0]X[1]X[2] = id exactly; |tr X[k]| = 2 cosh(l_k/2).
  std::array<M2, 3> X;
  // Cuff frames: F[k] maps the standard cuff position (axis (0, inf),
  // translation upward, marked seam foot at i) onto cuff k.
  std::array<M2, 3> F;
};

Pants build_pants(double l1, double l2, double l3);

// Standard-position gluing with twist tau (length units): translate by tau
// along the axis, then flip sides with z -> -1/z.
M2 glue_twist(double tau);

}  // namespace llab::pants
