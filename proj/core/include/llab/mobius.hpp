#pragma once

#include <complex>

#include "llab/angles.hpp"

namespace llab {

// Orientation-preserving isometry of H^2, stored as an SL(2,R) matrix acting
// on the upper half-plane, identified with its negative (PSL(2,R)). The
// canonical representative has determinant +1 and first nonzero entry
// positive, so equal isometries compare equal entrywise.
struct MobiusMap {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  static MobiusMap identity() { return {}; }
  // Normalizes det to +1 and fixes the canonical sign. Throws on det <= 0.
  static MobiusMap from_entries(double a, double b, double c, double d);

  MobiusMap inverse() const { return MobiusMap{d, -b, c == 0.0 ? 0.0 : -c, a}.canonical(); }
  double trace() const { return a + d; }
  bool is_hyperbolic() const { return std::abs(trace()) > 2.0; }

  MobiusMap canonical() const;

  // Action on the circle at infinity via homogeneous boundary coordinates;
  // the half-plane point at infinity needs no special case.
  CirclePoint apply(CirclePoint p) const;

  // Action on the upper half-plane.
  std::complex<double> apply_half_plane(std::complex<double> z) const;

  // Derivative (az+b)/(cz+d) -> 1/(cz+d)^2 at z.
  std::complex<double> derivative_half_plane(std::complex<double> z) const;

  friend MobiusMap operator*(const MobiusMap& m, const MobiusMap& n) {
    return MobiusMap{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                     m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d}
        .canonical();
  }
  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;
};

// Largest entrywise deviation between the two PSL representatives.
double psl_distance(const MobiusMap& m, const MobiusMap& n);

// Boundary point <-> homogeneous half-plane coordinates (p : q), x = p/q with
// theta = 0 mapping to (−1 : 0) = infinity. Used by the Mobius action and by
// the projective cross-ratio.
struct BoundaryVec {
  double p, q;
  static BoundaryVec of(CirclePoint t) {
    double h = t.theta * 0.5;
    return {-std::cos(h), std::sin(h)};
  }
  CirclePoint to_point() const {
    double pp = p, qq = q;
    if (qq < 0.0 || (qq == 0.0 && pp > 0.0)) { pp = -pp; qq = -qq; }
    return CirclePoint::of(2.0 * std::atan2(qq, -pp));
  }
};

struct AxisData {
  CirclePoint attracting;
  CirclePoint repelling;
  double length;  // translation length 2*arccosh(|tr|/2)
};

// Axis and translation length of a hyperbolic element. Throws NotHyperbolic
// when |tr| <= 2.
AxisData axis_and_length(const MobiusMap& m);

}  // namespace llab
