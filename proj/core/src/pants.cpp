#include "pants.hpp"

#include <cmath>

#include "llab/errors.hpp"

namespace llab::pants {

namespace {

double seam_cosh(double sa, double sb, double sopp) {
  return (std::cosh(sopp) + std::cosh(sa) * std::cosh(sb)) / (std::sinh(sa) * std::sinh(sb));
}

M2 reflect_circle(double m, double r) { return {m / r, (r * r - m * m) / r, 1.0 / r, -m / r}; }

// Attracting/repelling fixed points on the real line; requires |tr| > 2 and
// both fixed points finite.
void fixed_points(const M2& m, double& attract, double& repel) {
  double disc = (m.d - m.a) * (m.d - m.a) + 4.0 * m.b * m.c;
  if (!(std::abs(m.c) > 0.0) || !(disc > 0.0))
    fail(Errc::NumericalDegeneracy, "pants: degenerate cuff axis");
  double s = std::sqrt(disc);
  double x1 = (-(m.d - m.a) + s) / (2.0 * m.c);
  double x2 = (-(m.d - m.a) - s) / (2.0 * m.c);
  // attracting iff |c x + d| > 1
  if (std::abs(m.c * x1 + m.d) > std::abs(m.c * x2 + m.d)) {
    attract = x1;
    repel = x2;
  } else {
    attract = x2;
    repel = x1;
  }
}

// Frame: inverse of the map sending (repel -> 0, attract -> inf, foot -> i).
M2 frame_for(const M2& cuff, std::complex<double> seam_foot) {
  double at, rp;
  fixed_points(cuff, at, rp);
  M2 n{1.0, -rp, 1.0, -at};
  if (n.a * n.d - n.b * n.c < 0.0) n = M2{-1.0, rp, 1.0, -at};
  std::complex<double> w = n.apply(seam_foot);
  double y = w.imag();
  if (!(y > 0.0)) fail(Errc::NumericalDegeneracy, "pants: frame normalization failed");
  M2 s{1.0 / std::sqrt(y), 0.0, 0.0, std::sqrt(y)};
  return (s * n).inv();
}

}  // namespace

Pants build_pants(double l1, double l2, double l3) {
  double s1 = l1 / 2, s2 = l2 / 2, s3 = l3 / 2;
  double ch3 = seam_cosh(s1, s2, s3);  // seam cuff1-cuff2
  double ch2 = seam_cosh(s3, s1, s2);  // seam cuff3-cuff1
  if (!(ch3 > 1.0) || !(ch2 > 1.0) || !std::isfinite(ch3) || !std::isfinite(ch2))
    fail(Errc::NumericalDegeneracy, "pants: hexagon seam out of range");
  double c3 = std::acosh(ch3);
  double c2 = std::acosh(ch2);

  M2 r3{0, 1, 1, 0};                                  // reflection in unit semicircle
  M2 r2{0, std::exp(s1), std::exp(-s1), 0};           // semicircle radius e^{s1}
  double m2 = 1.0 / std::tanh(c3), rr2 = 1.0 / std::sinh(c3);                  // cuff 2 axis
  double m3 = std::exp(s1) / std::tanh(c2), rr3 = std::exp(s1) / std::sinh(c2);  // cuff 3 axis
  // Seam between cuffs 2 and 3: the circle orthogonal to both axes.
  double mu = (m2 * m2 - m3 * m3 - rr2 * rr2 + rr3 * rr3) / (2.0 * (m2 - m3));
  double sig2 = (mu - m2) * (mu - m2) - rr2 * rr2;
  if (!(sig2 > 0.0)) fail(Errc::NumericalDegeneracy, "pants: seam circle degenerate");
  M2 r1 = reflect_circle(mu, std::sqrt(sig2));

  Pants p;
  p.X[0] = r2 * r3;
  p.X[1] = r3 * r1;
  p.X[2] = r1 * r2;

  std::complex<double> foot1{0.0, 1.0};
  std::complex<double> foot2{std::tanh(c3), 1.0 / std::cosh(c3)};
  std::complex<double> foot3 = std::exp(s1) * std::complex<double>{std::tanh(c2), 1.0 / std::cosh(c2)};
  p.F[0] = frame_for(p.X[0], foot1);
  p.F[1] = frame_for(p.X[1], foot2);
  p.F[2] = frame_for(p.X[2], foot3);
  return p;
}

M2 glue_twist(double tau) {
  M2 t{std::exp(tau / 2), 0, 0, std::exp(-tau / 2)};
  M2 k{0, -1, 1, 0};
  return t * k;
}

}  // namespace llab::pants
