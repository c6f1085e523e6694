#include "llab/mobius.hpp"

#include <cmath>

#include "llab/errors.hpp"

namespace llab {

MobiusMap MobiusMap::canonical() const {
  double det = a * d - b * c;
  if (!(det > 0.0)) fail(Errc::InvalidArgument, "MobiusMap determinant must be positive");
  double s = std::sqrt(det);
  double e[4] = {a / s, b / s, c / s, d / s};
  for (double v : e) {
    if (v != 0.0) {
      if (v < 0.0)
        for (double& w : e) w = -w;
      break;
    }
  }
  return MobiusMap{e[0], e[1], e[2], e[3]};
}

MobiusMap MobiusMap::from_entries(double a, double b, double c, double d) {
  return MobiusMap{a, b, c, d}.canonical();
}

CirclePoint MobiusMap::apply(CirclePoint t) const {
  BoundaryVec v = BoundaryVec::of(t);
  BoundaryVec w{a * v.p + b * v.q, c * v.p + d * v.q};
  return w.to_point();
}

std::complex<double> MobiusMap::apply_half_plane(std::complex<double> z) const {
  return (a * z + b) / (c * z + d);
}

std::complex<double> MobiusMap::derivative_half_plane(std::complex<double> z) const {
  std::complex<double> den = c * z + d;
  return 1.0 / (den * den);
}

double psl_distance(const MobiusMap& m, const MobiusMap& n) {
  double dp = 0.0, dm = 0.0;
  const double* me = &m.a;
  const double* ne = &n.a;
  for (int i = 0; i < 4; ++i) {
    dp = std::max(dp, std::abs(me[i] - ne[i]));
    dm = std::max(dm, std::abs(me[i] + ne[i]));
  }
  return std::min(dp, dm);
}

AxisData axis_and_length(const MobiusMap& m) {
  double tr = m.trace();
  if (std::abs(tr) <= 2.0) fail(Errc::NotHyperbolic, "axis_and_length: |trace| <= 2");
  // Orient the representative so tr > 0; then the attracting eigenvalue is
  // lambda = (tr + sqrt(tr^2-4))/2 > 1.
  double a = m.a, b = m.b, c = m.c, d = m.d;
  if (tr < 0.0) { a = -a; b = -b; c = -c; d = -d; tr = -tr; }
  double s = std::sqrt(tr * tr - 4.0);
  double lam = (tr + s) / 2.0;
  double mu = (tr - s) / 2.0;
  auto eigvec = [&](double l) {
    // (a-l) p + b q = 0 and c p + (d-l) q = 0; pick the better-conditioned row.
    BoundaryVec v1{b, l - a};
    BoundaryVec v2{l - d, c};
    double n1 = std::abs(v1.p) + std::abs(v1.q);
    double n2 = std::abs(v2.p) + std::abs(v2.q);
    return n1 >= n2 ? v1 : v2;
  };
  AxisData out;
  out.attracting = eigvec(lam).to_point();
  out.repelling = eigvec(mu).to_point();
  out.length = 2.0 * std::acosh(tr / 2.0);
  return out;
}

}  // namespace llab
