#pragma once

#include "llab/angles.hpp"
#include "llab/mobius.hpp"
#include "llab/plane.hpp"

namespace llab {

// An oriented complete geodesic of the disk, named by its ordered pair of
// distinct ideal endpoints (from backward to forward).
struct Geodesic {
  CirclePoint from;
  CirclePoint to;

  static Geodesic of(CirclePoint from, CirclePoint to);
  Geodesic reversed() const { return {to, from}; }
  Geodesic mapped(const MobiusMap& m) const { return {m.apply(from), m.apply(to)}; }

  friend bool operator==(const Geodesic&, const Geodesic&) = default;
};

// True iff the endpoints of h separate the endpoints of g on the circle, i.e.
// the geodesics meet transversely. Throws DegenerateConfiguration on a shared
// endpoint.
bool geodesics_link(const Geodesic& g, const Geodesic& h);

// The unique crossing point of two linked geodesics, computed as the chord
// intersection in the Klein model. Throws NoIntersection when the geodesics
// do not link.
PlanePoint geodesic_intersection_point(const Geodesic& g, const Geodesic& h);

// Signed hyperbolic distance data from a point to a geodesic (unsigned).
double distance_to_geodesic(const PlanePoint& p, const Geodesic& g);

}  // namespace llab
