#pragma once

#include "llab/angles.hpp"
#include "llab/arc.hpp"

namespace llab {

// Classical cross-ratio ((a-c)(b-d))/((a-d)(b-c)) of four boundary points in
// half-plane coordinates. Computed through the rotation-invariant chord form
// sin((a-c)/2)sin((b-d)/2) / (sin((a-d)/2)sin((b-c)/2)), which equals the
// coordinate formula identically and stays finite through theta = 0, the
// half-plane point at infinity. Throws DegenerateQuadruple on coincident
// points.
double classical_cross_ratio(CirclePoint a, CirclePoint b, CirclePoint c, CirclePoint d);

// Liouville box mass |log cross-ratio| of the endpoint quadruple of two arcs
// with disjoint closures. Additive under splitting either arc. Throws
// ArcsNotSeparated when the closures meet.
double liouville_box_mass(const Arc& i, const Arc& j);

}  // namespace llab
