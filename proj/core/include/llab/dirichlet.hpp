#pragma once

#include <vector>

#include "llab/fuchsian.hpp"
#include "llab/plane.hpp"

namespace llab {

// One side of a fundamental polygon: a straight chord in the Klein model,
// carried by the perpendicular bisector of [base, gamma base].
struct PolygonSide {
  // Normalized inward linear form: interior points satisfy
  // nx*x + ny*y - nt > 0 with nx^2 + ny^2 = 1 (Klein coordinates).
  double nx, ny, nt;
  MobiusMap pairing;        // maps this side onto its partner side
  std::vector<int> word;    // the gamma whose bisector carries the side
  int partner = -1;         // index of the paired side
};

struct FundamentalPolygon {
  PlanePoint base;
  std::vector<PlanePoint> vertices;  // cyclic, counterclockwise
  std::vector<PolygonSide> sides;    // side k runs vertices[k] -> vertices[k+1]
  double area = 0.0;

  bool contains(const PlanePoint& p, double margin = 0.0) const;
  // Largest |k| over Klein vertices; < 1 certifies compactness.
  double klein_radius() const;
};

// Dirichlet fundamental domain for the group at the given base point,
// built from bisectors of words up to word_budget. Throws BudgetTooSmall
// when the polygon fails to close inside the disk, and an error when the
// base point is (numerically) fixed by a nontrivial element.
FundamentalPolygon dirichlet_polygon(const FuchsianRep& rep, const PlanePoint& base,
                                     int word_budget = 4);

// Hyperbolic area of the geodesic triangle with the given side lengths.
double triangle_area(double a, double b, double c);

}  // namespace llab
