#pragma once

#include <complex>

#include "llab/angles.hpp"

namespace llab {

// A point of the hyperbolic plane, stored in the open unit disk. The upper
// half-plane is reached through the fixed Cayley map z = i(1+w)/(1-w), whose
// boundary trace is theta -> -cot(theta/2); matrix actions and the first
// variation integral live in the half-plane, circle parametrization and box
// bookkeeping in the disk.
struct PlanePoint {
  std::complex<double> disk{0.0, 0.0};

  static PlanePoint from_disk(std::complex<double> w) { return {w}; }
  static PlanePoint from_half_plane(std::complex<double> z) {
    return {(z - std::complex<double>(0.0, 1.0)) / (z + std::complex<double>(0.0, 1.0))};
  }
  std::complex<double> half_plane() const {
    return std::complex<double>(0.0, 1.0) * (1.0 + disk) / (1.0 - disk);
  }
  // Klein (projective) coordinates; geodesics become straight chords there.
  std::complex<double> klein() const { return 2.0 * disk / (1.0 + std::norm(disk)); }
  static PlanePoint from_klein(std::complex<double> k) {
    return {k / (1.0 + std::sqrt(std::max(0.0, 1.0 - std::norm(k))))};
  }

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// Hyperbolic distance between two disk points.
double hyperbolic_distance(const PlanePoint& p, const PlanePoint& q);

}  // namespace llab
