#include "fractalwalk/unfold.hpp"

#include <cmath>

#include "fractalwalk/errors.hpp"

namespace fractalwalk {

UnfoldedCurve::UnfoldedCurve(const FractalCurve& curve)
    : curve_(curve), tile_mass_(total_mass(curve)) {}

CurvePoint UnfoldedCurve::at_mass(double s) const {
  if (!std::isfinite(s)) throw DomainError("UnfoldedCurve::at_mass: mass must be finite");
  double tile = std::floor(s / tile_mass_);
  double rem = s - tile * tile_mass_;
  if (rem < 0.0) rem = 0.0;
  if (rem >= tile_mass_) {
    tile += 1.0;
    rem = 0.0;
  }
  const double u = inverse_staircase(curve_, rem);
  const PlanePoint base = curve_.point_at(u);
  return CurvePoint{tile + u, PlanePoint{tile + base.x, base.y}, s};
}

double UnfoldedCurve::euclidean_distance(double s) const {
  const PlanePoint p = at_mass(s).position;
  return std::hypot(p.x, p.y);
}

}  // namespace fractalwalk
