#pragma once

#include "fractalwalk/calculus.hpp"
#include "fractalwalk/curve.hpp"

namespace fractalwalk {

/// Periodic extension of a curve to the whole mass axis by chaining
/// translated copies: tile j spans masses [j*S(1), (j+1)*S(1)) and is the
/// unit curve shifted by (j, 0).  For the straight segment this is exactly
/// the real line, so mass-coordinate identities can be checked against
/// ordinary calculus.
class UnfoldedCurve {
 public:
  explicit UnfoldedCurve(const FractalCurve& curve);

  const FractalCurve& curve() const { return curve_; }
  double tile_mass() const { return tile_mass_; }

  /// Point at signed mass s; u is reported as tile + in-tile parameter.
  CurvePoint at_mass(double s) const;

  /// |position(s)|: straight-line distance from the origin.
  double euclidean_distance(double s) const;

 private:
  FractalCurve curve_;
  double tile_mass_;
};

}  // namespace fractalwalk
