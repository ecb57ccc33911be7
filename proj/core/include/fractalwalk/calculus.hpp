#pragma once

#include <functional>
#include <vector>

#include "fractalwalk/curve.hpp"

namespace fractalwalk {

/// Scalar function evaluated at points of a curve.
using CurveFunction = std::function<double(const CurvePoint&)>;

/// Arc mass of the parameter interval [a, b]: the sum of chord lengths to the
/// power alpha over the partition made of all aligned points i / 4^subdiv_depth
/// inside (a, b) plus the endpoints, normalized by Gamma(alpha + 1).
/// Stable under refinement once the partition is construction-aligned.
double mass_function(const FractalCurve& curve, double a, double b, int subdiv_depth);

/// Integral staircase S(u) = mass of [0, u] at the curve's own depth.
/// Closed form: with u = (i + f) / 4^depth, i integer and f in [0, 1),
/// S(u) = (i + f^alpha) * 4^(-depth) / Gamma(alpha + 1); the fractional chord
/// enters through its length (f * 3^(-depth))^alpha.
/// S(u) = u * S(1) exactly at aligned parameters.
double staircase(const FractalCurve& curve, double u);

/// Total arc mass S(1) = 1 / Gamma(alpha + 1).
double total_mass(const FractalCurve& curve);

/// Analytic inverse of the staircase: the unique u with S(u) = s.
/// Round-trips with staircase to machine precision.
double inverse_staircase(const FractalCurve& curve, double s);

/// Point bundle (u, w(u), S(u)) for u in [0, 1].
CurvePoint curve_point(const FractalCurve& curve, double u);

/// Staircase sampled on the aligned grid u = i / 4^grid_depth, with the
/// curve and exact inverse bundled for conjugate-coordinate work.
class StaircaseTable {
 public:
  StaircaseTable(const FractalCurve& curve, int grid_depth);

  const FractalCurve& curve() const { return curve_; }
  int grid_depth() const { return grid_depth_; }
  double total_mass() const { return total_; }

  double value(double u) const { return staircase(curve_, u); }
  double inverse(double s) const { return inverse_staircase(curve_, s); }
  CurvePoint point_at_mass(double s) const { return curve_point(curve_, inverse(s)); }

  const std::vector<double>& grid_u() const { return grid_u_; }
  const std::vector<double>& grid_mass() const { return grid_mass_; }

 private:
  FractalCurve curve_;
  int grid_depth_;
  double total_;
  std::vector<double> grid_u_;
  std::vector<double> grid_mass_;
};

/// Function of the mass coordinate obtained by carrying a curve function
/// through the staircase; the table pointer must outlive the object.
struct ConjugateFunction {
  std::function<double(double)> on_mass;
  const StaircaseTable* table = nullptr;

  double operator()(double mass) const;
};

/// Carry f through the staircase: (lift f)(s) = f at the curve point of
/// mass s.
ConjugateFunction lift(CurveFunction f, const StaircaseTable& table);

/// Pull a mass-coordinate function back onto the curve: (lower g)(p) = g(S(u)).
CurveFunction lower(const ConjugateFunction& g);

/// Riemann-Stieltjes integral of f against the staircase over [a, b],
/// evaluated as a midpoint rule on a partition uniform in mass (so the
/// change of variables to the mass coordinate is exact by construction).
double falpha_integral(const CurveFunction& f, const FractalCurve& curve, double a, double b,
                       int n_panels);

/// Staircase-derivative of f at u: central difference with half-width h in
/// the mass coordinate, (f(u+) - f(u-)) / (2h) with S(u±) = S(u) ± h.
double falpha_derivative(const CurveFunction& f, const FractalCurve& curve, double u,
                         double h_mass);

}  // namespace fractalwalk
