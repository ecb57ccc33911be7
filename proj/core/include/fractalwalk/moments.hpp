#pragma once

#include <vector>

#include "fractalwalk/curve.hpp"

namespace fractalwalk::moments {

/// ⟨L^q⟩ sampled on a time grid.
struct MomentSeries {
  int order = 1;
  std::vector<double> times;
  std::vector<double> values;
};

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
};

/// q-th absolute moment of the walker's straight-line displacement at time t:
/// 2 * integral over s in [0, tiles * S(1)] of L(s)^q times the continuum
/// Gaussian of variance A t, taken as a midpoint rule uniform in mass over
/// the chained unfolding of the curve.  Throws AccuracyError when the
/// Gaussian weight at the truncation boundary exceeds 1e-10.
double absolute_moment(const FractalCurve& curve, int order, double t, double diffusivity,
                       int n_panels, int tiles);

/// Smallest tile count whose truncation boundary carries Gaussian weight
/// below 1e-10 for every t <= t_max.
int tiles_for(const FractalCurve& curve, double t_max, double diffusivity);

/// absolute_moment on a log-uniform time grid from t_lo to t_hi.
MomentSeries moment_series(const FractalCurve& curve, int order, double t_lo, double t_hi,
                           int n_times, double diffusivity, int n_panels, int tiles);

/// Dimension-based scaling guess q / (2 alpha) for the log-log slope.
double heuristic_exponent(double alpha, int order);

/// Least-squares slope of log value against log time (>= 4 points).
ExponentFit fit_exponent(const MomentSeries& series);

}  // namespace fractalwalk::moments
