#include "fractalwalk/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fractalwalk/errors.hpp"
#include "fractalwalk/numerics.hpp"
#include "fractalwalk/unfold.hpp"

namespace fractalwalk::moments {

namespace {

constexpr double kBoundaryWeightTol = 1e-10;

void check_order(int order) {
  if (order != 1 && order != 2) {
    throw DomainError("moment order must be 1 or 2, got " + std::to_string(order));
  }
}

}  // namespace

double absolute_moment(const FractalCurve& curve, int order, double t, double diffusivity,
                       int n_panels, int tiles) {
  check_order(order);
  if (!(t > 0.0)) throw DomainError("absolute_moment: t must be positive");
  if (!(diffusivity > 0.0)) throw DomainError("absolute_moment: diffusivity must be positive");
  if (n_panels < 1) throw DomainError("absolute_moment: n_panels must be >= 1");
  if (tiles < 1) throw DomainError("absolute_moment: tiles must be >= 1");

  const UnfoldedCurve unfolded(curve);
  const double upper = tiles * unfolded.tile_mass();
  const double var = diffusivity * t;
  if (std::exp(-upper * upper / (2.0 * var)) > kBoundaryWeightTol) {
    throw AccuracyError(
        "absolute_moment: Gaussian weight at the truncation mass exceeds 1e-10; "
        "increase tiles");
  }

  const double h = upper / n_panels;
  numerics::KahanSum sum;
  for (int i = 0; i < n_panels; ++i) {
    const double s = (i + 0.5) * h;
    const double dist = unfolded.euclidean_distance(s);
    const double weighted =
        (order == 1 ? dist : dist * dist) * std::exp(-s * s / (2.0 * var));
    sum.add(weighted);
  }
  const double result = 2.0 * sum.value() * h / std::sqrt(2.0 * M_PI * var);
  if (!std::isfinite(result)) throw NumericError("absolute_moment: non-finite result");
  return result;
}

int tiles_for(const FractalCurve& curve, double t_max, double diffusivity) {
  if (!(t_max > 0.0)) throw DomainError("tiles_for: t_max must be positive");
  if (!(diffusivity > 0.0)) throw DomainError("tiles_for: diffusivity must be positive");
  const double sigma = std::sqrt(diffusivity * t_max);
  // exp(-x^2/2) < 1e-10 needs x > 6.79; use 7 sigma with a unit floor.
  const double needed = 7.0 * sigma / total_mass(curve);
  return static_cast<int>(std::ceil(std::max(1.0, needed)));
}

MomentSeries moment_series(const FractalCurve& curve, int order, double t_lo, double t_hi,
                           int n_times, double diffusivity, int n_panels, int tiles) {
  check_order(order);
  if (!(t_lo > 0.0 && t_hi > t_lo)) {
    throw DomainError("moment_series: need 0 < t_lo < t_hi");
  }
  if (n_times < 2) throw DomainError("moment_series: need at least 2 times");
  MomentSeries series;
  series.order = order;
  const double log_lo = std::log(t_lo);
  const double step = (std::log(t_hi) - log_lo) / (n_times - 1);
  for (int i = 0; i < n_times; ++i) {
    const double t = std::exp(log_lo + i * step);
    series.times.push_back(t);
    series.values.push_back(absolute_moment(curve, order, t, diffusivity, n_panels, tiles));
  }
  return series;
}

double heuristic_exponent(double alpha, int order) {
  check_order(order);
  if (!(alpha > 0.0)) throw DomainError("heuristic_exponent: alpha must be positive");
  return order / (2.0 * alpha);
}

ExponentFit fit_exponent(const MomentSeries& series) {
  if (series.times.size() != series.values.size()) {
    throw DomainError("fit_exponent: malformed series");
  }
  if (series.times.size() < 4) {
    throw DomainError("fit_exponent: need at least 4 points");
  }
  std::vector<double> log_t, log_v;
  log_t.reserve(series.times.size());
  log_v.reserve(series.values.size());
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    if (!(series.times[i] > 0.0) || !(series.values[i] > 0.0)) {
      throw DomainError("fit_exponent: times and values must be positive");
    }
    log_t.push_back(std::log(series.times[i]));
    log_v.push_back(std::log(series.values[i]));
  }
  const numerics::LineFit fit = numerics::fit_line(log_t, log_v);
  return ExponentFit{fit.slope, fit.intercept, fit.max_abs_residual};
}

}  // namespace fractalwalk::moments
