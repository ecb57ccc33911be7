#pragma once

#include <vector>

#include "fractalwalk/calculus.hpp"

namespace fractalwalk::stable {

/// Symmetric stable law with characteristic function exp(-|scale * k|^mu).
/// dk and k_max discretize the inversion integral in the unit-scale wave
/// number; scale only rescales the argument and the density height.
struct StableLawConfig {
  double mu = 2.0;
  double dk = 1e-3;
  double k_max = 50.0;
  double beta = 0.0;   // asymmetry; only the symmetric case 0 is supported
  double scale = 1.0;

  /// dk = 1e-3 and the smallest conventional k_max with
  /// exp(-k_max^mu) < 1e-12 (50 for mu >= 1, at least 200 below).
  static StableLawConfig defaults_for(double mu);
};

void validate(const StableLawConfig& config);

/// exp(-|scale * k|^mu).
double characteristic(double k, const StableLawConfig& config);

/// Density by cosine inversion of the characteristic function on a fixed
/// k grid: rho(y) = (1/pi) * trapezoid of exp(-k^mu) cos(k y / scale) / scale.
/// Weights are precomputed once; evaluation is O(k_max / dk) per point.
class StableInverter {
 public:
  explicit StableInverter(const StableLawConfig& config);

  double density(double y) const;

  /// Set when mu < 0.5: the integrand decays so slowly that the fixed grid
  /// is accurate only to roughly 1e-6 rather than 1e-10.
  bool low_accuracy() const { return low_accuracy_; }
  const StableLawConfig& config() const { return config_; }

 private:
  StableLawConfig config_;
  std::vector<double> weights_;  // exp(-k^mu) dk / pi with trapezoid ends
  bool low_accuracy_ = false;
};

/// One-off density evaluation (builds the grid each call).
double invert_stable(double y, const StableLawConfig& config);

/// Large-y asymptotic series of the unit-scale density up to m_max terms:
/// (1/pi) * sum_m (-1)^(m+1) y^-(mu m + 1) Gamma(1 + mu m) sin(pi mu m / 2) / m!.
/// The series degenerates at mu = 1 and mu = 2 (every term vanishes past the
/// closed forms), so those values are rejected.
double tail_series(double y, double mu, int m_max);

/// First term of tail_series.
double leading_tail(double y, double mu);

/// Density of the stable law pushed onto the curve through the staircase:
/// value at parameter u is the law's density at mass S(u).
double fractalized_density(const StaircaseTable& table, const StableInverter& inverter, double u);

struct TailFit {
  double fitted_exponent = 0.0;
  double intercept = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  int n_points = 0;
};

/// Log-log slope of the fractalized density against straight-line distance
/// L(u) over aligned parameters whose mass falls in [window_lo, window_hi].
/// Requires the window to sit in the asymptotic regime (scaled leading term
/// within 5% of the density at the window edges); throws AccuracyError
/// otherwise.
TailFit fit_tail_exponent(const StaircaseTable& table, const StableInverter& inverter,
                          double window_lo, double window_hi, int grid_depth);

enum class MomentClass { kFinite, kInfinite };

/// Finiteness of ⟨L^order⟩ under the fractalized law: infinite exactly when
/// mu <= order / alpha.
MomentClass moment_finiteness(double mu, double alpha, int order);

}  // namespace fractalwalk::stable
