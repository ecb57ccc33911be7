#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fractalwalk::numerics {

/// Compensated (Kahan) accumulator for long streaming sums.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - compensation_;
    const double t = total_ + y;
    compensation_ = (t - total_) - y;
    total_ = t;
  }
  double value() const { return total_; }

 private:
  double total_ = 0.0;
  double compensation_ = 0.0;
};

/// Pairwise (cascade) summation; error grows like log2(n) * eps.
double pairwise_sum(std::span<const double> values);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
};

/// Ordinary least squares y ~ intercept + slope * x.  Requires >= 2 points
/// and non-degenerate x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace fractalwalk::numerics
