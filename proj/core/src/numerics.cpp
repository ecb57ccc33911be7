#include "fractalwalk/numerics.hpp"

#include <cmath>
#include <cstddef>

#include "fractalwalk/errors.hpp"

namespace fractalwalk::numerics {

namespace {

template <typename T>
T pairwise_sum_impl(std::span<const T> values) {
  const std::size_t n = values.size();
  if (n == 0) return T{};
  if (n <= 8) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(values.first(half)) + pairwise_sum_impl(values.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> values) { return pairwise_sum_impl(values); }

std::complex<double> pairwise_sum(std::span<const std::complex<double>> values) {
  return pairwise_sum_impl(values);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DomainError("fit_line: x and y must have equal length");
  }
  if (x.size() < 2) {
    throw DomainError("fit_line: need at least 2 points");
  }
  const double n = static_cast<double>(x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    sxx += dx * dx;
    sxy += dx * (y[i] - mean_y);
  }
  if (!(sxx > 0.0)) {
    throw DomainError("fit_line: abscissae are degenerate");
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = std::abs(y[i] - (fit.intercept + fit.slope * x[i]));
    if (r > fit.max_abs_residual) fit.max_abs_residual = r;
  }
  return fit;
}

}  // namespace fractalwalk::numerics
