#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fractalwalk/errors.hpp"
#include "fractalwalk/numerics.hpp"

using namespace fractalwalk;
using namespace fractalwalk::numerics;

TEST_CASE("pairwise sum matches simple sums and beats naive rounding") {
  std::vector<double> values;
  for (int i = 1; i <= 1000; ++i) values.push_back(1.0 / i);
  double naive = 0.0;
  for (const double v : values) naive += v;
  CHECK(pairwise_sum(values) == doctest::Approx(naive).epsilon(1e-13));
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
  CHECK(pairwise_sum(std::vector<double>{3.5}) == 3.5);

  // A long alternating sum whose exact value is 0.
  std::vector<double> alternating;
  for (int i = 0; i < 100000; ++i) alternating.push_back(i % 2 == 0 ? 0.1 : -0.1);
  CHECK(std::abs(pairwise_sum(alternating)) < 1e-12);
}

TEST_CASE("complex pairwise sum") {
  std::vector<std::complex<double>> values(64, std::complex<double>(0.25, -0.5));
  const std::complex<double> sum = pairwise_sum(values);
  CHECK(sum.real() == doctest::Approx(16.0).epsilon(1e-14));
  CHECK(sum.imag() == doctest::Approx(-32.0).epsilon(1e-14));
}

TEST_CASE("kahan accumulator compensates rounding") {
  KahanSum sum;
  for (int i = 0; i < 10000000; ++i) sum.add(0.1);
  CHECK(sum.value() == doctest::Approx(1000000.0).epsilon(1e-14));
}

TEST_CASE("line fit recovers exact affine data") {
  std::vector<double> x, y;
  for (int i = 0; i < 10; ++i) {
    x.push_back(0.5 * i);
    y.push_back(-2.0 + 3.0 * (0.5 * i));
  }
  const LineFit fit = fit_line(x, y);
  CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(fit.intercept == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(fit.max_abs_residual < 1e-12);
}

TEST_CASE("line fit reports residuals of noisy data") {
  const std::vector<double> x = {0.0, 1.0, 2.0, 3.0};
  const std::vector<double> y = {0.1, 0.9, 2.1, 2.9};
  const LineFit fit = fit_line(x, y);
  CHECK(fit.slope == doctest::Approx(0.96).epsilon(1e-12));
  CHECK(fit.max_abs_residual > 0.0);
  CHECK(fit.max_abs_residual < 0.2);
}

TEST_CASE("line fit validates input") {
  const std::vector<double> one = {1.0};
  CHECK_THROWS_AS(fit_line(one, one), DomainError);
  const std::vector<double> x = {2.0, 2.0, 2.0};
  const std::vector<double> y = {0.0, 1.0, 2.0};
  CHECK_THROWS_AS(fit_line(x, y), DomainError);
  const std::vector<double> mismatched = {0.0, 1.0};
  CHECK_THROWS_AS(fit_line(x, mismatched), DomainError);
}
