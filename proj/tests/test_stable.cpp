#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fractalwalk/errors.hpp"
#include "fractalwalk/stable.hpp"
#include "oracles.hpp"

using namespace fractalwalk;
using namespace fractalwalk::stable;

namespace {

constexpr double kAlpha = 1.2618595071429148;

double cauchy_density(double y) { return 1.0 / (M_PI * (1.0 + y * y)); }

double gauss_density(double y) {  // mu = 2: exp(-k^2) inverts to N(0, 2)
  return std::exp(-y * y / 4.0) / (2.0 * std::sqrt(M_PI));
}

}  // namespace

TEST_CASE("defaults satisfy the truncation rule") {
  for (const double mu : {0.5, 0.75, 1.0, 1.5, 2.0}) {
    const StableLawConfig config = StableLawConfig::defaults_for(mu);
    CHECK(config.dk == 1e-3);
    CHECK(std::exp(-std::pow(config.k_max, mu)) < 1e-12);
    CHECK_NOTHROW(StableInverter{config});
  }
  CHECK(StableLawConfig::defaults_for(1.3).k_max == 50.0);
  CHECK(StableLawConfig::defaults_for(0.9).k_max == 200.0);
  CHECK(StableLawConfig::defaults_for(0.5).k_max >= 800.0);
}

TEST_CASE("characteristic function") {
  StableLawConfig config = StableLawConfig::defaults_for(1.5);
  CHECK(characteristic(0.0, config) == 1.0);
  CHECK(characteristic(1.0, config) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(characteristic(-2.0, config) == characteristic(2.0, config));
  config.scale = 0.5;
  CHECK(characteristic(2.0, config) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("configuration validation") {
  StableLawConfig config;
  config.mu = 0.0;
  CHECK_THROWS_AS(validate(config), DomainError);
  config.mu = 2.5;
  CHECK_THROWS_AS(validate(config), DomainError);
  config = StableLawConfig::defaults_for(1.0);
  config.beta = 0.3;
  CHECK_THROWS_AS(validate(config), DomainError);
  config = StableLawConfig::defaults_for(1.0);
  config.dk = 0.0;
  CHECK_THROWS_AS(validate(config), DomainError);
  config = StableLawConfig::defaults_for(1.0);
  config.scale = -1.0;
  CHECK_THROWS_AS(validate(config), DomainError);
  config = StableLawConfig::defaults_for(1.0);
  config.dk = 1e-10;
  config.k_max = 1e3;
  CHECK_THROWS_AS(validate(config), CapacityError);
  // Truncation guard: exp(-k_max^mu) must be < 1e-12.
  config = StableLawConfig::defaults_for(0.5);
  config.k_max = 200.0;
  CHECK_THROWS_AS(StableInverter{config}, AccuracyError);
}

TEST_CASE("inversion reproduces the Cauchy law") {
  const StableInverter inverter(StableLawConfig::defaults_for(1.0));
  CHECK_FALSE(inverter.low_accuracy());
  double worst = 0.0;
  for (int i = -40; i <= 40; ++i) {
    const double y = 0.25 * i;
    worst = std::max(worst, std::abs(inverter.density(y) - cauchy_density(y)));
  }
  CHECK(worst < 1e-4);
  CHECK(inverter.density(0.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-7));
}

TEST_CASE("inversion reproduces the Gaussian law") {
  const StableInverter inverter(StableLawConfig::defaults_for(2.0));
  double worst = 0.0;
  for (int i = -40; i <= 40; ++i) {
    const double y = 0.25 * i;
    worst = std::max(worst, std::abs(inverter.density(y) - gauss_density(y)));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("densities are even, positive at the center, and normalized") {
  for (const double mu : {1.0, 1.5, 2.0}) {
    const StableInverter inverter(StableLawConfig::defaults_for(mu));
    CHECK(inverter.density(0.7) == inverter.density(-0.7));
    CHECK(inverter.density(0.0) > 0.0);
    // Mass over [-1000, 1000] by symmetry, with a fine grid near the peak
    // and a coarse one on the smooth tail; the un-integrated Cauchy tail
    // (~2/(pi*1000)) dominates the error budget and stays under 1e-3.
    const auto rho = [&](double y) { return inverter.density(y); };
    const double mass = 2.0 * (oracles::trapezoid_quadrature(rho, 0.0, 10.0, 1000) +
                               oracles::trapezoid_quadrature(rho, 10.0, 1000.0, 3960));
    CHECK(std::abs(mass - 1.0) < 1e-3);
  }
}

TEST_CASE("scale rescales the density consistently") {
  StableLawConfig config = StableLawConfig::defaults_for(1.0);
  const StableInverter unit(config);
  config.scale = 0.25;
  const StableInverter quarter(config);
  for (const double y : {0.0, 0.3, 1.7}) {
    CHECK(quarter.density(y) == doctest::Approx(4.0 * unit.density(4.0 * y)).epsilon(1e-9));
  }
  // The scaled Cauchy law has a closed form.
  for (const double y : {0.1, 0.5, 2.0}) {
    const double c = 0.25;
    const double expected = c / (M_PI * (c * c + y * y));
    CHECK(quarter.density(y) == doctest::Approx(expected).epsilon(1e-5));
  }
}

TEST_CASE("low accuracy flag trips below mu = 0.5") {
  CHECK_FALSE(StableInverter(StableLawConfig::defaults_for(0.5)).low_accuracy());
  CHECK(StableInverter(StableLawConfig::defaults_for(0.4)).low_accuracy());
}

TEST_CASE("tail series approximates the density far out") {
  // mu = 1.5, y = 10: three series terms agree with the inversion to 0.1%,
  // while the leading term alone is ~11% high.
  const StableInverter inverter(StableLawConfig::defaults_for(1.5));
  const double rho = inverter.density(10.0);
  const double series3 = tail_series(10.0, 1.5, 3);
  CHECK(std::abs(series3 - rho) / rho < 1e-3);
  const double lead = leading_tail(10.0, 1.5);
  CHECK(lead == doctest::Approx(9.461746957575603e-4).epsilon(1e-12));
  CHECK(std::abs(lead - rho) / rho > 0.05);
  CHECK(std::abs(lead - rho) / rho < 0.15);
  CHECK(tail_series(10.0, 1.5, 1) == doctest::Approx(lead).epsilon(1e-14));
}

TEST_CASE("tail agreement threshold for mu = 1.5 sits near y = 17") {
  const StableInverter inverter(StableLawConfig::defaults_for(1.5));
  const double at16 = std::abs(inverter.density(16.0) - leading_tail(16.0, 1.5)) /
                      leading_tail(16.0, 1.5);
  const double at17 = std::abs(inverter.density(17.0) - leading_tail(17.0, 1.5)) /
                      leading_tail(17.0, 1.5);
  CHECK(at16 > 0.05);
  CHECK(at17 < 0.05);
}

TEST_CASE("heavy-tail series for mu = 0.5") {
  // y = 100 is far out yet the second series term is still ~8% of the
  // first, so the leading term alone overshoots by that much.  The series
  // converges by m = 3; the residual against the inversion (~1%) is the
  // trapezoid's own error from the sqrt(k) kink of the exponent, and is
  // ~2e-6 in absolute terms, matching the grid's absolute accuracy.
  const StableInverter inverter(StableLawConfig::defaults_for(0.5));
  const double rho = inverter.density(100.0);
  const double lead = leading_tail(100.0, 0.5);
  CHECK(lead == doctest::Approx(1.9947114020071635e-4).epsilon(1e-10));
  CHECK(std::abs(lead - rho) / rho < 0.10);
  CHECK(std::abs(lead - rho) / rho > 0.05);
  const double series3 = tail_series(100.0, 0.5, 3);
  CHECK(series3 == doctest::Approx(1.8405432374202858e-4).epsilon(1e-12));
  CHECK(std::abs(series3 - rho) / rho < 0.02);
  CHECK(std::abs(series3 - rho) < 3e-6);
  // Past m = 3 the terms are below double precision at this y.
  CHECK(tail_series(100.0, 0.5, 6) ==
        doctest::Approx(series3).epsilon(1e-4));
}

TEST_CASE("tail series rejects degenerate orders") {
  CHECK_THROWS_AS(tail_series(10.0, 1.0, 3), DomainError);
  CHECK_THROWS_AS(tail_series(10.0, 2.0, 3), DomainError);
  CHECK_THROWS_AS(tail_series(-1.0, 1.5, 3), DomainError);
  CHECK_THROWS_AS(tail_series(10.0, 1.5, 0), DomainError);
  CHECK_THROWS_AS(leading_tail(0.0, 1.5), DomainError);
}

TEST_CASE("fractalized density pushes the law through the staircase") {
  const FractalCurve curve = make_koch_curve(4);
  const StaircaseTable table(curve, 4);
  StableLawConfig config = StableLawConfig::defaults_for(1.0);
  config.scale = 0.05;
  const StableInverter inverter(config);
  for (const double u : {0.125, 0.5, 0.75}) {
    CHECK(fractalized_density(table, inverter, u) ==
          doctest::Approx(inverter.density(staircase(curve, u))).epsilon(1e-14));
  }
}

TEST_CASE("fractal tail exponent is -alpha (mu + 1)") {
  const FractalCurve curve = make_koch_curve(6);
  const StaircaseTable table(curve, 6);
  StableLawConfig config = StableLawConfig::defaults_for(1.5);
  config.scale = 0.005;
  const StableInverter inverter(config);
  const TailFit fit = fit_tail_exponent(table, inverter, 0.1, 0.7, 6);
  const double expected = -kAlpha * 2.5;  // -3.1546...
  CHECK(fit.n_points > 100);
  CHECK(std::abs(fit.fitted_exponent - expected) / std::abs(expected) < 0.05);
}

TEST_CASE("straight-line control recovers the classical tail exponent") {
  const FractalCurve segment = make_unit_segment();
  const StaircaseTable table(segment, 6);
  StableLawConfig config = StableLawConfig::defaults_for(1.5);
  config.scale = 0.005;
  const StableInverter inverter(config);
  const TailFit fit = fit_tail_exponent(table, inverter, 0.1, 0.7, 6);
  CHECK(std::abs(fit.fitted_exponent - (-2.5)) / 2.5 < 0.05);
}

TEST_CASE("tail fit refuses a window outside the asymptotic regime") {
  const FractalCurve curve = make_koch_curve(6);
  const StaircaseTable table(curve, 6);
  // With scale 1 the whole curve sits at |y| < 1, far from the tail.
  const StableInverter unit(StableLawConfig::defaults_for(1.5));
  CHECK_THROWS_AS(fit_tail_exponent(table, unit, 0.1, 0.7, 6), AccuracyError);
  StableLawConfig config = StableLawConfig::defaults_for(1.5);
  config.scale = 0.005;
  const StableInverter inverter(config);
  CHECK_THROWS_AS(fit_tail_exponent(table, inverter, 0.7, 0.1, 6), DomainError);
  CHECK_THROWS_AS(fit_tail_exponent(table, inverter, 0.1, 0.7, 13), DomainError);
}

TEST_CASE("moment finiteness thresholds") {
  // First moment diverges iff mu <= 1/alpha, second iff mu <= 2/alpha.
  CHECK(moment_finiteness(0.5, kAlpha, 1) == MomentClass::kInfinite);
  CHECK(moment_finiteness(0.7924812503605781, kAlpha, 1) == MomentClass::kInfinite);
  CHECK(moment_finiteness(0.8, kAlpha, 1) == MomentClass::kFinite);
  CHECK(moment_finiteness(1.5, kAlpha, 2) == MomentClass::kInfinite);
  CHECK(moment_finiteness(1.6, kAlpha, 2) == MomentClass::kFinite);
  CHECK(moment_finiteness(2.0, kAlpha, 2) == MomentClass::kFinite);
  CHECK(moment_finiteness(0.7, kAlpha, 1) == MomentClass::kInfinite);
  CHECK(moment_finiteness(1.7, kAlpha, 2) == MomentClass::kFinite);
  // The threshold itself counts as divergent.
  CHECK(moment_finiteness(1.0, 1.0, 1) == MomentClass::kInfinite);
  CHECK_THROWS_AS(moment_finiteness(0.0, kAlpha, 1), DomainError);
  CHECK_THROWS_AS(moment_finiteness(1.0, kAlpha, 3), DomainError);
}
