#include "fractalwalk/stable.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "fractalwalk/errors.hpp"
#include "fractalwalk/numerics.hpp"

namespace fractalwalk::stable {

namespace {

constexpr double kTruncationTol = 1e-12;
constexpr std::size_t kMaxGridPoints = 100'000'000;

}  // namespace

StableLawConfig StableLawConfig::defaults_for(double mu) {
  StableLawConfig config;
  config.mu = mu;
  validate(config);
  if (mu >= 1.0) {
    config.k_max = 50.0;
  } else {
    // exp(-k^mu) < 1e-12 needs k > (ln 1e12)^(1/mu); keep at least the
    // conventional 200.
    const double needed = std::pow(std::log(1e13), 1.0 / mu);
    config.k_max = std::max(200.0, std::ceil(needed));
  }
  return config;
}

void validate(const StableLawConfig& config) {
  if (!(config.mu > 0.0 && config.mu <= 2.0)) {
    throw DomainError("stable: mu must lie in (0, 2], got " + std::to_string(config.mu));
  }
  if (!(config.dk > 0.0)) throw DomainError("stable: dk must be positive");
  if (!(config.k_max > 0.0)) throw DomainError("stable: k_max must be positive");
  if (config.beta != 0.0) {
    throw DomainError("stable: only the symmetric case beta = 0 is supported");
  }
  if (!(config.scale > 0.0)) throw DomainError("stable: scale must be positive");
  if (config.k_max / config.dk > static_cast<double>(kMaxGridPoints)) {
    throw CapacityError("stable: k grid would exceed " + std::to_string(kMaxGridPoints) +
                        " points");
  }
}

double characteristic(double k, const StableLawConfig& config) {
  validate(config);
  return std::exp(-std::pow(std::abs(config.scale * k), config.mu));
}

StableInverter::StableInverter(const StableLawConfig& config) : config_(config) {
  validate(config_);
  if (!(std::exp(-std::pow(config_.k_max, config_.mu)) < kTruncationTol)) {
    throw AccuracyError(
        "stable: characteristic function at k_max is not below 1e-12; raise k_max");
  }
  low_accuracy_ = config_.mu < 0.5;
  const std::size_t n = static_cast<std::size_t>(std::floor(config_.k_max / config_.dk)) + 1;
  weights_.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double k = static_cast<double>(m) * config_.dk;
    weights_[m] = std::exp(-std::pow(k, config_.mu)) * config_.dk / M_PI;
  }
  weights_.front() *= 0.5;
  weights_.back() *= 0.5;
}

double StableInverter::density(double y) const {
  const double z = std::abs(y) / config_.scale;
  double sum = 0.0;
  const double dk = config_.dk;
  for (std::size_t m = 0; m < weights_.size(); ++m) {
    sum += weights_[m] * std::cos(static_cast<double>(m) * dk * z);
  }
  return sum / config_.scale;
}

double invert_stable(double y, const StableLawConfig& config) {
  return StableInverter(config).density(y);
}

double tail_series(double y, double mu, int m_max) {
  if (!(y > 0.0)) throw DomainError("tail_series: y must be positive");
  if (m_max < 1) throw DomainError("tail_series: m_max must be >= 1");
  if (!(mu > 0.0 && mu < 2.0) || mu == 1.0) {
    throw DomainError("tail_series: mu must lie in (0, 2) excluding 1");
  }
  numerics::KahanSum sum;
  double factorial = 1.0;
  for (int m = 1; m <= m_max; ++m) {
    factorial *= m;
    const double mm = mu * m;
    if (mm + 1.0 > 170.0) break;  // Gamma overflows past this point
    const double term = std::pow(y, -(mm + 1.0)) * std::tgamma(1.0 + mm) *
                        std::sin(M_PI * mm / 2.0) / factorial;
    sum.add(m % 2 == 1 ? term : -term);
  }
  return sum.value() / M_PI;
}

double leading_tail(double y, double mu) {
  if (!(y > 0.0)) throw DomainError("leading_tail: y must be positive");
  if (!(mu > 0.0 && mu <= 2.0)) throw DomainError("leading_tail: mu must lie in (0, 2]");
  return std::pow(y, -(mu + 1.0)) * std::tgamma(1.0 + mu) * std::sin(M_PI * mu / 2.0) / M_PI;
}

double fractalized_density(const StaircaseTable& table, const StableInverter& inverter,
                           double u) {
  return inverter.density(table.value(u));
}

TailFit fit_tail_exponent(const StaircaseTable& table, const StableInverter& inverter,
                          double window_lo, double window_hi, int grid_depth) {
  const double total = table.total_mass();
  if (!(window_lo > 0.0 && window_lo < window_hi && window_hi <= total * (1.0 + 1e-12))) {
    throw DomainError("fit_tail_exponent: need 0 < window_lo < window_hi <= S(1)");
  }
  const int max_depth =
      table.curve().depth() >= 1 ? table.curve().depth() : FractalCurve::kMaxDepth;
  if (grid_depth < 1 || grid_depth > max_depth) {
    throw DomainError("fit_tail_exponent: grid_depth must lie in [1, depth]");
  }

  // The power law only holds where the density has reached its asymptote;
  // verify the scaled leading term matches at both window edges.
  const double mu = inverter.config().mu;
  const double scale = inverter.config().scale;
  for (const double edge : {window_lo, window_hi}) {
    const double lead = leading_tail(edge / scale, mu) / scale;
    const double rho = inverter.density(edge);
    if (!(lead > 0.0) || std::abs(rho - lead) > 0.05 * lead) {
      throw AccuracyError(
          "fit_tail_exponent: window edge at mass " + std::to_string(edge) +
          " is outside the asymptotic regime (leading term off by more than 5%)");
    }
  }

  const std::uint64_t cells = std::uint64_t{1} << (2 * grid_depth);
  std::vector<double> log_dist, log_density;
  for (std::uint64_t i = 1; i <= cells; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(cells);
    const double s = table.value(u);
    if (s < window_lo || s > window_hi) continue;
    const double dist = table.curve().euclidean_distance(u);
    const double rho = inverter.density(s);
    if (!(dist > 0.0) || !(rho > 0.0)) continue;
    log_dist.push_back(std::log(dist));
    log_density.push_back(std::log(rho));
  }
  if (log_dist.size() < 8) {
    throw DomainError("fit_tail_exponent: fewer than 8 grid points in the window");
  }
  const numerics::LineFit fit = numerics::fit_line(log_dist, log_density);
  TailFit out;
  out.fitted_exponent = fit.slope;
  out.intercept = fit.intercept;
  out.window_lo = window_lo;
  out.window_hi = window_hi;
  out.n_points = static_cast<int>(log_dist.size());
  return out;
}

MomentClass moment_finiteness(double mu, double alpha, int order) {
  if (!(mu > 0.0 && mu <= 2.0)) throw DomainError("moment_finiteness: mu must lie in (0, 2]");
  if (!(alpha > 0.0)) throw DomainError("moment_finiteness: alpha must be positive");
  if (order != 1 && order != 2) throw DomainError("moment_finiteness: order must be 1 or 2");
  return mu <= order / alpha ? MomentClass::kInfinite : MomentClass::kFinite;
}

}  // namespace fractalwalk::stable
