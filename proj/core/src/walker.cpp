#include "fractalwalk/walker.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "fractalwalk/errors.hpp"

namespace fractalwalk::walker {

namespace {

constexpr int kMaxExactSteps = 60;
constexpr double kLatticeTol = 1e-9;

struct LatticeBounds {
  long long lo;
  long long hi;
};

// Offsets k with start + k * delta inside [0, S(1)], up to lattice tolerance.
LatticeBounds reflecting_bounds(const FractalCurve& curve, const WalkConfig& config) {
  const double total = total_mass(curve);
  const double lo = std::ceil((0.0 - config.start_mass) / config.delta - kLatticeTol);
  const double hi = std::floor((total - config.start_mass) / config.delta + kLatticeTol);
  return {static_cast<long long>(lo), static_cast<long long>(hi)};
}

long long run_trial(const WalkConfig& config, const LatticeBounds& bounds, TrialRng& rng) {
  long long k = 0;
  for (int step = 0; step < config.n_steps; ++step) {
    long long dir = rng.next_bit() ? 1 : -1;
    if (config.boundary == Boundary::kReflecting) {
      if (k + dir < bounds.lo || k + dir > bounds.hi) dir = -dir;
      if (k + dir < bounds.lo || k + dir > bounds.hi) dir = 0;
    }
    k += dir;
  }
  return k;
}

}  // namespace

void validate(const WalkConfig& config, const FractalCurve& curve) {
  if (!(config.delta > 0.0)) throw DomainError("walk: delta must be positive");
  if (!(config.tau > 0.0)) throw DomainError("walk: tau must be positive");
  if (config.n_steps < 0) throw DomainError("walk: n_steps must be non-negative");
  const double total = total_mass(curve);
  if (config.boundary == Boundary::kReflecting) {
    if (!(config.start_mass >= 0.0 && config.start_mass <= total)) {
      throw DomainError("walk: start_mass must lie in [0, S(1)] for a reflecting walk");
    }
    if (!(config.delta <= total / 2.0)) {
      throw DomainError("walk: delta must be <= S(1)/2 for a reflecting walk");
    }
  }
}

std::uint64_t count_walks_exact(int n_steps, long long offset) {
  if (n_steps < 0) throw DomainError("count_walks_exact: n_steps must be non-negative");
  if (n_steps > kMaxExactSteps) {
    throw CapacityError("count_walks_exact: exact counts overflow past n = " +
                        std::to_string(kMaxExactSteps));
  }
  if (std::llabs(offset) > n_steps || ((offset + n_steps) & 1LL) != 0) return 0;
  // Pascal recursion on the count row; j = (offset + n) / 2 up-steps.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n_steps) + 1, 0);
  row[0] = 1;
  for (int n = 1; n <= n_steps; ++n) {
    for (int j = n; j >= 1; --j) row[j] += row[j - 1];
  }
  return row[static_cast<std::size_t>((offset + n_steps) / 2)];
}

double walk_probability(int n_steps, long long offset) {
  if (n_steps < 0) throw DomainError("walk_probability: n_steps must be non-negative");
  if (std::llabs(offset) > n_steps || ((offset + n_steps) & 1LL) != 0) return 0.0;
  if (n_steps <= kMaxExactSteps) {
    return static_cast<double>(count_walks_exact(n_steps, offset)) * std::ldexp(1.0, -n_steps);
  }
  const double n = n_steps;
  const double j = static_cast<double>((offset + n_steps) / 2);
  const double log_p = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) -
                       n * std::log(2.0);
  return std::exp(log_p);
}

WalkHistogram simulate_walks(const FractalCurve& curve, const WalkConfig& config,
                             std::uint64_t n_trials, int n_threads) {
  validate(config, curve);
  if (n_threads < 1) throw DomainError("simulate_walks: n_threads must be >= 1");
  const LatticeBounds bounds = config.boundary == Boundary::kReflecting
                                   ? reflecting_bounds(curve, config)
                                   : LatticeBounds{0, 0};

  const int used_threads =
      static_cast<int>(std::min<std::uint64_t>(n_trials > 0 ? n_trials : 1, n_threads));
  std::vector<std::map<long long, std::uint64_t>> partial(used_threads);
  auto worker = [&](int tid) {
    auto& local = partial[tid];
    for (std::uint64_t trial = tid; trial < n_trials; trial += used_threads) {
      TrialRng rng(config.seed, trial, /*stream=*/0);
      ++local[run_trial(config, bounds, rng)];
    }
  };
  if (used_threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(used_threads);
    for (int t = 0; t < used_threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  WalkHistogram hist;
  hist.n_steps = config.n_steps;
  hist.n_trials = n_trials;
  for (const auto& local : partial) {
    for (const auto& [k, c] : local) hist.counts[k] += c;
  }
  return hist;
}

double gaussian_density_discrete(int n_steps, double delta, double mass_displacement) {
  if (n_steps < 1) throw DomainError("gaussian_density_discrete: n_steps must be >= 1");
  if (!(delta > 0.0)) throw DomainError("gaussian_density_discrete: delta must be positive");
  const double n = n_steps;
  const double z = mass_displacement / delta;
  return std::exp(-z * z / (2.0 * n)) / std::sqrt(2.0 * M_PI * n);
}

double continuum_density(double t, double diffusivity, double mass_displacement) {
  if (!(t > 0.0)) throw DomainError("continuum_density: t must be positive");
  if (!(diffusivity > 0.0)) throw DomainError("continuum_density: diffusivity must be positive");
  const double var = diffusivity * t;
  return std::exp(-mass_displacement * mass_displacement / (2.0 * var)) /
         std::sqrt(2.0 * M_PI * var);
}

CurvePoint readout_point(const FractalCurve& curve, double mass) {
  if (!std::isfinite(mass)) throw DomainError("readout_point: mass must be finite");
  const double total = total_mass(curve);
  const double period = 2.0 * total;
  double m = std::fmod(mass, period);
  if (m < 0.0) m += period;
  if (m > total) m = period - m;
  if (m < 0.0) m = 0.0;
  if (m > total) m = total;
  return curve_point(curve, inverse_staircase(curve, m));
}

}  // namespace fractalwalk::walker
