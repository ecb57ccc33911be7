// End-to-end validation pipeline shared by the acceptance test binary and
// the CLI `repro` subcommand.  Each check exercises one advertised guarantee
// of the library against an oracle implemented here from scratch, and
// reports a one-line measured-vs-required summary.
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "fractalwalk/calculus.hpp"
#include "fractalwalk/curve.hpp"
#include "fractalwalk/fourier.hpp"
#include "fractalwalk/moments.hpp"
#include "fractalwalk/passage.hpp"
#include "fractalwalk/rng.hpp"
#include "fractalwalk/stable.hpp"
#include "fractalwalk/walker.hpp"

namespace fractalwalk::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

namespace detail {

inline std::string format(const char* fmt, ...) {
  char buffer[768];
  std::va_list args;
  va_start(args, fmt);
  std::vsnprintf(buffer, sizeof buffer, fmt, args);
  va_end(args);
  return buffer;
}

// Binomial coefficient by the multiplicative formula; each multiply-then-
// divide step is exact in integers, and the values for n <= 40 fit in 64
// bits with room to spare.
inline std::uint64_t binomial(int n, int j) {
  if (j < 0 || j > n) return 0;
  j = std::min(j, n - j);
  std::uint64_t result = 1;
  for (int i = 1; i <= j; ++i) {
    result = result * static_cast<std::uint64_t>(n - j + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

// First-passage pmf to a level target > 0 for an unbounded +-1 walk,
// P(T = n) for n = 1..n_max, by value iteration with an absorbing barrier.
inline std::vector<double> first_passage_pmf(int target, int n_max) {
  const int offset = n_max;
  std::vector<double> prob(static_cast<std::size_t>(n_max + target), 0.0);
  std::vector<double> next(prob.size(), 0.0);
  std::vector<double> pmf(static_cast<std::size_t>(n_max) + 1, 0.0);
  prob[static_cast<std::size_t>(offset)] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    std::fill(next.begin(), next.end(), 0.0);
    double hit = 0.0;
    for (std::size_t i = 0; i < prob.size(); ++i) {
      if (prob[i] == 0.0) continue;
      const long long pos = static_cast<long long>(i) - offset;
      for (const long long dir : {-1LL, 1LL}) {
        const long long to = pos + dir;
        if (to == target) {
          hit += 0.5 * prob[i];
        } else if (to + offset >= 0 && static_cast<std::size_t>(to + offset) < next.size()) {
          next[static_cast<std::size_t>(to + offset)] += 0.5 * prob[i];
        }
      }
    }
    pmf[static_cast<std::size_t>(n)] = hit;
    prob.swap(next);
  }
  return pmf;
}

inline double total_variation(const std::map<long long, double>& p,
                              const std::map<long long, double>& q) {
  std::map<long long, double> diff;
  for (const auto& [k, v] : p) diff[k] += v;
  for (const auto& [k, v] : q) diff[k] -= v;
  double tv = 0.0;
  for (const auto& [k, v] : diff) tv += std::abs(v);
  return 0.5 * tv;
}

}  // namespace detail

// Fitted log-log slopes of the first two displacement moments on the deep
// curve must land in the advertised bands around q / (2 alpha).
inline CheckResult check_moment_exponents() {
  CheckResult result{"moment-exponents", false, 0.0, ""};
  const FractalCurve curve = make_koch_curve(6);
  const double t_lo = 3e-5;
  const double t_hi = 3e-4;
  const int tiles = moments::tiles_for(curve, t_hi, 1.0);
  const auto series1 = moments::moment_series(curve, 1, t_lo, t_hi, 12, 1.0, 40000, tiles);
  const auto series2 = moments::moment_series(curve, 2, t_lo, t_hi, 12, 1.0, 40000, tiles);
  const double slope1 = moments::fit_exponent(series1).slope;
  const double slope2 = moments::fit_exponent(series2).slope;
  result.passed = slope1 >= 0.37 && slope1 <= 0.43 && slope2 >= 0.77 && slope2 <= 0.83;
  result.detail = detail::format("slope1=%.4f in [0.37,0.43], slope2=%.4f in [0.77,0.83]",
                                 slope1, slope2);
  return result;
}

// Exact path counts must reproduce the multiplicative binomial for every
// endpoint up to 40 steps, and the Monte Carlo endpoint histogram at 16
// steps must sit within total variation 0.02 of the exact law.
inline CheckResult check_walk_oracle() {
  CheckResult result{"walk-oracle", false, 0.0, ""};
  int count_mismatches = 0;
  for (int n = 0; n <= 40; ++n) {
    for (long long k = -n; k <= n; ++k) {
      const bool reachable = ((k + n) & 1LL) == 0;
      const std::uint64_t expected =
          reachable ? detail::binomial(n, static_cast<int>((k + n) / 2)) : 0;
      if (walker::count_walks_exact(n, k) != expected) ++count_mismatches;
    }
  }

  const FractalCurve curve = make_koch_curve(4);
  walker::WalkConfig config;
  config.delta = 0.01;
  config.n_steps = 16;
  const auto histogram = walker::simulate_walks(curve, config, 100000);
  std::map<long long, double> empirical;
  for (const auto& [k, count] : histogram.counts) {
    empirical[k] = static_cast<double>(count) / static_cast<double>(histogram.n_trials);
  }
  std::map<long long, double> exact;
  for (long long k = -16; k <= 16; k += 2) exact[k] = walker::walk_probability(16, k);
  const double tv = detail::total_variation(empirical, exact);

  result.passed = count_mismatches == 0 && tv <= 0.02;
  result.detail = detail::format("count mismatches=%d (n<=40), monte carlo TV=%.5f <= 0.02",
                                 count_mismatches, tv);
  return result;
}

// The staircase total must equal 1 / Gamma(alpha + 1) at every construction
// depth, with the quarter-curve identity and interval additivity holding to
// 1e-12 on aligned partitions.
inline CheckResult check_mass_identities() {
  CheckResult result{"mass-identities", false, 0.0, ""};
  double worst_total = 0.0;
  double worst_quarter = 0.0;
  double worst_additivity = 0.0;
  for (int depth = 1; depth <= 6; ++depth) {
    const FractalCurve curve = make_koch_curve(depth);
    const double norm = 1.0 / std::tgamma(curve.alpha() + 1.0);
    const double full = mass_function(curve, 0.0, 1.0, depth);
    worst_total = std::max(worst_total, std::abs(full - norm));
    const double quarter = mass_function(curve, 0.0, 0.25, depth);
    worst_quarter = std::max(worst_quarter, std::abs(quarter - full / 4.0));
    const double grain = 1.0 / static_cast<double>(std::uint64_t{1} << (2 * depth));
    TrialRng draw(7, static_cast<std::uint64_t>(depth));
    for (int trial = 0; trial < 32; ++trial) {
      const auto cell = static_cast<std::uint64_t>(std::uint64_t{1} << (2 * depth));
      std::uint64_t i = draw.next_u64() % (cell + 1);
      std::uint64_t j = draw.next_u64() % (cell + 1);
      std::uint64_t k = draw.next_u64() % (cell + 1);
      std::uint64_t lo = std::min({i, j, k});
      std::uint64_t hi = std::max({i, j, k});
      std::uint64_t mid = i + j + k - lo - hi;
      const double a = static_cast<double>(lo) * grain;
      const double b = static_cast<double>(mid) * grain;
      const double c = static_cast<double>(hi) * grain;
      const double split =
          mass_function(curve, a, b, depth) + mass_function(curve, b, c, depth);
      worst_additivity =
          std::max(worst_additivity, std::abs(split - mass_function(curve, a, c, depth)));
    }
  }
  result.passed = worst_total <= 1e-12 && worst_quarter <= 1e-12 && worst_additivity <= 1e-12;
  result.detail = detail::format(
      "max |S(1)-1/Gamma|=%.2e, quarter identity=%.2e, additivity=%.2e (all <= 1e-12)",
      worst_total, worst_quarter, worst_additivity);
  return result;
}

// Numerical inversion of the stable characteristic function must match the
// Cauchy closed form to 1e-4 and the Gaussian closed form to 1e-6.
inline CheckResult check_stable_inversion() {
  CheckResult result{"stable-inversion", false, 0.0, ""};
  const stable::StableInverter cauchy(stable::StableLawConfig::defaults_for(1.0));
  double worst_cauchy = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double y = -10.0 + 0.05 * i;
    worst_cauchy = std::max(worst_cauchy,
                            std::abs(cauchy.density(y) - 1.0 / (M_PI * (1.0 + y * y))));
  }
  const stable::StableInverter gauss(stable::StableLawConfig::defaults_for(2.0));
  double worst_gauss = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double y = -10.0 + 0.05 * i;
    const double closed = std::exp(-y * y / 4.0) / (2.0 * std::sqrt(M_PI));
    worst_gauss = std::max(worst_gauss, std::abs(gauss.density(y) - closed));
  }
  result.passed = worst_cauchy <= 1e-4 && worst_gauss <= 1e-6;
  result.detail = detail::format("cauchy max err=%.2e <= 1e-4, gaussian max err=%.2e <= 1e-6",
                                 worst_cauchy, worst_gauss);
  return result;
}

// Pushing the mu = 1.5 stable law onto the curve must steepen its log-log
// tail slope against straight-line distance from -(mu + 1) to
// -alpha (mu + 1); the straight segment is the control.
inline CheckResult check_fractal_tail_law() {
  CheckResult result{"fractal-tail-law", false, 0.0, ""};
  stable::StableLawConfig config = stable::StableLawConfig::defaults_for(1.5);
  config.scale = 0.005;
  const stable::StableInverter inverter(config);

  const FractalCurve koch = make_koch_curve(6);
  const StaircaseTable koch_table(koch, 6);
  const auto koch_fit = stable::fit_tail_exponent(koch_table, inverter, 0.1, 0.7, 6);
  const double koch_target = -koch.alpha() * 2.5;

  const FractalCurve line = make_unit_segment();
  const StaircaseTable line_table(line, 6);
  const auto line_fit = stable::fit_tail_exponent(line_table, inverter, 0.1, 0.7, 6);
  const double line_target = -2.5;

  const double koch_rel = std::abs(koch_fit.fitted_exponent / koch_target - 1.0);
  const double line_rel = std::abs(line_fit.fitted_exponent / line_target - 1.0);
  result.passed = koch_rel <= 0.05 && line_rel <= 0.05;
  result.detail = detail::format(
      "curve slope=%.4f vs %.4f (off %.1f%%), segment slope=%.4f vs -2.5 (off %.1f%%)",
      koch_fit.fitted_exponent, koch_target, 100.0 * koch_rel, line_fit.fitted_exponent,
      100.0 * line_rel);
  return result;
}

// Simulated first-passage times must respect the deterministic lower bound
// step for step, match the absorbing-barrier value iteration within total
// variation 0.02 for every target within four steps, and the reachability
// envelope must be monotone with at least one flat of length two.
inline CheckResult check_first_passage() {
  CheckResult result{"first-passage", false, 0.0, ""};
  const FractalCurve curve = make_koch_curve(3);
  walker::WalkConfig config;
  config.delta = 0.01;
  config.n_steps = 64;

  bool bound_ok = true;
  double worst_tv = 0.0;
  const std::uint32_t t_cap = 64;
  for (const long long target : {-4LL, -3LL, -2LL, -1LL, 1LL, 2LL, 3LL, 4LL}) {
    const auto sample = passage::first_passage_sim(curve, config, target, 40000, t_cap);
    std::map<long long, double> empirical;
    const double weight = 1.0 / static_cast<double>(sample.n_trials);
    for (const std::uint32_t n : sample.hitting_times) {
      if (n < static_cast<std::uint32_t>(std::llabs(target))) bound_ok = false;
      empirical[static_cast<long long>(n)] += weight;
    }
    empirical[-1] = static_cast<double>(sample.n_censored) * weight;
    const auto pmf = detail::first_passage_pmf(static_cast<int>(std::llabs(target)),
                                               static_cast<int>(t_cap));
    std::map<long long, double> expected;
    double reached = 0.0;
    for (std::size_t n = 1; n < pmf.size(); ++n) {
      if (pmf[n] > 0.0) expected[static_cast<long long>(n)] = pmf[n];
      reached += pmf[n];
    }
    expected[-1] = 1.0 - reached;
    worst_tv = std::max(worst_tv, detail::total_variation(empirical, expected));
  }

  const StaircaseTable table(curve, 3);
  const double delta = table.total_mass() / 64.0;
  const auto profile = passage::lmax_profile(table, 1.0, delta, 64);
  bool monotone = true;
  int longest_flat = 1;
  int flat = 1;
  for (std::size_t i = 1; i < profile.records.size(); ++i) {
    const double prev = profile.records[i - 1].l_max;
    const double cur = profile.records[i].l_max;
    if (cur < prev) monotone = false;
    flat = cur == prev ? flat + 1 : 1;
    longest_flat = std::max(longest_flat, flat);
  }

  result.passed = bound_ok && worst_tv <= 0.02 && monotone && longest_flat >= 2;
  result.detail = detail::format(
      "min-time bound %s, worst TV=%.5f <= 0.02 (|target| <= 4), envelope %s, longest flat=%d",
      bound_ok ? "holds" : "violated", worst_tv, monotone ? "monotone" : "not monotone",
      longest_flat);
  return result;
}

// The mass-coordinate Fourier transform must round-trip a Gaussian through
// forward and inverse to 1e-5, and the curve-side quadrature must agree
// with the same rule applied to the lifted function on the mass axis to
// 1e-10 pointwise.
inline CheckResult check_fourier_round_trip() {
  CheckResult result{"fourier-round-trip", false, 0.0, ""};
  const FractalCurve curve = make_koch_curve(5);
  const StaircaseTable table(curve, 5);
  const CurveFunction f = [](const CurvePoint& p) { return std::exp(-0.5 * p.mass * p.mass); };

  std::vector<double> v_grid(401);
  for (std::size_t i = 0; i < v_grid.size(); ++i) v_grid[i] = -10.0 + 0.05 * static_cast<double>(i);
  const auto spectrum = fourier::forward_transform(f, table, v_grid, 10, 64);

  std::vector<double> u_grid(21);
  for (std::size_t i = 0; i < u_grid.size(); ++i) u_grid[i] = 0.05 * static_cast<double>(i);
  const auto back = fourier::inverse_transform(spectrum, table, u_grid);
  double worst_round = 0.0;
  for (std::size_t i = 0; i < u_grid.size(); ++i) {
    const double s = staircase(curve, u_grid[i]);
    worst_round = std::max(worst_round, std::abs(back[i] - std::exp(-0.5 * s * s)));
  }

  // Same trapezoid rule applied directly to the lifted function on the mass
  // axis, sharing only the node layout with the implementation under test.
  const int tiles = 10;
  const int panels = 2 * tiles * 64;
  const double extent = tiles * table.total_mass();
  const double h = 2.0 * extent / panels;
  double worst_commute = 0.0;
  for (std::size_t vi = 0; vi < v_grid.size(); vi += 4) {
    const double v = v_grid[vi];
    std::complex<double> sum = 0.0;
    for (int j = 0; j <= panels; ++j) {
      const double s = -extent + j * h;
      const double weight = (j == 0 || j == panels) ? 0.5 : 1.0;
      const double lifted = std::exp(-0.5 * s * s);
      sum += weight * lifted * std::exp(std::complex<double>(0.0, -s * v));
    }
    worst_commute = std::max(worst_commute, std::abs(spectrum.values[vi] - sum * h));
  }

  result.passed = worst_round <= 1e-5 && worst_commute <= 1e-10;
  result.detail = detail::format("round trip max err=%.2e <= 1e-5, commutation max err=%.2e <= 1e-10",
                                 worst_round, worst_commute);
  return result;
}

/// Runs every check under a wall-clock budget (0 = none); a check that
/// throws or overruns its budget fails with the reason in its detail line.
inline std::vector<CheckResult> run_all() {
  struct Entry {
    const char* name;
    CheckResult (*check)();
    double budget_seconds;
  };
  const Entry entries[] = {
      {"moment-exponents", check_moment_exponents, 60.0},
      {"walk-oracle", check_walk_oracle, 10.0},
      {"mass-identities", check_mass_identities, 0.0},
      {"stable-inversion", check_stable_inversion, 30.0},
      {"fractal-tail-law", check_fractal_tail_law, 0.0},
      {"first-passage", check_first_passage, 0.0},
      {"fourier-round-trip", check_fourier_round_trip, 0.0},
  };
  std::vector<CheckResult> results;
  for (const Entry& entry : entries) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
      result = entry.check();
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = detail::format("exception: %s", e.what());
    }
    result.name = entry.name;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (entry.budget_seconds > 0.0 && result.seconds > entry.budget_seconds) {
      result.passed = false;
      result.detail += detail::format("; exceeded %.0fs budget", entry.budget_seconds);
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace fractalwalk::checks
