#pragma once

#include <cstdint>
#include <map>

#include "fractalwalk/calculus.hpp"
#include "fractalwalk/curve.hpp"
#include "fractalwalk/rng.hpp"

namespace fractalwalk::walker {

enum class Boundary {
  kUnbounded,   // walk on the full mass lattice
  kReflecting,  // flip any step that would leave [0, S(1)]
};

/// Lattice walk parameters: step delta in mass per tick of duration tau.
struct WalkConfig {
  double delta = 1.0;
  double tau = 1.0;
  int n_steps = 0;
  double start_mass = 0.0;
  std::uint64_t seed = kDefaultSeed;
  Boundary boundary = Boundary::kUnbounded;
};

/// Throws unless the configuration is usable with the given curve.
void validate(const WalkConfig& config, const FractalCurve& curve);

/// Endpoint offsets (in lattice steps) after n_steps, keyed by signed offset.
struct WalkHistogram {
  int n_steps = 0;
  std::uint64_t n_trials = 0;
  std::map<long long, std::uint64_t> counts;
};

/// Number of n-step sign sequences ending at the given lattice offset
/// (Pascal recursion).  Exact in 64 bits for n <= 60; larger n throw.
std::uint64_t count_walks_exact(int n_steps, long long offset);

/// Probability of ending at the offset: exact counts / 2^n for n <= 60,
/// log-space binomial otherwise.  Zero off the parity-reachable set.
double walk_probability(int n_steps, long long offset);

/// Monte Carlo endpoint histogram; trials use independent keyed substreams,
/// so results are identical for any n_threads >= 1.
WalkHistogram simulate_walks(const FractalCurve& curve, const WalkConfig& config,
                             std::uint64_t n_trials, int n_threads = 1);

/// Gaussian approximation to the n-step displacement density in mass,
/// (1 / sqrt(2 pi n)) exp(-s^2 / (2 delta^2 n)) with s in mass units.
double gaussian_density_discrete(int n_steps, double delta, double mass_displacement);

/// Continuum displacement density (1 / sqrt(2 pi A t)) exp(-s^2 / (2 A t)).
double continuum_density(double t, double diffusivity, double mass_displacement);

/// Fold a signed mass back onto the curve (reflection at both ends, period
/// 2 S(1)) and return the corresponding curve point.
CurvePoint readout_point(const FractalCurve& curve, double mass);

}  // namespace fractalwalk::walker
