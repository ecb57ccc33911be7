#pragma once

#include <cstdint>
#include <vector>

#include "fractalwalk/calculus.hpp"
#include "fractalwalk/walker.hpp"

namespace fractalwalk::passage {

/// Largest mass reachable in time t: (t / tau) steps of size delta.
/// t must be a lattice time (an integer multiple of tau within 1e-9).
double max_mass(double t, double tau, double delta);

/// Smallest lattice time needed to accumulate the given mass:
/// tau * ceil(mass / delta) (with 1e-9 slack at lattice points).
double min_time(double mass, double tau, double delta);

struct PassageRecord {
  double t_min = 0.0;
  double l_max = 0.0;
};

/// Deterministic reachability profile: after j steps the walker can have
/// visited masses up to j * delta, so the farthest straight-line distance
/// available at time j * tau is the running maximum of L over that range.
struct PassageProfile {
  std::vector<PassageRecord> records;
};

PassageProfile lmax_profile(const StaircaseTable& table, double tau, double delta, int m_steps);

/// First-passage sample: trial i hit the target lattice offset at step
/// hitting_times[i]; trials that never hit within t_cap steps are censored
/// and only counted.
struct FptSample {
  double target_mass = 0.0;
  std::uint64_t n_trials = 0;
  std::uint64_t n_censored = 0;
  std::vector<std::uint32_t> hitting_times;
};

/// Monte Carlo first passage to target_offset lattice steps from the start,
/// walking at most t_cap steps per trial.  Deterministic for any n_threads.
FptSample first_passage_sim(const FractalCurve& curve, const walker::WalkConfig& config,
                            long long target_offset, std::uint64_t n_trials, std::uint32_t t_cap,
                            int n_threads = 1);

}  // namespace fractalwalk::passage
