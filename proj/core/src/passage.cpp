#include "fractalwalk/passage.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <utility>

#include "fractalwalk/errors.hpp"

namespace fractalwalk::passage {

namespace {

constexpr double kLatticeTol = 1e-9;

}  // namespace

double max_mass(double t, double tau, double delta) {
  if (!(tau > 0.0)) throw DomainError("max_mass: tau must be positive");
  if (!(delta > 0.0)) throw DomainError("max_mass: delta must be positive");
  if (!(t >= 0.0)) throw DomainError("max_mass: t must be non-negative");
  const double steps = t / tau;
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > kLatticeTol * std::max(1.0, steps)) {
    throw DomainError("max_mass: t must be an integer multiple of tau");
  }
  return rounded * delta;
}

double min_time(double mass, double tau, double delta) {
  if (!(tau > 0.0)) throw DomainError("min_time: tau must be positive");
  if (!(delta > 0.0)) throw DomainError("min_time: delta must be positive");
  if (!(mass >= 0.0)) throw DomainError("min_time: mass must be non-negative");
  const double steps = std::ceil(mass / delta - kLatticeTol);
  return tau * std::max(steps, 0.0);
}

PassageProfile lmax_profile(const StaircaseTable& table, double tau, double delta, int m_steps) {
  if (!(tau > 0.0)) throw DomainError("lmax_profile: tau must be positive");
  if (!(delta > 0.0)) throw DomainError("lmax_profile: delta must be positive");
  if (m_steps < 1) throw DomainError("lmax_profile: m_steps must be >= 1");
  const double total = table.total_mass();
  if (m_steps * delta > total * (1.0 + kLatticeTol)) {
    throw CapacityError("lmax_profile: m_steps * delta exceeds the total mass S(1)");
  }
  PassageProfile profile;
  profile.records.reserve(m_steps);
  double running_max = 0.0;
  for (int j = 1; j <= m_steps; ++j) {
    const double s = std::min(j * delta, total);
    const double u = table.inverse(s);
    running_max = std::max(running_max, table.curve().euclidean_distance(u));
    profile.records.push_back(PassageRecord{j * tau, running_max});
  }
  return profile;
}

FptSample first_passage_sim(const FractalCurve& curve, const walker::WalkConfig& config,
                            long long target_offset, std::uint64_t n_trials, std::uint32_t t_cap,
                            int n_threads) {
  walker::validate(config, curve);
  if (target_offset == 0) throw DomainError("first_passage_sim: target offset must be nonzero");
  if (t_cap < 1) throw DomainError("first_passage_sim: t_cap must be >= 1");
  if (n_threads < 1) throw DomainError("first_passage_sim: n_threads must be >= 1");

  long long lo = 0, hi = 0;
  const bool reflecting = config.boundary == walker::Boundary::kReflecting;
  if (reflecting) {
    const double total = total_mass(curve);
    lo = static_cast<long long>(
        std::ceil((0.0 - config.start_mass) / config.delta - kLatticeTol));
    hi = static_cast<long long>(
        std::floor((total - config.start_mass) / config.delta + kLatticeTol));
    if (target_offset < lo || target_offset > hi) {
      throw DomainError("first_passage_sim: target lies outside the reflecting box");
    }
  }

  const int used_threads =
      static_cast<int>(std::min<std::uint64_t>(n_trials > 0 ? n_trials : 1, n_threads));
  struct Partial {
    std::vector<std::uint32_t> times;
    std::vector<std::uint64_t> trials;
    std::uint64_t censored = 0;
  };
  std::vector<Partial> partial(used_threads);
  auto worker = [&](int tid) {
    auto& local = partial[tid];
    for (std::uint64_t trial = tid; trial < n_trials; trial += used_threads) {
      TrialRng rng(config.seed, trial, /*stream=*/1);
      long long k = 0;
      std::uint32_t hit = 0;
      for (std::uint32_t n = 1; n <= t_cap; ++n) {
        long long dir = rng.next_bit() ? 1 : -1;
        if (reflecting) {
          if (k + dir < lo || k + dir > hi) dir = -dir;
          if (k + dir < lo || k + dir > hi) dir = 0;
        }
        k += dir;
        if (k == target_offset) {
          hit = n;
          break;
        }
      }
      if (hit == 0) {
        ++local.censored;
      } else {
        local.times.push_back(hit);
        local.trials.push_back(trial);
      }
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

  FptSample sample;
  sample.target_mass = config.start_mass + static_cast<double>(target_offset) * config.delta;
  sample.n_trials = n_trials;
  // Merge in trial order so the sample is independent of the thread count.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> merged;
  for (const auto& local : partial) {
    sample.n_censored += local.censored;
    for (std::size_t i = 0; i < local.times.size(); ++i) {
      merged.emplace_back(local.trials[i], local.times[i]);
    }
  }
  std::sort(merged.begin(), merged.end());
  sample.hitting_times.reserve(merged.size());
  for (const auto& [trial, time] : merged) sample.hitting_times.push_back(time);
  return sample;
}

}  // namespace fractalwalk::passage
