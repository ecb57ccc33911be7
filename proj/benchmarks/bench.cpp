// Microbenchmarks for the hot paths: point evaluation, staircase inversion,
// density inversion, and the Monte Carlo walkers.
#include <benchmark/benchmark.h>

#include <cmath>

#include "fractalwalk/calculus.hpp"
#include "fractalwalk/curve.hpp"
#include "fractalwalk/moments.hpp"
#include "fractalwalk/passage.hpp"
#include "fractalwalk/stable.hpp"
#include "fractalwalk/walker.hpp"

namespace {

using namespace fractalwalk;

void BM_PointAt(benchmark::State& state) {
  const FractalCurve curve = make_koch_curve(static_cast<int>(state.range(0)));
  double u = 0.0;
  for (auto _ : state) {
    u += 0.382;
    if (u >= 1.0) u -= 1.0;
    benchmark::DoNotOptimize(curve.point_at(u));
  }
}
BENCHMARK(BM_PointAt)->Arg(4)->Arg(8)->Arg(12);

void BM_Staircase(benchmark::State& state) {
  const FractalCurve curve = make_koch_curve(12);
  double u = 0.0;
  for (auto _ : state) {
    u += 0.382;
    if (u >= 1.0) u -= 1.0;
    benchmark::DoNotOptimize(staircase(curve, u));
  }
}
BENCHMARK(BM_Staircase);

void BM_InverseStaircase(benchmark::State& state) {
  const FractalCurve curve = make_koch_curve(12);
  const double total = total_mass(curve);
  double s = 0.0;
  for (auto _ : state) {
    s += 0.382 * total;
    if (s >= total) s -= total;
    benchmark::DoNotOptimize(inverse_staircase(curve, s));
  }
}
BENCHMARK(BM_InverseStaircase);

void BM_MassFunction(benchmark::State& state) {
  const FractalCurve curve = make_koch_curve(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mass_function(curve, 0.0, 1.0, curve.depth()));
  }
}
BENCHMARK(BM_MassFunction)->Arg(6)->Arg(9);

void BM_StableDensity(benchmark::State& state) {
  const stable::StableInverter inverter(stable::StableLawConfig::defaults_for(1.5));
  double y = 0.0;
  for (auto _ : state) {
    y += 0.1;
    if (y >= 10.0) y = 0.0;
    benchmark::DoNotOptimize(inverter.density(y));
  }
}
BENCHMARK(BM_StableDensity);

void BM_SimulateWalks(benchmark::State& state) {
  const FractalCurve curve = make_koch_curve(4);
  walker::WalkConfig config;
  config.delta = 0.01;
  config.n_steps = 16;
  for (auto _ : state) {
    benchmark::DoNotOptimize(walker::simulate_walks(curve, config, 10000));
  }
}
BENCHMARK(BM_SimulateWalks);

void BM_FirstPassage(benchmark::State& state) {
  const FractalCurve curve = make_koch_curve(3);
  walker::WalkConfig config;
  config.delta = 0.01;
  config.n_steps = 64;
  for (auto _ : state) {
    benchmark::DoNotOptimize(passage::first_passage_sim(curve, config, 2, 10000, 64));
  }
}
BENCHMARK(BM_FirstPassage);

void BM_AbsoluteMoment(benchmark::State& state) {
  const FractalCurve curve = make_koch_curve(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moments::absolute_moment(curve, 2, 1e-4, 1.0, 10000, 1));
  }
}
BENCHMARK(BM_AbsoluteMoment);

}  // namespace

BENCHMARK_MAIN();
