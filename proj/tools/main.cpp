// Command-line front end: every subcommand deterministically renders one
// library computation to CSV, stamping the resolved configuration into the
// file so a run can be reproduced from its own output.
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "checks.hpp"
#include "fractalwalk/calculus.hpp"
#include "fractalwalk/curve.hpp"
#include "fractalwalk/errors.hpp"
#include "fractalwalk/fourier.hpp"
#include "fractalwalk/moments.hpp"
#include "fractalwalk/passage.hpp"
#include "fractalwalk/rng.hpp"
#include "fractalwalk/stable.hpp"
#include "fractalwalk/walker.hpp"

namespace {

using namespace fractalwalk;

std::string g17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

/// Ordered flag/value pairs making up the resolved configuration of a run;
/// serialized identically into `--print-config` output and the CSV header.
class ConfigLine {
 public:
  explicit ConfigLine(std::string subcommand) : text_(std::move(subcommand)) {}

  ConfigLine& add(const std::string& flag, const std::string& value) {
    text_ += " --" + flag + " " + value;
    return *this;
  }
  ConfigLine& add(const std::string& flag, double value) { return add(flag, g17(value)); }
  ConfigLine& add(const std::string& flag, int value) { return add(flag, std::to_string(value)); }
  ConfigLine& add(const std::string& flag, std::uint64_t value) {
    return add(flag, std::to_string(value));
  }
  ConfigLine& add_flag(const std::string& flag) {
    text_ += " --" + flag;
    return *this;
  }

  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

struct CommonOptions {
  std::string out;
  bool force = false;
  bool print_config = false;
};

void add_common(CLI::App* sub, CommonOptions* common, const std::string& default_out) {
  common->out = default_out;
  sub->add_option("--out", common->out, "Output CSV path")->capture_default_str();
  sub->add_flag("--force", common->force, "Overwrite the output file if it exists");
  sub->add_flag("--print-config", common->print_config,
                "Echo the resolved configuration line to stdout");
}

std::ofstream open_output(const CommonOptions& common, const ConfigLine& config) {
  if (common.print_config) std::printf("%s\n", config.text().c_str());
  if (!common.force && std::filesystem::exists(common.out)) {
    throw DomainError("output file already exists (pass --force to overwrite): " + common.out);
  }
  std::ofstream out(common.out, std::ios::binary | std::ios::trunc);
  if (!out) throw DomainError("cannot open output file: " + common.out);
  out << "# config: " << config.text() << "\n";
  return out;
}

FractalCurve curve_for_depth(int depth) {
  return depth == 0 ? make_unit_segment() : make_koch_curve(depth);
}

walker::Boundary parse_boundary(const std::string& name) {
  if (name == "unbounded") return walker::Boundary::kUnbounded;
  if (name == "reflecting") return walker::Boundary::kReflecting;
  throw DomainError("unknown boundary (expected unbounded or reflecting): " + name);
}

// ---------------------------------------------------------------------------
// curve: planar samples of the curve, u,x,y,L.

struct CurveArgs {
  int depth = 4;
  int samples = 257;
  CommonOptions common;
};

void run_curve(const CurveArgs& args) {
  const ConfigLine config =
      ConfigLine("curve").add("depth", args.depth).add("samples", args.samples);
  const FractalCurve curve = curve_for_depth(args.depth);
  auto out = open_output(args.common, config);
  out << "u,x,y,L\n";
  for (int i = 0; i < args.samples; ++i) {
    const double u = static_cast<double>(i) / (args.samples - 1);
    const PlanePoint p = curve.point_at(u);
    out << g17(u) << ',' << g17(p.x) << ',' << g17(p.y) << ',' << g17(curve.euclidean_distance(u))
        << "\n";
  }
}

// ---------------------------------------------------------------------------
// staircase: cumulative mass on the aligned grid, u,S,L,ratio.

struct StaircaseArgs {
  int depth = 6;
  int grid_depth = 6;
  CommonOptions common;
};

void run_staircase(const StaircaseArgs& args) {
  const ConfigLine config =
      ConfigLine("staircase").add("depth", args.depth).add("grid-depth", args.grid_depth);
  const FractalCurve curve = curve_for_depth(args.depth);
  const StaircaseTable table(curve, args.grid_depth);
  auto out = open_output(args.common, config);
  out << "u,S,L,ratio\n";
  for (std::size_t i = 0; i < table.grid_u().size(); ++i) {
    const double u = table.grid_u()[i];
    const double s = table.grid_mass()[i];
    const double l = curve.euclidean_distance(u);
    const double ratio = s / std::pow(l, curve.alpha());
    out << g17(u) << ',' << g17(s) << ',' << g17(l) << ',' << g17(ratio) << "\n";
  }
}

// ---------------------------------------------------------------------------
// walk: endpoint histogram with exact and Gaussian references.

struct WalkArgs {
  int depth = 6;
  double delta = 0.01;
  double tau = 1.0;
  int steps = 16;
  std::uint64_t trials = 100000;
  std::uint64_t seed = kDefaultSeed;
  std::string boundary = "unbounded";
  double start = 0.0;
  int threads = 1;
  CommonOptions common;
};

void run_walk(const WalkArgs& args) {
  const ConfigLine config = ConfigLine("walk")
                                .add("depth", args.depth)
                                .add("delta", args.delta)
                                .add("tau", args.tau)
                                .add("steps", args.steps)
                                .add("trials", args.trials)
                                .add("seed", args.seed)
                                .add("boundary", args.boundary)
                                .add("start", args.start)
                                .add("threads", args.threads);
  const FractalCurve curve = curve_for_depth(args.depth);
  walker::WalkConfig walk;
  walk.delta = args.delta;
  walk.tau = args.tau;
  walk.n_steps = args.steps;
  walk.start_mass = args.start;
  walk.seed = args.seed;
  walk.boundary = parse_boundary(args.boundary);
  walker::validate(walk, curve);
  const auto histogram = walker::simulate_walks(curve, walk, args.trials, args.threads);
  auto out = open_output(args.common, config);
  out << "k,count,prob_exact,prob_gaussian\n";
  for (const auto& [k, count] : histogram.counts) {
    const double exact =
        args.boundary == "unbounded" ? walker::walk_probability(args.steps, k) : std::nan("");
    const double gauss =
        2.0 * walker::gaussian_density_discrete(args.steps, args.delta, k * args.delta);
    out << k << ',' << count << ',' << g17(exact) << ',' << g17(gauss) << "\n";
  }
}

// ---------------------------------------------------------------------------
// moments: displacement moment series with fitted growth exponents.

struct MomentsArgs {
  int depth = 6;
  double t_lo = 3e-5;
  double t_hi = 3e-4;
  int t_points = 12;
  double diffusivity = 1.0;
  int panels = 40000;
  int tiles = 0;
  CommonOptions common;
};

void run_moments(const MomentsArgs& args) {
  const FractalCurve curve = curve_for_depth(args.depth);
  const int tiles =
      args.tiles > 0 ? args.tiles : moments::tiles_for(curve, args.t_hi, args.diffusivity);
  const ConfigLine config = ConfigLine("moments")
                                .add("depth", args.depth)
                                .add("tlo", args.t_lo)
                                .add("thi", args.t_hi)
                                .add("tpoints", args.t_points)
                                .add("diffusivity", args.diffusivity)
                                .add("panels", args.panels)
                                .add("tiles", tiles);
  const auto series1 = moments::moment_series(curve, 1, args.t_lo, args.t_hi, args.t_points,
                                              args.diffusivity, args.panels, tiles);
  const auto series2 = moments::moment_series(curve, 2, args.t_lo, args.t_hi, args.t_points,
                                              args.diffusivity, args.panels, tiles);
  const auto fit1 = moments::fit_exponent(series1);
  const auto fit2 = moments::fit_exponent(series2);
  auto out = open_output(args.common, config);
  out << "# summary: slope1=" << g17(fit1.slope) << " slope2=" << g17(fit2.slope)
      << " residual1=" << g17(fit1.max_abs_residual) << " residual2=" << g17(fit2.max_abs_residual)
      << "\n";
  out << "t,L1,L2\n";
  for (std::size_t i = 0; i < series1.times.size(); ++i) {
    out << g17(series1.times[i]) << ',' << g17(series1.values[i]) << ',' << g17(series2.values[i])
        << "\n";
  }
}

// ---------------------------------------------------------------------------
// levy: stable-law density on the line or pushed onto the curve.

struct LevyArgs {
  double mu = 2.0;
  double dk = 1e-3;
  double k_max = 0.0;
  double scale = std::nan("");
  bool fractal = false;
  double y_min = -10.0;
  double y_max = 10.0;
  int y_points = 401;
  int depth = 6;
  int grid_depth = 6;
  double window_lo = 0.1;
  double window_hi = 0.7;
  CommonOptions common;
};

void run_levy(const LevyArgs& args) {
  stable::StableLawConfig law = stable::StableLawConfig::defaults_for(args.mu);
  law.dk = args.dk;
  if (args.k_max > 0.0) law.k_max = args.k_max;
  law.scale = std::isnan(args.scale) ? (args.fractal ? 0.005 : 1.0) : args.scale;

  ConfigLine config("levy");
  config.add("mu", law.mu).add("dk", law.dk).add("kmax", law.k_max).add("scale", law.scale);
  if (args.fractal) {
    config.add_flag("fractal")
        .add("depth", args.depth)
        .add("grid-depth", args.grid_depth)
        .add("window-lo", args.window_lo)
        .add("window-hi", args.window_hi);
  } else {
    config.add("ymin", args.y_min).add("ymax", args.y_max).add("ypoints", args.y_points);
  }

  const stable::StableInverter inverter(law);
  if (args.fractal) {
    const FractalCurve curve = curve_for_depth(args.depth);
    const StaircaseTable table(curve, args.grid_depth);
    const auto fit =
        stable::fit_tail_exponent(table, inverter, args.window_lo, args.window_hi, args.grid_depth);
    auto out = open_output(args.common, config);
    out << "# summary: fitted_slope=" << g17(fit.fitted_exponent)
        << " intercept=" << g17(fit.intercept) << " points=" << fit.n_points << "\n";
    out << "u,L,S,density\n";
    for (std::size_t i = 0; i < table.grid_u().size(); ++i) {
      const double u = table.grid_u()[i];
      out << g17(u) << ',' << g17(curve.euclidean_distance(u)) << ',' << g17(table.grid_mass()[i])
          << ',' << g17(stable::fractalized_density(table, inverter, u)) << "\n";
    }
    return;
  }

  auto out = open_output(args.common, config);
  out << "y,density,leading_tail\n";
  const bool series_defined = law.mu != 1.0 && law.mu != 2.0;
  for (int i = 0; i < args.y_points; ++i) {
    const double y =
        args.y_min + (args.y_max - args.y_min) * static_cast<double>(i) / (args.y_points - 1);
    const double tail = (series_defined && y > 0.0)
                            ? stable::leading_tail(y / law.scale, law.mu) / law.scale
                            : std::nan("");
    out << g17(y) << ',' << g17(inverter.density(y)) << ',' << g17(tail) << "\n";
  }
}

// ---------------------------------------------------------------------------
// fpt: first-passage time histogram.

struct FptArgs {
  int depth = 3;
  long long target = 0;
  double delta = 0.01;
  double tau = 1.0;
  double start = 0.0;
  std::string boundary = "unbounded";
  std::uint64_t trials = 100000;
  std::uint32_t t_cap = 64;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
  CommonOptions common;
};

void run_fpt(const FptArgs& args) {
  const ConfigLine config = ConfigLine("fpt")
                                .add("depth", args.depth)
                                .add("target", std::to_string(args.target))
                                .add("delta", args.delta)
                                .add("tau", args.tau)
                                .add("start", args.start)
                                .add("boundary", args.boundary)
                                .add("trials", args.trials)
                                .add("tcap", std::to_string(args.t_cap))
                                .add("seed", args.seed)
                                .add("threads", args.threads);
  const FractalCurve curve = curve_for_depth(args.depth);
  walker::WalkConfig walk;
  walk.delta = args.delta;
  walk.tau = args.tau;
  walk.n_steps = static_cast<int>(args.t_cap);
  walk.start_mass = args.start;
  walk.seed = args.seed;
  walk.boundary = parse_boundary(args.boundary);
  const auto sample =
      passage::first_passage_sim(curve, walk, args.target, args.trials, args.t_cap, args.threads);
  std::map<std::uint32_t, std::uint64_t> histogram;
  for (const std::uint32_t n : sample.hitting_times) ++histogram[n];
  const double bound =
      passage::min_time(std::abs(static_cast<double>(args.target)) * args.delta, args.tau,
                        args.delta);
  auto out = open_output(args.common, config);
  out << "# censored: " << sample.n_censored << "\n";
  out << "# min_time: " << g17(bound) << "\n";
  out << "T,count\n";
  for (const auto& [n, count] : histogram) {
    out << g17(n * args.tau) << ',' << count << "\n";
  }
}

// ---------------------------------------------------------------------------
// lmax: deterministic reachability envelope, t_min,L_max.

struct LmaxArgs {
  int depth = 3;
  double delta = 0.0;
  double tau = 1.0;
  int steps = 0;
  CommonOptions common;
};

void run_lmax(const LmaxArgs& args) {
  const FractalCurve curve = curve_for_depth(args.depth);
  const StaircaseTable table(curve, std::min(args.depth == 0 ? 12 : args.depth, 8));
  const double delta =
      args.delta > 0.0 ? args.delta : table.total_mass() / std::pow(4.0, args.depth == 0 ? 3 : args.depth);
  const int steps =
      args.steps > 0 ? args.steps : static_cast<int>(std::floor(table.total_mass() / delta + 1e-9));
  const ConfigLine config = ConfigLine("lmax")
                                .add("depth", args.depth)
                                .add("delta", delta)
                                .add("tau", args.tau)
                                .add("steps", steps);
  const auto profile = passage::lmax_profile(table, args.tau, delta, steps);
  auto out = open_output(args.common, config);
  out << "t_min,L_max\n";
  for (const auto& record : profile.records) {
    out << g17(record.t_min) << ',' << g17(record.l_max) << "\n";
  }
}

// ---------------------------------------------------------------------------
// fourier: spectrum of a named curve function, v,re,im.

struct FourierArgs {
  std::string function = "gaussian";
  int depth = 5;
  int grid_depth = 0;
  double v_max = 10.0;
  int v_points = 401;
  int tiles = 10;
  int panels = 64;
  double rect_halfwidth = 0.4;
  double scale = 1.0;
  CommonOptions common;
};

void run_fourier(const FourierArgs& args) {
  const int grid_depth = args.grid_depth > 0 ? args.grid_depth : args.depth;
  const ConfigLine config = ConfigLine("fourier")
                                .add("function", args.function)
                                .add("depth", args.depth)
                                .add("grid-depth", grid_depth)
                                .add("vmax", args.v_max)
                                .add("vpoints", args.v_points)
                                .add("tiles", args.tiles)
                                .add("panels", args.panels)
                                .add("rect-halfwidth", args.rect_halfwidth)
                                .add("scale", args.scale);
  const FractalCurve curve = curve_for_depth(args.depth);
  const StaircaseTable table(curve, grid_depth);

  CurveFunction f;
  if (args.function == "gaussian") {
    f = [](const CurvePoint& p) { return std::exp(-0.5 * p.mass * p.mass); };
  } else if (args.function == "rect") {
    const double a = args.rect_halfwidth;
    f = [a](const CurvePoint& p) { return std::abs(p.mass) <= a ? 1.0 : 0.0; };
  } else if (args.function.rfind("levy:", 0) == 0) {
    double mu = 0.0;
    try {
      mu = std::stod(args.function.substr(5));
    } catch (const std::exception&) {
      throw DomainError("cannot parse stability index in: " + args.function);
    }
    stable::StableLawConfig law = stable::StableLawConfig::defaults_for(mu);
    law.scale = args.scale;
    auto inverter = std::make_shared<stable::StableInverter>(law);
    f = [inverter](const CurvePoint& p) { return inverter->density(p.mass); };
  } else {
    throw DomainError("unknown function (expected gaussian, rect, or levy:<mu>): " +
                      args.function);
  }

  std::vector<double> v_grid(static_cast<std::size_t>(args.v_points));
  for (int i = 0; i < args.v_points; ++i) {
    v_grid[static_cast<std::size_t>(i)] =
        -args.v_max + 2.0 * args.v_max * static_cast<double>(i) / (args.v_points - 1);
  }
  const auto spectrum = fourier::forward_transform(f, table, v_grid, args.tiles, args.panels);

  auto out = open_output(args.common, config);
  out << "v,re,im\n";
  for (std::size_t i = 0; i < v_grid.size(); ++i) {
    out << g17(v_grid[i]) << ',' << g17(spectrum.values[i].real()) << ','
        << g17(spectrum.values[i].imag()) << "\n";
  }
}

// ---------------------------------------------------------------------------
// repro: the full validation pipeline with a pass/fail summary table.

int run_repro() {
  const auto results = checks::run_all();
  std::size_t passed = 0;
  for (const auto& result : results) {
    std::printf("[%s] %-20s %7.2fs  %s\n", result.passed ? "PASS" : "FAIL", result.name.c_str(),
                result.seconds, result.detail.c_str());
    if (result.passed) ++passed;
  }
  std::printf("%zu/%zu checks passed\n", passed, results.size());
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random walks and calculus on self-similar curves"};
  app.require_subcommand(1);

  CurveArgs curve_args;
  auto* curve_cmd = app.add_subcommand("curve", "Sample the curve in the plane");
  curve_cmd->add_option("--depth", curve_args.depth, "Construction depth (0 = straight segment)")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  curve_cmd->add_option("--samples", curve_args.samples, "Number of parameter samples")
      ->check(CLI::Range(2, 100000000))
      ->capture_default_str();
  add_common(curve_cmd, &curve_args.common, "curve.csv");

  StaircaseArgs staircase_args;
  auto* staircase_cmd = app.add_subcommand("staircase", "Tabulate the cumulative mass function");
  staircase_cmd->add_option("--depth", staircase_args.depth, "Construction depth")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  staircase_cmd->add_option("--grid-depth", staircase_args.grid_depth, "Aligned grid depth")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  add_common(staircase_cmd, &staircase_args.common, "staircase.csv");

  WalkArgs walk_args;
  auto* walk_cmd = app.add_subcommand("walk", "Monte Carlo endpoint histogram");
  walk_cmd->add_option("--depth", walk_args.depth, "Construction depth")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  walk_cmd->add_option("--delta", walk_args.delta, "Mass step per tick")->capture_default_str();
  walk_cmd->add_option("--tau", walk_args.tau, "Tick duration")->capture_default_str();
  walk_cmd->add_option("--steps", walk_args.steps, "Steps per trial")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  walk_cmd->add_option("--trials", walk_args.trials, "Trial count")->capture_default_str();
  walk_cmd->add_option("--seed", walk_args.seed, "Simulation seed")->capture_default_str();
  walk_cmd->add_option("--boundary", walk_args.boundary, "unbounded or reflecting")
      ->capture_default_str();
  walk_cmd->add_option("--start", walk_args.start, "Starting mass")->capture_default_str();
  walk_cmd->add_option("--threads", walk_args.threads, "Worker threads (results identical)")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  add_common(walk_cmd, &walk_args.common, "walk.csv");

  MomentsArgs moments_args;
  auto* moments_cmd = app.add_subcommand("moments", "Displacement moments and growth exponents");
  moments_cmd->add_option("--depth", moments_args.depth, "Construction depth")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  moments_cmd->add_option("--tlo", moments_args.t_lo, "Smallest time")->capture_default_str();
  moments_cmd->add_option("--thi", moments_args.t_hi, "Largest time")->capture_default_str();
  moments_cmd->add_option("--tpoints", moments_args.t_points, "Time grid size")
      ->check(CLI::Range(4, 10000))
      ->capture_default_str();
  moments_cmd->add_option("--diffusivity", moments_args.diffusivity, "Gaussian diffusivity")
      ->capture_default_str();
  moments_cmd->add_option("--panels", moments_args.panels, "Quadrature panels")
      ->check(CLI::Range(2, 100000000))
      ->capture_default_str();
  moments_cmd->add_option("--tiles", moments_args.tiles, "Truncation tiles (0 = automatic)")
      ->check(CLI::Range(0, 1000000))
      ->capture_default_str();
  add_common(moments_cmd, &moments_args.common, "moments.csv");

  LevyArgs levy_args;
  auto* levy_cmd = app.add_subcommand("levy", "Stable-law density by inversion");
  levy_cmd->add_option("--mu", levy_args.mu, "Stability index in (0, 2]")->required();
  levy_cmd->add_option("--dk", levy_args.dk, "Wave-number grid spacing")->capture_default_str();
  levy_cmd->add_option("--kmax", levy_args.k_max, "Wave-number cutoff (0 = rule for mu)")
      ->capture_default_str();
  levy_cmd->add_option("--scale", levy_args.scale,
                       "Density scale (default 1, or 0.005 with --fractal)");
  levy_cmd->add_flag("--fractal", levy_args.fractal,
                     "Push the density onto the curve and fit its tail");
  levy_cmd->add_option("--ymin", levy_args.y_min, "Grid start")->capture_default_str();
  levy_cmd->add_option("--ymax", levy_args.y_max, "Grid end")->capture_default_str();
  levy_cmd->add_option("--ypoints", levy_args.y_points, "Grid size")
      ->check(CLI::Range(2, 100000000))
      ->capture_default_str();
  levy_cmd->add_option("--depth", levy_args.depth, "Construction depth (with --fractal)")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  levy_cmd->add_option("--grid-depth", levy_args.grid_depth, "Aligned grid depth (with --fractal)")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  levy_cmd->add_option("--window-lo", levy_args.window_lo, "Tail-fit window start (mass)")
      ->capture_default_str();
  levy_cmd->add_option("--window-hi", levy_args.window_hi, "Tail-fit window end (mass)")
      ->capture_default_str();
  add_common(levy_cmd, &levy_args.common, "levy.csv");

  FptArgs fpt_args;
  auto* fpt_cmd = app.add_subcommand("fpt", "First-passage time histogram");
  fpt_cmd->add_option("--depth", fpt_args.depth, "Construction depth")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  fpt_cmd->add_option("--target", fpt_args.target, "Target offset in lattice steps")->required();
  fpt_cmd->add_option("--delta", fpt_args.delta, "Mass step per tick")->capture_default_str();
  fpt_cmd->add_option("--tau", fpt_args.tau, "Tick duration")->capture_default_str();
  fpt_cmd->add_option("--start", fpt_args.start, "Starting mass")->capture_default_str();
  fpt_cmd->add_option("--boundary", fpt_args.boundary, "unbounded or reflecting")
      ->capture_default_str();
  fpt_cmd->add_option("--trials", fpt_args.trials, "Trial count")->capture_default_str();
  fpt_cmd->add_option("--tcap", fpt_args.t_cap, "Step cap per trial")->capture_default_str();
  fpt_cmd->add_option("--seed", fpt_args.seed, "Simulation seed")->capture_default_str();
  fpt_cmd->add_option("--threads", fpt_args.threads, "Worker threads (results identical)")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  add_common(fpt_cmd, &fpt_args.common, "fpt.csv");

  LmaxArgs lmax_args;
  auto* lmax_cmd = app.add_subcommand("lmax", "Deterministic reachability envelope");
  lmax_cmd->add_option("--depth", lmax_args.depth, "Construction depth")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  lmax_cmd->add_option("--delta", lmax_args.delta, "Mass step per tick (0 = aligned default)")
      ->capture_default_str();
  lmax_cmd->add_option("--tau", lmax_args.tau, "Tick duration")->capture_default_str();
  lmax_cmd->add_option("--steps", lmax_args.steps, "Envelope length (0 = whole curve)")
      ->check(CLI::Range(0, 100000000))
      ->capture_default_str();
  add_common(lmax_cmd, &lmax_args.common, "lmax.csv");

  FourierArgs fourier_args;
  auto* fourier_cmd = app.add_subcommand("fourier", "Mass-coordinate spectrum of a test function");
  fourier_cmd
      ->add_option("--function", fourier_args.function, "gaussian, rect, or levy:<mu>")
      ->capture_default_str();
  fourier_cmd->add_option("--depth", fourier_args.depth, "Construction depth")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  fourier_cmd->add_option("--grid-depth", fourier_args.grid_depth, "Aligned grid depth (0 = depth)")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  fourier_cmd->add_option("--vmax", fourier_args.v_max, "Spectrum grid half-width")
      ->capture_default_str();
  fourier_cmd->add_option("--vpoints", fourier_args.v_points, "Spectrum grid size")
      ->check(CLI::Range(2, 100000000))
      ->capture_default_str();
  fourier_cmd->add_option("--tiles", fourier_args.tiles, "Truncation tiles per side")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  fourier_cmd->add_option("--panels", fourier_args.panels, "Quadrature panels per unit mass")
      ->check(CLI::Range(1, 100000000))
      ->capture_default_str();
  fourier_cmd->add_option("--rect-halfwidth", fourier_args.rect_halfwidth,
                          "Half-width of the rect function")
      ->capture_default_str();
  fourier_cmd->add_option("--scale", fourier_args.scale, "Scale of the levy:<mu> density")
      ->capture_default_str();
  add_common(fourier_cmd, &fourier_args.common, "fourier.csv");

  auto* repro_cmd =
      app.add_subcommand("repro", "Run the validation pipeline and print a summary table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (curve_cmd->parsed()) run_curve(curve_args);
    if (staircase_cmd->parsed()) run_staircase(staircase_args);
    if (walk_cmd->parsed()) run_walk(walk_args);
    if (moments_cmd->parsed()) run_moments(moments_args);
    if (levy_cmd->parsed()) run_levy(levy_args);
    if (fpt_cmd->parsed()) run_fpt(fpt_args);
    if (lmax_cmd->parsed()) run_lmax(lmax_args);
    if (fourier_cmd->parsed()) run_fourier(fourier_args);
    if (repro_cmd->parsed()) return run_repro();
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
