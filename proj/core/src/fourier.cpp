#include "fractalwalk/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fractalwalk/errors.hpp"
#include "fractalwalk/numerics.hpp"
#include "fractalwalk/unfold.hpp"

namespace fractalwalk::fourier {

namespace {

constexpr double kDecayTol = 1e-8;

}  // namespace

SpectrumTable forward_transform(const CurveFunction& f, const StaircaseTable& table,
                                std::span<const double> psi_grid, int tiles,
                                int panels_per_tile) {
  if (!f) throw DomainError("forward_transform: empty function");
  if (psi_grid.empty()) throw DomainError("forward_transform: empty spectrum grid");
  if (tiles < 1) throw DomainError("forward_transform: tiles must be >= 1");
  if (panels_per_tile < 2) throw DomainError("forward_transform: panels_per_tile must be >= 2");

  const UnfoldedCurve unfolded(table.curve());
  const double extent = tiles * unfolded.tile_mass();
  const std::size_t n_panels = static_cast<std::size_t>(2 * tiles) * panels_per_tile;
  const double h = 2.0 * extent / static_cast<double>(n_panels);

  std::vector<double> nodes(n_panels + 1);
  std::vector<double> samples(n_panels + 1);
  double peak = 0.0;
  for (std::size_t i = 0; i <= n_panels; ++i) {
    const double s = -extent + static_cast<double>(i) * h;
    const double v = f(unfolded.at_mass(s));
    if (!std::isfinite(v)) {
      throw NumericError("forward_transform: function not finite at mass " + std::to_string(s));
    }
    nodes[i] = s;
    samples[i] = v;
    peak = std::max(peak, std::abs(v));
  }
  if (peak > 0.0 &&
      std::max(std::abs(samples.front()), std::abs(samples.back())) > kDecayTol * peak) {
    throw AccuracyError(
        "forward_transform: function has not decayed below 1e-8 of its peak at the "
        "truncation boundary; increase tiles");
  }

  // Trapezoid weights folded into the samples; the oscillatory factor is the
  // only per-v work.
  samples.front() *= 0.5;
  samples.back() *= 0.5;

  SpectrumTable spectrum;
  spectrum.psi_masses.assign(psi_grid.begin(), psi_grid.end());
  spectrum.values.resize(psi_grid.size());
  std::vector<std::complex<double>> terms(n_panels + 1);
  for (std::size_t j = 0; j < psi_grid.size(); ++j) {
    const double v = psi_grid[j];
    for (std::size_t i = 0; i <= n_panels; ++i) {
      const double phase = -nodes[i] * v;
      terms[i] = samples[i] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    spectrum.values[j] = numerics::pairwise_sum(std::span<const std::complex<double>>(terms)) * h;
  }
  return spectrum;
}

std::vector<std::complex<double>> inverse_transform(const SpectrumTable& spectrum,
                                                    const StaircaseTable& table,
                                                    std::span<const double> u_grid) {
  const std::size_t n = spectrum.psi_masses.size();
  if (n < 2) throw DomainError("inverse_transform: spectrum needs at least 2 points");
  if (spectrum.values.size() != n) throw DomainError("inverse_transform: malformed spectrum");
  if (u_grid.empty()) throw DomainError("inverse_transform: empty u grid");

  const double dv = spectrum.psi_masses[1] - spectrum.psi_masses[0];
  if (!(dv > 0.0)) throw DomainError("inverse_transform: spectrum grid must be increasing");
  for (std::size_t i = 1; i < n; ++i) {
    const double step = spectrum.psi_masses[i] - spectrum.psi_masses[i - 1];
    if (std::abs(step - dv) > 1e-9 * dv) {
      throw DomainError("inverse_transform: spectrum grid must be uniform");
    }
  }

  double peak = 0.0;
  for (const auto& v : spectrum.values) peak = std::max(peak, std::abs(v));
  if (peak > 0.0 && std::max(std::abs(spectrum.values.front()),
                             std::abs(spectrum.values.back())) > kDecayTol * peak) {
    throw AccuracyError(
        "inverse_transform: spectrum has not decayed below 1e-8 of its peak at the grid "
        "ends; widen the grid");
  }

  double max_mass = 0.0;
  std::vector<double> masses(u_grid.size());
  for (std::size_t j = 0; j < u_grid.size(); ++j) {
    masses[j] = table.value(u_grid[j]);
    max_mass = std::max(max_mass, std::abs(masses[j]));
  }
  if (max_mass > M_PI / dv) {
    throw AccuracyError(
        "inverse_transform: spectrum grid spacing cannot resolve the requested masses "
        "(Nyquist mass exceeded); refine dv");
  }

  std::vector<std::complex<double>> out(u_grid.size());
  std::vector<std::complex<double>> terms(n);
  for (std::size_t j = 0; j < u_grid.size(); ++j) {
    const double s = masses[j];
    for (std::size_t i = 0; i < n; ++i) {
      const double phase = s * spectrum.psi_masses[i];
      double w = dv;
      if (i == 0 || i + 1 == n) w *= 0.5;
      terms[i] = spectrum.values[i] * std::complex<double>(std::cos(phase), std::sin(phase)) * w;
    }
    out[j] = numerics::pairwise_sum(std::span<const std::complex<double>>(terms)) / (2.0 * M_PI);
  }
  return out;
}

}  // namespace fractalwalk::fourier
