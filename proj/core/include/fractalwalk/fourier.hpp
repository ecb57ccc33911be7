#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fractalwalk/calculus.hpp"

namespace fractalwalk::fourier {

/// Transform samples F(v) on a grid of conjugate masses v = S(psi).
struct SpectrumTable {
  std::vector<double> psi_masses;
  std::vector<std::complex<double>> values;
};

/// Mass-coordinate Fourier transform of a curve function:
/// F(v) = integral of f(theta(s)) exp(-i s v) ds over s in
/// [-tiles * S(1), tiles * S(1)] on the chained unfolding, taken as a
/// trapezoid rule with panels_per_tile panels per unit of curve mass.
/// Requires |f| at the truncation boundary to be below 1e-8 of its peak.
SpectrumTable forward_transform(const CurveFunction& f, const StaircaseTable& table,
                                std::span<const double> psi_grid, int tiles, int panels_per_tile);

/// Inverse transform back to curve points: for each u, (1 / 2 pi) times the
/// trapezoid sum of values(v) exp(+i S(u) v) over the spectrum grid, which
/// must be uniform, decayed below 1e-8 of its peak at the ends, and fine
/// enough that max |S(u)| stays under the grid's Nyquist mass pi / dv.
std::vector<std::complex<double>> inverse_transform(const SpectrumTable& spectrum,
                                                    const StaircaseTable& table,
                                                    std::span<const double> u_grid);

}  // namespace fractalwalk::fourier
