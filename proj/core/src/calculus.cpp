#include "fractalwalk/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "fractalwalk/errors.hpp"
#include "fractalwalk/numerics.hpp"

namespace fractalwalk {

namespace {

double pow4(int m) { return std::ldexp(1.0, 2 * m); }

// Slack for classifying a mass argument as inside [0, S(1)]: a few ulps so
// that values produced by summation are not spuriously rejected.
double mass_slack(double total) { return 16.0 * std::numeric_limits<double>::epsilon() * total; }

}  // namespace

double mass_function(const FractalCurve& curve, double a, double b, int subdiv_depth) {
  if (!(a >= 0.0 && b <= 1.0 && a <= b)) {
    throw DomainError("mass_function: need 0 <= a <= b <= 1");
  }
  if (subdiv_depth < 0 || subdiv_depth > std::max(curve.depth(), 0)) {
    throw CapacityError("mass_function: subdiv_depth must lie in [0, depth], got " +
                        std::to_string(subdiv_depth));
  }
  if (a == b) return 0.0;

  const double n = pow4(subdiv_depth);
  // Aligned partition points strictly inside (a, b).
  std::uint64_t first = static_cast<std::uint64_t>(std::floor(a * n)) + 1;
  std::uint64_t last = static_cast<std::uint64_t>(std::ceil(b * n));
  if (last > 0) last -= 1;

  numerics::KahanSum sum;
  const double alpha = curve.alpha();
  double prev_u = a;
  PlanePoint prev = curve.point_at(a);
  for (std::uint64_t i = first; i <= last && static_cast<double>(i) / n < b; ++i) {
    const double u = static_cast<double>(i) / n;
    if (u <= prev_u) continue;
    const PlanePoint p = curve.point_at(u);
    sum.add(std::pow(euclidean_distance(prev, p), alpha));
    prev = p;
    prev_u = u;
  }
  const PlanePoint end = curve.point_at(b);
  sum.add(std::pow(euclidean_distance(prev, end), alpha));
  return sum.value() * curve.mass_norm();
}

double staircase(const FractalCurve& curve, double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw DomainError("staircase: u must lie in [0, 1], got " + std::to_string(u));
  }
  const double n = pow4(curve.depth());
  const double scaled = u * n;
  const double whole = std::floor(scaled);
  const double frac = scaled - whole;
  const double partial = frac > 0.0 ? std::pow(frac, curve.alpha()) : 0.0;
  return (whole + partial) / n * curve.mass_norm();
}

double total_mass(const FractalCurve& curve) { return curve.mass_norm(); }

double inverse_staircase(const FractalCurve& curve, double s) {
  const double total = total_mass(curve);
  const double slack = mass_slack(total);
  if (!(s >= -slack && s <= total + slack)) {
    throw DomainError("inverse_staircase: mass must lie in [0, S(1)], got " + std::to_string(s));
  }
  if (s <= 0.0) return 0.0;
  if (s >= total) return 1.0;
  const double n = pow4(curve.depth());
  const double scaled = s / curve.mass_norm() * n;
  double whole = std::floor(scaled);
  if (whole >= n) whole = n - 1.0;
  const double frac = scaled - whole;
  const double partial = frac > 0.0 ? std::pow(frac, 1.0 / curve.alpha()) : 0.0;
  return (whole + partial) / n;
}

CurvePoint curve_point(const FractalCurve& curve, double u) {
  return CurvePoint{u, curve.point_at(u), staircase(curve, u)};
}

StaircaseTable::StaircaseTable(const FractalCurve& curve, int grid_depth)
    : curve_(curve), grid_depth_(grid_depth), total_(fractalwalk::total_mass(curve)) {
  const int max_depth = curve.depth() >= 1 ? curve.depth() : FractalCurve::kMaxDepth;
  if (grid_depth < 0 || grid_depth > max_depth) {
    throw CapacityError("StaircaseTable: grid_depth must lie in [0, " +
                        std::to_string(max_depth) + "], got " + std::to_string(grid_depth));
  }
  const std::uint64_t cells = std::uint64_t{1} << (2 * grid_depth);
  grid_u_.reserve(cells + 1);
  grid_mass_.reserve(cells + 1);
  for (std::uint64_t i = 0; i <= cells; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(cells);
    grid_u_.push_back(u);
    grid_mass_.push_back(staircase(curve_, u));
  }
}

double ConjugateFunction::operator()(double mass) const {
  if (!on_mass) throw DomainError("ConjugateFunction: empty function");
  return on_mass(mass);
}

ConjugateFunction lift(CurveFunction f, const StaircaseTable& table) {
  if (!f) throw DomainError("lift: empty curve function");
  ConjugateFunction g;
  g.table = &table;
  g.on_mass = [f = std::move(f), &table](double mass) {
    return f(table.point_at_mass(mass));
  };
  return g;
}

CurveFunction lower(const ConjugateFunction& g) {
  if (!g.on_mass) throw DomainError("lower: empty conjugate function");
  return [g](const CurvePoint& p) { return g.on_mass(p.mass); };
}

double falpha_integral(const CurveFunction& f, const FractalCurve& curve, double a, double b,
                       int n_panels) {
  if (!f) throw DomainError("falpha_integral: empty integrand");
  if (!(a >= 0.0 && b <= 1.0 && a <= b)) {
    throw DomainError("falpha_integral: need 0 <= a <= b <= 1");
  }
  if (n_panels < 1) throw DomainError("falpha_integral: n_panels must be >= 1");
  const double s_lo = staircase(curve, a);
  const double s_hi = staircase(curve, b);
  const double h = (s_hi - s_lo) / n_panels;
  if (h == 0.0) return 0.0;
  numerics::KahanSum sum;
  for (int i = 0; i < n_panels; ++i) {
    const double s = s_lo + (i + 0.5) * h;
    const double u = inverse_staircase(curve, s);
    const double v = f(CurvePoint{u, curve.point_at(u), s});
    if (!std::isfinite(v)) {
      throw NumericError("falpha_integral: integrand not finite at u = " + std::to_string(u));
    }
    sum.add(v);
  }
  return sum.value() * h;
}

double falpha_derivative(const CurveFunction& f, const FractalCurve& curve, double u,
                         double h_mass) {
  if (!f) throw DomainError("falpha_derivative: empty function");
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("falpha_derivative: u must lie in (0, 1)");
  }
  const double total = total_mass(curve);
  if (!(h_mass > 0.0 && h_mass <= total / 4.0)) {
    throw DomainError("falpha_derivative: h_mass must lie in (0, S(1)/4]");
  }
  const double s = staircase(curve, u);
  if (s - h_mass < 0.0 || s + h_mass > total) {
    throw DomainError("falpha_derivative: stencil [s - h, s + h] leaves [0, S(1)]");
  }
  const double up = inverse_staircase(curve, s + h_mass);
  const double um = inverse_staircase(curve, s - h_mass);
  const double fp = f(CurvePoint{up, curve.point_at(up), s + h_mass});
  const double fm = f(CurvePoint{um, curve.point_at(um), s - h_mass});
  if (!std::isfinite(fp) || !std::isfinite(fm)) {
    throw NumericError("falpha_derivative: function not finite on stencil");
  }
  return (fp - fm) / (2.0 * h_mass);
}

}  // namespace fractalwalk
