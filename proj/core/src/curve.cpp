#include "fractalwalk/curve.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "fractalwalk/errors.hpp"

namespace fractalwalk {

namespace {

using Complex = std::complex<double>;

// The four depth-1 contractions T_d(z) = offset_d + twist_d * z mapping the
// unit segment onto the four generator segments, left to right.
const std::array<Complex, 4>& twists() {
  static const std::array<Complex, 4> t = {
      Complex{1.0 / 3.0, 0.0},
      Complex{1.0 / 6.0, std::sqrt(3.0) / 6.0},
      Complex{1.0 / 6.0, -std::sqrt(3.0) / 6.0},
      Complex{1.0 / 3.0, 0.0},
  };
  return t;
}

const std::array<Complex, 4>& offsets() {
  static const std::array<Complex, 4> o = {
      Complex{0.0, 0.0},
      Complex{1.0 / 3.0, 0.0},
      Complex{0.5, std::sqrt(3.0) / 6.0},
      Complex{2.0 / 3.0, 0.0},
  };
  return o;
}

}  // namespace

FractalCurve::FractalCurve(int depth, double alpha)
    : depth_(depth), alpha_(alpha), mass_norm_(1.0 / std::tgamma(alpha + 1.0)) {}

PlanePoint FractalCurve::point_at(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw DomainError("curve parameter u must lie in [0, 1], got " + std::to_string(u));
  }
  Complex shift{0.0, 0.0};
  Complex frame{1.0, 0.0};
  double t = u;
  for (int level = 0; level < depth_; ++level) {
    t *= 4.0;
    const int digit = t >= 3.0 ? 3 : static_cast<int>(t);
    t -= digit;
    shift += frame * offsets()[digit];
    frame *= twists()[digit];
  }
  const Complex p = shift + frame * t;
  return {p.real(), p.imag()};
}

PlanePoint FractalCurve::vertex(std::uint64_t i) const {
  if (i > segment_count()) {
    throw DomainError("vertex index " + std::to_string(i) + " exceeds 4^depth");
  }
  return point_at(static_cast<double>(i) / static_cast<double>(segment_count()));
}

double FractalCurve::euclidean_distance(double u) const {
  const PlanePoint p = point_at(u);
  return std::hypot(p.x, p.y);
}

FractalCurve make_koch_curve(int depth) {
  if (depth < 1 || depth > FractalCurve::kMaxDepth) {
    throw CapacityError("construction depth must lie in [1, " +
                        std::to_string(FractalCurve::kMaxDepth) + "], got " +
                        std::to_string(depth));
  }
  return FractalCurve(depth, std::log(4.0) / std::log(3.0));
}

FractalCurve make_unit_segment() { return FractalCurve(0, 1.0); }

double euclidean_distance(const PlanePoint& a, const PlanePoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace fractalwalk
