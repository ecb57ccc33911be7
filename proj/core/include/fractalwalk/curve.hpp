#pragma once

#include <cstdint>

namespace fractalwalk {

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

/// A point on (or on an unfolded extension of) a curve: its parameter u,
/// its position in the plane, and its arc mass s.  For points inside the
/// unit curve u lies in [0, 1] and s in [0, total mass].
struct CurvePoint {
  double u = 0.0;
  PlanePoint position{};
  double mass = 0.0;
};

/// Self-similar planar curve over [0, 1], generated by four affine
/// contractions and parametrized so that each of the 4^depth generation-depth
/// segments carries an equal share of the parameter interval.  depth == 0
/// degenerates to the straight unit segment with dimension 1; depth >= 1 is
/// the triadic snowflake-edge construction with dimension log 4 / log 3.
class FractalCurve {
 public:
  static constexpr int kMaxDepth = 12;

  int depth() const { return depth_; }

  /// Similarity dimension of the attractor this construction refines toward.
  double alpha() const { return alpha_; }

  /// 1 / Gamma(alpha + 1): normalization shared by the mass functional.
  double mass_norm() const { return mass_norm_; }

  std::uint64_t segment_count() const { return std::uint64_t{1} << (2 * depth_); }
  std::uint64_t vertex_count() const { return segment_count() + 1; }

  /// Position w(u) for u in [0, 1].  Descends one base-4 digit of u per
  /// construction level, composing the corresponding contraction, and closes
  /// the remainder with linear interpolation along the deepest segment.
  /// Exact (to rounding) at aligned parameters u = i / 4^m, m <= depth.
  PlanePoint point_at(double u) const;

  /// Vertex i of the depth-level polyline, i in [0, 4^depth].
  PlanePoint vertex(std::uint64_t i) const;

  /// Straight-line distance from the origin endpoint, L(u) = |w(u)|.
  double euclidean_distance(double u) const;

  friend FractalCurve make_koch_curve(int depth);
  friend FractalCurve make_unit_segment();

 private:
  FractalCurve(int depth, double alpha);

  int depth_;
  double alpha_;
  double mass_norm_;
};

/// Snowflake-edge curve at the given construction depth (1 <= depth <= 12).
FractalCurve make_koch_curve(int depth);

/// Degenerate depth-0 curve: the straight segment from (0,0) to (1,0).
FractalCurve make_unit_segment();

double euclidean_distance(const PlanePoint& a, const PlanePoint& b);

}  // namespace fractalwalk
