#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fractalwalk/curve.hpp"
#include "fractalwalk/errors.hpp"

using fractalwalk::CapacityError;
using fractalwalk::DomainError;
using fractalwalk::FractalCurve;
using fractalwalk::make_koch_curve;
using fractalwalk::make_unit_segment;
using fractalwalk::PlanePoint;

namespace {

constexpr double kAlpha = 1.2618595071429148;     // log 4 / log 3
constexpr double kApexY = 0.28867513459481287;    // sqrt(3) / 6
constexpr double kApexDist = 0.5773502691896257;  // 1 / sqrt(3)

}  // namespace

TEST_CASE("factories set depth and dimension") {
  const FractalCurve segment = make_unit_segment();
  CHECK(segment.depth() == 0);
  CHECK(segment.alpha() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(segment.segment_count() == 1);
  CHECK(segment.vertex_count() == 2);

  const FractalCurve koch = make_koch_curve(5);
  CHECK(koch.depth() == 5);
  CHECK(koch.alpha() == doctest::Approx(kAlpha).epsilon(1e-15));
  CHECK(koch.segment_count() == 1024);
  CHECK(koch.vertex_count() == 1025);

  CHECK_THROWS_AS(make_koch_curve(0), CapacityError);
  CHECK_THROWS_AS(make_koch_curve(13), CapacityError);
}

TEST_CASE("unit segment is the identity embedding") {
  const FractalCurve segment = make_unit_segment();
  for (const double u : {0.0, 0.125, 0.5, 0.7, 1.0}) {
    const PlanePoint p = segment.point_at(u);
    CHECK(p.x == u);
    CHECK(p.y == 0.0);
    CHECK(segment.euclidean_distance(u) == u);
  }
}

TEST_CASE("curve endpoints and apex") {
  for (int depth = 1; depth <= 8; ++depth) {
    const FractalCurve curve = make_koch_curve(depth);
    const PlanePoint origin = curve.point_at(0.0);
    CHECK(origin.x == 0.0);
    CHECK(origin.y == 0.0);
    const PlanePoint end = curve.point_at(1.0);
    CHECK(end.x == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(end.y) < 1e-13);
    // u = 1/2 sits at the top of the generator triangle for every depth.
    const PlanePoint apex = curve.point_at(0.5);
    CHECK(apex.x == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(apex.y == doctest::Approx(kApexY).epsilon(1e-13));
    CHECK(curve.euclidean_distance(0.5) == doctest::Approx(kApexDist).epsilon(1e-13));
  }
}

TEST_CASE("depth-1 polyline matches the generator") {
  const FractalCurve curve = make_koch_curve(1);
  const double third = 1.0 / 3.0;
  const PlanePoint expected[5] = {
      {0.0, 0.0}, {third, 0.0}, {0.5, kApexY}, {2 * third, 0.0}, {1.0, 0.0}};
  for (std::uint64_t i = 0; i <= 4; ++i) {
    const PlanePoint v = curve.vertex(i);
    CHECK(v.x == doctest::Approx(expected[i].x).epsilon(1e-15));
    CHECK(std::abs(v.y - expected[i].y) < 1e-15);
  }
  CHECK_THROWS_AS(curve.vertex(5), DomainError);
}

TEST_CASE("refinement keeps coarse vertices") {
  for (int depth = 1; depth <= 5; ++depth) {
    const FractalCurve coarse = make_koch_curve(depth);
    const FractalCurve fine = make_koch_curve(depth + 1);
    for (std::uint64_t i = 0; i <= coarse.segment_count(); ++i) {
      const PlanePoint a = coarse.vertex(i);
      const PlanePoint b = fine.vertex(4 * i);
      CHECK(std::abs(a.x - b.x) < 1e-13);
      CHECK(std::abs(a.y - b.y) < 1e-13);
    }
  }
}

TEST_CASE("all depth-m chords have length 3^-m") {
  for (const int depth : {1, 2, 3, 6}) {
    const FractalCurve curve = make_koch_curve(depth);
    const double expected = std::pow(3.0, -depth);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < curve.segment_count(); ++i) {
      const double len = euclidean_distance(curve.vertex(i), curve.vertex(i + 1));
      worst = std::max(worst, std::abs(len - expected));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("mirror symmetry about u = 1/2") {
  const FractalCurve curve = make_koch_curve(7);
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 500; ++rep) {
    const double u = unit(gen);
    const PlanePoint p = curve.point_at(u);
    const PlanePoint q = curve.point_at(1.0 - u);
    CHECK(std::abs(p.x + q.x - 1.0) < 1e-12);
    CHECK(std::abs(p.y - q.y) < 1e-12);
  }
}

TEST_CASE("vertex agrees with point_at at aligned parameters") {
  const FractalCurve curve = make_koch_curve(6);
  for (std::uint64_t i = 0; i <= curve.segment_count(); i += 37) {
    const double u = static_cast<double>(i) / static_cast<double>(curve.segment_count());
    const PlanePoint a = curve.vertex(i);
    const PlanePoint b = curve.point_at(u);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
  }
}

TEST_CASE("parameter domain is enforced") {
  const FractalCurve curve = make_koch_curve(3);
  CHECK_THROWS_AS(curve.point_at(-0.001), DomainError);
  CHECK_THROWS_AS(curve.point_at(1.001), DomainError);
  CHECK_THROWS_AS(curve.point_at(std::nan("")), DomainError);
}

TEST_CASE("evaluation is deterministic") {
  const FractalCurve curve = make_koch_curve(9);
  for (const double u : {0.1234, 0.9876, 1.0 / 7.0}) {
    const PlanePoint a = curve.point_at(u);
    const PlanePoint b = curve.point_at(u);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
  }
}
