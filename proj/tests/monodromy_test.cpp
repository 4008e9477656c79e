#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "modknot/errors.hpp"
#include "modknot/monodromy.hpp"

using namespace modknot;

TEST_CASE("apply_phi examples") {
  CHECK(apply_phi(SurfaceFeature::band(Band::Alpha), 1) == SurfaceFeature::band(Band::Beta));
  CHECK(apply_phi(SurfaceFeature::band(Band::Gamma), 1) == SurfaceFeature::band(Band::Alpha));
  CHECK(apply_phi(SurfaceFeature::zero_disk(), 1) == SurfaceFeature::infinity_disk());
  CHECK(apply_phi(SurfaceFeature::generic(2), 6) == SurfaceFeature::generic(2));
  CHECK(apply_phi(SurfaceFeature::generic(0), -1) == SurfaceFeature::generic(5));
  CHECK(apply_phi(SurfaceFeature::edge(2), 1) == SurfaceFeature::edge(0));
  CHECK(apply_phi(SurfaceFeature::vertex(1), 1) == SurfaceFeature::vertex(0));
  CHECK(apply_phi(SurfaceFeature::band(Band::Beta), -7) == SurfaceFeature::band(Band::Alpha));
}

TEST_CASE("orbit lengths") {
  CHECK(orbit_length(SurfaceFeature::band(Band::Gamma)) == 3);
  CHECK(orbit_length(SurfaceFeature::infinity_disk()) == 2);
  CHECK(orbit_length(SurfaceFeature::zero_disk()) == 2);
  CHECK(orbit_length(SurfaceFeature::generic(0)) == 6);
  CHECK(orbit_length(SurfaceFeature::edge(1)) == 3);
  CHECK(orbit_length(SurfaceFeature::vertex(0)) == 2);
}

TEST_CASE("phi has order exactly 6 and no fixed features") {
  const MonodromyModel model;
  std::set<int> lengths;
  int lcm = 1;
  for (const SurfaceFeature& f : model.features()) {
    CHECK(model.apply(f, 6) == f);
    CHECK(model.apply(f, 1) != f);
    const int len = model.orbit_length(f);
    lengths.insert(len);
    lcm = std::lcm(lcm, len);
    for (long long k = -20; k <= 20; ++k) {
      CHECK(model.apply(model.apply(f, k), -k) == f);
    }
    if (f.kind == FeatureKind::GenericPoint) {
      for (int k = 1; k <= 5; ++k) CHECK(model.apply(f, k) != f);
    }
  }
  CHECK(lengths == std::set<int>{2, 3, 6});
  CHECK(lcm == MonodromyModel::kRotationOrder);
}

TEST_CASE("invalid features are rejected") {
  CHECK_THROWS_AS(apply_phi(SurfaceFeature::generic(6), 1), InvalidParams);
  CHECK_THROWS_AS(orbit_length(SurfaceFeature::vertex(2)), InvalidParams);
  CHECK_THROWS_AS(apply_phi({FeatureKind::Band, -1}, 1), InvalidParams);
}

TEST_CASE("rotate_point") {
  const Point2 p{1.0, 0.0};
  const Point2 full = rotate_point(p, 6);
  CHECK(std::abs(full.x - 1.0) < 1e-12);
  CHECK(std::abs(full.y) < 1e-12);
  const Point2 half = rotate_point(p, 3);
  CHECK(std::abs(half.x + 1.0) < 1e-12);
  CHECK(std::abs(half.y) < 1e-12);
  const Point2 sixth = rotate_point(p, 1);
  CHECK(std::abs(sixth.x - std::cos(std::numbers::pi / 3)) < 1e-12);
  CHECK(std::abs(sixth.y - std::sin(std::numbers::pi / 3)) < 1e-12);
  CHECK_THROWS_AS(rotate_point({0.05, 0.0}, 1), PointInPuncture);
  CHECK_NOTHROW(rotate_point({0.2, 0.0}, 1));
}

TEST_CASE("rotate_point composes") {
  const Point2 p{0.3, -0.7};
  for (long long a = -8; a <= 8; ++a) {
    for (long long b = -8; b <= 8; ++b) {
      const Point2 lhs = rotate_point(p, a + b);
      const Point2 rhs = rotate_point(rotate_point(p, a), b);
      CHECK(std::abs(lhs.x - rhs.x) < 1e-12);
      CHECK(std::abs(lhs.y - rhs.y) < 1e-12);
    }
  }
}
