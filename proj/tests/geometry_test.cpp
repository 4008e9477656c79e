#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include <json.hpp>

#include "modknot/errors.hpp"
#include "modknot/geometry.hpp"

using namespace modknot;

namespace {

double radial(const Vec3& v) { return std::hypot(v[0], v[1]); }

double circular_gap(double a, double b) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double diff = std::fmod(std::abs(a - b), two_pi);
  return std::min(diff, two_pi - diff);
}

// Every consecutive pair that jumps between the top and bottom faces must be
// one point seen through the gluing: rotating the bottom copy by phi lands
// on the top copy.
void check_seams(const Polyline3D& p, CoverIndex n, const HexModelParams& params) {
  const double top = static_cast<double>(n.value()) * params.floor_height;
  const auto& v = p.vertices();
  for (std::size_t i = 1; i < v.size(); ++i) {
    const Vec3& a = v[i - 1];
    const Vec3& b = v[i];
    const double jump = std::abs(a[2] - b[2]);
    if (jump <= params.floor_height) continue;
    const Vec3& upper = a[2] > b[2] ? a : b;
    const Vec3& lower = a[2] > b[2] ? b : a;
    CHECK(std::abs(upper[2] - top) < 1e-9);
    CHECK(std::abs(lower[2]) < 1e-9);
    const Point2 glued = rotate_point({lower[0], lower[1]}, 1, 0.0);
    CHECK(std::hypot(glued.x - upper[0], glued.y - upper[1]) < 1e-9);
  }
}

}  // namespace

TEST_CASE("HexModelParams validation") {
  HexModelParams params;
  CHECK_NOTHROW(params.validate());
  params.puncture_radius = params.inradius();
  CHECK_THROWS_AS(params.validate(), InvalidParams);
  params.puncture_radius = 0.0;
  CHECK_THROWS_AS(params.validate(), InvalidParams);
  params = {};
  params.floor_height = 0.0;
  CHECK_THROWS_AS(params.validate(), InvalidParams);
  params = {};
  params.samples_per_floor = 0;
  CHECK_THROWS_AS(params.validate(), InvalidParams);
}

TEST_CASE("Polyline3D invariants") {
  CHECK_THROWS_AS(Polyline3D({{0, 0, 0}}, false), InvalidParams);
  CHECK_THROWS_AS(Polyline3D({{0, 0, 0}, {1, 0, 0}}, true), InvalidParams);
  const Polyline3D degenerate({{1, 2, 3}, {1, 2, 3}}, true);
  CHECK(closure_check(degenerate, 1e-9));
}

TEST_CASE("scaffold") {
  const Scene one = scaffold(CoverIndex(1));
  CHECK(one.frames.size() == 1);
  CHECK(one.frames[0].size() == 12);

  const Scene seven = scaffold(CoverIndex(7));
  REQUIRE(seven.frames.size() == 7);
  double zmax = 0;
  for (const auto& frame : seven.frames) {
    for (const Vec3& v : frame) zmax = std::max(zmax, v[2]);
  }
  CHECK(zmax == doctest::Approx(7.0));
  CHECK(seven.frames[3][0][2] == doctest::Approx(3.0));
  CHECK(seven.frames[3][6][2] == doctest::Approx(4.0));
  CHECK(seven.polylines.size() == 7);

  HexModelParams bad;
  bad.puncture_radius = 0.9;
  CHECK_THROWS_AS(scaffold(CoverIndex(7), bad), InvalidParams);
  CHECK(scene_to_json(scaffold(CoverIndex(7))) == scene_to_json(seven));
}

TEST_CASE("embed_loop examples") {
  const HexModelParams params;
  const auto xy1 = embed_loop(parse_word("xy"), CoverIndex(1));
  REQUIRE(xy1.size() == 1);
  CHECK(closure_check(xy1[0]));
  for (const Vec3& v : xy1[0].vertices()) {
    CHECK(v[2] >= -1e-12);
    CHECK(v[2] <= 1.0 + 1e-12);
  }

  const auto xxy7 = embed_loop(parse_word("xxy"), CoverIndex(7));
  REQUIRE(xxy7.size() == 1);
  CHECK(closure_check(xxy7[0]));
  std::set<int> floors;
  for (const Vec3& v : xxy7[0].vertices()) {
    const double frac = v[2] - std::floor(v[2]);
    if (frac > 1e-9) floors.insert(static_cast<int>(std::floor(v[2])));
  }
  CHECK(floors == std::set<int>{0, 1, 2, 3, 4, 5, 6});
  double zmin = 1e9, zmax = -1e9;
  for (const Vec3& v : xxy7[0].vertices()) {
    zmin = std::min(zmin, v[2]);
    zmax = std::max(zmax, v[2]);
  }
  CHECK(zmin == doctest::Approx(0.0));
  CHECK(zmax == doctest::Approx(7.0));

  const auto xy7 = embed_loop(parse_word("xy"), CoverIndex(7));
  REQUIRE(xy7.size() == 7);
  for (std::size_t i = 0; i < xy7.size(); ++i) {
    CHECK(closure_check(xy7[i]));
    // Copy i+1 starts at level 7 - i and only dips one floor below it.
    double lo = 1e9, hi = -1e9;
    for (const Vec3& v : xy7[i].vertices()) {
      lo = std::min(lo, v[2]);
      hi = std::max(hi, v[2]);
    }
    CHECK(hi - lo <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(embed_loop(parse_word("xy"), CoverIndex(7), HexModelParams{1.0, 2.0, 1.0, 16}),
                  InvalidParams);
}

TEST_CASE("embed_loop components, closure, seams and cylinder") {
  const HexModelParams params;
  for (const CyclicWord& w : enumerate_primitive(6, false)) {
    for (std::uint64_t n : {1, 7, 13}) {
      const CoverIndex cover(n);
      const auto curves = embed_loop(w, cover, params);
      CHECK(curves.size() == lift_component_count(w, cover));
      for (const Polyline3D& p : curves) {
        CHECK(p.closed());
        CHECK(closure_check(p, 1e-9));
        check_seams(p, cover, params);
        for (std::size_t i = 1; i < p.vertices().size(); ++i) {
          const Vec3& a = p.vertices()[i - 1];
          const Vec3& b = p.vertices()[i];
          const bool on_cylinder = std::abs(radial(b) - params.puncture_radius) < 1e-9;
          // Off-cylinder vertices belong to horizontal branchline arcs.
          if (!on_cylinder) CHECK(std::abs(a[2] - b[2]) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("copy_path of xxy in H_7 is open; xy closes by itself") {
  CHECK_FALSE(closure_check(copy_path(parse_word("xxy"), CoverIndex(7), 1), 1e-9));
  CHECK(closure_check(copy_path(parse_word("xy"), CoverIndex(7), 1), 1e-9));
  CHECK_THROWS_AS(copy_path(parse_word("xy"), CoverIndex(7), 8), InvalidParams);
}

TEST_CASE("swept angle of the first copy follows the floor formula") {
  for (std::uint64_t n : {1, 7, 13, 19, 25}) {
    const CoverIndex cover(n);
    for (Exponent a = 1; a <= 30; a += 3) {
      for (Exponent b = 1; b <= 30; b += 2) {
        const CyclicWord w = CyclicWord::from_syllables({{a, b}});
        const double swept = swept_angle(copy_path(w, cover, 1));
        CHECK(circular_gap(swept, angle_difference(floor_displacement(w), cover)) < 1e-9);
      }
    }
  }
}

TEST_CASE("scene JSON and OBJ export") {
  const Scene scene = build_scene(parse_word("x^11 y"), CoverIndex(25));
  const auto doc = nlohmann::json::parse(scene_to_json(scene));
  CHECK(doc["n"] == 25);
  CHECK(doc["frames"].size() == 25);
  CHECK(doc["params"]["puncture_radius"].get<double>() == 0.2);
  std::size_t components = 0;
  for (const auto& p : doc["polylines"]) {
    CHECK(p["closed"].get<bool>());
    if (p["label"].get<std::string>().rfind("component", 0) == 0) ++components;
  }
  CHECK(components == 5);
  CHECK(scene_to_json(scene).find("0.20000000000000001") != std::string::npos);

  const std::string obj = scene_to_obj(scene);
  CHECK(obj.find("o component_1__copies_1_11_21_6_16") != std::string::npos);
  CHECK(obj.find("\nf ") == std::string::npos);
  std::size_t objects = 0, lines = 0;
  for (std::size_t pos = 0; (pos = obj.find('\n', pos)) != std::string::npos; ++pos) {
    if (obj.compare(pos + 1, 2, "o ") == 0) ++objects;
    if (obj.compare(pos + 1, 2, "l ") == 0) ++lines;
  }
  CHECK(objects == scene.polylines.size());
  CHECK(lines == scene.polylines.size());
}
