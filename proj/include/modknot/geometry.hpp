#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "modknot/cover.hpp"
#include "modknot/monodromy.hpp"
#include "modknot/word.hpp"

namespace modknot {

// Dimensions of the stacked-prism model of H_n: one hexagonal prism H x I per
// floor, with the puncture as a central cylinder.
struct HexModelParams {
  double circumradius = 1.0;
  double puncture_radius = kDefaultPunctureRadius;
  double floor_height = 1.0;
  // Samples per helical floor segment.
  int samples_per_floor = 16;

  double inradius() const;
  // Radius reached by branchline arcs, halfway between puncture and hexagon.
  double branchline_radius() const;
  // Throws InvalidParams unless 0 < puncture_radius < inradius,
  // floor_height > 0 and samples_per_floor >= 1.
  void validate() const;
};

using Vec3 = std::array<double, 3>;

inline constexpr double kClosureTolerance = 1e-9;

class Polyline3D {
 public:
  // Throws InvalidParams for fewer than two vertices or a closed polyline
  // whose endpoints are more than kClosureTolerance apart.
  Polyline3D(std::vector<Vec3> vertices, bool closed);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }

 private:
  std::vector<Vec3> vertices_;
  bool closed_;
};

struct LabeledPolyline {
  std::string label;
  Polyline3D polyline;
};

struct Scene {
  std::uint64_t n = 1;
  HexModelParams params;
  std::vector<LabeledPolyline> polylines;
  // One wireframe per floor: 6 bottom hexagon vertices then 6 top ones.
  std::vector<std::vector<Vec3>> frames;
};

// n stacked prism wireframes (floor i spans z in [i h, (i+1) h]) plus one
// puncture outline circle per floor.
Scene scaffold(CoverIndex n, const HexModelParams& params = {});

// One closed polyline per lift component, in the order of simulate_lift.
//
// Each letter is a helix on the puncture cylinder spanning one floor (x: down
// with -60 degrees of twist, y: up with +60 degrees), followed by a horizontal
// branchline arc. Coordinates are local to the tower: crossing the seam
// between the top of floor n-1 and the bottom of floor 0 emits the same point
// twice, once on each face, related by the gluing rotation phi.
std::vector<Polyline3D> embed_loop(const CyclicWord& word, CoverIndex n,
                                   const HexModelParams& params = {});

// The open path traced by a single copy (1..n) of the word before copies are
// joined. Copy 1 starts on the top face of the tower.
Polyline3D copy_path(const CyclicWord& word, CoverIndex n, std::uint64_t copy,
                     const HexModelParams& params = {});

// Clockwise angle in [0, 2pi) from the first to the last vertex, measured
// about the tower axis after moving any endpoint on the bottom face to its
// glued image on the top face.
double swept_angle(const Polyline3D& path);

// Distance between first and last vertex <= tol.
bool closure_check(const Polyline3D& path, double tol = kClosureTolerance);

// Scaffold plus the embedded loop, labelled by component.
Scene build_scene(const CyclicWord& word, CoverIndex n, const HexModelParams& params = {});

// Keys in lexicographic order; doubles written with 17 significant digits.
std::string scene_to_json(const Scene& scene);
// Wavefront OBJ: v records and l records, one object per polyline.
std::string scene_to_obj(const Scene& scene);

}  // namespace modknot
