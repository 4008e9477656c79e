#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace modknot {

// Features of the once-punctured hexagonal torus that the monodromy permutes.
enum class FeatureKind { ZeroDisk, InfinityDisk, Band, EdgeClass, VertexClass, GenericPoint };

enum class Band { Alpha = 0, Beta = 1, Gamma = 2 };

struct SurfaceFeature {
  FeatureKind kind = FeatureKind::GenericPoint;
  // Band (0..2), edge class (0..2), vertex class (0..1) or sector (0..5);
  // always 0 for the two disks.
  int index = 0;

  static SurfaceFeature zero_disk() { return {FeatureKind::ZeroDisk, 0}; }
  static SurfaceFeature infinity_disk() { return {FeatureKind::InfinityDisk, 0}; }
  static SurfaceFeature band(Band b) { return {FeatureKind::Band, static_cast<int>(b)}; }
  static SurfaceFeature edge(int i) { return {FeatureKind::EdgeClass, i}; }
  static SurfaceFeature vertex(int i) { return {FeatureKind::VertexClass, i}; }
  static SurfaceFeature generic(int sector) { return {FeatureKind::GenericPoint, sector}; }

  std::string str() const;

  friend bool operator==(const SurfaceFeature&, const SurfaceFeature&) = default;
};

// The order-6 monodromy phi of the fibred trefoil complement, modelled as
// the counter-clockwise rotation by 2pi/6 of the punctured hexagon. Acts on
// features through a fixed permutation table:
//   bands alpha -> beta -> gamma, 0-disk <-> infinity-disk,
//   edge classes i -> i+1 (mod 3), vertex classes i -> i+1 (mod 2),
//   generic sectors i -> i+1 (mod 6).
class MonodromyModel {
 public:
  static constexpr int kRotationOrder = 6;
  static constexpr std::size_t kFeatureCount = 16;

  MonodromyModel();

  // phi^k(f); negative k applies the inverse rotation.
  SurfaceFeature apply(const SurfaceFeature& feature, long long k) const;
  // Smallest k >= 1 with phi^k(f) == f.
  int orbit_length(const SurfaceFeature& feature) const;
  // Every feature, in table order.
  std::vector<SurfaceFeature> features() const;

 private:
  std::array<std::size_t, kFeatureCount> next_{};
};

// Throws InvalidParams for an index outside its kind's range.
SurfaceFeature apply_phi(const SurfaceFeature& feature, long long k);
int orbit_length(const SurfaceFeature& feature);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr double kDefaultPunctureRadius = 0.2;

// p rotated counter-clockwise about the puncture centre by k * 60 degrees.
// Throws PointInPuncture when |p| < puncture_radius.
Point2 rotate_point(Point2 p, long long k, double puncture_radius = kDefaultPunctureRadius);

}  // namespace modknot
