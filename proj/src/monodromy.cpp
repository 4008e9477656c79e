#include "modknot/monodromy.hpp"

#include <cmath>

#include "modknot/errors.hpp"

namespace modknot {
namespace {

// Flat table layout: [0-disk, inf-disk, bands 0..2, edges 0..2, vertices 0..1,
// sectors 0..5].
constexpr std::size_t kZeroSlot = 0;
constexpr std::size_t kInfinitySlot = 1;
constexpr std::size_t kBandBase = 2;
constexpr std::size_t kEdgeBase = 5;
constexpr std::size_t kVertexBase = 8;
constexpr std::size_t kSectorBase = 10;

int range_of(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::ZeroDisk:
    case FeatureKind::InfinityDisk: return 1;
    case FeatureKind::Band:
    case FeatureKind::EdgeClass: return 3;
    case FeatureKind::VertexClass: return 2;
    case FeatureKind::GenericPoint: return 6;
  }
  return 0;
}

std::size_t slot_of(const SurfaceFeature& f) {
  if (f.index < 0 || f.index >= range_of(f.kind)) {
    throw InvalidParams("feature index out of range: " + f.str());
  }
  const auto i = static_cast<std::size_t>(f.index);
  switch (f.kind) {
    case FeatureKind::ZeroDisk: return kZeroSlot;
    case FeatureKind::InfinityDisk: return kInfinitySlot;
    case FeatureKind::Band: return kBandBase + i;
    case FeatureKind::EdgeClass: return kEdgeBase + i;
    case FeatureKind::VertexClass: return kVertexBase + i;
    case FeatureKind::GenericPoint: return kSectorBase + i;
  }
  return 0;
}

SurfaceFeature feature_at(std::size_t slot) {
  if (slot == kZeroSlot) return SurfaceFeature::zero_disk();
  if (slot == kInfinitySlot) return SurfaceFeature::infinity_disk();
  if (slot < kEdgeBase) return {FeatureKind::Band, static_cast<int>(slot - kBandBase)};
  if (slot < kVertexBase) return {FeatureKind::EdgeClass, static_cast<int>(slot - kEdgeBase)};
  if (slot < kSectorBase) return {FeatureKind::VertexClass, static_cast<int>(slot - kVertexBase)};
  return {FeatureKind::GenericPoint, static_cast<int>(slot - kSectorBase)};
}

const MonodromyModel& default_model() {
  static const MonodromyModel model;
  return model;
}

// cos and sin of k * 60 degrees, k in 0..5.
constexpr double kHalfSqrt3 = 0.86602540378443864676;
constexpr double kCos[6] = {1.0, 0.5, -0.5, -1.0, -0.5, 0.5};
constexpr double kSin[6] = {0.0, kHalfSqrt3, kHalfSqrt3, 0.0, -kHalfSqrt3, -kHalfSqrt3};

}  // namespace

std::string SurfaceFeature::str() const {
  static const char* const kBandNames[] = {"alpha", "beta", "gamma"};
  switch (kind) {
    case FeatureKind::ZeroDisk: return "0-disk";
    case FeatureKind::InfinityDisk: return "inf-disk";
    case FeatureKind::Band:
      return index >= 0 && index < 3 ? std::string("band ") + kBandNames[index]
                                      : "band " + std::to_string(index);
    case FeatureKind::EdgeClass: return "edge " + std::to_string(index);
    case FeatureKind::VertexClass: return "vertex " + std::to_string(index);
    case FeatureKind::GenericPoint: return "sector " + std::to_string(index);
  }
  return "?";
}

MonodromyModel::MonodromyModel() {
  next_[kZeroSlot] = kInfinitySlot;
  next_[kInfinitySlot] = kZeroSlot;
  for (std::size_t i = 0; i < 3; ++i) {
    next_[kBandBase + i] = kBandBase + (i + 1) % 3;
    next_[kEdgeBase + i] = kEdgeBase + (i + 1) % 3;
  }
  for (std::size_t i = 0; i < 2; ++i) {
    next_[kVertexBase + i] = kVertexBase + (i + 1) % 2;
  }
  for (std::size_t i = 0; i < 6; ++i) {
    next_[kSectorBase + i] = kSectorBase + (i + 1) % 6;
  }
}

SurfaceFeature MonodromyModel::apply(const SurfaceFeature& feature, long long k) const {
  std::size_t slot = slot_of(feature);
  const long long steps = ((k % kRotationOrder) + kRotationOrder) % kRotationOrder;
  for (long long i = 0; i < steps; ++i) {
    slot = next_[slot];
  }
  return feature_at(slot);
}

int MonodromyModel::orbit_length(const SurfaceFeature& feature) const {
  const std::size_t start = slot_of(feature);
  std::size_t slot = next_[start];
  int length = 1;
  while (slot != start) {
    slot = next_[slot];
    ++length;
  }
  return length;
}

std::vector<SurfaceFeature> MonodromyModel::features() const {
  std::vector<SurfaceFeature> out;
  out.reserve(kFeatureCount);
  for (std::size_t slot = 0; slot < kFeatureCount; ++slot) {
    out.push_back(feature_at(slot));
  }
  return out;
}

SurfaceFeature apply_phi(const SurfaceFeature& feature, long long k) {
  return default_model().apply(feature, k);
}

int orbit_length(const SurfaceFeature& feature) { return default_model().orbit_length(feature); }

Point2 rotate_point(Point2 p, long long k, double puncture_radius) {
  // Points on the puncture circle itself are accepted up to rounding.
  if (std::hypot(p.x, p.y) < puncture_radius * (1.0 - 1e-12)) {
    throw PointInPuncture();
  }
  const auto r = static_cast<std::size_t>(((k % 6) + 6) % 6);
  return {kCos[r] * p.x - kSin[r] * p.y, kSin[r] * p.x + kCos[r] * p.y};
}

}  // namespace modknot
