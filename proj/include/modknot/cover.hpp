#pragma once

#include <cstdint>
#include <vector>

#include "modknot/word.hpp"

namespace modknot {

// Floors descended per x letter; a y climbs the same amount. The net descent
// of a word is therefore m - l.
inline constexpr int kFloorsPerX = 1;

// Degree n of a cyclic self-cover H_n of the trefoil complement: n = 6k+1,
// with n = 1 admitted as the identity cover.
class CoverIndex {
 public:
  // Throws InvalidCover unless n == 1 or n % 6 == 1.
  explicit CoverIndex(std::uint64_t n);

  std::uint64_t value() const { return n_; }
  std::uint64_t k() const { return (n_ - 1) / 6; }

  friend bool operator==(const CoverIndex&, const CoverIndex&) = default;

 private:
  std::uint64_t n_;
};

// Position in H_n: a floor coordinate in [0, n) and an angle in [0, 2pi).
struct FloorPoint {
  double floor = 0.0;
  double angle = 0.0;
};

// [t_a - t_b]_n, in [0, n).
double floor_difference(const FloorPoint& a, const FloorPoint& b, CoverIndex n);

// Preimage of an orbit in H_n. Copies of the orbit are numbered 1..n by the
// floor their start point lies on; copy i continues into copy [i + d]_n.
struct LiftResult {
  CoverIndex n;
  std::int64_t d = 0;
  std::uint64_t component_count = 0;
  // Each component as the cyclic sequence of copies it strings together.
  std::vector<std::vector<std::uint64_t>> components;
  // Degree of each component over the orbit, n / component_count.
  std::uint64_t degree = 0;

  // Net floor displacement accumulated along one component.
  std::int64_t component_displacement(std::size_t component) const;
};

// d = m - l, the signed number of floors one traversal descends.
std::int64_t floor_displacement(const CyclicWord& word);

// [d]_n reduced to 0..n-1.
std::uint64_t floor_residue(std::int64_t d, CoverIndex n);

// ([d]_n * pi/3) mod 2pi: angle between the endpoints of a curve that
// travels d floors.
double angle_difference(std::int64_t d, CoverIndex n);

// Same angle as a count of sixth-turns, in 0..5.
int angle_sixths(std::int64_t d, CoverIndex n);

// gcd(m - l, n), with gcd(0, n) = n.
std::uint64_t lift_component_count(const CyclicWord& word, CoverIndex n);

// Cycle decomposition of the copy permutation i -> [i + d]_n.
LiftResult simulate_lift(const CyclicWord& word, CoverIndex n);

// count words x^{l+1} y^l (l = 1, 2, ...) ordered by length. Each has
// m - l = 1, so each lifts to a knot in H_n; every entry is checked against
// simulate_lift. Throws InvalidCover for n < 7.
std::vector<CyclicWord> commensurable_family(CoverIndex n, std::size_t count);

}  // namespace modknot
