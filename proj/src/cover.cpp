#include "modknot/cover.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "modknot/errors.hpp"

namespace modknot {

CoverIndex::CoverIndex(std::uint64_t n) : n_(n) {
  if (n == 0 || n % 6 != 1) {
    throw InvalidCover("cover index must be 1 or of the form 6k+1, got " + std::to_string(n));
  }
}

double floor_difference(const FloorPoint& a, const FloorPoint& b, CoverIndex n) {
  const auto period = static_cast<double>(n.value());
  double diff = std::fmod(a.floor - b.floor, period);
  if (diff < 0) {
    diff += period;
  }
  return diff;
}

std::int64_t LiftResult::component_displacement(std::size_t component) const {
  return static_cast<std::int64_t>(components.at(component).size()) * d;
}

std::int64_t floor_displacement(const CyclicWord& word) {
  return kFloorsPerX * (static_cast<std::int64_t>(word.x_count()) -
                        static_cast<std::int64_t>(word.y_count()));
}

std::uint64_t floor_residue(std::int64_t d, CoverIndex n) {
  const std::uint64_t modulus = n.value();
  if (d >= 0) {
    return static_cast<std::uint64_t>(d) % modulus;
  }
  const std::uint64_t r = (0 - static_cast<std::uint64_t>(d)) % modulus;
  return r == 0 ? 0 : modulus - r;
}

int angle_sixths(std::int64_t d, CoverIndex n) {
  return static_cast<int>(floor_residue(d, n) % 6);
}

double angle_difference(std::int64_t d, CoverIndex n) {
  return angle_sixths(d, n) * (std::numbers::pi / 3.0);
}

std::uint64_t lift_component_count(const CyclicWord& word, CoverIndex n) {
  const std::int64_t d = floor_displacement(word);
  const std::uint64_t magnitude =
      d >= 0 ? static_cast<std::uint64_t>(d) : 0 - static_cast<std::uint64_t>(d);
  return std::gcd(magnitude, n.value());
}

LiftResult simulate_lift(const CyclicWord& word, CoverIndex n) {
  const std::uint64_t size = n.value();
  const std::int64_t d = floor_displacement(word);
  const std::uint64_t step = floor_residue(d, n);

  LiftResult result{n, d, 0, {}, 0};
  std::vector<bool> visited(size + 1, false);
  for (std::uint64_t start = 1; start <= size; ++start) {
    if (visited[start]) {
      continue;
    }
    std::vector<std::uint64_t> cycle;
    std::uint64_t copy = start;
    while (!visited[copy]) {
      visited[copy] = true;
      cycle.push_back(copy);
      copy = (copy - 1 + step) % size + 1;
    }
    result.components.push_back(std::move(cycle));
  }
  result.component_count = result.components.size();
  result.degree = size / result.component_count;

  for (std::size_t c = 0; c < result.components.size(); ++c) {
    if (result.components[c].size() != result.degree ||
        floor_residue(result.component_displacement(c), n) != 0) {
      throw std::logic_error("lift component does not close");
    }
  }
  if (result.component_count != lift_component_count(word, n)) {
    throw std::logic_error("simulated lift disagrees with gcd count");
  }
  return result;
}

std::vector<CyclicWord> commensurable_family(CoverIndex n, std::size_t count) {
  if (n.value() < 7) {
    throw InvalidCover("commensurable family needs n >= 7");
  }
  if (count == 0) {
    throw InvalidParams("count must be at least 1");
  }
  std::vector<CyclicWord> family;
  family.reserve(count);
  for (Exponent l = 1; family.size() < count; ++l) {
    CyclicWord word = CyclicWord::from_syllables({{l + 1, l}});
    if (lift_component_count(word, n) != 1 || simulate_lift(word, n).component_count != 1) {
      throw std::logic_error("family member does not lift to a knot");
    }
    family.push_back(std::move(word));
  }
  return family;
}

}  // namespace modknot
