#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "modknot/cover.hpp"
#include "modknot/errors.hpp"
#include "modknot/rademacher.hpp"
#include "oracles.hpp"

using namespace modknot;

namespace {

constexpr double kPi = std::numbers::pi;
const std::uint64_t kCovers[] = {1, 7, 13, 19, 25, 31, 37, 43, 49};

}  // namespace

TEST_CASE("CoverIndex validation") {
  CHECK(CoverIndex(1).value() == 1);
  CHECK(CoverIndex(7).k() == 1);
  CHECK(CoverIndex(49).k() == 8);
  CHECK_THROWS_AS(CoverIndex(0), InvalidCover);
  CHECK_THROWS_AS(CoverIndex(6), InvalidCover);
  CHECK_THROWS_AS(CoverIndex(8), InvalidCover);
  CHECK_THROWS_AS(CoverIndex(5), InvalidCover);
}

TEST_CASE("floor_displacement") {
  CHECK(floor_displacement(parse_word("xy")) == 0);
  CHECK(floor_displacement(parse_word("xxy")) == 1);
  CHECK(floor_displacement(parse_word("x^11 y")) == 10);
  CHECK(floor_displacement(parse_word("x y^3")) == -2);
}

TEST_CASE("floor_difference") {
  const CoverIndex n(7);
  CHECK(floor_difference({2.5, 0.0}, {0.5, 0.0}, n) == doctest::Approx(2.0));
  CHECK(floor_difference({0.5, 0.0}, {2.5, 0.0}, n) == doctest::Approx(5.0));
}

TEST_CASE("angle_difference examples") {
  CHECK(angle_difference(3, CoverIndex(7)) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(angle_difference(7, CoverIndex(7)) == 0.0);
  CHECK(angle_difference(20, CoverIndex(13)) == doctest::Approx(kPi / 3).epsilon(1e-15));
  CHECK(angle_difference(-1, CoverIndex(7)) == 0.0);  // r = 6
  CHECK(angle_sixths(20, CoverIndex(13)) == 1);
}

TEST_CASE("angle_difference follows the floor formula") {
  for (std::uint64_t n : kCovers) {
    const CoverIndex cover(n);
    for (std::int64_t d = -100; d <= 100; ++d) {
      const std::int64_t r = ((d % static_cast<std::int64_t>(n)) + n) % n;
      const double expected = std::fmod(static_cast<double>(r) * kPi / 3.0, 2.0 * kPi);
      // Compared on the circle: r pi/3 rounds to just below 2 pi k for r = 6k.
      const double gap = std::fmod(std::abs(angle_difference(d, cover) - expected), 2.0 * kPi);
      CHECK(std::min(gap, 2.0 * kPi - gap) < 1e-12);
      CHECK(angle_difference(d + static_cast<std::int64_t>(n), cover) == angle_difference(d, cover));
      CHECK((angle_difference(d, cover) == 0.0) == (n == 1 || r % 6 == 0));
    }
  }
}

TEST_CASE("lift_component_count examples") {
  CHECK(lift_component_count(parse_word("xy"), CoverIndex(7)) == 7);
  CHECK(lift_component_count(parse_word("xxy"), CoverIndex(7)) == 1);
  CHECK(lift_component_count(parse_word("x^11 y"), CoverIndex(25)) == 5);
  CHECK(lift_component_count(parse_word("x^8 y"), CoverIndex(7)) == 7);
  CHECK(lift_component_count(parse_word("x^5"), CoverIndex(25)) == 5);
}

TEST_CASE("simulate_lift examples") {
  const LiftResult xxy = simulate_lift(parse_word("xxy"), CoverIndex(7));
  CHECK(xxy.d == 1);
  CHECK(xxy.component_count == 1);
  CHECK(xxy.degree == 7);
  CHECK(xxy.components ==
        std::vector<std::vector<std::uint64_t>>{{1, 2, 3, 4, 5, 6, 7}});

  const LiftResult xy = simulate_lift(parse_word("xy"), CoverIndex(7));
  CHECK(xy.component_count == 7);
  CHECK(xy.degree == 1);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(xy.components[i] == std::vector<std::uint64_t>{i + 1});
  }

  const LiftResult big = simulate_lift(parse_word("x^11 y"), CoverIndex(25));
  CHECK(big.component_count == 5);
  CHECK(big.degree == 5);
  for (std::uint64_t i = 1; i <= 5; ++i) {
    auto wrap = [](std::uint64_t v) { return (v - 1) % 25 + 1; };
    CHECK(big.components[i - 1] ==
          std::vector<std::uint64_t>{i, wrap(i + 10), wrap(i + 20), wrap(i + 5), wrap(i + 15)});
  }
}

TEST_CASE("identity cover has one component") {
  for (const CyclicWord& w : enumerate_primitive(8, false)) {
    CHECK(simulate_lift(w, CoverIndex(1)).component_count == 1);
  }
}

TEST_CASE("simulation agrees with the gcd formula and a union-find oracle") {
  for (const CyclicWord& w : enumerate_primitive(10, true)) {
    const std::int64_t d = floor_displacement(w);
    for (std::uint64_t n : kCovers) {
      const CoverIndex cover(n);
      const LiftResult sim = simulate_lift(w, cover);
      const std::uint64_t formula = lift_component_count(w, cover);
      CHECK(sim.component_count == formula);
      CHECK(oracle::union_find_components(d, n) == formula);
      CHECK(sim.component_count * sim.degree == n);
      // Components partition 1..n into equal-size cycles that close.
      std::set<std::uint64_t> covered;
      for (std::size_t c = 0; c < sim.components.size(); ++c) {
        CHECK(sim.components[c].size() == sim.degree);
        CHECK(sim.component_displacement(c) % static_cast<std::int64_t>(n) == 0);
        covered.insert(sim.components[c].begin(), sim.components[c].end());
      }
      CHECK(covered.size() == n);
      CHECK((sim.component_count == n) == (floor_residue(d, cover) == 0));
      CHECK(floor_displacement(w) == rademacher_word(w));
    }
  }
}

TEST_CASE("commensurable_family") {
  auto spell = [](const std::vector<CyclicWord>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(w.str());
    return out;
  };
  CHECK(spell(commensurable_family(CoverIndex(7), 3)) ==
        std::vector<std::string>{"x^2 y", "x^3 y^2", "x^4 y^3"});
  CHECK(spell(commensurable_family(CoverIndex(13), 1)) == std::vector<std::string>{"x^2 y"});
  for (const CyclicWord& w : commensurable_family(CoverIndex(7), 40)) {
    CHECK(w != parse_word("x^8 y"));
    CHECK(simulate_lift(w, CoverIndex(7)).component_count == 1);
    CHECK(is_primitive(w));
    CHECK(canonicalize(w) == w);
  }
  CHECK_THROWS_AS(commensurable_family(CoverIndex(1), 3), InvalidCover);
  CHECK_THROWS_AS(commensurable_family(CoverIndex(7), 0), InvalidParams);
}
