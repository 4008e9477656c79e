#include <sstream>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "modknot/cover.hpp"
#include "modknot/errors.hpp"
#include "modknot/geometry.hpp"
#include "modknot/monodromy.hpp"
#include "modknot/psl2.hpp"
#include "modknot/rademacher.hpp"
#include "modknot/word.hpp"

namespace py = pybind11;

// Arbitrary-precision integers cross the boundary as Python ints, via their
// decimal string.
namespace pybind11::detail {
template <>
struct type_caster<modknot::Integer> {
  PYBIND11_TYPE_CASTER(modknot::Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = modknot::Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const modknot::Integer& v, return_value_policy, handle) {
    const std::string digits = v.str();
    return PyLong_FromString(digits.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace modknot;

CoverIndex cover(std::uint64_t n) { return CoverIndex(n); }

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(Integer(boost::multiprecision::numerator(r)),
                  Integer(boost::multiprecision::denominator(r)));
}

}  // namespace

PYBIND11_MODULE(_modknot, m) {
  m.doc() = "Modular knots, their lifts to cyclic covers of the trefoil complement, and geometry";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<EmptyWord>(m, "EmptyWord", domain);
  py::register_exception<SyntaxError>(m, "SyntaxError", domain);
  py::register_exception<NotHyperbolic>(m, "NotHyperbolic", domain);
  py::register_exception<NonpositiveModulus>(m, "NonpositiveModulus", domain);
  py::register_exception<InvalidCover>(m, "InvalidCover", domain);
  py::register_exception<PointInPuncture>(m, "PointInPuncture", domain);
  py::register_exception<InvalidParams>(m, "InvalidParams", domain);

  py::class_<CyclicWord>(m, "CyclicWord")
      .def_static("from_spelling", &CyclicWord::from_spelling, py::arg("letters"))
      .def_static(
          "from_syllables",
          [](const std::vector<std::pair<Exponent, Exponent>>& pairs) {
            std::vector<Syllable> syllables;
            for (const auto& [a, b] : pairs) syllables.push_back({a, b});
            return CyclicWord::from_syllables(std::move(syllables));
          },
          py::arg("syllables"))
      .def_property_readonly("syllables",
                             [](const CyclicWord& w) {
                               std::vector<std::pair<Exponent, Exponent>> out;
                               for (const Syllable& s : w.syllables()) out.emplace_back(s.a, s.b);
                               return out;
                             })
      .def_property_readonly("x_count", &CyclicWord::x_count)
      .def_property_readonly("y_count", &CyclicWord::y_count)
      .def_property_readonly("length", &CyclicWord::length)
      .def_property_readonly("trip", &CyclicWord::trip)
      .def_property_readonly("has_both_letters", &CyclicWord::has_both_letters)
      .def("spell", &CyclicWord::spell)
      .def("__str__", &CyclicWord::str)
      .def("__repr__", [](const CyclicWord& w) { return "CyclicWord('" + w.str() + "')"; })
      .def(py::self == py::self)
      .def("__hash__", [](const CyclicWord& w) { return py::hash(py::str(w.spell())); });

  m.def("parse_word", &parse_word, py::arg("text"));
  m.def("canonicalize", &modknot::canonicalize, py::arg("word"));
  m.def("is_primitive", &is_primitive, py::arg("word"));
  m.def("enumerate_primitive", &enumerate_primitive, py::arg("max_length"),
        py::arg("require_both_letters") = true);

  py::class_<Psl2Element>(m, "Psl2Element")
      .def(py::init<Integer, Integer, Integer, Integer>(), py::arg("a"), py::arg("b"),
           py::arg("c"), py::arg("d"))
      .def_property_readonly("a", &Psl2Element::a)
      .def_property_readonly("b", &Psl2Element::b)
      .def_property_readonly("c", &Psl2Element::c)
      .def_property_readonly("d", &Psl2Element::d)
      .def("trace", &Psl2Element::trace)
      .def("inverse", &Psl2Element::inverse)
      .def("__mul__", &multiply)
      .def("__pow__", [](const Psl2Element& e, long long k) { return power(e, k); })
      .def("__str__", &Psl2Element::str)
      .def("__repr__", [](const Psl2Element& e) { return "Psl2Element(" + e.str() + ")"; })
      .def(py::self == py::self);

  m.def("classify", [](const Psl2Element& e) { return std::string(to_string(classify(e))); },
        py::arg("element"));
  m.def("conjugate", &conjugate, py::arg("element"), py::arg("by"));
  m.def("word_to_matrix", &word_to_matrix, py::arg("word"));
  m.def("matrix_to_word", &matrix_to_word, py::arg("element"));
  m.def("parse_matrix", &parse_matrix, py::arg("text"));

  m.def("rademacher_word", &rademacher_word, py::arg("word"));
  m.def("rademacher_matrix", &rademacher_matrix, py::arg("element"));
  m.def("linking_with_trefoil", &linking_with_trefoil, py::arg("word"));
  m.def(
      "dedekind_sum",
      [](const Integer& h, const Integer& k) { return to_fraction(dedekind_sum(h, k)); },
      py::arg("h"), py::arg("k"));
  m.attr("RADEMACHER_ORIENTATION") = kRademacherOrientation;

  m.def("monodromy_orbit_length",
        [](const std::string& kind, int index) {
          static const std::vector<std::pair<std::string, FeatureKind>> kinds = {
              {"zero_disk", FeatureKind::ZeroDisk},   {"infinity_disk", FeatureKind::InfinityDisk},
              {"band", FeatureKind::Band},           {"edge", FeatureKind::EdgeClass},
              {"vertex", FeatureKind::VertexClass},  {"generic", FeatureKind::GenericPoint}};
          for (const auto& [name, k] : kinds) {
            if (name == kind) return orbit_length(SurfaceFeature{k, index});
          }
          throw InvalidParams("unknown feature kind: " + kind);
        },
        py::arg("kind"), py::arg("index") = 0);
  m.def(
      "rotate_point",
      [](double x, double y, long long k, double radius) {
        const Point2 p = rotate_point({x, y}, k, radius);
        return std::make_pair(p.x, p.y);
      },
      py::arg("x"), py::arg("y"), py::arg("k"), py::arg("puncture_radius") = kDefaultPunctureRadius);

  py::class_<LiftResult>(m, "LiftResult")
      .def_property_readonly("n", [](const LiftResult& r) { return r.n.value(); })
      .def_readonly("d", &LiftResult::d)
      .def_readonly("component_count", &LiftResult::component_count)
      .def_readonly("components", &LiftResult::components)
      .def_readonly("degree", &LiftResult::degree);

  m.def("floor_displacement", &floor_displacement, py::arg("word"));
  m.def("angle_difference", [](std::int64_t d, std::uint64_t n) { return angle_difference(d, cover(n)); },
        py::arg("d"), py::arg("n"));
  m.def("lift_component_count",
        [](const CyclicWord& w, std::uint64_t n) { return lift_component_count(w, cover(n)); },
        py::arg("word"), py::arg("n"));
  m.def("simulate_lift",
        [](const CyclicWord& w, std::uint64_t n) { return simulate_lift(w, cover(n)); },
        py::arg("word"), py::arg("n"));
  m.def("commensurable_family",
        [](std::uint64_t n, std::size_t count) { return commensurable_family(cover(n), count); },
        py::arg("n"), py::arg("count"));

  py::class_<HexModelParams>(m, "HexModelParams")
      .def(py::init<>())
      .def_readwrite("circumradius", &HexModelParams::circumradius)
      .def_readwrite("puncture_radius", &HexModelParams::puncture_radius)
      .def_readwrite("floor_height", &HexModelParams::floor_height)
      .def_readwrite("samples_per_floor", &HexModelParams::samples_per_floor);

  m.def(
      "embed_loop",
      [](const CyclicWord& w, std::uint64_t n, const HexModelParams& params) {
        std::vector<std::vector<std::array<double, 3>>> out;
        for (const Polyline3D& p : embed_loop(w, cover(n), params)) out.push_back(p.vertices());
        return out;
      },
      py::arg("word"), py::arg("n"), py::arg("params") = HexModelParams{});
  m.def(
      "scene_json",
      [](const CyclicWord& w, std::uint64_t n, const HexModelParams& params) {
        return scene_to_json(build_scene(w, cover(n), params));
      },
      py::arg("word"), py::arg("n"), py::arg("params") = HexModelParams{});
  m.def(
      "scene_obj",
      [](const CyclicWord& w, std::uint64_t n, const HexModelParams& params) {
        return scene_to_obj(build_scene(w, cover(n), params));
      },
      py::arg("word"), py::arg("n"), py::arg("params") = HexModelParams{});
}
