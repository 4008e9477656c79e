#include "modknot/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <utility>

#include "modknot/errors.hpp"

namespace modknot {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kArcSamples = 8;
// Angular half-width of a branchline arc's lobe, in sixth-turns.
constexpr double kArcSwing = 1.0 / 6.0;
constexpr int kOutlineSamples = 48;

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) {
    --q;
  }
  return q;
}

std::int64_t positive_mod(std::int64_t value, std::int64_t modulus) {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

// Traces a lifted orbit through the universal cover of the tower and folds
// it into tower coordinates.
//
// Positions are kept as exact integers in units of 1/S of a floor (heights)
// and 1/S of a sixth-turn (angles), S = samples per floor. Universal point
// (level, turn) in fold q maps to tower point (level - q n, turn - q): going
// once around the tower adds one sixth-turn, which is the gluing by phi.
class PathTracer {
 public:
  PathTracer(CoverIndex n, const HexModelParams& params, std::int64_t start_level)
      : n_(static_cast<std::int64_t>(n.value())),
        params_(params),
        samples_(params.samples_per_floor),
        level_(start_level * samples_),
        turn_(start_level * samples_) {}

  void trace(const CyclicWord& word) {
    auto run = [this](Letter letter, Exponent count) {
      for (Exponent i = 0; i < count; ++i) {
        step(letter);
      }
    };
    if (const auto& pure = word.pure_power()) {
      run(pure->letter, pure->exponent);
      return;
    }
    for (const Syllable& s : word.syllables()) {
      run(Letter::X, s.a);
      run(Letter::Y, s.b);
    }
  }

  // Closes the curve by restating the first vertex in its own fold.
  void close() {
    if (vertices_.back() != vertices_.front()) {
      vertices_.push_back(vertices_.front());
    }
  }

  std::vector<Vec3> take() { return std::move(vertices_); }

 private:
  void step(Letter letter) {
    const std::int64_t dir = letter == Letter::X ? -kFloorsPerX : kFloorsPerX;
    const std::int64_t floor_index = floor_div(level_, samples_) + (dir < 0 ? -1 : 0);
    const std::int64_t fold = floor_div(floor_index, n_);
    for (std::int64_t j = 0; j <= samples_; ++j) {
      emit(point(params_.puncture_radius, level_ + dir * j, turn_ + dir * j, fold, 0.0), fold);
    }
    level_ += dir * samples_;
    turn_ += dir * samples_;
    // Branchline crossing: a horizontal lobe out towards the hexagon and back.
    const double rim = params_.branchline_radius();
    for (int j = 1; j <= kArcSamples; ++j) {
      if (j == kArcSamples) {
        emit(point(params_.puncture_radius, level_, turn_, fold, 0.0), fold);
        break;
      }
      const double s = static_cast<double>(j) / kArcSamples;
      const double radius = params_.puncture_radius + (rim - params_.puncture_radius) * std::sin(kPi * s);
      emit(point(radius, level_, turn_, fold, kArcSwing * std::sin(2.0 * kPi * s)), fold);
    }
  }

  Vec3 point(double radius, std::int64_t level, std::int64_t turn, std::int64_t fold,
             double swing) const {
    const std::int64_t local_level = level - fold * n_ * samples_;
    const std::int64_t local_turn = positive_mod(turn - fold * samples_, 6 * samples_);
    const double angle = (static_cast<double>(local_turn) / samples_ + swing) * (kPi / 3.0);
    return {radius * std::cos(angle), radius * std::sin(angle),
            static_cast<double>(local_level) * params_.floor_height / samples_};
  }

  void emit(const Vec3& v, std::int64_t fold) {
    if (!vertices_.empty() && fold == fold_ && v == vertices_.back()) {
      return;
    }
    vertices_.push_back(v);
    fold_ = fold;
  }

  std::int64_t n_;
  const HexModelParams& params_;
  std::int64_t samples_;
  std::int64_t level_;
  std::int64_t turn_;
  std::int64_t fold_ = 0;
  std::vector<Vec3> vertices_;
};

// Copy i starts on floor level n + 1 - i, so copy i ends where copy
// [i + d]_n starts.
std::int64_t start_level(CoverIndex n, std::uint64_t copy) {
  return static_cast<std::int64_t>(n.value()) + 1 - static_cast<std::int64_t>(copy);
}

double distance(const Vec3& a, const Vec3& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

void append_number(std::string& out, double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  out += buffer;
}

void append_string(std::string& out, const std::string& value) {
  out += '"';
  for (char c : value) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  out += '"';
}

void append_points(std::string& out, const std::vector<Vec3>& points) {
  out += '[';
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (std::size_t k = 0; k < 3; ++k) {
      if (k > 0) out += ',';
      append_number(out, points[i][k]);
    }
    out += ']';
  }
  out += ']';
}

}  // namespace

double HexModelParams::inradius() const { return circumradius * std::numbers::sqrt3 / 2.0; }

double HexModelParams::branchline_radius() const { return 0.5 * (puncture_radius + inradius()); }

void HexModelParams::validate() const {
  if (!(circumradius > 0.0)) {
    throw InvalidParams("circumradius must be positive");
  }
  if (!(puncture_radius > 0.0) || !(puncture_radius < inradius())) {
    throw InvalidParams("puncture_radius must lie strictly between 0 and the hexagon inradius");
  }
  if (!(floor_height > 0.0)) {
    throw InvalidParams("floor_height must be positive");
  }
  if (samples_per_floor < 1) {
    throw InvalidParams("samples_per_floor must be at least 1");
  }
}

Polyline3D::Polyline3D(std::vector<Vec3> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  if (vertices_.size() < 2) {
    throw InvalidParams("a polyline needs at least two vertices");
  }
  if (closed_ && distance(vertices_.front(), vertices_.back()) > kClosureTolerance) {
    throw InvalidParams("closed polyline endpoints differ");
  }
}

Scene scaffold(CoverIndex n, const HexModelParams& params) {
  params.validate();
  Scene scene;
  scene.n = n.value();
  scene.params = params;
  const double h = params.floor_height;
  for (std::uint64_t floor = 0; floor < n.value(); ++floor) {
    const double bottom = static_cast<double>(floor) * h;
    std::vector<Vec3> frame;
    frame.reserve(12);
    for (double z : {bottom, bottom + h}) {
      for (int k = 0; k < 6; ++k) {
        const double angle = k * kPi / 3.0;
        frame.push_back({params.circumradius * std::cos(angle),
                         params.circumradius * std::sin(angle), z});
      }
    }
    scene.frames.push_back(std::move(frame));

    std::vector<Vec3> outline;
    for (int k = 0; k < kOutlineSamples; ++k) {
      const double angle = 2.0 * kPi * k / kOutlineSamples;
      outline.push_back({params.puncture_radius * std::cos(angle),
                         params.puncture_radius * std::sin(angle), bottom});
    }
    outline.push_back(outline.front());
    scene.polylines.push_back(
        {"puncture floor " + std::to_string(floor), Polyline3D(std::move(outline), true)});
  }
  return scene;
}

std::vector<Polyline3D> embed_loop(const CyclicWord& word, CoverIndex n,
                                   const HexModelParams& params) {
  params.validate();
  const LiftResult lift = simulate_lift(word, n);
  std::vector<Polyline3D> curves;
  curves.reserve(lift.components.size());
  for (const auto& component : lift.components) {
    PathTracer tracer(n, params, start_level(n, component.front()));
    for (std::size_t i = 0; i < component.size(); ++i) {
      tracer.trace(word);
    }
    tracer.close();
    curves.emplace_back(tracer.take(), true);
  }
  return curves;
}

Polyline3D copy_path(const CyclicWord& word, CoverIndex n, std::uint64_t copy,
                     const HexModelParams& params) {
  params.validate();
  if (copy < 1 || copy > n.value()) {
    throw InvalidParams("copy index must lie in 1..n");
  }
  PathTracer tracer(n, params, start_level(n, copy));
  tracer.trace(word);
  return Polyline3D(tracer.take(), false);
}

double swept_angle(const Polyline3D& path) {
  auto on_top = [&](const Vec3& v) {
    Point2 p{v[0], v[1]};
    if (std::abs(v[2]) <= kClosureTolerance) {
      p = rotate_point(p, 1, 0.0);
    }
    return p;
  };
  const Point2 first = on_top(path.vertices().front());
  const Point2 last = on_top(path.vertices().back());
  double angle = std::atan2(first.y, first.x) - std::atan2(last.y, last.x);
  angle = std::fmod(angle, 2.0 * kPi);
  if (angle < 0) {
    angle += 2.0 * kPi;
  }
  if (angle > 2.0 * kPi - 1e-12) {
    angle = 0.0;
  }
  return angle;
}

bool closure_check(const Polyline3D& path, double tol) {
  return distance(path.vertices().front(), path.vertices().back()) <= tol;
}

Scene build_scene(const CyclicWord& word, CoverIndex n, const HexModelParams& params) {
  Scene scene = scaffold(n, params);
  const LiftResult lift = simulate_lift(word, n);
  std::vector<Polyline3D> curves = embed_loop(word, n, params);
  for (std::size_t c = 0; c < curves.size(); ++c) {
    std::string label = "component " + std::to_string(c + 1) + ": copies";
    for (std::uint64_t copy : lift.components[c]) {
      label += ' ' + std::to_string(copy);
    }
    scene.polylines.push_back({std::move(label), std::move(curves[c])});
  }
  return scene;
}

std::string scene_to_json(const Scene& scene) {
  std::string out = "{\"frames\":[";
  for (std::size_t i = 0; i < scene.frames.size(); ++i) {
    if (i > 0) out += ',';
    append_points(out, scene.frames[i]);
  }
  out += "],\"n\":" + std::to_string(scene.n) + ",\"params\":{\"circumradius\":";
  append_number(out, scene.params.circumradius);
  out += ",\"floor_height\":";
  append_number(out, scene.params.floor_height);
  out += ",\"puncture_radius\":";
  append_number(out, scene.params.puncture_radius);
  out += ",\"samples_per_floor\":" + std::to_string(scene.params.samples_per_floor);
  out += "},\"polylines\":[";
  for (std::size_t i = 0; i < scene.polylines.size(); ++i) {
    const LabeledPolyline& item = scene.polylines[i];
    if (i > 0) out += ',';
    out += "{\"closed\":";
    out += item.polyline.closed() ? "true" : "false";
    out += ",\"label\":";
    append_string(out, item.label);
    out += ",\"vertices\":";
    append_points(out, item.polyline.vertices());
    out += '}';
  }
  out += "]}\n";
  return out;
}

std::string scene_to_obj(const Scene& scene) {
  std::ostringstream out;
  out.precision(17);
  out << "# modknot scene, n = " << scene.n << '\n';
  std::size_t next_index = 1;
  for (const LabeledPolyline& item : scene.polylines) {
    std::string name = item.label;
    for (char& c : name) {
      if (c == ' ' || c == ':') c = '_';
    }
    out << "o " << name << '\n';
    const auto& vertices = item.polyline.vertices();
    for (const Vec3& v : vertices) {
      out << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
    }
    out << 'l';
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      out << ' ' << next_index + i;
    }
    out << '\n';
    next_index += vertices.size();
  }
  return out.str();
}

}  // namespace modknot
