#include "modknot/cli.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modknot/cover.hpp"
#include "modknot/errors.hpp"
#include "modknot/geometry.hpp"
#include "modknot/psl2.hpp"
#include "modknot/rademacher.hpp"
#include "modknot/word.hpp"

namespace modknot::cli {
namespace {

using nlohmann::json;

// A malformed argument value; reported with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CyclicWord word_argument(const std::string& text) {
  try {
    return parse_word(text);
  } catch (const SyntaxError& e) {
    throw UsageError(std::string("--word: ") + e.what());
  } catch (const EmptyWord& e) {
    throw UsageError(std::string("--word: ") + e.what());
  }
}

Psl2Element matrix_argument(const std::string& text) {
  try {
    return parse_matrix(text);
  } catch (const SyntaxError& e) {
    throw UsageError(std::string("--matrix: ") + e.what());
  } catch (const InvalidParams& e) {
    throw UsageError(std::string("--matrix: ") + e.what());
  }
}

json exact(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

json convert_word(const CyclicWord& word) {
  const CyclicWord canonical = canonicalize(word);
  const Psl2Element m = word_to_matrix(canonical);
  return {{"canonical_word", canonical.str()},
          {"classification", std::string(to_string(classify(m)))},
          {"matrix", m.str()},
          {"trace", m.trace().str()}};
}

json convert_matrix(const Psl2Element& m) {
  const CyclicWord word = matrix_to_word(m);
  return {{"canonical_word", word.str()},
          {"classification", std::string(to_string(classify(m)))},
          {"matrix", m.str()},
          {"trace", m.trace().str()},
          {"word_matrix", word_to_matrix(word).str()}};
}

json invariants(const CyclicWord& word) {
  const CyclicWord canonical = canonicalize(word);
  const Psl2Element m = word_to_matrix(canonical);
  const bool hyperbolic = classify(m) == Classification::Hyperbolic;
  return {{"word", canonical.str()},
          {"length", canonical.length()},
          {"x_count", canonical.x_count()},
          {"y_count", canonical.y_count()},
          {"trip", canonical.trip()},
          {"primitive", is_primitive(canonical)},
          {"trace", m.trace().str()},
          {"classification", std::string(to_string(classify(m)))},
          {"rademacher_word", rademacher_word(canonical)},
          {"rademacher_matrix", hyperbolic ? exact(rademacher_matrix(m)) : json(nullptr)},
          {"rademacher_orientation", kRademacherOrientation},
          {"linking_with_trefoil", linking_with_trefoil(canonical)}};
}

json lift(const CyclicWord& word, CoverIndex n) {
  const std::int64_t d = floor_displacement(word);
  const std::uint64_t components = lift_component_count(word, n);
  return {{"word", canonicalize(word).str()},
          {"n", n.value()},
          {"d", d},
          {"residue", floor_residue(d, n)},
          {"components", components},
          {"degree", n.value() / components},
          {"angle_sixths", angle_sixths(d, n)},
          {"angle_radians", angle_difference(d, n)},
          {"copy_closes", floor_residue(d, n) == 0}};
}

json simulate(const CyclicWord& word, CoverIndex n) {
  const LiftResult result = simulate_lift(word, n);
  const std::uint64_t formula = lift_component_count(word, n);
  return {{"word", canonicalize(word).str()},
          {"n", n.value()},
          {"d", result.d},
          {"component_count", result.component_count},
          {"degree", result.degree},
          {"components", result.components},
          {"formula_components", formula},
          {"agrees", formula == result.component_count}};
}

json enumerate(std::size_t max_length, bool include_pure) {
  json rows = json::array();
  for (const CyclicWord& word : enumerate_primitive(max_length, !include_pure)) {
    rows.push_back({{"word", word.str()},
                    {"length", word.length()},
                    {"x_count", word.x_count()},
                    {"y_count", word.y_count()},
                    {"trip", word.trip()},
                    {"rademacher", rademacher_word(word)},
                    {"trace", word_to_matrix(word).trace().str()}});
  }
  return {{"max_length", max_length}, {"count", rows.size()}, {"words", rows}};
}

json commensurable(CoverIndex n, std::size_t count) {
  json rows = json::array();
  for (const CyclicWord& word : commensurable_family(n, count)) {
    const LiftResult result = simulate_lift(word, n);
    rows.push_back({{"word", word.str()},
                    {"d", result.d},
                    {"components", result.component_count},
                    {"degree", result.degree}});
  }
  return {{"n", n.value()}, {"count", rows.size()}, {"family", rows}};
}

json export_scene(const CyclicWord& word, CoverIndex n, const std::string& path) {
  const Scene scene = build_scene(word, n);
  const bool obj = path.size() >= 4 && path.compare(path.size() - 4, 4, ".obj") == 0;
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw UsageError("--out: cannot open " + path);
  }
  file << (obj ? scene_to_obj(scene) : scene_to_json(scene));
  if (!file) {
    throw DomainError("failed writing " + path);
  }
  return {{"path", path},
          {"scene_format", obj ? "obj" : "json"},
          {"n", n.value()},
          {"components", lift_component_count(word, n)},
          {"polylines", scene.polylines.size()},
          {"frames", scene.frames.size()}};
}

std::string scalar_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "-";
  return value.dump();
}

std::string inline_text(const json& value) {
  if (!value.is_array()) return scalar_text(value);
  std::string out;
  for (const json& item : value) {
    if (!out.empty()) out += ' ';
    out += item.is_array() ? "(" + inline_text(item) + ")" : scalar_text(item);
  }
  return out;
}

void render_text(const json& report, std::ostream& out) {
  for (const auto& [key, value] : report.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ":\n";
      for (const json& row : value) {
        out << ' ';
        for (const auto& [column, cell] : row.items()) {
          out << ' ' << column << '=' << scalar_text(cell);
        }
        out << '\n';
      }
      continue;
    }
    out << key << ": " << inline_text(value) << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial invariants of modular knots and their lifts to cyclic covers "
               "of the trefoil complement",
               "modknot"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string word_text;
  std::string matrix_text;
  std::uint64_t n_value = 7;
  std::size_t max_length = 8;
  std::size_t count = 10;
  std::string out_path;
  bool include_pure = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* convert = app.add_subcommand("convert", "Word <-> matrix conversion");
  CLI::Option_group* source = convert->add_option_group("source");
  auto* word_opt = source->add_option("--word", word_text, "Cyclic word, e.g. \"x^2 y\"");
  source->add_option("--matrix", matrix_text, "Matrix \"a,b;c,d\"");
  source->require_option(1);
  add_format(convert);

  CLI::App* inv = app.add_subcommand("invariants", "Length, counts, Rademacher, linking number");
  inv->add_option("--word", word_text, "Cyclic word")->required();
  add_format(inv);

  CLI::App* lift_cmd = app.add_subcommand("lift", "Component count of the lift to H_n");
  lift_cmd->add_option("--word", word_text, "Cyclic word")->required();
  lift_cmd->add_option("--n", n_value, "Cover index (1 or 6k+1)")->required();
  add_format(lift_cmd);

  CLI::App* sim = app.add_subcommand("simulate", "Cycle decomposition of the copy permutation");
  sim->add_option("--word", word_text, "Cyclic word")->required();
  sim->add_option("--n", n_value, "Cover index (1 or 6k+1)")->required();
  add_format(sim);

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "Primitive words with invariants");
  enumerate_cmd->add_option("--max-length", max_length, "Largest word length")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{24}));
  enumerate_cmd->add_flag("--include-pure", include_pure, "Also list the words x and y");
  add_format(enumerate_cmd);

  CLI::App* comm = app.add_subcommand("commensurable", "Words lifting to knots in H_n");
  comm->add_option("--n", n_value, "Cover index (6k+1, at least 7)")->required();
  comm->add_option("--count", count, "Family size")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  add_format(comm);

  CLI::App* exp = app.add_subcommand("export", "Write the scene as JSON or OBJ (by extension)");
  exp->add_option("--word", word_text, "Cyclic word")->required();
  exp->add_option("--n", n_value, "Cover index (1 or 6k+1)")->required();
  exp->add_option("--out", out_path, "Output path; .obj selects OBJ, anything else JSON")
      ->required();
  add_format(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    json report;
    if (convert->parsed()) {
      report = word_opt->count() > 0 ? convert_word(word_argument(word_text))
                                     : convert_matrix(matrix_argument(matrix_text));
    } else if (inv->parsed()) {
      report = invariants(word_argument(word_text));
    } else if (lift_cmd->parsed()) {
      report = lift(word_argument(word_text), CoverIndex(n_value));
    } else if (sim->parsed()) {
      report = simulate(word_argument(word_text), CoverIndex(n_value));
    } else if (enumerate_cmd->parsed()) {
      report = enumerate(max_length, include_pure);
    } else if (comm->parsed()) {
      report = commensurable(CoverIndex(n_value), count);
    } else if (exp->parsed()) {
      report = export_scene(word_argument(word_text), CoverIndex(n_value), out_path);
    }
    if (format == "json") {
      out << report.dump(2) << '\n';
    } else {
      render_text(report, out);
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace modknot::cli
