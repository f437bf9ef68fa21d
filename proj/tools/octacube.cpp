// octacube command-line front end.
// exit codes: 0 ok, 1 usage, 2 parse/validation error, 3 --strict check failure

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "octacube/pipeline.hpp"

using namespace octacube;

namespace {

struct Args {
  std::string input;
  std::string format = "text";
  int max_len = -1;
  std::string export_as;
  bool strict = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const Json& j, const Args& a) {
  std::cout << (a.format == "json" ? dump(j) : render_text(j));
  if (a.strict) {
    auto bad = failed_checks(j);
    if (!bad.empty()) {
      for (auto& b : bad) std::cerr << "strict: failed check " << b << "\n";
      return 3;
    }
  }
  return 0;
}

int run(const std::string& cmd, const Args& a) {
  std::string text = read_file(a.input);
  SurfaceDiagram d = parse_diagram(text);
  PipelineOptions opt;
  opt.max_curve_length = a.max_len;
  bool full = a.format == "json";
  if (cmd == "validate") return emit(diagram_stage(d, opt), a);
  if (cmd == "decompose") return emit(decomposition_stage(d, full), a);
  if (cmd == "cubes") return emit(cubes_stage(d, full), a);
  if (cmd == "npc") return emit(npc_stage(d), a);
  if (cmd == "dehn") return emit(dehn_stage(d), a);
  if (cmd == "triangulate") {
    if (a.export_as.empty()) return emit(triangulation_stage(d), a);
    auto stage = triangulation_stage(d);
    if (stage["status"] != "ok") throw ValidationError("cannot triangulate: " + stage["reason"].get<std::string>());
    std::optional<OctahedralDecomposition> od;
    if (d.orientable)
      od = build_octahedral_decomposition(d, checkerboard_coloring(d));
    else
      od = build_nonorientable_decomposition(d);
    auto t = triangulate(*od);
    std::cout << export_triangulation(t, a.export_as == "tri" ? "gluing-table" : a.export_as);
    if (a.strict && !failed_checks(stage).empty()) return 3;
    return 0;
  }
  if (cmd == "cover") {
    if (d.orientable) throw ValidationError("cover needs a diagram on a nonorientable surface");
    auto stage = cover_stage(d, true);
    if (a.format == "json") return emit(stage, a);
    std::cout << stage["diagram"].get<std::string>();
    if (a.strict && !failed_checks(stage).empty()) return 3;
    return 0;
  }
  // report
  return emit(pipeline_report(d, text, a.input, opt), a);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"octacube: octahedral decompositions, cube complexes and Dehn complexes of link diagrams on surfaces"};
  app.require_subcommand(1);
  Args a;
  if (const char* env = std::getenv("OCTACUBE_MAX_CURVE_LEN")) {
    try {
      a.max_len = std::stoi(env);
    } catch (...) {
      std::cerr << "OCTACUBE_MAX_CURVE_LEN is not an integer\n";
      return 1;
    }
  }
  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"validate", "parse a diagram and print its invariants"},
      {"decompose", "build and validate the octahedral decomposition"},
      {"cubes", "build the cube complex"},
      {"npc", "check the link condition at every vertex"},
      {"dehn", "coned Dehn complex, its link check and group presentation"},
      {"triangulate", "four tetrahedra per octahedron"},
      {"cover", "orientable double cover of a nonorientable diagram"},
      {"report", "full pipeline"}};
  for (auto& [name, help] : cmds) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("input", a.input, "diagram file (surface-diagram v1)")->required();
    sc->add_option("--format", a.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sc->add_option("--max-curve-length", a.max_len, "search bound for representativity")->check(CLI::NonNegativeNumber);
    sc->add_flag("--strict", a.strict, "exit 3 when a mathematical check fails");
    if (name == "triangulate") sc->add_option("--export", a.export_as, "print the triangulation")->check(CLI::IsMember({"tri", "json"}));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, a);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const NotColorable& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  }
}
