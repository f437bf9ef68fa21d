#include "octacube/pipeline.hpp"

#include <cstdint>
#include <cstdio>
#include <map>

namespace octacube {

namespace {
Json skipped(const std::string& why) { return Json{{"status", "skipped"}, {"reason", why}}; }
Json ok() { return Json{{"status", "ok"}}; }

// orientable surfaces use the colored builder, as the decomposition needs it there
std::optional<OctahedralDecomposition> decomposition_for(const SurfaceDiagram& d, std::string& why) {
  if (d.orientable) {
    auto col = try_checkerboard_coloring(d);
    if (!col) {
      why = "diagram is not checkerboard colorable";
      return std::nullopt;
    }
    return build_octahedral_decomposition(d, *col);
  }
  return build_nonorientable_decomposition(d);
}

std::optional<CubeComplex> cubes_for(const SurfaceDiagram& d, std::string& why) {
  auto od = decomposition_for(d, why);
  if (!od) return std::nullopt;
  if (!try_checkerboard_coloring(d)) {
    why = "diagram is not checkerboard colorable";
    return std::nullopt;
  }
  return cube_complex_from_octahedra(*od);
}

const char* class_key(VertexClass c) { return vertex_class_name(c); }
}  // namespace

std::string input_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json representativity_value(const Representativity& r) {
  switch (r.kind) {
    case Representativity::Value:
      return r.value;
    case Representativity::NoEssentialCurve:
      return "no-essential-curve";
    case Representativity::AboveBound:
      return "above-bound";
  }
  return nullptr;
}

Json diagram_stage(const SurfaceDiagram& d, const PipelineOptions& opt) {
  Json j = ok();
  j["crossings"] = d.c();
  j["edges"] = d.num_edges();
  j["regions"] = d.num_regions();
  j["chi"] = d.chi;
  j["orientable"] = d.orientable;
  j[d.orientable ? "genus" : "crosscaps"] = d.genus_or_crosscap();
  j["components"] = d.num_components();
  j["alternating"] = is_alternating(d);
  j["reduced"] = is_reduced(d);
  auto wp = weak_primeness(d);
  j["weakly_prime"] = wp.weakly_prime;
  if (!wp.weakly_prime) j["weak_prime_witness_edges"] = wp.witness_edges;
  j["checkerboard_colorable"] = try_checkerboard_coloring(d).has_value();
  int ml = opt.max_curve_length >= 0 ? opt.max_curve_length : default_max_curve_length(d);
  auto rep = edge_representativity(d, ml);
  j["representativity"] = representativity_value(rep);
  j["max_curve_length"] = ml;
  auto dual = dual_graph(d);
  j["dual_graph"] = {{"vertices", dual.num_vertices}, {"edges", dual.edges.size()}};
  return j;
}

Json decomposition_stage(const SurfaceDiagram& d, bool full) {
  std::string why;
  std::optional<OctahedralDecomposition> od;
  try {
    od = decomposition_for(d, why);
  } catch (const std::exception& e) {
    return skipped(e.what());
  }
  if (!od) return skipped(why);
  Json j = ok();
  auto v = validate_decomposition(*od);
  j["octahedra"] = od->c();
  j["triangular_faces"] = 8 * od->c();
  j["gluing_pairs"] = od->gluings.size();
  j["checks"] = {{"valid", v.ok}};
  j["failures"] = v.failures;
  if (full) j["decomposition"] = to_json(*od);
  return j;
}

Json cubes_stage(const SurfaceDiagram& d, bool full) {
  std::string why;
  auto cc = cubes_for(d, why);
  if (!cc) return skipped(why);
  Json j = ok();
  j["cubes"] = cc->num_cubes;
  j["cells"] = cc->count;
  std::map<std::string, int> per;
  for (auto c : cc->vertex_class) per[class_key(c)]++;
  Json pc;
  for (auto c : {VertexClass::PPlus, VertexClass::PMinus, VertexClass::PZero, VertexClass::PMid}) pc[class_key(c)] = per[class_key(c)];
  j["vertex_classes"] = pc;
  j["homology"] = to_json(homology(*cc));
  j["hyperplanes"] = to_json(hyperplanes(*cc));
  j["defects"] = cc->defects;
  auto dbl = double_complex(*cc);
  j["double"] = {{"cubes", dbl.num_cubes}, {"npc", check_npc(dbl).flag() ? "flag" : "not-flag"}, {"defects", dbl.defects.size()}};
  j["checks"] = {{"defect_free", cc->defects.empty()}};
  if (full) j["complex"] = cube_complex_json(*cc);
  return j;
}

Json npc_stage(const SurfaceDiagram& d) {
  std::string why;
  auto cc = cubes_for(d, why);
  if (!cc) return skipped(why);
  auto npc = check_npc(*cc);
  Json j = ok();
  auto r = to_json(npc);
  j["overall"] = r["overall"];
  j["vertices"] = r["vertices"];
  std::map<std::string, int> st;
  for (auto& e : essential_edges_certificate(*cc, npc)) st[e.status]++;
  Json es;
  for (auto& [k, v] : st) es[k] = v;
  j["edge_certificates"] = es;
  j["checks"] = {{"flag", npc.flag()}};
  return j;
}

Json dehn_stage(const SurfaceDiagram& d) {
  auto col = try_checkerboard_coloring(d);
  if (!col) return skipped("diagram is not checkerboard colorable");
  auto dc = coned_dehn_complex(d, *col);
  auto v = dehn_npc_check(dc);
  auto p = group_presentation(dc);
  Json j = ok();
  j["vertices"] = dc.num_vertices;
  j["edges"] = dc.edges.size();
  j["squares"] = dc.squares.size();
  j["npc"] = v.npc;
  j["witnesses"] = v.witnesses;
  j["presentation"] = to_json(p);
  j["abelianization"] = to_json(abelianization(p));
  j["checks"] = {{"npc", v.npc}};
  return j;
}

Json triangulation_stage(const SurfaceDiagram& d) {
  std::string why;
  std::optional<OctahedralDecomposition> od;
  try {
    od = decomposition_for(d, why);
  } catch (const std::exception& e) {
    return skipped(e.what());
  }
  if (!od) return skipped(why);
  auto t = triangulate(*od);
  auto v = validate_triangulation(t);
  Json j = ok();
  j["tetrahedra"] = t.size();
  j["edge_classes"] = t.num_edge_classes;
  auto bp = region_bipyramids(t, d);
  Json sizes = Json::array();
  bool bip_ok = true;
  int total = 0;
  for (auto& r : d.regions) {
    int n = static_cast<int>(bp[r.id].size());
    sizes.push_back(n);
    total += n;
    if (n != r.degree()) bip_ok = false;
  }
  if (total != t.size()) bip_ok = false;
  j["bipyramid_sizes"] = sizes;
  j["homology"] = to_json(homology(t));
  std::string other = "undetermined";
  if (auto col = try_checkerboard_coloring(d)) {
    auto cc = cube_complex_from_octahedra(*od);
    if (check_npc(cc).flag()) other = "essential (NPC certificate)";
  }
  j["edge_status"] = {{"crossing_arcs", "asserted essential, not machine-verified"}, {"other_edges", other}};
  j["checks"] = {{"valid", v.ok}, {"bipyramids", bip_ok}};
  j["failures"] = v.failures;
  return j;
}

Json homology_stage(const SurfaceDiagram& d) {
  std::string why;
  std::optional<OctahedralDecomposition> od;
  try {
    od = decomposition_for(d, why);
  } catch (const std::exception& e) {
    return skipped(e.what());
  }
  if (!od) return skipped(why);
  Json j = ok();
  auto ht = homology(triangulate(*od)).H(1);
  j["triangulation_h1"] = ht.to_string();
  bool agree = true;
  if (auto col = try_checkerboard_coloring(d)) {
    auto hc = homology(cube_complex_from_octahedra(*od)).H(1);
    auto hd = abelianization(group_presentation(coned_dehn_complex(d, *col)));
    j["cube_h1"] = hc.to_string();
    j["dehn_h1"] = hd.to_string();
    agree = hc == ht && hd == ht;
  }
  j["checks"] = {{"h1_agree", agree}};
  return j;
}

Json cover_stage(const SurfaceDiagram& d, bool full) {
  if (d.orientable) return skipped("surface is orientable");
  auto cm = orientable_double_cover(d);
  auto v = validate_cover(cm);
  Json j = ok();
  j["crossings"] = cm.cover.c();
  j["chi"] = cm.cover.chi;
  j["orientable"] = cm.cover.orientable;
  j["regions"] = cm.cover.num_regions();
  j["failures"] = v.failures;
  bool proj = false, vd = false, vt = false;
  try {
    auto ld = lift_decomposition(cm);
    proj = ld.projection.ok;
    vd = validate_decomposition(ld.cover).ok;
    vt = validate_triangulation(triangulate(ld.cover)).ok;
    for (auto& f : ld.projection.failures) j["failures"].push_back(f);
    if (cm.lifted_coloring) {
      auto bc = cube_complex_from_octahedra(ld.base), cc = cube_complex_from_octahedra(ld.cover);
      auto p = project_cubes(cc, bc, ld);
      auto t = npc_transfer(check_npc(cc), p, check_npc(bc));
      j["npc_transfer"] = {{"cover_flag", t.cover_flag},
                           {"projection_injective_on_links", t.injective},
                           {"base_flag", t.base_flag},
                           {"basis", t.basis},
                           {"scope", "link-level check only; the metric CAT(0) statement is not asserted"}};
    }
  } catch (const std::exception& e) {
    j["failures"].push_back(e.what());
  }
  j["checks"] = {{"cover_valid", v.ok}, {"projection", proj}, {"lifted_decomposition_valid", vd}, {"lifted_triangulation_valid", vt}};
  if (full) {
    j["diagram"] = write_diagram(cm.cover);
    j["correspondence"] = cover_json(cm);
  }
  return j;
}

Json pipeline_report(const SurfaceDiagram& d, const std::string& input_text, const std::string& input_name,
                     const PipelineOptions& opt) {
  Json j;
  j["tool"] = {{"name", "octacube"}, {"version", kToolVersion}};
  j["input"] = {{"name", input_name}, {"digest", input_digest(input_text)}};
  j["diagram"] = diagram_stage(d, opt);
  j["representativity"] = j["diagram"]["representativity"];
  j["decomposition"] = decomposition_stage(d, false);
  j["cubes"] = cubes_stage(d, false);
  j["npc"] = npc_stage(d);
  j["dehn"] = dehn_stage(d);
  j["triangulation"] = triangulation_stage(d);
  j["homology"] = homology_stage(d);
  j["cover"] = cover_stage(d, false);
  return j;
}

std::vector<std::string> failed_checks(const Json& j) {
  std::vector<std::string> out;
  auto scan = [&](const std::string& prefix, const Json& s) {
    if (!s.is_object() || !s.contains("checks")) return;
    for (auto& [k, v] : s["checks"].items())
      if (v.is_boolean() && !v.get<bool>()) out.push_back(prefix + k);
  };
  scan("", j);
  for (auto& [k, v] : j.items()) scan(k + ".", v);
  return out;
}

namespace {
void flatten(const std::string& path, const Json& j, std::string& out) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) flatten(path.empty() ? k : path + "." + k, v, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    for (size_t i = 0; i < j.size(); ++i) flatten(path + "[" + std::to_string(i) + "]", j[i], out);
  } else {
    out += path + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}
}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  flatten("", j, out);
  return out;
}

}  // namespace octacube
