// One PASS/FAIL line per acceptance criterion. Exit status 1 when any fails.
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "corpus.hpp"
#include "octacube/pipeline.hpp"
#include "oracles.hpp"

using namespace octacube;

namespace {

struct Result {
  std::vector<std::string> errors;
  std::string summary;
  void check(bool ok, const std::string& what) {
    if (!ok) errors.push_back(what);
  }
};

OctahedralDecomposition decompose(const SurfaceDiagram& d) {
  if (d.orientable) return build_octahedral_decomposition(d, checkerboard_coloring(d));
  return build_nonorientable_decomposition(d);
}

std::vector<corpus::Entry> colorable_corpus() {
  std::vector<corpus::Entry> v;
  for (auto& n : corpus::named_examples()) {
    auto d = corpus::load(n);
    if (try_checkerboard_coloring(d)) v.push_back({n, d});
  }
  for (auto& e : corpus::generated()) v.push_back(e);
  return v;
}

Result criterion1() {
  Result r;
  std::vector<corpus::Entry> items;
  for (std::string n : {"figure_eight", "torus_link2", "square_weave", "klein_2_6"}) items.push_back({n, corpus::load(n)});
  items.push_back({"klein_2_6 cover", orientable_double_cover(corpus::load("klein_2_6")).cover});
  for (auto& [n, d] : items) {
    int c = d.c();
    r.check(d.num_regions() == c + d.chi, n + ": regions != c + chi");
    auto od = decompose(d);
    r.check(od.c() == c, n + ": octahedra != c");
    r.check(static_cast<int>(od.gluings.size()) == 4 * c && validate_decomposition(od).ok, n + ": faces not 8c in 4c pairs");
    auto cc = cube_complex_from_octahedra(od);
    r.check(cc.num_cubes == 4 * c && cc.cubes() == 4 * c, n + ": cubes != 4c");
    r.check(triangulate(od).size() == 4 * c, n + ": tetrahedra != 4c");
    auto dc = coned_dehn_complex(d, checkerboard_coloring(d));
    r.check(static_cast<int>(dc.squares.size()) == c, n + ": Dehn squares != c");
    r.check(static_cast<int>(dc.edges.size()) == c + d.chi, n + ": Dehn edges != c + chi");
  }
  // the genuine virtual trefoil is not colorable: only the counts that do not need a coloring
  auto vt = corpus::load("virtual_trefoil");
  auto vod = build_decomposition_any(vt, std::nullopt);
  r.check(vt.num_regions() == vt.c() + vt.chi, "virtual_trefoil: regions != c + chi");
  r.check(vod.c() == vt.c() && static_cast<int>(vod.gluings.size()) == 4 * vt.c(), "virtual_trefoil: octahedra/faces");
  r.check(triangulate(vod).size() == 4 * vt.c(), "virtual_trefoil: tetrahedra != 4c");
  r.summary = std::to_string(items.size()) + " colorable diagrams, virtual trefoil partial";
  return r;
}

Result criterion2() {
  Result r;
  auto t0 = std::chrono::steady_clock::now();
  auto& gen = corpus::generated();
  r.check(gen.size() >= 20, "generated corpus has only " + std::to_string(gen.size()) + " diagrams");
  int genus2 = 0;
  for (auto& [n, d] : gen) {
    if (d.chi == -2) ++genus2;
    auto cc = cube_complex_from_octahedra(decompose(d));
    auto npc = check_npc(cc);
    for (auto& e : npc.per_vertex)
      r.check(e.verdict.flag(), n + ": vertex " + std::to_string(e.vertex) + " " + e.verdict.witness);
    for (auto& e : essential_edges_certificate(cc, npc))
      r.check(e.status == "essential (NPC certificate)", n + ": edge " + std::to_string(e.edge) + " " + e.status);
  }
  r.check(genus2 > 0, "no genus-2 diagram in the corpus");
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.check(s < 60, "took " + std::to_string(s) + " s");
  r.summary = std::to_string(gen.size()) + " diagrams (" + std::to_string(genus2) + " genus 2)";
  return r;
}

bool hemisphere(const VertexLink& l) {
  if (l.num_vertices != 5 || l.edges.size() != 8 || l.triangles.size() != 4) return false;
  std::vector<int> tri_count(l.num_vertices, 0);
  for (auto& t : l.triangles) {
    std::set<int> vs;
    for (int e : t) vs.insert(l.edges[e].begin(), l.edges[e].end());
    for (int v : vs) tri_count[v]++;
  }
  // one centre in all four triangles, the rim vertices in two each
  return std::count(tri_count.begin(), tri_count.end(), 4) == 1 && std::count(tri_count.begin(), tri_count.end(), 2) == 4;
}

bool octahedral_sphere(const VertexLink& l) {
  if (l.num_vertices != 6 || l.edges.size() != 12 || l.triangles.size() != 8) return false;
  std::vector<int> deg(6, 0);
  for (auto& e : l.edges) deg[e[0]]++, deg[e[1]]++;
  return std::all_of(deg.begin(), deg.end(), [](int x) { return x == 4; });
}

Result criterion3() {
  Result r;
  int p0 = 0, pp = 0, skipped = 0;
  for (auto& [n, d] : colorable_corpus()) {
    // the hemisphere picture belongs to the alternating case
    if (!is_alternating(d)) {
      ++skipped;
      continue;
    }
    auto cc = cube_complex_from_octahedra(decompose(d));
    auto dbl = double_complex(cc);
    auto dual = link_incidence_graph(subdivided_dual_link(d.orientable ? d : orientable_double_cover(d).cover));
    for (int v = 0; v < cc.vertices(); ++v)
      if (cc.vertex_class[v] == VertexClass::PZero) r.check(hemisphere(vertex_link(cc, v)), n + ": P0 link " + std::to_string(v) + " not a hemisphere");
    for (int v = 0; v < dbl.vertices(); ++v) {
      auto l = vertex_link(dbl, v);
      if (dbl.vertex_class[v] == VertexClass::PZero) {
        ++p0;
        VertexLink half = l;
        half.triangles.clear();
        std::set<int> used;
        for (size_t i = 0; i < l.triangles.size(); ++i)
          if (dbl.source[l.triangle_source[i].first].copy == 0) half.triangles.push_back(l.triangles[i]);
        for (auto& t : half.triangles)
          for (int e : t) used.insert(l.edges[e].begin(), l.edges[e].end());
        r.check(half.triangles.size() == 4 && used.size() == 5, n + ": double P0 link " + std::to_string(v) + " copy-0 part not 4 triangles");
        r.check(octahedral_sphere(l), n + ": double P0 link " + std::to_string(v) + " not two hemispheres");
      } else if (dbl.vertex_class[v] == VertexClass::PPlus || dbl.vertex_class[v] == VertexClass::PMinus) {
        ++pp;
        r.check(isomorphic(link_incidence_graph(l), dual), n + ": Link(P) at " + std::to_string(v) + " not isomorphic to the subdivided dual");
      }
    }
  }
  r.summary = std::to_string(p0) + " P0 links, " + std::to_string(pp) + " P+/- links (" + std::to_string(skipped) +
              " non-alternating diagram excluded)";
  return r;
}

Result criterion4() {
  Result r;
  auto verdict = [](const std::string& n) {
    auto d = corpus::load(n);
    return dehn_npc_check(coned_dehn_complex(d, checkerboard_coloring(d))).npc;
  };
  r.check(verdict("figure_eight"), "figure_eight: expected NPC");
  r.check(!verdict("figure_eight_switched"), "figure_eight_switched: expected not NPC");
  r.check(!verdict("figure_eight_curl"), "figure_eight_curl: expected not NPC");
  r.summary = "figure-eight true, switched false, nugatory false";
  return r;
}

Result criterion5() {
  Result r;
  int n_ok = 0;
  for (auto& [n, d] : colorable_corpus()) {
    auto od = decompose(d);
    auto hc = homology(cube_complex_from_octahedra(od)).H(1);
    auto ht = homology(triangulate(od)).H(1);
    auto hd = abelianization(group_presentation(coned_dehn_complex(d, checkerboard_coloring(d))));
    bool ok = hc == ht && ht == hd;
    r.check(ok, n + ": cube " + hc.to_string() + ", triangulation " + ht.to_string() + ", Dehn " + hd.to_string());
    n_ok += ok;
  }
  r.summary = std::to_string(n_ok) + " instances agree";
  return r;
}

Result criterion6() {
  Result r;
  int links = 0;
  for (auto& [n, d] : colorable_corpus()) {
    auto cc = cube_complex_from_octahedra(decompose(d));
    for (auto* x : {&cc}) {
      auto dbl = double_complex(*x);
      for (auto* y : {x, &dbl})
        for (int v = 0; v < y->vertices(); ++v) {
          auto l = vertex_link(*y, v);
          ++links;
          r.check(is_flag(l).kind == oracle::brute_flag(l), n + ": vertex " + std::to_string(v) + " verdicts differ");
        }
    }
  }
  auto t = oracle::three_cubes_at_corner();
  auto l = vertex_link(t, t.vertex_at(0, 0));
  r.check(is_flag(l).kind == FlagVerdict::NotFlag && oracle::brute_flag(l) == FlagVerdict::NotFlag, "three squares at a corner not rejected");
  r.summary = std::to_string(links + 1) + " links";
  return r;
}

Result criterion7() {
  Result r;
  int tori = 0, spheres = 0;
  auto run = [&](const std::string& n, const SurfaceDiagram& d) {
    int ml = default_max_curve_length(d);
    auto lib = edge_representativity(d, ml);
    if (d.is_sphere()) {
      ++spheres;
      r.check(lib.kind == Representativity::NoEssentialCurve, n + ": sphere should give the sentinel");
      return;
    }
    if (!d.orientable) return;
    ++tori;
    auto o = oracle::representativity(d, ml);
    r.check(o && lib.kind == Representativity::Value && lib.value == *o,
            n + ": library " + lib.to_string() + ", oracle " + (o ? std::to_string(*o) : "none"));
  };
  for (auto& n : corpus::named_examples()) run(n, corpus::load(n));
  for (auto& [n, d] : corpus::generated()) run(n, d);
  r.summary = std::to_string(tori) + " torus/genus-2 diagrams, " + std::to_string(spheres) + " spheres";
  return r;
}

Result criterion8() {
  Result r;
  for (std::string n : {"klein_2_6", "rp2_curl"}) {
    auto d = corpus::load(n);
    auto cm = orientable_double_cover(d);
    auto v = validate_cover(cm);
    r.check(v.ok, n + ": " + (v.ok ? "" : v.failures[0]));
    r.check(cm.cover.chi == 2 * d.chi && cm.cover.orientable, n + ": chi or orientability");
    auto ld = lift_decomposition(cm);
    r.check(ld.projection.ok, n + ": projection does not commute");
    r.check(validate_decomposition(ld.cover).ok, n + ": lifted decomposition invalid");
    r.check(validate_triangulation(triangulate(ld.cover)).ok, n + ": lifted triangulation invalid");
    r.check(ld.cover.c() == 2 * ld.base.c(), n + ": not 2-to-1");
  }
  bool threw = false;
  try {
    orientable_double_cover(corpus::load("figure_eight"));
  } catch (const ValidationError&) {
    threw = true;
  }
  r.check(threw, "orientable input accepted");
  r.summary = "Klein 2_6 and RP2 curl";
  return r;
}

Result criterion9() {
  Result r;
  int trips = 0;
  auto run = [&](const std::string& n, const SurfaceDiagram& d) {
    r.check(same_structure(parse_diagram(write_diagram(d)), d), n + ": diagram text round trip");
    r.check(same_structure(diagram_from_json(to_json(d)), d), n + ": diagram json round trip");
    auto od = build_decomposition_any(d, try_checkerboard_coloring(d));
    r.check(decomposition_from_json(to_json(od)) == od, n + ": decomposition round trip");
    auto t = triangulate(od);
    r.check(parse_gluing_table(export_gluing_table(t)).tets == t.tets, n + ": gluing table round trip");
    r.check(triangulation_from_json(to_json(t)).tets == t.tets, n + ": triangulation json round trip");
    ++trips;
  };
  for (auto& n : corpus::named_examples()) run(n, corpus::load(n));
  for (auto& [n, d] : corpus::generated()) run(n, d);
  int goldens = 0;
  auto arts = corpus::golden_artifacts();
  r.check(arts == corpus::golden_artifacts(), "golden artifacts differ between two runs");
  for (auto& [file, content] : arts) {
    std::ifstream in(corpus::golden_path(file), std::ios::binary);
    if (!in) {
      r.check(false, file + ": missing");
      continue;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    r.check(ss.str() == content, file + ": differs from golden");
    ++goldens;
  }
  r.summary = std::to_string(trips) + " round trips, " + std::to_string(goldens) + " golden files";
  return r;
}

}  // namespace

int main() {
  std::vector<std::pair<int, Result (*)()>> crit = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                                                    {4, criterion4}, {5, criterion5}, {6, criterion6},
                                                    {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failed = 0;
  for (auto& [i, f] : crit) {
    Result r;
    try {
      r = f();
    } catch (const std::exception& e) {
      r.errors.push_back(std::string("exception: ") + e.what());
    }
    if (r.errors.empty()) {
      std::cout << "PASS criterion " << i << ": " << r.summary << "\n";
    } else {
      ++failed;
      std::cout << "FAIL criterion " << i << ": " << r.errors.size() << " problem(s); first: " << r.errors[0] << "\n";
    }
  }
  return failed ? 1 : 0;
}
