#include "octacube/cover.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace octacube {

namespace {
int mod4(int x) { return ((x % 4) + 4) % 4; }
std::string lift_id(const std::string& id, int sheet) { return id + "_s" + std::to_string(sheet); }

// octahedron point labels, see cubes.cpp
int project_point(int p, int sheet) {
  if (sheet == 0) return p;
  if (p < 4) return mod4(-p);
  if (p < 12) {
    int c = (p - 4) / 4, s = (p - 4) % 4;
    return 4 + 4 * (1 - c) + mod4(-s);
  }
  if (p < 16) return 12 + mod4(-(p - 12) - 1);
  int c = (p - 16) / 4, k = (p - 16) % 4;
  return 16 + 4 * (1 - c) + mod4(-k - 1);
}

constexpr int kPow3[3] = {1, 3, 9};

int face_of_corners(const std::vector<int>& corners) {
  int f = 0;
  for (int i = 0; i < 3; ++i) {
    bool any0 = false, any1 = false;
    for (int b : corners) (b >> i & 1 ? any1 : any0) = true;
    f += kPow3[i] * (any0 && any1 ? 2 : any1 ? 1 : 0);
  }
  return f;
}

std::vector<int> corners_of_face(int f) {
  std::vector<int> out;
  for (int b = 0; b < 8; ++b) {
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      int t = (f / kPow3[i]) % 3;
      if (t != 2 && (b >> i & 1) != t) ok = false;
    }
    if (ok) out.push_back(b);
  }
  return out;
}

int local_index(int f, int b) {
  int li = 0, j = 0;
  for (int i = 0; i < 3; ++i)
    if ((f / kPow3[i]) % 3 == 2) {
      if (b >> i & 1) li |= 1 << j;
      ++j;
    }
  return li;
}
}  // namespace

int cover_slot_to_base(int sheet, int slot) { return sheet ? mod4(-slot) : slot; }
int cover_corner_to_base(int sheet, int corner) { return sheet ? mod4(-corner - 1) : corner; }

CoverMap orientable_double_cover(const SurfaceDiagram& d) {
  if (d.orientable) throw ValidationError("diagram is already on an orientable surface");
  CoverMap cm;
  cm.base = d;
  auto& cv = cm.cover;
  for (int A = 0; A < d.c(); ++A)
    for (int sh = 0; sh < 2; ++sh) {
      Crossing x = d.crossings[A];
      x.id = lift_id(x.id, sh);
      if (sh) x.over02 = !x.over02;  // heights reversed on sheet 1
      cv.crossings.push_back(x);
    }
  for (int e = 0; e < d.num_edges(); ++e) {
    auto& E = d.edges[e];
    for (int sh = 0; sh < 2; ++sh) {
      int sb = E.flipped ? 1 - sh : sh;
      DiagramEdge L;
      L.id = lift_id(E.id, sh);
      L.ends[0] = {2 * E.ends[0].crossing + sh, cover_slot_to_base(sh, E.ends[0].slot)};
      L.ends[1] = {2 * E.ends[1].crossing + sb, cover_slot_to_base(sb, E.ends[1].slot)};
      L.flipped = false;
      L.midpoint = static_cast<int>(cv.edges.size());
      cv.edges.push_back(L);
    }
  }
  cv.finalize();
  const int nx = cv.c(), ne = cv.num_edges(), nr = cv.num_regions();
  cm.crossing_lift.resize(d.c());
  cm.crossing_proj.resize(nx);
  cm.crossing_sheet.resize(nx);
  cm.deck_crossing.resize(nx);
  for (int x = 0; x < nx; ++x) {
    cm.crossing_proj[x] = x / 2;
    cm.crossing_sheet[x] = x % 2;
    cm.crossing_lift[x / 2][x % 2] = x;
    cm.deck_crossing[x] = x ^ 1;
  }
  cm.edge_lift.resize(d.num_edges());
  cm.edge_proj.resize(ne);
  cm.deck_edge.resize(ne);
  for (int e = 0; e < ne; ++e) {
    cm.edge_proj[e] = e / 2;
    cm.edge_lift[e / 2][e % 2] = e;
    cm.deck_edge[e] = e ^ 1;
  }
  cm.region_proj.assign(nr, -1);
  cm.deck_region.assign(nr, -1);
  cm.region_lift.assign(d.num_regions(), {-1, -1});
  for (int r = 0; r < nr; ++r) {
    auto& c0 = cv.regions[r].corners[0];
    int sh = c0.crossing % 2;
    int br = d.corner_region[c0.crossing / 2][cover_corner_to_base(sh, c0.corner)];
    cm.region_proj[r] = br;
    cm.deck_region[r] = cv.corner_region[c0.crossing ^ 1][mod4(-c0.corner - 1)];
    auto& slot = cm.region_lift[br];
    (slot[0] < 0 ? slot[0] : slot[1]) = r;
  }
  if (auto col = try_checkerboard_coloring(d)) {
    CheckerboardColoring lc;
    for (int r = 0; r < nr; ++r) lc.shaded.push_back(col->shaded[cm.region_proj[r]]);
    cm.lifted_coloring = lc;
  }
  return cm;
}

CheckReport validate_cover(const CoverMap& cm) {
  CheckReport rep;
  auto& b = cm.base;
  auto& cv = cm.cover;
  if (!cv.orientable) rep.fail("orientable", "cover surface is nonorientable");
  if (cv.chi != 2 * b.chi) rep.fail("euler", "chi " + std::to_string(cv.chi) + " != 2*" + std::to_string(b.chi));
  if (cv.c() != 2 * b.c() || cv.num_edges() != 2 * b.num_edges() || cv.num_regions() != 2 * b.num_regions())
    rep.fail("counts", "cell counts do not double");
  // projection: slots, corners, regions
  for (int x = 0; x < cv.c(); ++x) {
    int A = cm.crossing_proj[x], sh = cm.crossing_sheet[x];
    for (int s = 0; s < 4; ++s) {
      auto [e, j] = cv.slot_edge[x][s];
      auto [be, bj] = b.slot_edge[A][cover_slot_to_base(sh, s)];
      if (cm.edge_proj[e] != be) rep.fail("projection", "slot " + std::to_string(s) + " of " + cv.crossings[x].id + " projects off its edge");
      (void)j;
      (void)bj;
      if (cv.slot_is_over(x, s) == b.slot_is_over(A, cover_slot_to_base(sh, s)) && sh == 1)
        rep.fail("projection", "heights not reversed at " + cv.crossings[x].id);
      if (sh == 0 && cv.slot_is_over(x, s) != b.slot_is_over(A, s)) rep.fail("projection", "height mismatch at " + cv.crossings[x].id);
      int r = cv.corner_region[x][s];
      if (cm.region_proj[r] != b.corner_region[A][cover_corner_to_base(sh, s)])
        rep.fail("projection", "corner " + std::to_string(s) + " of " + cv.crossings[x].id + " lands in the wrong region");
    }
  }
  for (int r = 0; r < cv.num_regions(); ++r)
    if (cv.regions[r].degree() != b.regions[cm.region_proj[r]].degree())
      rep.fail("projection", "region " + std::to_string(r) + " degree differs from its image");
  for (int br = 0; br < b.num_regions(); ++br)
    if (cm.region_lift[br][0] < 0 || cm.region_lift[br][1] < 0)
      rep.fail("lifts", "base region " + std::to_string(br) + " does not have two lifts");
  // deck involution: slot s -> -s, heights reversed
  auto fixed_free = [&](const std::vector<int>& m, const char* what) {
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] < 0 || m[i] == static_cast<int>(i) || m[m[i]] != static_cast<int>(i))
        rep.fail("deck", std::string(what) + " " + std::to_string(i) + " is not in a 2-cycle");
  };
  fixed_free(cm.deck_crossing, "crossing");
  fixed_free(cm.deck_edge, "edge");
  fixed_free(cm.deck_region, "region");
  for (int e = 0; e < cv.num_edges(); ++e) {
    auto& E = cv.edges[e];
    auto& D = cv.edges[cm.deck_edge[e]];
    std::set<std::pair<int, int>> img, tgt;
    for (auto& en : E.ends) img.insert({cm.deck_crossing[en.crossing], mod4(-en.slot)});
    for (auto& en : D.ends) tgt.insert({en.crossing, en.slot});
    if (img != tgt) rep.fail("deck", "edge " + E.id + " is not sent to an edge");
    if (cm.edge_proj[e] != cm.edge_proj[cm.deck_edge[e]]) rep.fail("deck", "edge " + E.id + " changes base edge");
  }
  for (int x = 0; x < cv.c(); ++x) {
    int y = cm.deck_crossing[x];
    if (cv.crossings[x].over02 == cv.crossings[y].over02) rep.fail("deck", "heights not reversed at " + cv.crossings[x].id);
    for (int k = 0; k < 4; ++k)
      if (cm.deck_region[cv.corner_region[x][k]] != cv.corner_region[y][mod4(-k - 1)])
        rep.fail("deck", "corner " + std::to_string(k) + " of " + cv.crossings[x].id + " not sent to a corner");
  }
  for (int r = 0; r < cv.num_regions(); ++r)
    if (cm.region_proj[cm.deck_region[r]] != cm.region_proj[r]) rep.fail("deck", "region " + std::to_string(r) + " changes base region");
  return rep;
}

LiftedDecomposition lift_decomposition(const CoverMap& cm) {
  LiftedDecomposition ld;
  ld.base = build_nonorientable_decomposition(cm.base);
  auto base_check = validate_decomposition(ld.base);
  if (!base_check.ok) throw ValidationError("base decomposition invalid: " + base_check.failures[0]);
  auto col = cm.lifted_coloring ? cm.lifted_coloring : try_checkerboard_coloring(cm.cover);
  ld.cover = build_decomposition_any(cm.cover, col);
  const int n = ld.cover.c();
  ld.oct_proj.resize(n);
  ld.deck_oct.resize(n);
  for (int x = 0; x < n; ++x) {
    ld.oct_proj[x] = cm.crossing_proj[x];
    ld.deck_oct[x] = cm.deck_crossing[x];
  }
  auto& rep = ld.projection;
  // face (cusp, k) on sheet 1 sits over (1-cusp, -k-1) with the two equatorial positions swapped
  auto proj_face = [&](FaceRef f) {
    int sh = cm.crossing_sheet[f.oct];
    int cu = f.face / 4, k = f.face % 4;
    if (sh) return FaceRef{f.oct / 2, 4 * (1 - cu) + mod4(-k - 1)};
    return FaceRef{f.oct / 2, f.face};
  };
  auto proj_pos = [&](int oct, int pos) { return (cm.crossing_sheet[oct] && pos > 0) ? 3 - pos : pos; };
  auto bt = ld.base.partner_table();
  for (auto& g : ld.cover.gluings) {
    auto ps = proj_face(g.source), pt = proj_face(g.target);
    auto& bp = bt[ps.oct][ps.face];
    std::string w = "cover oct " + std::to_string(g.source.oct) + " face " + std::to_string(g.source.face);
    if (!(bp.face == pt)) {
      rep.fail("commutes", w + " does not project onto a base gluing");
      continue;
    }
    for (int i = 0; i < 3; ++i)
      if (bp.vertex_map[proj_pos(g.source.oct, i)] != proj_pos(g.target.oct, g.vertex_map[i]))
        rep.fail("commutes", w + " vertex map disagrees with the base");
  }
  for (int x = 0; x < n; ++x) {
    int sh = cm.crossing_sheet[x];
    auto& co = ld.cover.octahedra[x];
    auto& bo = ld.base.octahedra[x / 2];
    for (int s = 0; s < 4; ++s) {
      VertexRole r = co.vertices[2 + s].role, br = bo.vertices[2 + cover_slot_to_base(sh, s)].role;
      if ((r == br) == (sh == 1)) rep.fail("roles", "oct " + std::to_string(x) + " equatorial vertex " + std::to_string(s));
      if (cm.region_proj[co.equatorial_region[s]] != bo.equatorial_region[cover_corner_to_base(sh, s)])
        rep.fail("regions", "oct " + std::to_string(x) + " edge " + std::to_string(s));
    }
  }
  for (int x = 0; x < n; ++x)
    if (ld.deck_oct[x] == x || ld.deck_oct[ld.deck_oct[x]] != x || ld.oct_proj[ld.deck_oct[x]] != ld.oct_proj[x])
      rep.fail("deck", "octahedron " + std::to_string(x) + " not in a 2-cycle over one base octahedron");
  return ld;
}

CubeProjection project_cubes(const CubeComplex& cover, const CubeComplex& base, const LiftedDecomposition& ld) {
  CubeProjection p;
  p.cube.assign(cover.num_cubes, -1);
  p.corner.resize(cover.num_cubes);
  auto problem = [&](const std::string& s) {
    p.well_defined = false;
    p.problems.push_back(s);
  };
  std::map<std::pair<int, std::vector<int>>, int> base_cube;
  for (int q = 0; q < base.num_cubes; ++q) {
    std::vector<int> pts(base.corner_point[q].begin(), base.corner_point[q].end());
    std::sort(pts.begin(), pts.end());
    base_cube[{base.source[q].oct, pts}] = q;
  }
  for (int q = 0; q < cover.num_cubes; ++q) {
    int x = cover.source[q].oct, sh = x % 2;
    std::vector<int> img;
    for (int b = 0; b < 8; ++b) img.push_back(project_point(cover.corner_point[q][b], sh));
    auto sorted = img;
    std::sort(sorted.begin(), sorted.end());
    auto it = base_cube.find({ld.oct_proj[x], sorted});
    if (it == base_cube.end()) {
      problem("cube " + std::to_string(q) + " has no image");
      continue;
    }
    int bq = it->second;
    p.cube[q] = bq;
    for (int b = 0; b < 8; ++b) {
      auto& bp = base.corner_point[bq];
      p.corner[q][b] = static_cast<int>(std::find(bp.begin(), bp.end(), img[b]) - bp.begin());
    }
  }
  if (!p.well_defined) return p;
  // (dim, global cell, frame corner) -> base, must be single valued
  std::map<std::array<int, 3>, std::pair<int, int>> flag_img;
  for (int q = 0; q < cover.num_cubes; ++q)
    for (int f = 0; f < 27; ++f) {
      auto cs = corners_of_face(f);
      std::vector<int> bcs;
      for (int b : cs) bcs.push_back(p.corner[q][b]);
      int bf = face_of_corners(bcs);
      int dim = 0;
      for (int i = 0; i < 3; ++i) dim += (f / kPow3[i]) % 3 == 2;
      auto& lf = cover.faces[q][f];
      auto& blf = base.faces[p.cube[q]][bf];
      for (int b : cs) {
        std::array<int, 3> key{dim, lf.global, lf.corner_map[local_index(f, b)]};
        std::pair<int, int> val{blf.global, blf.corner_map[local_index(bf, p.corner[q][b])]};
        auto [it, ins] = flag_img.emplace(key, val);
        if (!ins && it->second != val)
          problem("cell " + std::to_string(dim) + ":" + std::to_string(lf.global) + " has two images");
      }
    }
  p.vertex.assign(cover.vertices(), -1);
  for (auto& [k, v] : flag_img)
    if (k[0] == 0) p.vertex[k[1]] = v.first;
  p.link_injective.assign(cover.vertices(), true);
  for (int v = 0; v < cover.vertices(); ++v) {
    auto l = vertex_link(cover, v);
    std::set<std::pair<int, int>> vs, es, ts;
    for (auto& [g, j] : l.vertex_source) vs.insert(flag_img.at({1, g, j}));
    for (auto& [g, j] : l.edge_source) es.insert(flag_img.at({2, g, j}));
    for (auto& [q, b] : l.triangle_source) ts.insert({p.cube[q], p.corner[q][b]});
    if (vs.size() != l.vertex_source.size() || es.size() != l.edge_source.size() || ts.size() != l.triangle_source.size())
      p.link_injective[v] = false;
  }
  return p;
}

NPCTransfer npc_transfer(const NPCReport& cover_npc, const CubeProjection& p, const NPCReport& base_npc) {
  NPCTransfer t;
  t.cover_flag = cover_npc.flag();
  t.injective = p.well_defined && std::all_of(p.link_injective.begin(), p.link_injective.end(), [](bool b) { return b; });
  t.base_flag = base_npc.flag();
  t.basis = (t.cover_flag && t.injective) ? "transferred from cover links" : "direct computation on base";
  return t;
}

}  // namespace octacube
