#include "octacube/octa.hpp"

#include <map>
#include <set>

namespace octacube {

const char* role_name(VertexRole r) {
  switch (r) {
    case VertexRole::OverCusp:
      return "OverCusp";
    case VertexRole::UnderCusp:
      return "UnderCusp";
    case VertexRole::ConeUp:
      return "ConeUp";
    case VertexRole::ConeDown:
      return "ConeDown";
  }
  return "?";
}

namespace {
int mod4(int x) { return ((x % 4) + 4) % 4; }
bool is_up(VertexRole r) { return r == VertexRole::ConeUp; }
}  // namespace

int Octahedron::face_slot(int f) const {
  int cusp = f / 4, k = f % 4;
  // the over cusp's strand ends are the ConeDown vertices
  VertexRole want = cusp == 0 ? VertexRole::ConeDown : VertexRole::ConeUp;
  return vertices[2 + k].role == want ? k : mod4(k + 1);
}

std::vector<std::array<OctahedralDecomposition::Partner, 8>> OctahedralDecomposition::partner_table() const {
  std::vector<std::array<Partner, 8>> t(c());
  for (auto& row : t) row.fill({{-1, -1}, {-1, -1, -1}, false});
  for (auto& g : gluings) {
    t[g.source.oct][g.source.face] = {g.target, g.vertex_map, g.flipped};
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[g.vertex_map[i]] = i;
    t[g.target.oct][g.target.face] = {g.source, inv, g.flipped};
  }
  return t;
}

OctahedralDecomposition build_decomposition_any(const SurfaceDiagram& d, const std::optional<CheckerboardColoring>& col) {
  OctahedralDecomposition od;
  od.orientable_ambient = d.orientable;
  for (int a = 0; a < d.c(); ++a) {
    Octahedron o;
    o.crossing = a;
    o.vertices[0] = {VertexRole::OverCusp, -1};
    o.vertices[1] = {VertexRole::UnderCusp, -1};
    for (int s = 0; s < 4; ++s)
      o.vertices[2 + s] = {d.slot_is_over(a, s) ? VertexRole::ConeDown : VertexRole::ConeUp, s};
    for (int k = 0; k < 4; ++k) o.equatorial_region[k] = d.corner_region[a][k];
    od.octahedra.push_back(o);
  }
  std::set<FaceRef> done;
  for (int a = 0; a < d.c(); ++a)
    for (int f = 0; f < 8; ++f) {
      FaceRef src{a, f};
      if (done.count(src)) continue;
      const Octahedron& A = od.octahedra[a];
      int k = f % 4;
      int s = A.face_slot(f);
      auto [e, j] = d.slot_edge[a][s];
      auto far = d.edges[e].ends[1 - j];
      bool flip = d.edges[e].flipped;
      int b = far.crossing, t = far.slot;
      int kb = (k == s) ? (flip ? t : mod4(t - 1)) : (flip ? mod4(t - 1) : t);
      int cb = d.slot_is_over(b, t) ? 0 : 1;
      FaceRef dst{b, 4 * cb + kb};
      if (dst == src) throw ValidationError("internal: face glued to itself");
      const Octahedron& B = od.octahedra[b];
      int pos_s = (s == k) ? 1 : 2;
      int pos_t = (t == kb) ? 1 : 2;
      bool up_s_in_b = is_up(A.vertices[2 + s].role) != flip;
      bool up_t = is_up(B.vertices[2 + t].role);
      FaceGluing g;
      g.source = src;
      g.target = dst;
      g.edge = e;
      g.flipped = flip;
      g.vertex_map[0] = 0;
      if (up_s_in_b == up_t) {
        g.vertex_map[pos_s] = pos_t;
        g.vertex_map[3 - pos_s] = 3 - pos_t;
      } else {
        g.vertex_map[pos_s] = 3 - pos_t;
        g.vertex_map[3 - pos_s] = pos_t;
      }
      done.insert(src);
      done.insert(dst);
      od.gluings.push_back(g);
    }
  for (auto& r : d.regions) {
    std::vector<std::pair<int, int>> cyc;
    for (auto& cn : r.corners) cyc.push_back({cn.crossing, cn.corner});
    od.region_edge_cycles.push_back(cyc);
    od.region_degree.push_back(r.degree());
    od.region_shaded.push_back(col ? (col->shaded[r.id] ? 1 : 0) : -1);
  }
  return od;
}

OctahedralDecomposition build_octahedral_decomposition(const SurfaceDiagram& d, const CheckerboardColoring& col) {
  if (!d.orientable) throw ValidationError("orientable builder called on a nonorientable surface");
  return build_decomposition_any(d, col);
}

OctahedralDecomposition build_nonorientable_decomposition(const SurfaceDiagram& d) {
  if (d.orientable) throw ValidationError("nonorientable builder called on an orientable surface");
  return build_decomposition_any(d, try_checkerboard_coloring(d));
}

std::vector<std::vector<std::pair<int, int>>> walk_region_cycles(const OctahedralDecomposition& od) {
  auto pt = od.partner_table();
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::array<char, 4>> seen(od.c(), {0, 0, 0, 0});
  for (int a = 0; a < od.c(); ++a)
    for (int k = 0; k < 4; ++k) {
      if (seen[a][k]) continue;
      std::vector<std::pair<int, int>> cyc;
      int o = a, kk = k, cusp = 0;
      for (int guard = 0; guard <= 8 * od.c(); ++guard) {
        seen[o][kk] = 1;
        cyc.push_back({o, kk});
        auto& p = pt[o][4 * cusp + kk];
        if (p.face.oct < 0) break;
        o = p.face.oct;
        kk = p.face.face % 4;
        cusp = 1 - p.face.face / 4;
        if (o == a && kk == k && cusp == 0) break;
      }
      out.push_back(cyc);
    }
  return out;
}

CheckReport validate_decomposition(const OctahedralDecomposition& od) {
  CheckReport rep;
  auto wit = [](FaceRef f) { return "oct " + std::to_string(f.oct) + " face " + std::to_string(f.face); };
  // (a) involution without fixed faces
  std::map<FaceRef, int> uses;
  for (auto& g : od.gluings) {
    if (g.source.oct < 0 || g.source.oct >= od.c() || g.target.oct < 0 || g.target.oct >= od.c() || g.source.face < 0 ||
        g.source.face > 7 || g.target.face < 0 || g.target.face > 7) {
      rep.fail("a", "gluing out of range at " + wit(g.source));
      continue;
    }
    if (g.source == g.target) rep.fail("a", "fixed face " + wit(g.source));
    uses[g.source]++;
    uses[g.target]++;
  }
  for (int o = 0; o < od.c(); ++o)
    for (int f = 0; f < 8; ++f) {
      int u = uses.count({o, f}) ? uses[{o, f}] : 0;
      if (u != 1) rep.fail("a", wit({o, f}) + " used " + std::to_string(u) + " times");
    }
  if (!rep.ok) return rep;
  // (b) role matching
  for (auto& g : od.gluings) {
    auto& A = od.octahedra[g.source.oct];
    auto& B = od.octahedra[g.target.oct];
    auto va = Octahedron::face_vertices(g.source.face);
    auto vb = Octahedron::face_vertices(g.target.face);
    std::set<int> img(g.vertex_map.begin(), g.vertex_map.end());
    if (img.size() != 3 || g.vertex_map[0] != 0) {
      rep.fail("b", "vertex map not a cusp-fixing bijection at " + wit(g.source));
      continue;
    }
    for (int i = 1; i < 3; ++i) {
      bool ua = A.vertices[va[i]].role == VertexRole::ConeUp;
      bool ub = B.vertices[vb[g.vertex_map[i]]].role == VertexRole::ConeUp;
      if ((ua != g.flipped) != ub) rep.fail("b", "cone height mismatch at " + wit(g.source));
    }
    if (A.equatorial_region[g.source.face % 4] != B.equatorial_region[g.target.face % 4])
      rep.fail("b", "region id mismatch at " + wit(g.source));
  }
  // (c)+(d) cycles around the vertical region edges
  auto cycles = walk_region_cycles(od);
  std::map<int, int> count_per_region;
  for (auto& cyc : cycles) {
    int r = od.octahedra[cyc[0].first].equatorial_region[cyc[0].second];
    for (auto [o, k] : cyc)
      if (od.octahedra[o].equatorial_region[k] != r)
        rep.fail("d", "edge cycle mixes regions at oct " + std::to_string(o) + " edge " + std::to_string(k));
    count_per_region[r]++;
    if (r >= 0 && r < static_cast<int>(od.region_degree.size()) &&
        static_cast<int>(cyc.size()) != od.region_degree[r])
      rep.fail("c", "region " + std::to_string(r) + " cycle length " + std::to_string(cyc.size()) + " != degree " +
                        std::to_string(od.region_degree[r]));
  }
  for (auto [r, n] : count_per_region)
    if (n != 1) rep.fail("d", "region " + std::to_string(r) + " split into " + std::to_string(n) + " edge cycles");
  for (size_t r = 0; r < od.region_edge_cycles.size(); ++r)
    if (static_cast<int>(od.region_edge_cycles[r].size()) != od.region_degree[r])
      rep.fail("c", "stored cycle of region " + std::to_string(r) + " has wrong length");
  return rep;
}

}  // namespace octacube
