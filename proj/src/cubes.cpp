#include "octacube/cubes.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace octacube {

const char* vertex_class_name(VertexClass c) {
  switch (c) {
    case VertexClass::PPlus:
      return "PPlus";
    case VertexClass::PMinus:
      return "PMinus";
    case VertexClass::PZero:
      return "PZero";
    case VertexClass::PMid:
      return "PMid";
  }
  return "?";
}

const char* verdict_name(FlagVerdict::Kind k) {
  switch (k) {
    case FlagVerdict::Flag:
      return "flag";
    case FlagVerdict::NotSimplicial:
      return "not-simplicial";
    case FlagVerdict::NotFlag:
      return "not-flag";
  }
  return "?";
}

namespace {

constexpr int kPow3[3] = {1, 3, 9};

int trit(int f, int i) { return (f / kPow3[i]) % 3; }

std::vector<int> free_axes(int f) {
  std::vector<int> out;
  for (int i = 0; i < 3; ++i)
    if (trit(f, i) == 2) out.push_back(i);
  return out;
}

std::vector<int> face_corners(int f) {
  auto fa = free_axes(f);
  int base = 0;
  for (int i = 0; i < 3; ++i)
    if (trit(f, i) == 1) base |= 1 << i;
  std::vector<int> out;
  for (int li = 0; li < (1 << fa.size()); ++li) {
    int c = base;
    for (size_t j = 0; j < fa.size(); ++j)
      if (li >> j & 1) c |= 1 << fa[j];
    out.push_back(c);
  }
  return out;
}

int local_index(int f, int corner) {
  auto fa = free_axes(f);
  int li = 0;
  for (size_t j = 0; j < fa.size(); ++j)
    if (corner >> fa[j] & 1) li |= 1 << j;
  return li;
}

int vertex_face(int corner) { return face_index(corner & 1, corner >> 1 & 1, corner >> 2 & 1); }

int log2i(int x) {
  int k = 0;
  while ((1 << k) < x) ++k;
  return (1 << k) == x ? k : -1;
}

// orientation sign of a cube symmetry given as a corner map
int map_sign(const std::vector<int>& m) {
  int k = log2i(static_cast<int>(m.size()));
  int v0 = m[0];
  std::vector<int> perm(k);
  for (int j = 0; j < k; ++j) perm[j] = log2i(m[1 << j] ^ v0);
  int s = (__builtin_popcount(v0) % 2) ? -1 : 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// point labels inside one octahedron
int PE(int s) { return ((s % 4) + 4) % 4; }
int PT(int c, int s) { return 4 + 4 * c + PE(s); }
int PM(int k) { return 12 + PE(k); }
int PTM(int c, int k) { return 16 + 4 * c + PE(k); }
bool is_E(int p) { return p < 4; }
bool is_M(int p) { return p >= 12 && p < 16; }

void classify_vertices(CubeComplex& cc) {
  std::vector<std::set<VertexClass>> seen(cc.count[0]);
  for (int q = 0; q < cc.num_cubes; ++q)
    for (int b = 0; b < 8; ++b) seen[cc.vertex_at(q, b)].insert(cc.corner_class[q][b]);
  cc.vertex_class.assign(cc.count[0], VertexClass::PZero);
  for (int v = 0; v < cc.count[0]; ++v) {
    auto& s = seen[v];
    if (s.count(VertexClass::PPlus))
      cc.vertex_class[v] = VertexClass::PPlus;  // a merged cone point keeps PPlus
    else if (s.count(VertexClass::PMinus))
      cc.vertex_class[v] = VertexClass::PMinus;
    else if (s.count(VertexClass::PMid))
      cc.vertex_class[v] = VertexClass::PMid;
  }
}

}  // namespace

int face_index(int t0, int t1, int t2) { return t0 + 3 * t1 + 9 * t2; }
int face_dim(int f) { return static_cast<int>(free_axes(f).size()); }

int CubeComplex::vertex_at(int cube, int corner) const { return faces[cube][vertex_face(corner)].global; }

std::vector<int> CubeComplex::cell_vertices(int dim, int g) const {
  auto [q, f] = rep[dim][g];
  std::vector<int> out;
  for (int c : face_corners(f)) out.push_back(vertex_at(q, c));
  return out;
}

CubeComplex assemble_cube_complex(int ncubes, const std::vector<CubeGluing>& gluings) {
  CubeComplex cc;
  cc.num_cubes = ncubes;
  cc.gluings = gluings;
  cc.source.assign(ncubes, {});
  cc.corner_point.assign(ncubes, {0, 1, 2, 3, 4, 5, 6, 7});
  std::array<VertexClass, 8> z;
  z.fill(VertexClass::PZero);
  cc.corner_class.assign(ncubes, z);
  const int L = ncubes * 27;
  std::vector<std::vector<std::pair<int, std::vector<int>>>> adj(L);
  for (auto& g : gluings) {
    if (face_dim(g.face_a) != 2 || face_dim(g.face_b) != 2) throw std::invalid_argument("gluing faces must be squares");
    auto ca = face_corners(g.face_a);
    auto cb = face_corners(g.face_b);
    std::map<int, int> cm;
    for (int i = 0; i < 4; ++i) cm[ca[i]] = cb[g.corner_map[i]];
    for (int f = 0; f < 27; ++f) {
      bool sub = true;
      for (int i = 0; i < 3; ++i)
        if (trit(g.face_a, i) != 2 && trit(f, i) != trit(g.face_a, i)) sub = false;
      if (!sub) continue;
      auto cf = face_corners(f);
      std::vector<int> img;
      for (int c : cf) img.push_back(cm.at(c));
      int t[3];
      for (int i = 0; i < 3; ++i) {
        int b0 = img[0] >> i & 1;
        t[i] = b0;
        for (int c : img)
          if ((c >> i & 1) != b0) t[i] = 2;
      }
      int f2 = face_index(t[0], t[1], t[2]);
      if (face_dim(f2) != face_dim(f)) throw std::invalid_argument("gluing corner map is not a cube map");
      std::vector<int> m(cf.size()), inv(cf.size());
      for (size_t i = 0; i < cf.size(); ++i) {
        m[i] = local_index(f2, img[i]);
        inv[m[i]] = static_cast<int>(i);
      }
      int a = g.cube_a * 27 + f, b = g.cube_b * 27 + f2;
      adj[a].push_back({b, m});
      adj[b].push_back({a, inv});
    }
  }
  cc.faces.resize(ncubes);
  std::vector<int> glob(L, -1);
  std::vector<std::vector<int>> fmap(L);
  std::set<std::pair<int, int>> twisted;
  for (int l = 0; l < L; ++l) {
    if (glob[l] >= 0) continue;
    int d = face_dim(l % 27);
    int id = cc.count[d]++;
    cc.rep[d].push_back({l / 27, l % 27});
    glob[l] = id;
    fmap[l].resize(1 << d);
    std::iota(fmap[l].begin(), fmap[l].end(), 0);
    std::deque<int> queue{l};
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (auto& [n, m] : adj[cur]) {
        std::vector<int> nm(m.size());
        for (size_t i = 0; i < m.size(); ++i) nm[m[i]] = fmap[cur][i];
        if (glob[n] < 0) {
          glob[n] = id;
          fmap[n] = nm;
          queue.push_back(n);
        } else if (fmap[n] != nm) {
          twisted.insert({d, id});
        }
      }
    }
  }
  for (auto [d, id] : twisted)
    cc.defects.push_back("dimension " + std::to_string(d) + " cell " + std::to_string(id) +
                         " is identified with itself by a nontrivial symmetry");
  for (int l = 0; l < L; ++l) cc.faces[l / 27][l % 27] = {glob[l], fmap[l]};
  cc.boundary_square.assign(cc.count[2], false);
  classify_vertices(cc);
  return cc;
}

CubeComplex cube_complex_from_octahedra(const OctahedralDecomposition& od) {
  const int c = od.c();
  std::vector<int> first_shaded(c);
  for (int A = 0; A < c; ++A) {
    auto& o = od.octahedra[A];
    int s[4];
    for (int k = 0; k < 4; ++k) {
      int r = o.equatorial_region[k];
      if (r < 0 || r >= static_cast<int>(od.region_shaded.size()) || od.region_shaded[r] < 0)
        throw NotColorable("cube complex needs a checkerboard coloring");
      s[k] = od.region_shaded[r];
    }
    int a = s[0] ? 0 : 1;
    if (!s[a] || !s[a + 2] || s[a + 1] || s[(a + 3) % 4])
      throw ValidationError("coloring does not alternate around crossing " + std::to_string(A));
    first_shaded[A] = a;
  }
  const int n = 4 * c;
  std::vector<std::array<int, 8>> pts(n);
  std::vector<CubeSource> src(n);
  std::vector<std::array<VertexClass, 8>> cls(n);
  for (int A = 0; A < c; ++A) {
    int a = first_shaded[A];
    for (int cu = 0; cu < 2; ++cu)
      for (int h = 0; h < 2; ++h) {
        int q = 4 * A + 2 * cu + h;
        src[q] = {A, cu, h, 0};
        std::array<int, 4> base = h == 0 ? std::array<int, 4>{PM(a), PE(a + 1), PE(a + 2), PM(a + 2)}
                                         : std::array<int, 4>{PM(a + 2), PE(a + 3), PE(a), PM(a)};
        for (int b = 0; b < 8; ++b) {
          int x = b & 1, y = b >> 1 & 1, z = b >> 2 & 1;
          int qi = y ? (x ? 2 : 3) : (x ? 1 : 0);
          int p = base[qi];
          if (z) p = is_E(p) ? PT(cu, p) : PTM(cu, p - 12);
          pts[q][b] = p;
          if (is_E(p))
            cls[q][b] = od.octahedra[A].vertices[2 + p].role == VertexRole::ConeUp ? VertexClass::PPlus : VertexClass::PMinus;
          else if (is_M(p))
            cls[q][b] = VertexClass::PMid;
          else
            cls[q][b] = VertexClass::PZero;
        }
      }
  }
  auto square_points = [&](int q, int f) {
    std::vector<int> ps;
    for (int cn : face_corners(f)) ps.push_back(pts[q][cn]);
    return ps;
  };
  std::vector<int> square_faces;
  for (int f = 0; f < 27; ++f)
    if (face_dim(f) == 2) square_faces.push_back(f);
  std::vector<CubeGluing> gl;
  // glue square (qa, fa) to the square of one of the cubes qbs whose points are phi(points)
  auto glue = [&](int qa, int fa, const std::vector<int>& qbs, const std::map<int, int>& phi) {
    auto pa = square_points(qa, fa);
    std::vector<int> img;
    for (int p : pa) img.push_back(phi.at(p));
    auto sorted_img = img;
    std::sort(sorted_img.begin(), sorted_img.end());
    for (int qb : qbs)
      for (int fb : square_faces) {
        auto pb = square_points(qb, fb);
        auto sb = pb;
        std::sort(sb.begin(), sb.end());
        if (sb != sorted_img) continue;
        CubeGluing g{qa, fa, qb, fb, {}};
        for (int i = 0; i < 4; ++i) g.corner_map[i] = static_cast<int>(std::find(pb.begin(), pb.end(), img[i]) - pb.begin());
        gl.push_back(g);
        return;
      }
    throw ValidationError("internal: no matching square for cube " + std::to_string(qa));
  };
  std::map<int, int> ident;
  for (int p = 0; p < 24; ++p) ident[p] = p;
  const int fx0 = face_index(0, 2, 2), fz0 = face_index(2, 2, 0);
  for (int A = 0; A < c; ++A) {
    for (int cu = 0; cu < 2; ++cu) glue(4 * A + 2 * cu, fx0, {4 * A + 2 * cu + 1}, ident);
    for (int h = 0; h < 2; ++h) glue(4 * A + h, fz0, {4 * A + 2 + h}, ident);
  }
  for (auto& g : od.gluings) {
    int A = g.source.oct, B = g.target.oct;
    int cu = g.source.face / 4, k = g.source.face % 4;
    int cb = g.target.face / 4, kb = g.target.face % 4;
    auto epos = [&](int pos) { return pos == 1 ? kb : kb + 1; };
    int ek = epos(g.vertex_map[1]), ek1 = epos(g.vertex_map[2]);
    std::map<int, int> phi{{PE(k), PE(ek)},          {PE(k + 1), PE(ek1)},       {PT(cu, k), PT(cb, ek)},
                           {PT(cu, k + 1), PT(cb, ek1)}, {PM(k), PM(kb)}, {PTM(cu, k), PTM(cb, kb)}};
    std::vector<int> qbs{4 * B + 2 * cb, 4 * B + 2 * cb + 1};
    for (int h = 0; h < 2; ++h) {
      int qa = 4 * A + 2 * cu + h;
      for (int f : square_faces) {
        auto pa = square_points(qa, f);
        bool inside = std::all_of(pa.begin(), pa.end(), [&](int p) { return phi.count(p) > 0; });
        if (inside) glue(qa, f, qbs, phi);
      }
    }
  }
  CubeComplex cc = assemble_cube_complex(n, gl);
  cc.source = src;
  cc.corner_point = pts;
  cc.corner_class = cls;
  classify_vertices(cc);
  const int ftop = face_index(2, 2, 1);
  for (int q = 0; q < n; ++q) cc.boundary_square[cc.faces[q][ftop].global] = true;
  return cc;
}

CubeComplex double_complex(const CubeComplex& cc) {
  if (std::none_of(cc.boundary_square.begin(), cc.boundary_square.end(), [](bool b) { return b; }))
    throw std::invalid_argument("complex has no boundary squares to double along");
  const int n = cc.num_cubes;
  std::vector<CubeGluing> gl = cc.gluings;
  for (auto g : cc.gluings) {
    g.cube_a += n;
    g.cube_b += n;
    gl.push_back(g);
  }
  for (int q = 0; q < n; ++q)
    for (int f = 0; f < 27; ++f)
      if (face_dim(f) == 2 && cc.boundary_square[cc.faces[q][f].global]) gl.push_back({q, f, q + n, f, {0, 1, 2, 3}});
  CubeComplex d = assemble_cube_complex(2 * n, gl);
  for (int q = 0; q < 2 * n; ++q) {
    d.source[q] = cc.source[q % n];
    d.source[q].copy = q / n;
    d.corner_point[q] = cc.corner_point[q % n];
    d.corner_class[q] = cc.corner_class[q % n];
  }
  classify_vertices(d);
  return d;
}

ChainComplex cellular_chain_complex(const CubeComplex& cc) {
  ChainComplex ch;
  ch.dims = {cc.count[0], cc.count[1], cc.count[2], cc.count[3]};
  ch.boundary.resize(4);
  for (int k = 1; k <= 3; ++k) {
    SparseIntMatrix m(cc.count[k - 1], cc.count[k]);
    for (int g = 0; g < cc.count[k]; ++g) {
      auto [q, f] = cc.rep[k][g];
      auto fa = free_axes(f);
      for (int j = 0; j < k; ++j)
        for (int v = 0; v < 2; ++v) {
          int t[3] = {trit(f, 0), trit(f, 1), trit(f, 2)};
          t[fa[j]] = v;
          auto& lf = cc.faces[q][face_index(t[0], t[1], t[2])];
          int s = ((j % 2) ? -1 : 1) * (v ? 1 : -1);
          m.add(lf.global, g, s * map_sign(lf.corner_map));
        }
    }
    ch.boundary[k] = m;
  }
  return ch;
}

HomologyResult homology(const CubeComplex& cc) { return compute_homology(cellular_chain_complex(cc)); }

VertexLink vertex_link(const CubeComplex& cc, int v) {
  VertexLink l;
  l.vertex = v;
  std::map<std::pair<int, int>, int> vid, eid;
  auto link_vertex = [&](std::pair<int, int> key) {
    auto [it, ins] = vid.emplace(key, l.num_vertices);
    if (ins) {
      ++l.num_vertices;
      l.vertex_source.push_back(key);
    }
    return it->second;
  };
  for (int q = 0; q < cc.num_cubes; ++q)
    for (int b = 0; b < 8; ++b) {
      if (cc.vertex_at(q, b) != v) continue;
      int lv[3];
      for (int i = 0; i < 3; ++i) {
        int t[3] = {b & 1, b >> 1 & 1, b >> 2 & 1};
        t[i] = 2;
        auto& lf = cc.faces[q][face_index(t[0], t[1], t[2])];
        lv[i] = link_vertex({lf.global, lf.corner_map[b >> i & 1]});
      }
      std::array<int, 3> tri;
      int ti = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          int t[3] = {b & 1, b >> 1 & 1, b >> 2 & 1};
          t[i] = 2;
          t[j] = 2;
          auto& lf = cc.faces[q][face_index(t[0], t[1], t[2])];
          std::pair<int, int> key{lf.global, lf.corner_map[(b >> i & 1) | (b >> j & 1) << 1]};
          auto [it, ins] = eid.emplace(key, static_cast<int>(l.edges.size()));
          if (ins) {
            l.edges.push_back({lv[i], lv[j]});
            l.edge_source.push_back(key);
          }
          tri[ti++] = it->second;
        }
      l.triangles.push_back(tri);
      l.triangle_source.push_back({q, b});
    }
  return l;
}

FlagVerdict is_flag(const VertexLink& l) {
  FlagVerdict out;
  auto vname = [&](int u) {
    std::string s = "link vertex " + std::to_string(u);
    if (u < static_cast<int>(l.vertex_source.size()))
      s += " (edge " + std::to_string(l.vertex_source[u].first) + " end " + std::to_string(l.vertex_source[u].second) + ")";
    return s;
  };
  auto fail = [&](FlagVerdict::Kind k, const std::string& w) {
    out.kind = k;
    out.witness = w;
    return out;
  };
  std::map<std::pair<int, int>, int> pairs;
  std::vector<std::set<int>> adj(l.num_vertices);
  for (size_t e = 0; e < l.edges.size(); ++e) {
    auto [u, v] = l.edges[e];
    if (u == v) return fail(FlagVerdict::NotSimplicial, "loop at " + vname(u));
    auto key = std::minmax(u, v);
    if (pairs.count(key))
      return fail(FlagVerdict::NotSimplicial, "parallel link edges " + std::to_string(pairs[key]) + " and " +
                                                  std::to_string(e) + " between " + vname(u) + " and " + vname(v));
    pairs[key] = static_cast<int>(e);
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::set<std::array<int, 3>> spans;
  for (size_t t = 0; t < l.triangles.size(); ++t) {
    std::set<int> es(l.triangles[t].begin(), l.triangles[t].end());
    std::set<int> vs;
    for (int e : l.triangles[t]) vs.insert(l.edges[e].begin(), l.edges[e].end());
    if (es.size() != 3 || vs.size() != 3)
      return fail(FlagVerdict::NotSimplicial, "degenerate link triangle " + std::to_string(t));
    std::array<int, 3> key;
    std::copy(vs.begin(), vs.end(), key.begin());
    if (!spans.insert(key).second)
      return fail(FlagVerdict::NotSimplicial, "two link triangles span " + vname(key[0]) + ", " + vname(key[1]) + ", " + vname(key[2]));
  }
  for (int u = 0; u < l.num_vertices; ++u)
    for (int v : adj[u]) {
      if (v <= u) continue;
      for (int w : adj[v]) {
        if (w <= v || !adj[u].count(w)) continue;
        if (!spans.count({u, v, w}))
          return fail(FlagVerdict::NotFlag, "empty triangle on " + vname(u) + ", " + vname(v) + ", " + vname(w));
        for (int x : adj[w])
          if (x > w && adj[u].count(x) && adj[v].count(x))
            return fail(FlagVerdict::NotFlag, "4-clique on link vertices " + std::to_string(u) + " " + std::to_string(v) +
                                                  " " + std::to_string(w) + " " + std::to_string(x));
      }
    }
  return out;
}

bool NPCReport::flag() const {
  return std::all_of(per_vertex.begin(), per_vertex.end(), [](const Entry& e) { return e.verdict.flag(); });
}

NPCReport check_npc(const CubeComplex& cc) {
  NPCReport r;
  for (int v = 0; v < cc.count[0]; ++v) r.per_vertex.push_back({v, cc.vertex_class[v], is_flag(vertex_link(cc, v))});
  return r;
}

std::vector<Hyperplane> hyperplanes(const CubeComplex& cc) {
  const int n = cc.num_cubes;
  DSU dsu(3 * n);
  // (square, square axis) -> midcubes through that mid-edge, with the induced edge direction
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> mid_edges;
  for (int q = 0; q < n; ++q)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        int k = 3 - i - j;
        for (int v = 0; v < 2; ++v) {
          int t[3];
          t[i] = 2;
          t[k] = 2;
          t[j] = v;
          auto& lf = cc.faces[q][face_index(t[0], t[1], t[2])];
          int ai = i < k ? 0 : 1, ak = 1 - ai;
          int gi = log2i(lf.corner_map[1 << ai] ^ lf.corner_map[0]);
          int gk = log2i(lf.corner_map[1 << ak] ^ lf.corner_map[0]);
          // boundary orientation of the midcube (axes k1 < k2 other than i) along this face
          int k1 = std::min(j, k);
          int s = (j == k1 ? 1 : -1) * (v ? 1 : -1);
          int dir = s * ((lf.corner_map[0] >> gk & 1) ? -1 : 1);
          mid_edges[{lf.global, gi}].push_back({3 * q + i, dir});
        }
      }
  for (auto& [key, ms] : mid_edges)
    for (auto& m : ms) dsu.unite(ms[0].first, m.first);
  std::map<int, int> hid;
  std::vector<Hyperplane> out;
  for (int m = 0; m < 3 * n; ++m) {
    auto [it, ins] = hid.emplace(dsu.find(m), static_cast<int>(out.size()));
    if (ins) out.emplace_back();
    out[it->second].midcubes.push_back({m / 3, m % 3});
  }
  static const char* names[3] = {"shaded-parallel", "checkerboard-unshaded", "dehn"};
  for (auto& h : out) {
    std::set<int> axes;
    std::set<int> edges;
    for (auto [q, i] : h.midcubes) {
      axes.insert(i);
      for (int b = 0; b < 8; ++b) {
        if (b >> i & 1) continue;
        int t[3] = {b & 1, b >> 1 & 1, b >> 2 & 1};
        t[i] = 2;
        edges.insert(cc.faces[q][face_index(t[0], t[1], t[2])].global);
      }
    }
    h.type = axes.size() == 1 ? names[*axes.begin()] : "mixed";
    int e = 0;
    for (auto& [key, ms] : mid_edges)
      if (hid[dsu.find(ms[0].first)] == &h - &out[0]) {
        ++e;
        if (cc.boundary_square[key.first]) ++h.boundary_edges;
      }
    h.euler_characteristic = static_cast<int>(edges.size()) - e + static_cast<int>(h.midcubes.size());
  }
  // orientability: adjacent midcubes induce opposite directions on a shared mid-edge
  std::vector<int> orient(3 * n, 0);
  std::vector<std::vector<std::tuple<int, int, int>>> adj(3 * n);
  for (auto& [key, ms] : mid_edges)
    for (size_t x = 0; x < ms.size(); ++x)
      for (size_t y = x + 1; y < ms.size(); ++y) {
        int rel = -ms[x].second * ms[y].second;
        adj[ms[x].first].push_back({ms[y].first, rel, 0});
        adj[ms[y].first].push_back({ms[x].first, rel, 0});
      }
  for (int m = 0; m < 3 * n; ++m) {
    if (orient[m]) continue;
    orient[m] = 1;
    std::deque<int> queue{m};
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (auto [w, rel, unused] : adj[cur]) {
        (void)unused;
        int want = orient[cur] * rel;
        if (!orient[w]) {
          orient[w] = want;
          queue.push_back(w);
        } else if (orient[w] != want) {
          out[hid[dsu.find(cur)]].orientable = false;
        }
      }
    }
  }
  return out;
}

std::vector<EdgeCertificate> essential_edges_certificate(const CubeComplex& cc, const NPCReport& npc) {
  std::vector<EdgeCertificate> out;
  bool ok = npc.flag();
  std::set<int> defect_edges;
  if (!ok)
    for (auto& e : npc.per_vertex) {
      if (e.verdict.kind != FlagVerdict::NotSimplicial) continue;
      auto l = vertex_link(cc, e.vertex);
      for (auto& [edge, end] : l.vertex_source) {
        auto vs = cc.cell_vertices(1, edge);
        if (vs[0] == vs[1]) defect_edges.insert(edge);  // loop edges at a bad vertex
      }
    }
  for (int e = 0; e < cc.count[1]; ++e)
    out.push_back({e, ok ? "essential (NPC certificate)" : defect_edges.count(e) ? "undetermined (link defect)" : "undetermined"});
  return out;
}

Retraction retraction_to_dehn(const CubeComplex& cc) {
  Retraction r;
  for (int d = 0; d < 4; ++d) r.image[d].assign(cc.count[d], {-1, -1});
  for (int q = 0; q < cc.num_cubes; ++q)
    for (int f = 0; f < 27; ++f) {
      int fz = face_index(trit(f, 0), trit(f, 1), 0);
      std::pair<int, int> img{face_dim(fz), cc.faces[q][fz].global};
      auto& slot = r.image[face_dim(f)][cc.faces[q][f].global];
      if (slot.first < 0)
        slot = img;
      else if (slot != img)
        r.commutes = false;
    }
  std::array<std::set<int>, 4> im;
  for (int d = 0; d < 4; ++d)
    for (auto [dd, g] : r.image[d]) im[dd].insert(g);
  for (int d = 0; d < 4; ++d) {
    r.image_count[d] = static_cast<int>(im[d].size());
    for (int g : im[d])
      if (r.image[d][g] != std::make_pair(d, g)) r.idempotent = false;
  }
  return r;
}

LabeledGraph retraction_image_graph(const CubeComplex& cc, const Retraction& r) {
  std::array<std::set<int>, 4> im;
  for (int d = 0; d < 4; ++d)
    for (auto [dd, g] : r.image[d]) im[dd].insert(g);
  // per octahedron: global vertex of each E point and global edge of each point pair
  std::map<std::pair<int, int>, int> vert;
  std::map<std::tuple<int, int, int>, int> edge;
  int c = 0;
  for (int q = 0; q < cc.num_cubes; ++q) {
    if (cc.source[q].copy != 0) continue;
    int A = cc.source[q].oct;
    c = std::max(c, A + 1);
    for (int b = 0; b < 8; ++b) vert[{A, cc.corner_point[q][b]}] = cc.vertex_at(q, b);
    for (int f = 0; f < 27; ++f) {
      if (face_dim(f) != 1) continue;
      auto cs = face_corners(f);
      int p0 = cc.corner_point[q][cs[0]], p1 = cc.corner_point[q][cs[1]];
      edge[{A, std::min(p0, p1), std::max(p0, p1)}] = cc.faces[q][f].global;
    }
  }
  LabeledGraph g;
  std::map<int, int> vnode, rnode;  // image vertex -> node, region key -> node
  for (int v : im[0])
    if (cc.vertex_class[v] == VertexClass::PPlus || cc.vertex_class[v] == VertexClass::PMinus) vnode[v] = g.add_node(0);
  // region edge key: unshaded -> global edge id, shaded -> -1 - (global M vertex)
  auto region_key = [&](int A, int k) {
    auto it = vert.find({A, PM(k)});
    if (it != vert.end()) return -1 - it->second;
    return edge.at({A, std::min(PE(k), PE(k + 1)), std::max(PE(k), PE(k + 1))});
  };
  for (int A = 0; A < c; ++A)
    for (int k = 0; k < 4; ++k) {
      int key = region_key(A, k);
      if (rnode.count(key)) continue;
      bool in_image = key >= 0 ? im[1].count(key) > 0 : im[0].count(-1 - key) > 0;
      if (!in_image) continue;
      rnode[key] = g.add_node(1);
      g.add_edge(rnode[key], vnode.at(vert.at({A, PE(k)})), 0);
      g.add_edge(rnode[key], vnode.at(vert.at({A, PE(k + 1)})), 0);
    }
  std::set<int> squares_seen;
  for (int q = 0; q < cc.num_cubes; ++q) {
    if (cc.source[q].copy != 0) continue;
    int gsq = cc.faces[q][face_index(2, 2, 0)].global;
    if (im[2].count(gsq)) squares_seen.insert(cc.source[q].oct);
  }
  for (int A : squares_seen) {
    int sq = g.add_node(2);
    int corner[4];
    for (int s = 0; s < 4; ++s) {
      corner[s] = g.add_node(3);
      g.add_edge(sq, corner[s], 0);
      g.add_edge(corner[s], vnode.at(vert.at({A, PE(s)})), 1);
      g.add_edge(corner[s], rnode.at(region_key(A, s - 1)), 2);
      g.add_edge(corner[s], rnode.at(region_key(A, s)), 2);
    }
    for (int s = 0; s < 4; ++s) g.add_edge(corner[s], corner[(s + 1) % 4], 3);
  }
  return g;
}

VertexLink subdivided_dual_link(const SurfaceDiagram& d) {
  VertexLink l;
  const int F = d.num_regions(), c = d.c();
  l.num_vertices = F + c;
  for (int A = 0; A < c; ++A)
    for (int k = 0; k < 4; ++k) l.edges.push_back({F + A, d.corner_region[A][k]});
  for (int e = 0; e < d.num_edges(); ++e) l.edges.push_back({d.edge_side_region[e][0], d.edge_side_region[e][1]});
  for (int A = 0; A < c; ++A)
    for (int k = 0; k < 4; ++k)
      l.triangles.push_back({4 * A + k, 4 * A + (k + 1) % 4, 4 * c + d.slot_edge[A][(k + 1) % 4].first});
  return l;
}

LabeledGraph link_incidence_graph(const VertexLink& l) {
  LabeledGraph g;
  for (int v = 0; v < l.num_vertices; ++v) g.add_node(0);
  std::vector<int> en, tn;
  for (auto& e : l.edges) {
    en.push_back(g.add_node(1));
    g.add_edge(en.back(), e[0], 0);
    g.add_edge(en.back(), e[1], 0);
  }
  for (auto& t : l.triangles) {
    tn.push_back(g.add_node(2));
    for (int e : t) g.add_edge(tn.back(), en[e], 1);
  }
  return g;
}

}  // namespace octacube
