#include "octacube/tet.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace octacube {

namespace {
struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};
constexpr int kEdges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
}  // namespace

bool tet_vertex_ideal(int v) { return v < 2; }

int tet_edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int e = 0; e < 6; ++e)
    if (kEdges[e][0] == i && kEdges[e][1] == j) return e;
  return -1;
}

void Triangulation::compute_edge_classes() {
  const int n = size();
  DSU dsu(6 * n);
  for (int t = 0; t < n; ++t)
    for (int f = 0; f < 4; ++f) {
      int t2 = tets[t].neighbor[f];
      if (t2 < 0 || t2 >= n) continue;
      for (int e = 0; e < 6; ++e) {
        int i = kEdges[e][0], j = kEdges[e][1];
        if (i == f || j == f) continue;
        int e2 = tet_edge_index(tets[t].perm[f][i], tets[t].perm[f][j]);
        if (e2 >= 0) dsu.unite(6 * t + e, 6 * t2 + e2);
      }
    }
  std::map<int, int> ids;
  edge_class.assign(n, {});
  for (int t = 0; t < n; ++t)
    for (int e = 0; e < 6; ++e) {
      auto [it, ins] = ids.emplace(dsu.find(6 * t + e), static_cast<int>(ids.size()));
      edge_class[t][e] = it->second;
    }
  num_edge_classes = static_cast<int>(ids.size());
  crossing_arc_class.clear();
  for (int t = 0; t < n; ++t) {
    int o = tets[t].oct;
    if (o < 0) continue;
    if (static_cast<int>(crossing_arc_class.size()) <= o) crossing_arc_class.resize(o + 1, -1);
    crossing_arc_class[o] = edge_class[t][0];
  }
}

Triangulation triangulate(const OctahedralDecomposition& od) {
  Triangulation t;
  const int c = od.c();
  auto pt = od.partner_table();
  t.tets.resize(4 * c);
  for (int A = 0; A < c; ++A)
    for (int k = 0; k < 4; ++k) {
      auto& T = t.tets[4 * A + k];
      T.oct = A;
      T.quadrant = k;
      T.neighbor[3] = 4 * A + (k + 3) % 4;
      T.perm[3] = {0, 1, 3, 2};
      T.neighbor[2] = 4 * A + (k + 1) % 4;
      T.perm[2] = {0, 1, 3, 2};
      for (int cu = 0; cu < 2; ++cu) {
        auto& p = pt[A][4 * cu + k];
        if (p.face.oct < 0) throw ValidationError("decomposition has an unglued face");
        int cb = p.face.face / 4, kb = p.face.face % 4;
        int f = 1 - cu;
        T.neighbor[f] = 4 * p.face.oct + kb;
        T.perm[f][cu] = cb;
        T.perm[f][1 - cu] = 1 - cb;
        T.perm[f][2] = p.vertex_map[1] == 1 ? 2 : 3;
        T.perm[f][3] = p.vertex_map[2] == 1 ? 2 : 3;
      }
    }
  t.compute_edge_classes();
  return t;
}

CheckReport validate_triangulation(const Triangulation& t) {
  CheckReport rep;
  const int n = t.size();
  auto w = [](int a, int f) { return "tet " + std::to_string(a) + " face " + std::to_string(f); };
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f) {
      int b = t.tets[a].neighbor[f];
      auto& p = t.tets[a].perm[f];
      std::set<int> img(p.begin(), p.end());
      if (b < 0 || b >= n || img.size() != 4 || *img.begin() != 0 || *img.rbegin() != 3) {
        rep.fail("involution", w(a, f) + " has an invalid gluing");
        continue;
      }
      int fb = p[f];
      if (b == a && fb == f) rep.fail("involution", w(a, f) + " glued to itself");
      auto& back = t.tets[b];
      bool inv_ok = back.neighbor[fb] == a;
      for (int v = 0; v < 4 && inv_ok; ++v)
        if (back.perm[fb][p[v]] != v) inv_ok = false;
      if (!inv_ok) rep.fail("involution", w(a, f) + " is not matched by its partner");
      for (int v = 0; v < 4; ++v)
        if (tet_vertex_ideal(v) != tet_vertex_ideal(p[v]))
          rep.fail("roles", w(a, f) + " sends vertex " + std::to_string(v) + " to a vertex of another role");
    }
  if (!rep.ok) return rep;
  // walk around every edge
  std::set<std::pair<int, int>> done;
  for (int a = 0; a < n; ++a)
    for (int e = 0; e < 6; ++e) {
      if (done.count({a, e})) continue;
      int i = kEdges[e][0], j = kEdges[e][1];
      int x = 0;
      while (x == i || x == j) ++x;
      int ct = a, ci = i, cj = j, cx = x;
      bool closed = false;
      for (int step = 0; step <= 6 * n; ++step) {
        done.insert({ct, tet_edge_index(ci, cj)});
        auto& p = t.tets[ct].perm[cx];
        int nt = t.tets[ct].neighbor[cx];
        int ni = p[ci], nj = p[cj], entry = p[cx];
        int nx = 6 - ni - nj - entry;
        ct = nt;
        ci = ni;
        cj = nj;
        cx = nx;
        if (ct == a && tet_edge_index(ci, cj) == e) {
          if (ci != i) rep.fail("edge-class", "edge " + std::to_string(e) + " of tet " + std::to_string(a) + " is identified with itself reversed");
          closed = true;
          break;
        }
      }
      if (!closed) rep.fail("edge-class", "edge " + std::to_string(e) + " of tet " + std::to_string(a) + " does not close up");
    }
  for (size_t o = 0; o < t.crossing_arc_class.size(); ++o) {
    int cnt = 0;
    for (int a = 0; a < n; ++a)
      for (int e = 0; e < 6; ++e)
        if (t.edge_class[a][e] == t.crossing_arc_class[o]) ++cnt;
    if (cnt != 4) rep.fail("crossing-arc", "octahedron " + std::to_string(o) + " arc class has " + std::to_string(cnt) + " edges");
  }
  return rep;
}

std::map<int, std::vector<int>> region_bipyramids(const Triangulation& t, const SurfaceDiagram& d) {
  std::map<int, std::vector<int>> out;
  for (auto& r : d.regions) {
    auto& c0 = r.corners[0];
    int cls = t.edge_class[4 * c0.crossing + c0.corner][5];
    auto& g = out[r.id];
    for (int a = 0; a < t.size(); ++a)
      if (t.edge_class[a][5] == cls) g.push_back(a);
  }
  return out;
}

ChainComplex barycentric_chain_complex(const Triangulation& t) {
  const int n = t.size();
  // chains of nonempty vertex subsets (4-bit masks), increasing by inclusion
  std::vector<std::vector<int>> chains;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& ch) {
    chains.push_back(ch);
    for (int m = 1; m < 16; ++m)
      if ((m & ch.back()) == ch.back() && m != ch.back()) {
        ch.push_back(m);
        grow(ch);
        ch.pop_back();
      }
  };
  for (int m = 1; m < 16; ++m) {
    if (m == 1 || m == 2) continue;  // ideal vertices removed
    std::vector<int> ch{m};
    grow(ch);
  }
  std::map<std::vector<int>, int> local;
  for (size_t i = 0; i < chains.size(); ++i) local[chains[i]] = static_cast<int>(i);
  const int C = static_cast<int>(chains.size());
  DSU dsu(n * C);
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < 4; ++f) {
      int fm = 15 ^ (1 << f);
      int b = t.tets[a].neighbor[f];
      auto& p = t.tets[a].perm[f];
      for (int i = 0; i < C; ++i) {
        if ((chains[i].back() & fm) != chains[i].back()) continue;
        std::vector<int> img;
        for (int m : chains[i]) {
          int im = 0;
          for (int v = 0; v < 4; ++v)
            if (m >> v & 1) im |= 1 << p[v];
          img.push_back(im);
        }
        dsu.unite(a * C + i, b * C + local.at(img));
      }
    }
  std::vector<std::map<int, int>> gid(4);
  ChainComplex cc;
  cc.dims.assign(4, 0);
  std::vector<int> id_of(n * C);
  for (int x = 0; x < n * C; ++x) {
    int d = static_cast<int>(chains[x % C].size()) - 1;
    auto [it, ins] = gid[d].emplace(dsu.find(x), cc.dims[d]);
    if (ins) ++cc.dims[d];
    id_of[x] = it->second;
  }
  cc.boundary.resize(4);
  for (int d = 1; d < 4; ++d) cc.boundary[d] = SparseIntMatrix(cc.dims[d - 1], cc.dims[d]);
  std::vector<std::set<int>> emitted(4);
  for (int x = 0; x < n * C; ++x) {
    auto& ch = chains[x % C];
    int d = static_cast<int>(ch.size()) - 1;
    if (d == 0 || !emitted[d].insert(id_of[x]).second) continue;
    int a = x / C;
    for (int i = 0; i <= d; ++i) {
      std::vector<int> face = ch;
      face.erase(face.begin() + i);
      cc.boundary[d].add(id_of[a * C + local.at(face)], id_of[x], (i % 2) ? -1 : 1);
    }
  }
  return cc;
}

HomologyResult homology(const Triangulation& t) { return compute_homology(barycentric_chain_complex(t)); }

namespace {
std::string perm_code(const std::array<int, 4>& p) {
  std::string s;
  for (int v : p) s += static_cast<char>('0' + v);
  return s;
}
}  // namespace

std::string export_gluing_table(const Triangulation& t) {
  std::ostringstream o;
  o << "octa-tri v1\n";
  o << "tetrahedra " << t.size() << "\n";
  o << "vertex-roles 0=ideal-over 1=ideal-under 2=truncated 3=truncated\n";
  for (int a = 0; a < t.size(); ++a) {
    auto& T = t.tets[a];
    o << a;
    for (int f = 0; f < 4; ++f) o << ' ' << T.neighbor[f];
    for (int f = 0; f < 4; ++f) o << ' ' << perm_code(T.perm[f]);
    o << ' ' << T.oct << '.' << T.quadrant << '\n';
  }
  return o.str();
}

Triangulation parse_gluing_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto bad = [](const std::string& why) { return ParseError("octa-tri: " + why); };
  if (!std::getline(in, line) || line != "octa-tri v1") throw bad("missing header");
  int n = -1;
  if (!std::getline(in, line) || std::sscanf(line.c_str(), "tetrahedra %d", &n) != 1 || n < 0) throw bad("missing tetrahedra count");
  if (!std::getline(in, line) || line.rfind("vertex-roles", 0) != 0) throw bad("missing vertex-roles line");
  Triangulation t;
  t.tets.resize(n);
  for (int a = 0; a < n; ++a) {
    if (!std::getline(in, line)) throw bad("expected " + std::to_string(n) + " tetrahedron lines");
    std::istringstream ls(line);
    int id;
    std::string codes[4], src;
    auto& T = t.tets[a];
    if (!(ls >> id >> T.neighbor[0] >> T.neighbor[1] >> T.neighbor[2] >> T.neighbor[3] >> codes[0] >> codes[1] >> codes[2] >>
          codes[3] >> src) ||
        id != a)
      throw bad("malformed line " + std::to_string(a + 4));
    for (int f = 0; f < 4; ++f) {
      if (codes[f].size() != 4) throw bad("bad permutation code " + codes[f]);
      for (int v = 0; v < 4; ++v) {
        int x = codes[f][v] - '0';
        if (x < 0 || x > 3) throw bad("bad permutation code " + codes[f]);
        T.perm[f][v] = x;
      }
    }
    if (std::sscanf(src.c_str(), "%d.%d", &T.oct, &T.quadrant) != 2) throw bad("bad source " + src);
  }
  t.compute_edge_classes();
  return t;
}

}  // namespace octacube
