#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace oracle {

using namespace octacube;

namespace {
int m4(int x) { return ((x % 4) + 4) % 4; }
}

Surface trace(const SurfaceDiagram& d) {
  // dart state (crossing, slot, sense); walk the edge, then turn by sense at the far end
  std::set<std::array<int, 3>> seen;
  Surface s;
  std::vector<int> deg;
  for (int x = 0; x < d.c(); ++x)
    for (int sl = 0; sl < 4; ++sl)
      for (int sense : {1, -1}) {
        if (seen.count({x, sl, sense})) continue;
        int len = 0;
        int cx = x, cs = sl, ce = sense;
        while (!seen.count({cx, cs, ce})) {
          seen.insert({cx, cs, ce});
          int e = -1, end = -1;
          for (int i = 0; i < d.num_edges() && e < 0; ++i)
            for (int j = 0; j < 2; ++j)
              if (d.edges[i].ends[j].crossing == cx && d.edges[i].ends[j].slot == cs) {
                e = i;
                end = j;
                break;
              }
          auto far = d.edges[e].ends[1 - end];
          int ne = d.edges[e].flipped ? -ce : ce;
          cx = far.crossing;
          cs = m4(far.slot - ne);
          ce = ne;
          ++len;
        }
        deg.push_back(len);
      }
  // every face is traced once in each direction
  std::sort(deg.begin(), deg.end());
  for (size_t i = 0; i < deg.size(); i += 2) s.degrees.push_back(deg[i]);
  s.faces = static_cast<int>(s.degrees.size());
  s.chi = d.c() - d.num_edges() + s.faces;
  // orientability: 2-colour crossings so that every edge is flipped iff its ends differ
  std::vector<int> col(d.c(), 0);
  s.orientable = true;
  std::vector<int> st;
  for (int r = 0; r < d.c(); ++r) {
    if (col[r]) continue;
    col[r] = 1;
    st.push_back(r);
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (auto& e : d.edges) {
        int a = e.ends[0].crossing, b = e.ends[1].crossing;
        if (a != x && b != x) continue;
        int y = a == x ? b : a;
        int want = e.flipped ? -col[x] : col[x];
        if (!col[y]) {
          col[y] = want;
          st.push_back(y);
        } else if (col[y] != want) {
          s.orientable = false;
        }
      }
    }
  }
  return s;
}

std::optional<int> representativity(const SurfaceDiagram& d, int max_len) {
  auto surf = trace(d);
  if (!surf.orientable) return std::nullopt;
  if (surf.chi == 2) return std::nullopt;
  // spanning tree of the diagram graph; P[x] = chain from the root to x
  const int E = d.num_edges();
  std::vector<std::vector<int>> P(d.c());
  std::vector<bool> vis(d.c(), false), tree(E, false);
  std::vector<int> q{0};
  vis[0] = true;
  P[0].assign(E, 0);
  for (size_t h = 0; h < q.size(); ++h) {
    int x = q[h];
    for (int e = 0; e < E; ++e)
      for (int j = 0; j < 2; ++j) {
        if (d.edges[e].ends[j].crossing != x) continue;
        int y = d.edges[e].ends[1 - j].crossing;
        if (vis[y]) continue;
        vis[y] = true;
        tree[e] = true;
        P[y] = P[x];
        P[y][e] += j == 0 ? 1 : -1;
        q.push_back(y);
      }
  }
  // fundamental cycles g + P(a) - P(b) for non-tree g = a -> b
  std::vector<std::vector<int>> cyc;
  for (int g = 0; g < E; ++g) {
    if (tree[g]) continue;
    int a = d.edges[g].ends[0].crossing, b = d.edges[g].ends[1].crossing;
    std::vector<int> c(E);
    for (int e = 0; e < E; ++e) c[e] = P[a][e] - P[b][e];
    c[g] += 1;
    cyc.push_back(c);
  }
  const int K = static_cast<int>(cyc.size());
  // one dual step per (edge, side): crossing from side s to 1-s
  struct Step {
    int from, to;
    std::vector<int> cls;
  };
  std::vector<Step> steps;
  for (int e = 0; e < E; ++e) {
    int v0 = d.edges[e].ends[0].crossing;
    int sg = d.chart_sign.empty() ? 1 : d.chart_sign[v0];
    for (int s = 0; s < 2; ++s) {
      Step st{d.edge_side_region[e][s], d.edge_side_region[e][1 - s], std::vector<int>(K)};
      int iota = sg * (s == 0 ? 1 : -1);
      for (int k = 0; k < K; ++k) st.cls[k] = iota * cyc[k][e];
      steps.push_back(st);
    }
  }
  std::vector<int> acc(K, 0);
  std::function<bool(int, int, int)> dfs = [&](int start, int at, int left) -> bool {
    if (left == 0) return at == start && std::any_of(acc.begin(), acc.end(), [](int v) { return v != 0; });
    for (auto& st : steps) {
      if (st.from != at) continue;
      for (int k = 0; k < K; ++k) acc[k] += st.cls[k];
      bool hit = dfs(start, st.to, left - 1);
      for (int k = 0; k < K; ++k) acc[k] -= st.cls[k];
      if (hit) return true;
    }
    return false;
  };
  for (int L = 1; L <= max_len; ++L)
    for (int r = 0; r < d.num_regions(); ++r)
      if (dfs(r, r, L)) return L;
  return std::nullopt;
}

bool parity_bound_one(const SurfaceDiagram& d) {
  for (int e = 0; e < d.num_edges(); ++e)
    if (d.edge_side_region[e][0] == d.edge_side_region[e][1]) return true;
  return false;
}

FlagVerdict::Kind brute_flag(const VertexLink& l) {
  const int n = l.num_vertices;
  std::set<std::pair<int, int>> es;
  for (auto& e : l.edges) {
    if (e[0] == e[1]) return FlagVerdict::NotSimplicial;
    if (!es.insert(std::minmax(e[0], e[1])).second) return FlagVerdict::NotSimplicial;
  }
  std::set<std::array<int, 3>> ts;
  for (auto& t : l.triangles) {
    std::set<int> vs, ed(t.begin(), t.end());
    for (int i : t) {
      vs.insert(l.edges[i][0]);
      vs.insert(l.edges[i][1]);
    }
    if (vs.size() != 3 || ed.size() != 3) return FlagVerdict::NotSimplicial;
    std::array<int, 3> key;
    std::copy(vs.begin(), vs.end(), key.begin());
    if (!ts.insert(key).second) return FlagVerdict::NotSimplicial;
  }
  auto adj = [&](int a, int b) { return es.count(std::minmax(a, b)) > 0; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (adj(a, b) && adj(b, c) && adj(a, c) && !ts.count({a, b, c})) return FlagVerdict::NotFlag;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e)
          if (adj(a, b) && adj(a, c) && adj(a, e) && adj(b, c) && adj(b, e) && adj(c, e)) return FlagVerdict::NotFlag;
  return FlagVerdict::Flag;
}

CubeComplex three_cubes_at_corner() {
  // face x=0 of cube i to face y=0 of cube i+1; corners matched (y,z) -> (x,z)
  std::vector<CubeGluing> g;
  for (int i = 0; i < 3; ++i) g.push_back({i, face_index(0, 2, 2), (i + 1) % 3, face_index(2, 0, 2), {0, 1, 2, 3}});
  return assemble_cube_complex(3, g);
}

}  // namespace oracle
