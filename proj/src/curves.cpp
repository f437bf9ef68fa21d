#include "octacube/curves.hpp"

#include <map>
#include <numeric>

namespace octacube {

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// cyclic "strictly between" on positions of a polygon
bool between(int a, int x, int b, int n) {
  int dx = ((x - a) % n + n) % n, db = ((b - a) % n + n) % n;
  return dx > 0 && dx < db;
}

}  // namespace

int dart_from(const SurfaceDiagram& d, Dart x) { return d.edge_side_region[x.edge][x.from_side]; }
int dart_to(const SurfaceDiagram& d, Dart x) { return d.edge_side_region[x.edge][1 - x.from_side]; }

CutResult cut_along(const SurfaceDiagram& d, const std::vector<Dart>& curve) {
  CutResult res;
  const int m = static_cast<int>(curve.size());
  const int E = d.num_edges();
  if (m == 0) return res;
  std::vector<int> cut_index(E, -1);
  for (int i = 0; i < m; ++i) {
    if (cut_index[curve[i].edge] >= 0) return res;  // edge crossed twice
    cut_index[curve[i].edge] = i;
    if (dart_to(d, curve[i]) != dart_from(d, curve[(i + 1) % m])) return res;
  }
  // position of each edge side on its region polygon
  std::vector<std::array<int, 2>> pos(E, {-1, -1});
  for (auto& r : d.regions)
    for (int i = 0; i < r.degree(); ++i) pos[r.sides[i].edge][r.sides[i].side] = i;

  // chord i lies in region to(curve[i]) from point of curve[i] to point of curve[i+1]
  struct Chord {
    int region, p, q;  // positions
  };
  std::vector<Chord> chords(m);
  std::vector<std::vector<int>> chords_in(d.num_regions());
  for (int i = 0; i < m; ++i) {
    const Dart& x = curve[i];
    const Dart& y = curve[(i + 1) % m];
    int r = dart_to(d, x);
    chords[i] = {r, pos[x.edge][1 - x.from_side], pos[y.edge][y.from_side]};
    chords_in[r].push_back(i);
  }
  for (int r = 0; r < d.num_regions(); ++r) {
    int n = d.regions[r].degree();
    auto& cs = chords_in[r];
    for (size_t a = 0; a < cs.size(); ++a)
      for (size_t b = a + 1; b < cs.size(); ++b) {
        auto& A = chords[cs[a]];
        auto& B = chords[cs[b]];
        if (between(A.p, B.p, A.q, n) != between(A.p, B.q, A.q, n)) return res;
      }
  }
  res.realizable = true;

  // segments: (region, position, part) ; part 0 = whole, 1 = first half, 2 = second half
  std::map<std::array<int, 3>, int> seg_id;
  std::vector<std::array<int, 3>> segs;
  auto sid = [&](int r, int p, int part) {
    auto key = std::array<int, 3>{r, p, part};
    auto it = seg_id.find(key);
    if (it != seg_id.end()) return it->second;
    int id = static_cast<int>(segs.size());
    seg_id[key] = id;
    segs.push_back(key);
    return id;
  };
  // chord endpoint lookup: (region, position) -> chord partner position
  std::map<std::pair<int, int>, int> partner;
  for (auto& ch : chords) {
    partner[{ch.region, ch.p}] = ch.q;
    partner[{ch.region, ch.q}] = ch.p;
  }
  DSU pieces(0);
  std::vector<int> seg_piece;
  int npieces = 0;
  for (int r = 0; r < d.num_regions(); ++r) {
    const Region& R = d.regions[r];
    int n = R.degree();
    // item list around the polygon: segments and points
    struct Item {
      bool point;
      int pos;
      int seg;
    };
    std::vector<Item> items;
    std::map<int, int> point_item;
    for (int p = 0; p < n; ++p) {
      bool cut = cut_index[R.sides[p].edge] >= 0;
      if (!cut) {
        items.push_back({false, p, sid(r, p, 0)});
      } else {
        items.push_back({false, p, sid(r, p, 1)});
        point_item[p] = static_cast<int>(items.size());
        items.push_back({true, p, -1});
        items.push_back({false, p, sid(r, p, 2)});
      }
    }
    const int ni = static_cast<int>(items.size());
    std::vector<int> item_piece(ni, -1);
    for (int s = 0; s < ni; ++s) {
      if (items[s].point || item_piece[s] >= 0) continue;
      int pc = npieces++;
      int i = s;
      while (true) {
        item_piece[i] = pc;
        int nx = (i + 1) % ni;
        if (items[nx].point) {
          int other = partner.at({r, items[nx].pos});
          nx = (point_item.at(other) + 1) % ni;
        }
        if (nx == s) break;
        i = nx;
      }
    }
    for (int i = 0; i < ni; ++i)
      if (!items[i].point) {
        if (static_cast<int>(seg_piece.size()) <= items[i].seg) seg_piece.resize(items[i].seg + 1, -1);
        seg_piece[items[i].seg] = item_piece[i];
      }
  }
  seg_piece.resize(segs.size(), -1);
  pieces = DSU(npieces);

  // which segment of side (e,side) holds half h (h = edge end the half touches)
  auto piece_of = [&](int e, int side, int h) {
    int r = d.edge_side_region[e][side];
    int p = pos[e][side];
    if (cut_index[e] < 0) return seg_piece[seg_id.at({r, p, 0})];
    int from = d.regions[r].sides[p].from_end;
    int part = (h == from) ? 1 : 2;
    return seg_piece[seg_id.at({r, p, part})];
  };
  for (int e = 0; e < E; ++e)
    for (int h = 0; h < 2; ++h) pieces.unite(piece_of(e, 0, h), piece_of(e, 1, h));

  std::map<int, int> comp_index;
  for (int pc = 0; pc < npieces; ++pc) comp_index.emplace(pieces.find(pc), static_cast<int>(comp_index.size()));
  const int K = static_cast<int>(comp_index.size());
  auto comp = [&](int pc) { return comp_index.at(pieces.find(pc)); };
  std::vector<long> V(K, 0), Ecount(K, 0), F(K, 0);
  std::vector<int> crossings(K, 0);
  for (int pc = 0; pc < npieces; ++pc) F[comp(pc)]++;
  for (int e = 0; e < E; ++e) {
    if (cut_index[e] < 0) {
      Ecount[comp(piece_of(e, 0, 0))]++;
    } else {
      for (int h = 0; h < 2; ++h) {
        Ecount[comp(piece_of(e, 0, h))]++;  // half edge
        V[comp(piece_of(e, 0, h))]++;       // copy of the cut point on that bank
      }
    }
  }
  for (int v = 0; v < d.c(); ++v) {
    auto [e, j] = d.slot_edge[v][0];
    int k = comp(piece_of(e, 0, j));
    V[k]++;
    crossings[k]++;
  }
  // chord copies and boundary circles; node (i, h) = copy of the point on curve[i].edge at half h
  DSU circles(2 * m);
  for (int i = 0; i < m; ++i) {
    const Dart& x = curve[i];
    const Dart& y = curve[(i + 1) % m];
    int r = chords[i].region;
    int fx = d.regions[r].sides[chords[i].p].from_end;
    int fy = d.regions[r].sides[chords[i].q].from_end;
    // piece X holds first half at p and second half at q; piece Y the opposite
    int px = seg_piece[seg_id.at({r, chords[i].p, 1})];
    int py = seg_piece[seg_id.at({r, chords[i].p, 2})];
    Ecount[comp(px)]++;
    Ecount[comp(py)]++;
    int hx_p = fx, hx_q = 1 - fy;
    int hy_p = 1 - fx, hy_q = fy;
    circles.unite(2 * i + hx_p, 2 * ((i + 1) % m) + hx_q);
    circles.unite(2 * i + hy_p, 2 * ((i + 1) % m) + hy_q);
    (void)x;
    (void)y;
  }
  int nc = 0;
  for (int i = 0; i < 2 * m; ++i)
    if (circles.find(i) == i) ++nc;
  res.boundary_circles = nc;
  for (int k = 0; k < K; ++k) {
    res.component_chi.push_back(static_cast<int>(V[k] - Ecount[k] + F[k]));
    res.component_crossings.push_back(crossings[k]);
  }
  res.contractible = false;
  if (nc == 2)
    for (int k = 0; k < K; ++k)
      if (res.component_chi[k] == 1) res.contractible = true;
  return res;
}

}  // namespace octacube
