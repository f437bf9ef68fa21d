#include "octacube/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "octacube/curves.hpp"

namespace octacube {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

HalfEdgeSlot parse_slot(const std::string& tok, const std::map<std::string, int>& ids, int line) {
  auto dot = tok.rfind('.');
  auto fail = [&](const std::string& why) {
    throw ParseError("line " + std::to_string(line) + ": " + why + " '" + tok + "'");
  };
  if (dot == std::string::npos || dot == 0 || dot + 1 >= tok.size()) fail("bad slot reference");
  auto it = ids.find(tok.substr(0, dot));
  if (it == ids.end()) fail("unknown crossing in");
  std::string s = tok.substr(dot + 1);
  if (s.size() != 1 || s[0] < '0' || s[0] > '3') fail("slot must be 0..3 in");
  return {it->second, s[0] - '0'};
}

}  // namespace

HalfEdgeSlot SurfaceDiagram::other_end(int crossing, int slot) const {
  auto [e, j] = slot_edge[crossing][slot];
  return edges[e].ends[1 - j];
}

int SurfaceDiagram::crossing_index(const std::string& id) const {
  for (int i = 0; i < c(); ++i)
    if (crossings[i].id == id) return i;
  return -1;
}

SurfaceDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool header = false;
  SurfaceDiagram d;
  std::map<std::string, int> cids;
  std::map<std::string, int> eids;
  struct PendingEdge {
    std::string id, a, b;
    bool flip;
    int line;
  };
  std::vector<PendingEdge> pending;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line = trim(line.substr(3));
    if (!header) {
      if (line != "surface-diagram v1") throw ParseError("line 1: expected header 'surface-diagram v1'");
      header = true;
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    auto fail = [&](const std::string& why) { throw ParseError("line " + std::to_string(lineno) + ": " + why); };
    if (tok[0] == "crossing") {
      if (tok.size() != 3) fail("expected 'crossing <id> over=<02|13>'");
      if (cids.count(tok[1])) fail("duplicate crossing id " + tok[1]);
      if (tok[2] != "over=02" && tok[2] != "over=13") fail("expected over=02 or over=13");
      cids[tok[1]] = d.c();
      d.crossings.push_back({tok[1], tok[2] == "over=02"});
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 && tok.size() != 5) fail("expected 'edge <id> <cid>.<slot> <cid>.<slot> [flip]'");
      if (tok.size() == 5 && tok[4] != "flip") fail("unexpected token " + tok[4]);
      if (eids.count(tok[1])) fail("duplicate edge id " + tok[1]);
      eids[tok[1]] = static_cast<int>(pending.size());
      pending.push_back({tok[1], tok[2], tok[3], tok.size() == 5, lineno});
    } else {
      fail("unknown record '" + tok[0] + "'");
    }
  }
  if (!header) throw ParseError("empty input");
  if (d.crossings.empty()) throw ParseError("no crossings");
  std::vector<std::array<int, 4>> used(d.c(), {-1, -1, -1, -1});
  for (auto& p : pending) {
    DiagramEdge e;
    e.id = p.id;
    e.ends[0] = parse_slot(p.a, cids, p.line);
    e.ends[1] = parse_slot(p.b, cids, p.line);
    e.flipped = p.flip;
    e.midpoint = d.num_edges();
    for (auto& h : e.ends) {
      if (used[h.crossing][h.slot] >= 0)
        throw ParseError("line " + std::to_string(p.line) + ": duplicate slot use " + d.crossings[h.crossing].id + "." +
                         std::to_string(h.slot));
      used[h.crossing][h.slot] = d.num_edges();
    }
    d.edges.push_back(e);
  }
  d.finalize();
  return d;
}

void SurfaceDiagram::finalize() {
  const int n = c();
  if (n == 0) throw ValidationError("diagram has no crossings");
  slot_edge.assign(n, {});
  std::vector<std::array<int, 4>> cnt(n, {0, 0, 0, 0});
  for (auto& row : slot_edge) row.fill({-1, -1});
  for (int e = 0; e < num_edges(); ++e) {
    edges[e].midpoint = e;
    for (int j = 0; j < 2; ++j) {
      auto h = edges[e].ends[j];
      if (h.crossing < 0 || h.crossing >= n || h.slot < 0 || h.slot > 3) throw ValidationError("edge end out of range");
      cnt[h.crossing][h.slot]++;
      slot_edge[h.crossing][h.slot] = {e, j};
    }
  }
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 4; ++s)
      if (cnt[v][s] != 1)
        throw ValidationError("slot " + crossings[v].id + "." + std::to_string(s) + " used " + std::to_string(cnt[v][s]) +
                              " times");
  // connectivity
  std::vector<int> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      int w = other_end(v, s).crossing;
      if (!seen[w]) seen[w] = 1, stack.push_back(w);
    }
  }
  if (std::count(seen.begin(), seen.end(), 0)) throw ValidationError("diagram is not connected");

  regions = trace_faces(*this);
  corner_region.assign(n, {-1, -1, -1, -1});
  corner_sign.assign(n, {0, 0, 0, 0});
  for (auto& r : regions)
    for (size_t i = 0; i < r.corners.size(); ++i) {
      corner_region[r.corners[i].crossing][r.corners[i].corner] = r.id;
      corner_sign[r.corners[i].crossing][r.corners[i].corner] = r.corner_signs[i];
    }
  edge_side_region.assign(num_edges(), {-1, -1});
  for (int e = 0; e < num_edges(); ++e) {
    auto h = edges[e].ends[0];
    edge_side_region[e][0] = corner_region[h.crossing][h.slot];
    edge_side_region[e][1] = corner_region[h.crossing][mod4(h.slot - 1)];
  }
  chi = num_regions() - n;

  // orientability: chart signs with sign(e) = s(u) s(w)
  chart_sign.assign(n, 0);
  orientable = true;
  chart_sign[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty() && orientable) {
    int v = q.front();
    q.pop();
    for (int s = 0; s < 4; ++s) {
      auto [e, j] = slot_edge[v][s];
      int w = edges[e].ends[1 - j].crossing;
      int want = chart_sign[v] * edge_sign(e);
      if (chart_sign[w] == 0) {
        chart_sign[w] = want;
        q.push(w);
      } else if (chart_sign[w] != want) {
        orientable = false;
      }
    }
  }
  if (!orientable) chart_sign.clear();

  // link components by following strands straight through
  components.clear();
  std::vector<char> used(num_edges(), 0);
  for (int e0 = 0; e0 < num_edges(); ++e0) {
    if (used[e0]) continue;
    std::vector<StrandVisit> comp;
    int e = e0, j = 0;
    while (true) {
      used[e] = 1;
      auto arr = edges[e].ends[1 - j];
      comp.push_back({arr.crossing, arr.slot, e});
      auto [ne, nj] = slot_edge[arr.crossing][mod4(arr.slot + 2)];
      e = ne;
      j = nj;
      if (e == e0 && j == 0) break;
      if (used[e]) throw ValidationError("internal: strand walk revisited an edge");
    }
    components.push_back(std::move(comp));
  }
}

std::vector<Region> trace_faces(const SurfaceDiagram& d) {
  const int n = d.c();
  std::vector<std::array<int, 4>> assigned(n, {-1, -1, -1, -1});
  std::vector<Region> out;
  for (int v0 = 0; v0 < n; ++v0)
    for (int k0 = 0; k0 < 4; ++k0) {
      if (assigned[v0][k0] >= 0) continue;
      Region r;
      r.id = static_cast<int>(out.size());
      int v = v0, k = k0, eps = 1;
      while (true) {
        assigned[v][k] = r.id;
        r.corners.push_back({v, k});
        r.corner_signs.push_back(eps);
        int out_slot = eps > 0 ? mod4(k + 1) : k;
        auto [e, j] = d.slot_edge[v][out_slot];
        int side = j == 0 ? (eps > 0 ? 1 : 0) : (eps * d.edge_sign(e) > 0 ? 0 : 1);
        r.sides.push_back({e, side, j});
        auto arr = d.edges[e].ends[1 - j];
        eps *= d.edge_sign(e);
        v = arr.crossing;
        k = eps > 0 ? arr.slot : mod4(arr.slot - 1);
        if (v == v0 && k == k0) {
          if (eps != 1) throw ValidationError("internal: face walk closed with reversed orientation");
          break;
        }
        if (assigned[v][k] >= 0) throw ValidationError("internal: face walk hit an assigned corner");
      }
      out.push_back(std::move(r));
    }
  return out;
}

DualGraph dual_graph(const SurfaceDiagram& d) {
  DualGraph g;
  g.num_vertices = d.num_regions();
  for (int e = 0; e < d.num_edges(); ++e)
    g.edges.push_back({d.edge_side_region[e][0], d.edge_side_region[e][1], d.edges[e].midpoint});
  return g;
}

bool is_alternating(const SurfaceDiagram& d) {
  for (auto& comp : d.components) {
    const size_t m = comp.size();
    for (size_t i = 0; i < m; ++i) {
      auto& a = comp[(i + m - 1) % m];
      auto& b = comp[i];
      bool oa = d.slot_is_over(a.crossing, a.in_slot);
      bool ob = d.slot_is_over(b.crossing, b.in_slot);
      if (!(oa ^ ob ^ d.edges[b.in_edge].flipped)) return false;
    }
  }
  return true;
}

bool is_reduced(const SurfaceDiagram& d) {
  for (int v = 0; v < d.c(); ++v)
    if (d.corner_region[v][0] == d.corner_region[v][2] || d.corner_region[v][1] == d.corner_region[v][3]) return false;
  return true;
}

std::optional<CheckerboardColoring> try_checkerboard_coloring(const SurfaceDiagram& d) {
  const int R = d.num_regions();
  std::vector<std::vector<int>> adj(R);
  for (int e = 0; e < d.num_edges(); ++e) {
    int a = d.edge_side_region[e][0], b = d.edge_side_region[e][1];
    if (a == b) return std::nullopt;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> col(R, -1);
  int start = d.corner_region[0][0];
  col[start] = 1;
  std::queue<int> q;
  q.push(start);
  while (!q.empty()) {
    int r = q.front();
    q.pop();
    for (int s : adj[r]) {
      if (col[s] < 0) {
        col[s] = 1 - col[r];
        q.push(s);
      } else if (col[s] == col[r]) {
        return std::nullopt;
      }
    }
  }
  CheckerboardColoring out;
  out.shaded.resize(R);
  for (int r = 0; r < R; ++r) out.shaded[r] = col[r] == 1;
  return out;
}

CheckerboardColoring checkerboard_coloring(const SurfaceDiagram& d) {
  auto c = try_checkerboard_coloring(d);
  if (!c) throw NotColorable("diagram is not checkerboard colorable (odd cycle or loop in the dual graph)");
  return *c;
}

std::string Representativity::to_string() const {
  switch (kind) {
    case Value:
      return std::to_string(value);
    case NoEssentialCurve:
      return "no essential curve";
    case AboveBound:
      return ">=" + std::to_string(max_len + 1);
  }
  return "";
}

int default_max_curve_length(const SurfaceDiagram& d) { return 2 * (d.c() + std::abs(d.chi)) + 4; }

Representativity edge_representativity(const SurfaceDiagram& d, int max_len) {
  Representativity res;
  res.max_len = max_len;
  if (d.is_sphere()) {
    res.kind = Representativity::NoEssentialCurve;
    return res;
  }
  const int R = d.num_regions();
  // darts leaving each region
  std::vector<std::vector<Dart>> out(R);
  for (int e = 0; e < d.num_edges(); ++e)
    for (int s = 0; s < 2; ++s) out[d.edge_side_region[e][s]].push_back({e, s});

  std::vector<Dart> path;
  std::vector<char> on_path(R, 0);
  // vertex-simple cycles through `start` using only regions >= start
  auto search = [&](auto&& self, int start, int at, int len) -> bool {
    for (const Dart& x : out[at]) {
      int to = dart_to(d, x);
      if (to < start) continue;
      if (static_cast<int>(path.size()) + 1 == len) {
        if (to != start) continue;
        if (!path.empty() && path.front().edge == x.edge) continue;
        path.push_back(x);
        bool ess = false;
        auto cr = cut_along(d, path);
        if (cr.realizable && !cr.contractible) ess = true;
        path.pop_back();
        if (ess) return true;
      } else {
        if (to == start || on_path[to]) continue;
        on_path[to] = 1;
        path.push_back(x);
        bool found = self(self, start, to, len);
        path.pop_back();
        on_path[to] = 0;
        if (found) return true;
      }
    }
    return false;
  };
  for (int len = 1; len <= max_len; ++len)
    for (int s = 0; s < R; ++s) {
      on_path.assign(R, 0);
      on_path[s] = 1;
      if (search(search, s, s, len)) {
        res.kind = Representativity::Value;
        res.value = len;
        return res;
      }
    }
  res.kind = Representativity::AboveBound;
  return res;
}

WeakPrimeResult weak_primeness(const SurfaceDiagram& d) {
  WeakPrimeResult res;
  const int E = d.num_edges();
  for (int a = 0; a < E; ++a)
    for (int b = a + 1; b < E; ++b) {
      auto ra = d.edge_side_region[a], rb = d.edge_side_region[b];
      std::vector<std::vector<Dart>> curves;
      for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb) {
          Dart x{a, sa}, y{b, sb};
          if (dart_to(d, x) == dart_from(d, y) && dart_to(d, y) == dart_from(d, x)) curves.push_back({x, y});
        }
      (void)ra;
      (void)rb;
      for (auto& cv : curves) {
        auto cr = cut_along(d, cv);
        if (!cr.realizable || !cr.contractible) continue;
        bool every_disk_has_crossing = true;
        for (size_t i = 0; i < cr.component_chi.size(); ++i)
          if (cr.component_chi[i] == 1 && cr.component_crossings[i] == 0) every_disk_has_crossing = false;
        if (every_disk_has_crossing) {
          res.weakly_prime = false;
          res.witness_edges = {a, b};
          return res;
        }
      }
    }
  return res;
}

bool is_weakly_prime(const SurfaceDiagram& d, int) { return weak_primeness(d).weakly_prime; }

SurfaceDiagram relabel(const SurfaceDiagram& d, const std::vector<int>& perm, const std::vector<int>& eperm) {
  SurfaceDiagram out;
  out.crossings.resize(d.c());
  for (int i = 0; i < d.c(); ++i) out.crossings[perm[i]] = d.crossings[i];
  out.edges.resize(d.num_edges());
  for (int e = 0; e < d.num_edges(); ++e) {
    DiagramEdge x = d.edges[e];
    for (auto& h : x.ends) h.crossing = perm[h.crossing];
    out.edges[eperm[e]] = x;
  }
  out.finalize();
  return out;
}

SurfaceDiagram switch_crossing(const SurfaceDiagram& d, int crossing) {
  SurfaceDiagram out;
  out.crossings = d.crossings;
  out.edges = d.edges;
  out.crossings[crossing].over02 = !out.crossings[crossing].over02;
  out.finalize();
  return out;
}

std::string write_diagram(const SurfaceDiagram& d) {
  std::ostringstream o;
  o << "surface-diagram v1\n";
  for (auto& x : d.crossings) o << "crossing " << x.id << " over=" << (x.over02 ? "02" : "13") << "\n";
  for (auto& e : d.edges) {
    o << "edge " << e.id << " " << d.crossings[e.ends[0].crossing].id << "." << e.ends[0].slot << " "
      << d.crossings[e.ends[1].crossing].id << "." << e.ends[1].slot;
    if (e.flipped) o << " flip";
    o << "\n";
  }
  return o.str();
}

SurfaceDiagram load_diagram(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_diagram(ss.str());
}

}  // namespace octacube
