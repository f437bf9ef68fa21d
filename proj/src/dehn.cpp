#include "octacube/dehn.hpp"

#include <map>
#include <set>
#include <sstream>

namespace octacube {

DehnComplex coned_dehn_complex(const SurfaceDiagram& d, const CheckerboardColoring& col) {
  if (static_cast<int>(col.shaded.size()) != d.num_regions()) throw ValidationError("coloring does not match diagram");
  DehnComplex dc;
  dc.num_vertices = d.orientable ? 2 : 1;
  // frame sign: global chart on orientable surfaces, the region walk otherwise
  auto frame = [&](int A, int k) { return d.orientable ? d.chart_sign[A] : d.corner_sign[A][k]; };
  auto up_in_frame = [&](int A, int s, int sign) { return !d.slot_is_over(A, s) == (sign > 0); };
  for (int r = 0; r < d.num_regions(); ++r) {
    bool sh = col.shaded[r];
    if (d.orientable)
      dc.edges.push_back({r, sh ? 0 : 1, sh ? 1 : 0, sh});
    else
      dc.edges.push_back({r, 0, 0, sh});
  }
  for (int A = 0; A < d.c(); ++A) {
    DehnComplex::Square sq;
    sq.crossing = A;
    for (int s = 0; s < 4; ++s) sq.corner_vertex[s] = d.orientable ? (up_in_frame(A, s, d.chart_sign[A]) ? 0 : 1) : 0;
    for (int k = 0; k < 4; ++k) {
      int r = d.corner_region[A][k];
      sq.side_edge[k] = r;
      bool start_up = up_in_frame(A, k, frame(A, k));
      // shaded edges run from the up end to the down end
      sq.side_sign[k] = (start_up == static_cast<bool>(col.shaded[r])) ? 1 : -1;
    }
    dc.squares.push_back(sq);
  }
  return dc;
}

std::vector<LinkGraph> dehn_link_graphs(const DehnComplex& dc) {
  std::vector<LinkGraph> out(dc.num_vertices);
  std::vector<std::map<std::pair<int, int>, int>> ids(dc.num_vertices);
  auto node = [&](int v, std::pair<int, int> key) {
    auto [it, ins] = ids[v].emplace(key, static_cast<int>(out[v].nodes.size()));
    if (ins) out[v].nodes.push_back(key);
    return it->second;
  };
  for (int v = 0; v < dc.num_vertices; ++v) {
    out[v].vertex = v;
    for (auto& e : dc.edges) {
      if (e.tail == v) node(v, {e.region, 0});
      if (e.head == v) node(v, {e.region, 1});
    }
  }
  for (size_t q = 0; q < dc.squares.size(); ++q) {
    auto& sq = dc.squares[q];
    for (int s = 0; s < 4; ++s) {
      int v = sq.corner_vertex[s];
      int ka = (s + 3) % 4, kb = s;
      int end_a = sq.side_sign[ka] > 0 ? 1 : 0;  // arriving along side s-1
      int end_b = sq.side_sign[kb] > 0 ? 0 : 1;  // leaving along side s
      int a = node(v, {sq.side_edge[ka], end_a});
      int b = node(v, {sq.side_edge[kb], end_b});
      out[v].edges.push_back({a, b});
      out[v].edge_source.push_back({static_cast<int>(q), s});
    }
  }
  return out;
}

DehnVerdict dehn_npc_check(const DehnComplex& dc) {
  DehnVerdict res;
  for (auto& g : dehn_link_graphs(dc)) {
    std::string where = "link of vertex " + std::to_string(g.vertex) + ": ";
    std::vector<std::set<int>> adj(g.nodes.size());
    std::set<std::pair<int, int>> seen;
    for (size_t e = 0; e < g.edges.size(); ++e) {
      auto [a, b] = g.edges[e];
      auto src = "square " + std::to_string(g.edge_source[e].first) + " corner " + std::to_string(g.edge_source[e].second);
      if (a == b) {
        res.npc = false;
        res.witnesses.push_back(where + "loop from " + src);
        continue;
      }
      if (!seen.insert(std::minmax(a, b)).second) {
        res.npc = false;
        res.witnesses.push_back(where + "double edge (cycle of length 2) at " + src);
      }
      adj[a].insert(b);
      adj[b].insert(a);
    }
    for (size_t a = 0; a < adj.size(); ++a)
      for (int b : adj[a])
        for (int c : adj[b])
          if (static_cast<int>(a) < b && b < c && adj[a].count(c)) {
            res.npc = false;
            auto nm = [&](int x) { return "R" + std::to_string(g.nodes[x].first) + (g.nodes[x].second ? "+" : "-"); };
            res.witnesses.push_back(where + "triangle " + nm(static_cast<int>(a)) + " " + nm(b) + " " + nm(c));
          }
  }
  return res;
}

GroupPresentation group_presentation(const DehnComplex& dc) {
  GroupPresentation p;
  // spanning tree of the 1-skeleton: lowest region edge joining new vertices
  std::vector<bool> reached(dc.num_vertices, false);
  reached[0] = true;
  std::set<int> tree;
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto& e : dc.edges)
      if (reached[e.tail] != reached[e.head]) {
        tree.insert(e.region);
        reached[e.tail] = reached[e.head] = true;
        grew = true;
        break;
      }
  }
  std::map<int, int> gen;
  for (auto& e : dc.edges) {
    if (tree.count(e.region)) {
      p.collapsed.push_back(e.region);
      continue;
    }
    gen[e.region] = static_cast<int>(p.generators.size());
    p.generators.push_back("R" + std::to_string(e.region));
  }
  for (auto& sq : dc.squares) {
    std::vector<std::pair<int, int>> w;
    for (int k : {3, 0, 1, 2})
      if (gen.count(sq.side_edge[k])) w.push_back({gen[sq.side_edge[k]], sq.side_sign[k]});
    p.relators.push_back(w);
    p.relator_names.push_back("X" + std::to_string(sq.crossing));
  }
  return p;
}

SparseIntMatrix relator_matrix(const GroupPresentation& p) {
  SparseIntMatrix m(static_cast<int>(p.relators.size()), static_cast<int>(p.generators.size()));
  for (size_t r = 0; r < p.relators.size(); ++r)
    for (auto [g, e] : p.relators[r]) m.add(static_cast<int>(r), g, e);
  return m;
}

HomologyGroup abelianization(const GroupPresentation& p) { return abelian_group(relator_matrix(p)); }

std::string write_presentation(const GroupPresentation& p) {
  std::ostringstream o;
  o << "dehn-presentation v1\ngenerators";
  for (auto& g : p.generators) o << ' ' << g;
  o << "\ncollapsed";
  for (int r : p.collapsed) o << " R" << r;
  o << '\n';
  for (size_t r = 0; r < p.relators.size(); ++r) {
    o << "relator " << p.relator_names[r] << ':';
    for (auto [g, e] : p.relators[r]) o << ' ' << p.generators[g] << (e < 0 ? "^-1" : "");
    o << '\n';
  }
  return o.str();
}

LabeledGraph dehn_incidence_graph(const DehnComplex& dc) {
  LabeledGraph g;
  std::vector<int> vn, en;
  for (int v = 0; v < dc.num_vertices; ++v) vn.push_back(g.add_node(0));
  for (auto& e : dc.edges) {
    en.push_back(g.add_node(1));
    g.add_edge(en.back(), vn[e.tail], 0);
    g.add_edge(en.back(), vn[e.head], 0);
  }
  for (auto& sq : dc.squares) {
    int s = g.add_node(2);
    int corner[4];
    for (int k = 0; k < 4; ++k) {
      corner[k] = g.add_node(3);
      g.add_edge(s, corner[k], 0);
      g.add_edge(corner[k], vn[sq.corner_vertex[k]], 1);
      g.add_edge(corner[k], en[sq.side_edge[(k + 3) % 4]], 2);
      g.add_edge(corner[k], en[sq.side_edge[k]], 2);
    }
    for (int k = 0; k < 4; ++k) g.add_edge(corner[k], corner[(k + 1) % 4], 3);
  }
  return g;
}

}  // namespace octacube
