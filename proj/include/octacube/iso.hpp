#pragma once
// Isomorphism of small vertex- and edge-coloured multigraphs (colour refinement + backtracking).
// Used to compare cell complexes through their incidence graphs.

#include <optional>
#include <tuple>
#include <vector>

namespace octacube {

struct LabeledGraph {
  int n = 0;
  std::vector<int> color;
  std::vector<std::tuple<int, int, int>> edges;  // undirected (u, v, label), multi-edges allowed
  int add_node(int c) {
    color.push_back(c);
    return n++;
  }
  void add_edge(int u, int v, int label = 0) { edges.emplace_back(u, v, label); }
};

// map[i] = node of b matched with node i of a
std::optional<std::vector<int>> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b);
inline bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace octacube
