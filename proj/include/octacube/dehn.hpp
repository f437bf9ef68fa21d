#pragma once
// Coned Dehn complex: cone points as vertices, one edge per region, one square per crossing.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "octacube/diagram.hpp"
#include "octacube/homology.hpp"
#include "octacube/iso.hpp"

namespace octacube {

struct DehnComplex {
  int num_vertices = 2;  // top/bottom; a single cone point on nonorientable surfaces
  struct Edge {
    int region;
    int tail, head;
    bool shaded;
  };
  struct Square {
    int crossing;
    std::array<int, 4> corner_vertex;  // vertex at strand end s
    std::array<int, 4> side_edge;      // side k joins ends k and k+1 through the region at corner k
    std::array<int, 4> side_sign;      // +1 when e_k -> e_{k+1} follows the edge orientation
  };
  std::vector<Edge> edges;  // index = region id
  std::vector<Square> squares;
};

DehnComplex coned_dehn_complex(const SurfaceDiagram& d, const CheckerboardColoring& col);

struct LinkGraph {
  int vertex = -1;
  std::vector<std::pair<int, int>> nodes;  // (edge, end) with end 0 = tail, 1 = head
  std::vector<std::array<int, 2>> edges;
  std::vector<std::pair<int, int>> edge_source;  // (square, strand end)
};
std::vector<LinkGraph> dehn_link_graphs(const DehnComplex& dc);

struct DehnVerdict {
  bool npc = true;
  std::vector<std::string> witnesses;
};
DehnVerdict dehn_npc_check(const DehnComplex& dc);

struct GroupPresentation {
  std::vector<std::string> generators;  // after the collapse
  std::vector<int> collapsed;           // regions whose edges form the spanning tree
  std::vector<std::vector<std::pair<int, int>>> relators;  // (generator index, exponent)
  std::vector<std::string> relator_names;
};
GroupPresentation group_presentation(const DehnComplex& dc);
SparseIntMatrix relator_matrix(const GroupPresentation& p);
HomologyGroup abelianization(const GroupPresentation& p);
std::string write_presentation(const GroupPresentation& p);

// incidence graph with corner nodes, comparable with retraction_image_graph
LabeledGraph dehn_incidence_graph(const DehnComplex& dc);

}  // namespace octacube
