#pragma once
// Four tetrahedra per octahedron, cut along the crossing arc.
// Tetrahedron 4A+k has vertices 0 = over cusp, 1 = under cusp, 2 = e_k, 3 = e_{k+1}.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "octacube/homology.hpp"
#include "octacube/octa.hpp"

namespace octacube {

struct Tetrahedron {
  int oct = -1;
  int quadrant = -1;
  std::array<int, 4> neighbor{};             // across the face opposite vertex f
  std::array<std::array<int, 4>, 4> perm{};  // perm[f][v]: vertex of the neighbour matched with v
  bool operator==(const Tetrahedron&) const = default;
};

bool tet_vertex_ideal(int v);  // 0, 1 ideal; 2, 3 truncated

struct Triangulation {
  std::vector<Tetrahedron> tets;
  // derived
  std::vector<std::array<int, 6>> edge_class;  // per tet edge (01,02,03,12,13,23)
  int num_edge_classes = 0;
  std::vector<int> crossing_arc_class;  // per octahedron
  int size() const { return static_cast<int>(tets.size()); }
  void compute_edge_classes();
};

int tet_edge_index(int i, int j);

Triangulation triangulate(const OctahedralDecomposition& od);
CheckReport validate_triangulation(const Triangulation& t);

// region -> tetrahedra around the region's vertical edge, found through edge classes
std::map<int, std::vector<int>> region_bipyramids(const Triangulation& t, const SurfaceDiagram& d);

// coned space: ideal vertices removed, computed on the barycentric subdivision
ChainComplex barycentric_chain_complex(const Triangulation& t);
HomologyResult homology(const Triangulation& t);

std::string export_gluing_table(const Triangulation& t);
Triangulation parse_gluing_table(const std::string& text);

}  // namespace octacube
