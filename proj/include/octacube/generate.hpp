#pragma once
// Alternating diagrams as medial graphs of cellularly embedded graphs.

#include <vector>

#include "octacube/diagram.hpp"

namespace octacube {

// Half-edge h belongs to edge h/2; h even is the canonical half, h^1 its twin.
// next[h] is the half-edge after h counterclockwise around its base vertex (in that vertex's chart).
struct RotationGraph {
  std::vector<int> next;
  std::vector<bool> flipped;  // per edge: the charts at the two ends disagree
  int num_edges() const { return static_cast<int>(flipped.size()); }
};

// Medial (Tait) diagram: one crossing per edge of g, all crossings over=02, always alternating.
SurfaceDiagram medial_diagram(const RotationGraph& g);

// Square-tiled surface given by right/up neighbour permutations, each square cut into k x k.
RotationGraph square_tiled_graph(const std::vector<int>& right, const std::vector<int>& up, int k = 1);

}  // namespace octacube
