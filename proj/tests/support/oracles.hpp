#pragma once
// Independent reimplementations used to check the library.

#include <optional>
#include <vector>

#include "octacube/cubes.hpp"
#include "octacube/diagram.hpp"

namespace oracle {

struct Surface {
  int faces = 0;
  int chi = 0;
  bool orientable = true;
  std::vector<int> degrees;  // sorted
};
// orbits of signed darts (crossing, slot, sense)
Surface trace(const octacube::SurfaceDiagram& d);

// orientable surfaces only: length of the shortest closed dual walk with a nonzero class in H1(S; Z),
// found by iterative deepening over all walks; nullopt on the sphere or when nothing is found up to max_len
std::optional<int> representativity(const octacube::SurfaceDiagram& d, int max_len);

// an edge with the same region on both sides gives a dual loop meeting the link once, which is
// essential by mod-2 intersection, so e <= 1
bool parity_bound_one(const octacube::SurfaceDiagram& d);

// simplicial and flag check by enumerating vertex triples and quadruples
octacube::FlagVerdict::Kind brute_flag(const octacube::VertexLink& l);

// three cubes pairwise sharing a square around one edge (the 3-squares-at-a-corner picture times I)
octacube::CubeComplex three_cubes_at_corner();

}  // namespace oracle
