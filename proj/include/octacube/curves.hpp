#pragma once
// Closed curves on the diagram surface that cross diagram edges transversally,
// and the cut-and-Euler test deciding whether such a curve is contractible.

#include <vector>

#include "octacube/diagram.hpp"

namespace octacube {

// Crossing of edge `edge`, going from the region on side `from_side` to the other side.
struct Dart {
  int edge = -1;
  int from_side = 0;
  bool operator==(const Dart&) const = default;
};

struct CutResult {
  bool realizable = false;       // simple realization with one point per crossed edge
  int boundary_circles = 0;      // 2 for a two-sided curve, 1 for one-sided
  std::vector<int> component_chi;
  std::vector<int> component_crossings;
  bool contractible = false;
};

int dart_from(const SurfaceDiagram& d, Dart x);
int dart_to(const SurfaceDiagram& d, Dart x);

// curve: cyclic dart sequence with dart_to(curve[i]) == dart_from(curve[i+1])
CutResult cut_along(const SurfaceDiagram& d, const std::vector<Dart>& curve);

}  // namespace octacube
