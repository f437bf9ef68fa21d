#pragma once
// Orientable double cover of a diagram on a nonorientable surface.
// Lift (A, sheet) of crossing A has index 2A+sheet. On sheet 1 the chart is mirrored:
// cover slot s sits over base slot -s and heights are reversed.

#include <array>
#include <string>
#include <vector>

#include "octacube/cubes.hpp"
#include "octacube/octa.hpp"

namespace octacube {

struct CoverMap {
  SurfaceDiagram base;
  SurfaceDiagram cover;
  std::vector<std::array<int, 2>> crossing_lift, edge_lift, region_lift;  // base cell -> lifts by sheet
  std::vector<int> crossing_proj, edge_proj, region_proj;                 // cover cell -> base cell
  std::vector<int> crossing_sheet;
  std::vector<int> deck_crossing, deck_edge, deck_region;
  std::optional<CheckerboardColoring> lifted_coloring;  // pulled back from the base, when it has one
};

int cover_slot_to_base(int sheet, int slot);
int cover_corner_to_base(int sheet, int corner);

// throws ValidationError on orientable input
CoverMap orientable_double_cover(const SurfaceDiagram& d);
// counts, orientability, projection and deck involution, cell by cell
CheckReport validate_cover(const CoverMap& cm);

struct LiftedDecomposition {
  OctahedralDecomposition base;
  OctahedralDecomposition cover;
  std::vector<int> oct_proj, deck_oct;
  CheckReport projection;  // projection commutes with every face gluing, roles and regions agree
};
LiftedDecomposition lift_decomposition(const CoverMap& cm);

// cube-level projection between the cover's and the base's cube complexes
struct CubeProjection {
  std::vector<int> cube;                    // cover cube -> base cube
  std::vector<std::array<int, 8>> corner;   // cover corner -> base corner
  std::vector<int> vertex;                  // cover vertex -> base vertex
  bool well_defined = true;
  std::vector<bool> link_injective;         // per cover vertex, on link simplices
  std::vector<std::string> problems;
};
CubeProjection project_cubes(const CubeComplex& cover, const CubeComplex& base, const LiftedDecomposition& ld);

struct NPCTransfer {
  bool cover_flag = false;
  bool injective = false;
  bool base_flag = false;
  std::string basis;  // "transferred from cover links" or "direct computation on base"
};
NPCTransfer npc_transfer(const NPCReport& cover_npc, const CubeProjection& p, const NPCReport& base_npc);

}  // namespace octacube
