#pragma once
// Octahedral decomposition: one octahedron per crossing, faces glued across diagram edges.
//
// Local vertices of an octahedron: 0 = over cusp, 1 = under cusp, 2+s = equatorial vertex over
// strand end s. Equatorial edge k joins 2+k and 2+(k+1)%4 and runs through the region at corner k.
// Face f = 4*cusp + k has vertices (cusp, 2+k, 2+(k+1)%4).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "octacube/diagram.hpp"

namespace octacube {

enum class VertexRole { OverCusp, UnderCusp, ConeUp, ConeDown };
const char* role_name(VertexRole r);

struct OctVertex {
  VertexRole role;
  int slot = -1;  // strand end for equatorial vertices
  bool operator==(const OctVertex&) const = default;
};

struct Octahedron {
  int crossing = -1;
  std::array<OctVertex, 6> vertices;
  std::array<int, 4> equatorial_region{};  // region of equatorial edge k
  static std::array<int, 3> face_vertices(int f) { return {f / 4, 2 + f % 4, 2 + (f % 4 + 1) % 4}; }
  // strand end a face is attached to
  int face_slot(int f) const;
  bool operator==(const Octahedron&) const = default;
};

struct FaceRef {
  int oct = -1;
  int face = -1;
  bool operator==(const FaceRef&) const = default;
  auto operator<=>(const FaceRef&) const = default;
};

struct FaceGluing {
  FaceRef source, target;
  std::array<int, 3> vertex_map{};  // position i of source face -> position of target face
  int edge = -1;                    // diagram edge crossed
  bool flipped = false;
  bool operator==(const FaceGluing&) const = default;
};

struct OctahedralDecomposition {
  std::vector<Octahedron> octahedra;
  std::vector<FaceGluing> gluings;  // one per unordered pair
  std::vector<std::vector<std::pair<int, int>>> region_edge_cycles;  // region -> (oct, equatorial edge)
  std::vector<int> region_degree;
  std::vector<int> region_shaded;  // 1 shaded, 0 unshaded, -1 unknown
  bool orientable_ambient = true;

  int c() const { return static_cast<int>(octahedra.size()); }
  // gluing seen from a given face: target face and the position map
  struct Partner {
    FaceRef face;
    std::array<int, 3> vertex_map;
    bool flipped;
  };
  std::vector<std::array<Partner, 8>> partner_table() const;
  bool operator==(const OctahedralDecomposition&) const = default;
};

OctahedralDecomposition build_octahedral_decomposition(const SurfaceDiagram& d, const CheckerboardColoring& col);
OctahedralDecomposition build_nonorientable_decomposition(const SurfaceDiagram& d);
// shared core; coloring optional
OctahedralDecomposition build_decomposition_any(const SurfaceDiagram& d, const std::optional<CheckerboardColoring>& col);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;  // "<check>: <witness>"
  void fail(const std::string& check, const std::string& witness) {
    ok = false;
    failures.push_back(check + ": " + witness);
  }
};

CheckReport validate_decomposition(const OctahedralDecomposition& od);

// region cycles recomputed by walking around each equatorial edge through the face gluings
std::vector<std::vector<std::pair<int, int>>> walk_region_cycles(const OctahedralDecomposition& od);

}  // namespace octacube
