#pragma once
// Cube complex of the coned exterior, vertex links, flag condition, hyperplanes, doubling.
//
// Local faces of a 3-cube are indexed by trit vectors t = t0 + 3 t1 + 9 t2, with t_i in {0, 1, 2}
// (2 = free axis). Corners of a face are enumerated by the bits of its free axes in increasing order.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "octacube/homology.hpp"
#include "octacube/iso.hpp"
#include "octacube/octa.hpp"

namespace octacube {

enum class VertexClass { PPlus, PMinus, PZero, PMid };
const char* vertex_class_name(VertexClass c);

int face_index(int t0, int t1, int t2);
int face_dim(int f);

struct CubeGluing {
  int cube_a = -1, face_a = -1, cube_b = -1, face_b = -1;
  std::array<int, 4> corner_map{};  // local corner of face_a -> local corner of face_b
};

struct CubeSource {
  int oct = -1;
  int cusp = -1;  // 0 over, 1 under
  int half = -1;  // 0 holds e_{a+1}, e_{a+2}; 1 holds e_{a+3}, e_a (a = first shaded corner)
  int copy = 0;   // sheet in the double
};

struct LocalFace {
  int global = -1;
  std::vector<int> corner_map;  // local corner -> corner of the global cell's frame
};

struct CubeComplex {
  int num_cubes = 0;
  std::vector<CubeGluing> gluings;
  std::vector<CubeSource> source;
  std::vector<std::array<int, 8>> corner_point;  // octahedron-local point label per cube corner
  std::vector<std::array<VertexClass, 8>> corner_class;

  std::array<int, 4> count{};  // global cells per dimension
  std::vector<std::array<LocalFace, 27>> faces;
  std::array<std::vector<std::pair<int, int>>, 4> rep;  // root (cube, face) per global cell
  std::vector<VertexClass> vertex_class;
  std::vector<bool> boundary_square;
  std::vector<std::string> defects;  // cells identified with themselves by a nontrivial symmetry

  int vertices() const { return count[0]; }
  int edges() const { return count[1]; }
  int squares() const { return count[2]; }
  int cubes() const { return count[3]; }
  const LocalFace& face(int cube, int f) const { return faces[cube][f]; }
  int vertex_at(int cube, int corner) const;
  std::vector<int> cell_vertices(int dim, int g) const;  // in frame order
};

// generic assembly from cubes and square gluings; classes and boundary marks are left default
CubeComplex assemble_cube_complex(int ncubes, const std::vector<CubeGluing>& gluings);

// 4 cubes per octahedron; needs region colors in od
CubeComplex cube_complex_from_octahedra(const OctahedralDecomposition& od);
CubeComplex double_complex(const CubeComplex& cc);

ChainComplex cellular_chain_complex(const CubeComplex& cc);
HomologyResult homology(const CubeComplex& cc);

struct VertexLink {
  int vertex = -1;
  int num_vertices = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;  // edge indices
  std::vector<std::pair<int, int>> vertex_source;    // (global edge, end)
  std::vector<std::pair<int, int>> edge_source;      // (global square, corner)
  std::vector<std::pair<int, int>> triangle_source;  // (cube, corner)
};

VertexLink vertex_link(const CubeComplex& cc, int v);

struct FlagVerdict {
  enum Kind { Flag, NotSimplicial, NotFlag } kind = Flag;
  std::string witness;
  bool flag() const { return kind == Flag; }
};
const char* verdict_name(FlagVerdict::Kind k);
FlagVerdict is_flag(const VertexLink& l);

struct NPCReport {
  struct Entry {
    int vertex;
    VertexClass cls;
    FlagVerdict verdict;
  };
  std::vector<Entry> per_vertex;
  bool flag() const;
};
NPCReport check_npc(const CubeComplex& cc);

struct Hyperplane {
  std::string type;  // "dehn", "checkerboard-unshaded", "shaded-parallel", "mixed", "axis-<i>"
  std::vector<std::pair<int, int>> midcubes;  // (cube, axis)
  int euler_characteristic = 0;
  int boundary_edges = 0;  // mid-edges on boundary squares
  bool orientable = true;
};
std::vector<Hyperplane> hyperplanes(const CubeComplex& cc);

struct EdgeCertificate {
  int edge;
  std::string status;  // "essential (NPC certificate)", "undetermined", "undetermined (link defect)"
};
std::vector<EdgeCertificate> essential_edges_certificate(const CubeComplex& cc, const NPCReport& npc);

struct Retraction {
  std::array<std::vector<std::pair<int, int>>, 4> image;  // per dim: cell -> (dim, cell)
  bool commutes = true;                                     // same image from every local occurrence
  bool idempotent = true;
  std::array<int, 4> image_count{};
};
Retraction retraction_to_dehn(const CubeComplex& cc);
// retraction image with the shaded split undone, as an incidence graph with corner nodes
LabeledGraph retraction_image_graph(const CubeComplex& cc, const Retraction& r);

// Link(P+) model from the diagram: regions and crossings as vertices, triangles (X, R_k, R_{k+1})
VertexLink subdivided_dual_link(const SurfaceDiagram& d);
LabeledGraph link_incidence_graph(const VertexLink& l);

}  // namespace octacube
