#pragma once
// Link diagrams on closed surfaces, given as rotation systems with edge flips.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace octacube {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotColorable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HalfEdgeSlot {
  int crossing = -1;
  int slot = -1;
  bool operator==(const HalfEdgeSlot&) const = default;
};

struct Crossing {
  std::string id;
  bool over02 = true;
  bool operator==(const Crossing&) const = default;
};

struct DiagramEdge {
  std::string id;
  std::array<HalfEdgeSlot, 2> ends;
  bool flipped = false;
  int midpoint = -1;  // P_i label, equal to the edge index
  bool operator==(const DiagramEdge&) const = default;
};

struct Corner {
  int crossing = -1;
  int corner = -1;  // corner k sits between slots k and k+1
  bool operator==(const Corner&) const = default;
};

// One step of a face boundary walk: the side of an edge that the face sees.
struct FaceSide {
  int edge = -1;
  int side = -1;      // 0 or 1, see SurfaceDiagram::edge_side_region
  int from_end = -1;  // the walk runs along the edge from this end to the other
};

struct Region {
  int id = -1;
  std::vector<Corner> corners;    // in boundary-walk order
  std::vector<int> corner_signs;  // +1 when the walk passes the corner counterclockwise
  std::vector<FaceSide> sides;    // sides[i] is walked right after corners[i]
  int degree() const { return static_cast<int>(corners.size()); }
};

// Visit of a link component through a crossing.
struct StrandVisit {
  int crossing = -1;
  int in_slot = -1;   // leaves through in_slot+2
  int in_edge = -1;   // edge used to arrive
};

class SurfaceDiagram {
 public:
  std::vector<Crossing> crossings;
  std::vector<DiagramEdge> edges;

  // derived data, filled by finalize()
  std::vector<std::array<std::pair<int, int>, 4>> slot_edge;  // (edge, end)
  std::vector<Region> regions;
  std::vector<std::array<int, 4>> corner_region;
  std::vector<std::array<int, 4>> corner_sign;
  std::vector<std::array<int, 2>> edge_side_region;  // side0 holds corner (v0,s0), side1 corner (v0,s0-1)
  int chi = 0;
  bool orientable = true;
  std::vector<int> chart_sign;  // consistent local orientations when orientable
  std::vector<std::vector<StrandVisit>> components;

  int c() const { return static_cast<int>(crossings.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_regions() const { return static_cast<int>(regions.size()); }
  int genus_or_crosscap() const { return orientable ? (2 - chi) / 2 : 2 - chi; }
  int num_components() const { return static_cast<int>(components.size()); }
  bool is_sphere() const { return orientable && chi == 2; }

  HalfEdgeSlot other_end(int crossing, int slot) const;
  int edge_sign(int e) const { return edges[e].flipped ? -1 : 1; }
  // true when the strand through `slot` is the over-strand in the crossing's chart
  bool slot_is_over(int crossing, int slot) const {
    return ((slot % 2) == 0) == crossings[crossing].over02;
  }
  int crossing_index(const std::string& id) const;

  // validates slot usage, traces faces, computes chi, orientability, components
  void finalize();
};

SurfaceDiagram parse_diagram(const std::string& text);
std::string write_diagram(const SurfaceDiagram& d);
SurfaceDiagram load_diagram(const std::string& path);

std::vector<Region> trace_faces(const SurfaceDiagram& d);

struct DualGraph {
  int num_vertices = 0;
  struct Edge {
    int a, b;      // regions on side0, side1
    int midpoint;  // P_i
  };
  std::vector<Edge> edges;
};
DualGraph dual_graph(const SurfaceDiagram& d);

bool is_alternating(const SurfaceDiagram& d);
bool is_reduced(const SurfaceDiagram& d);

struct CheckerboardColoring {
  std::vector<bool> shaded;  // per region
};
// throws NotColorable
CheckerboardColoring checkerboard_coloring(const SurfaceDiagram& d);
std::optional<CheckerboardColoring> try_checkerboard_coloring(const SurfaceDiagram& d);

struct Representativity {
  enum Kind { Value, NoEssentialCurve, AboveBound } kind = Value;
  int value = 0;    // when kind == Value
  int max_len = 0;  // search bound used
  std::string to_string() const;
};

int default_max_curve_length(const SurfaceDiagram& d);
Representativity edge_representativity(const SurfaceDiagram& d, int max_len);

struct WeakPrimeResult {
  bool weakly_prime = true;
  std::vector<int> witness_edges;  // the two edges of a violating curve
};
WeakPrimeResult weak_primeness(const SurfaceDiagram& d);
bool is_weakly_prime(const SurfaceDiagram& d, int max_len = 2);

// Relabels crossings by perm (new index of old crossing i is perm[i]) and edges by eperm.
SurfaceDiagram relabel(const SurfaceDiagram& d, const std::vector<int>& perm, const std::vector<int>& eperm);
// Switch the over-strand at one crossing.
SurfaceDiagram switch_crossing(const SurfaceDiagram& d, int crossing);

}  // namespace octacube
