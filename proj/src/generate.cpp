#include "octacube/generate.hpp"

#include <stdexcept>

namespace octacube {

SurfaceDiagram medial_diagram(const RotationGraph& g) {
  const int E = g.num_edges();
  if (static_cast<int>(g.next.size()) != 2 * E) throw std::invalid_argument("rotation size mismatch");
  auto twin_flipped = [&](int h) { return (h & 1) && g.flipped[h / 2]; };
  auto slot_left = [&](int h) { return (h & 1) == 0 ? 1 : (g.flipped[h / 2] ? 0 : 3); };
  auto slot_right = [&](int h) { return (h & 1) == 0 ? 2 : (g.flipped[h / 2] ? 3 : 0); };
  SurfaceDiagram d;
  for (int e = 0; e < E; ++e) d.crossings.push_back({"X" + std::to_string(e), true});
  for (int x = 0; x < 2 * E; ++x) {
    int y = g.next[x];
    DiagramEdge de;
    de.id = "e" + std::to_string(d.edges.size());
    de.ends[0] = {x / 2, slot_left(x)};
    de.ends[1] = {y / 2, slot_right(y)};
    de.flipped = twin_flipped(x) != twin_flipped(y);
    d.edges.push_back(de);
  }
  d.finalize();
  return d;
}

RotationGraph square_tiled_graph(const std::vector<int>& right0, const std::vector<int>& up0, int k) {
  const int n0 = static_cast<int>(right0.size());
  const int n = n0 * k * k;
  std::vector<int> right(n), up(n);
  auto id = [&](int i, int a, int b) { return (i * k + b) * k + a; };
  for (int i = 0; i < n0; ++i)
    for (int b = 0; b < k; ++b)
      for (int a = 0; a < k; ++a) {
        right[id(i, a, b)] = a + 1 < k ? id(i, a + 1, b) : id(right0[i], 0, b);
        up[id(i, a, b)] = b + 1 < k ? id(i, a, b + 1) : id(up0[i], a, 0);
      }
  std::vector<int> rinv(n), uinv(n);
  for (int i = 0; i < n; ++i) rinv[right[i]] = i, uinv[up[i]] = i;
  // edge 2i = bottom side of square i, edge 2i+1 = left side of square i
  auto H = [](int i, bool twin) { return 2 * (2 * i) + (twin ? 1 : 0); };
  auto V = [](int i, bool twin) { return 2 * (2 * i + 1) + (twin ? 1 : 0); };
  RotationGraph g;
  g.flipped.assign(2 * n, false);
  g.next.assign(4 * n, -1);
  for (int j = 0; j < n; ++j) {
    g.next[H(j, false)] = V(j, false);                  // east -> north at BL(j)
    g.next[V(j, false)] = H(rinv[j], true);             // north -> west
    g.next[H(j, true)] = V(right[uinv[j]], true);       // west (bottom of j, from BR(j)) -> south
    g.next[V(j, true)] = H(up[j], false);               // south (left of j, from TL(j)) -> east
  }
  return g;
}

}  // namespace octacube
