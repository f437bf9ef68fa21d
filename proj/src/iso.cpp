#include "octacube/iso.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace octacube {

namespace {

struct Joint {
  int na, nb;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, label)
};

std::vector<int> refine(const Joint& g, std::vector<int> col) {
  const int n = static_cast<int>(col.size());
  int classes = static_cast<int>(std::set<int>(col.begin(), col.end()).size());
  while (true) {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = col[v];
      for (auto [w, l] : g.adj[v]) sig[v].second.push_back({col[w], l});
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> ids;
    for (auto& s : sig) ids.emplace(s, 0);
    int k = 0;
    for (auto& [s, id] : ids) id = k++;
    for (int v = 0; v < n; ++v) col[v] = ids[sig[v]];
    if (k == classes) return col;
    classes = k;
  }
}

bool balanced(const Joint& g, const std::vector<int>& col) {
  std::map<int, int> cnt;
  for (int v = 0; v < g.na; ++v) cnt[col[v]]++;
  for (int v = g.na; v < g.na + g.nb; ++v) cnt[col[v]]--;
  for (auto& [c, k] : cnt)
    if (k != 0) return false;
  return true;
}

std::vector<std::tuple<int, int, int>> normalized(const std::vector<std::tuple<int, int, int>>& e, const std::vector<int>* map) {
  std::vector<std::tuple<int, int, int>> out;
  for (auto [u, v, l] : e) {
    if (map) u = (*map)[u], v = (*map)[v];
    out.emplace_back(std::min(u, v), std::max(u, v), l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> search(const Joint& g, const LabeledGraph& a, const LabeledGraph& b,
                                       const std::vector<int>& col) {
  if (!balanced(g, col)) return std::nullopt;
  std::map<int, std::vector<int>> cls_a, cls_b;
  for (int v = 0; v < g.na; ++v) cls_a[col[v]].push_back(v);
  for (int v = 0; v < g.nb; ++v) cls_b[col[g.na + v]].push_back(v);
  int pick = -1;
  size_t best = 0;
  for (auto& [c, vs] : cls_a)
    if (vs.size() > 1 && (pick < 0 || vs.size() < best)) {
      pick = c;
      best = vs.size();
    }
  if (pick < 0) {
    std::vector<int> map(g.na);
    for (auto& [c, vs] : cls_a) map[vs[0]] = cls_b[c][0];
    if (normalized(a.edges, &map) == normalized(b.edges, nullptr)) return map;
    return std::nullopt;
  }
  int x = cls_a[pick][0];
  int fresh = *std::max_element(col.begin(), col.end()) + 1;
  for (int y : cls_b[pick]) {
    auto c2 = col;
    c2[x] = fresh;
    c2[g.na + y] = fresh;
    auto r = search(g, a, b, refine(g, c2));
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return std::nullopt;
  Joint g{a.n, b.n, std::vector<std::vector<std::pair<int, int>>>(a.n + b.n)};
  for (auto [u, v, l] : a.edges) {
    g.adj[u].push_back({v, l});
    g.adj[v].push_back({u, l});
  }
  for (auto [u, v, l] : b.edges) {
    g.adj[a.n + u].push_back({a.n + v, l});
    g.adj[a.n + v].push_back({a.n + u, l});
  }
  std::vector<int> col(a.color);
  col.insert(col.end(), b.color.begin(), b.color.end());
  return search(g, a, b, refine(g, col));
}

}  // namespace octacube
