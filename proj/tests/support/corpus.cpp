#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "octacube/generate.hpp"

namespace corpus {

using namespace octacube;

std::string data_path(const std::string& file) { return std::string(OCTACUBE_DATA_DIR) + "/" + file; }

SurfaceDiagram load(const std::string& name) { return load_diagram(data_path(name + ".sd")); }

std::vector<std::string> named_examples() {
  return {"figure_eight", "figure_eight_switched", "figure_eight_curl", "trefoil",        "trefoil_sum",
          "curl",         "torus_link2",           "virtual_trefoil",   "square_weave",   "square_weave8",
          "torus_one_crossing", "klein_2_6",       "rp2_curl"};
}

namespace {
bool transitive(const std::vector<int>& r, const std::vector<int>& u) {
  int n = static_cast<int>(r.size());
  std::vector<bool> seen(n, false);
  std::vector<int> st{0};
  seen[0] = true;
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    for (int y : {r[x], u[x]})
      if (!seen[y]) seen[y] = true, st.push_back(y);
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string perm_str(const std::vector<int>& p) {
  std::string s;
  for (int x : p) s += std::to_string(x);
  return s;
}
}  // namespace

const std::vector<Entry>& generated() {
  static const std::vector<Entry> out = [] {
    std::vector<Entry> v;
    for (int n = 1; n <= 3; ++n) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::vector<int>> perms;
      do perms.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
      for (auto& r : perms)
        for (auto& u : perms) {
          if (!transitive(r, u)) continue;
          std::pair<std::vector<int>, std::vector<int>> best;
          bool first = true;
          for (auto& s : perms) {
            std::vector<int> r2(n), u2(n);
            for (int i = 0; i < n; ++i) {
              r2[s[i]] = s[r[i]];
              u2[s[i]] = s[u[i]];
            }
            auto pr = std::make_pair(r2, u2);
            if (first || pr < best) best = pr, first = false;
          }
          if (!seen.insert(best).second) continue;
          for (int k = 2; k <= 3; ++k) {
            auto d = medial_diagram(square_tiled_graph(best.first, best.second, k));
            auto rep = edge_representativity(d, default_max_curve_length(d));
            bool keep = d.orientable && is_reduced(d) && is_weakly_prime(d) && is_alternating(d) &&
                        try_checkerboard_coloring(d).has_value() && rep.kind == Representativity::Value && rep.value >= 4;
            if (keep) v.push_back({"sq_r" + perm_str(best.first) + "_u" + perm_str(best.second) + "_k" + std::to_string(k), d});
          }
        }
    }
    return v;
  }();
  return out;
}

}  // namespace corpus

#include "octacube/serialize.hpp"

namespace corpus {

std::string golden_path(const std::string& file) { return std::string(OCTACUBE_GOLDEN_DIR) + "/" + file; }

std::vector<std::pair<std::string, std::string>> golden_artifacts() {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::string name : {"figure_eight", "torus_link2", "square_weave", "klein_2_6"}) {
    auto d = load(name);
    auto col = try_checkerboard_coloring(d);
    auto od = d.orientable ? build_octahedral_decomposition(d, *col) : build_nonorientable_decomposition(d);
    auto t = triangulate(od);
    out.push_back({name + ".diagram.json", dump(to_json(d))});
    out.push_back({name + ".decomposition.json", dump(to_json(od))});
    out.push_back({name + ".tri", export_triangulation(t, "gluing-table")});
    out.push_back({name + ".tri.json", export_triangulation(t, "json")});
  }
  out.push_back({"virtual_trefoil.diagram.json", dump(to_json(load("virtual_trefoil")))});
  return out;
}

}  // namespace corpus
