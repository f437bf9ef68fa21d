#include "octacube/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace octacube {

namespace {

using ll = long long;

ll checked_mul(ll a, ll b) {
  ll r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
  return r;
}
ll checked_sub(ll a, ll b) {
  ll r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in Smith normal form");
  return r;
}

void dense_smith(std::vector<std::vector<ll>>& a, std::vector<ll>& out) {
  const int R = static_cast<int>(a.size());
  const int C = R ? static_cast<int>(a[0].size()) : 0;
  for (int t = 0; t < std::min(R, C); ++t) {
    while (true) {
      int pr = -1, pc = -1;
      ll best = 0;
      for (int i = t; i < R; ++i)
        for (int j = t; j < C; ++j)
          if (a[i][j] != 0 && (pr < 0 || std::llabs(a[i][j]) < best)) {
            best = std::llabs(a[i][j]);
            pr = i;
            pc = j;
          }
      if (pr < 0) return;
      std::swap(a[t], a[pr]);
      for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][pc]);
      bool clean = true;
      for (int i = t + 1; i < R; ++i) {
        if (a[i][t] == 0) continue;
        ll q = a[i][t] / a[t][t];
        for (int j = t; j < C; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < C; ++j) {
        if (a[t][j] == 0) continue;
        ll q = a[t][j] / a[t][t];
        for (int i = t; i < R; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the rest
      int bad = -1;
      for (int i = t + 1; i < R && bad < 0; ++i)
        for (int j = t + 1; j < C; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = t; j < C; ++j) a[t][j] += a[bad][j];
    }
    out.push_back(std::llabs(a[t][t]));
  }
}

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m) {
  std::vector<std::map<int, ll>> rows(m.rows);
  for (auto& [r, c, v] : m.entries) {
    if (r < 0 || r >= m.rows || c < 0 || c >= m.cols) throw std::out_of_range("matrix entry out of range");
    rows[r][c] += v;
  }
  std::vector<std::set<int>> cols(m.cols);
  for (int r = 0; r < m.rows; ++r) {
    for (auto it = rows[r].begin(); it != rows[r].end();)
      it = it->second == 0 ? rows[r].erase(it) : std::next(it);
    for (auto& [c, v] : rows[r]) cols[c].insert(r);
  }
  SmithResult res;
  std::vector<ll> factors;
  // sparse unit pivoting, column with fewest entries first to limit fill-in
  bool progress = true;
  while (progress) {
    progress = false;
    for (int r = 0; r < m.rows; ++r) {
      if (rows[r].empty()) continue;
      int pc = -1;
      size_t best = 0;
      for (auto& [c, v] : rows[r])
        if ((v == 1 || v == -1) && (pc < 0 || cols[c].size() < best)) {
          pc = c;
          best = cols[c].size();
        }
      if (pc < 0) continue;
      ll pv = rows[r][pc];
      std::vector<int> others(cols[pc].begin(), cols[pc].end());
      for (int r2 : others) {
        if (r2 == r) continue;
        ll q = checked_mul(rows[r2][pc], pv);  // pv = +-1
        for (auto& [c, v] : rows[r]) {
          ll nv = checked_sub(rows[r2][c], checked_mul(q, v));
          if (nv == 0) {
            rows[r2].erase(c);
            cols[c].erase(r2);
          } else {
            rows[r2][c] = nv;
            cols[c].insert(r2);
          }
        }
      }
      for (auto& [c, v] : rows[r]) cols[c].erase(r);
      rows[r].clear();
      factors.push_back(1);
      progress = true;
    }
  }
  std::vector<int> rmap, cmap(m.cols, -1);
  int nc = 0;
  for (int r = 0; r < m.rows; ++r)
    if (!rows[r].empty()) {
      rmap.push_back(r);
      for (auto& [c, v] : rows[r])
        if (cmap[c] < 0) cmap[c] = nc++;
    }
  std::vector<std::vector<ll>> dense(rmap.size(), std::vector<ll>(nc, 0));
  for (size_t i = 0; i < rmap.size(); ++i)
    for (auto& [c, v] : rows[rmap[i]]) dense[i][cmap[c]] = v;
  dense_smith(dense, factors);
  // normalize to a divisibility chain
  std::sort(factors.begin(), factors.end());
  for (size_t i = 0; i < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j) {
      ll g = std::gcd(factors[i], factors[j]);
      ll l = checked_mul(factors[i] / g, factors[j]);
      factors[i] = g;
      factors[j] = l;
    }
  res.rank = static_cast<int>(factors.size());
  res.invariant_factors = factors;
  return res;
}

std::string HomologyGroup::to_string() const {
  std::string s;
  if (betti > 0) s = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
  for (ll t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(t);
  return s.empty() ? "0" : s;
}

HomologyResult compute_homology(const ChainComplex& cc) {
  const int n = static_cast<int>(cc.dims.size());
  std::vector<SmithResult> snf(n + 1);
  for (int k = 1; k < n; ++k) snf[k] = smith_normal_form(cc.boundary.at(k));
  HomologyResult res;
  for (int k = 0; k < n; ++k) {
    HomologyGroup g;
    int rk = k >= 1 ? snf[k].rank : 0;
    int rk1 = k + 1 < n ? snf[k + 1].rank : 0;
    g.betti = cc.dims[k] - rk - rk1;
    if (k + 1 < n)
      for (ll f : snf[k + 1].invariant_factors)
        if (f > 1) g.torsion.push_back(f);
    res.groups.push_back(g);
  }
  return res;
}

HomologyGroup abelian_group(const SparseIntMatrix& relations) {
  auto s = smith_normal_form(relations);
  HomologyGroup g;
  g.betti = relations.cols - s.rank;
  for (ll f : s.invariant_factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

}  // namespace octacube
