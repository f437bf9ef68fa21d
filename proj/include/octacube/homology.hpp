#pragma once
// Integer homology through Smith normal form.

#include <string>
#include <tuple>
#include <vector>

namespace octacube {

struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::tuple<int, int, long long>> entries;  // duplicates are summed
  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c) {}
  void add(int r, int c, long long v) { entries.emplace_back(r, c, v); }
};

struct SmithResult {
  int rank = 0;
  std::vector<long long> invariant_factors;  // nonzero diagonal, each dividing the next
};

// Unit pivots are eliminated sparsely first; the remaining core is diagonalized densely with
// pivots of minimal absolute value (ties: lowest row, then lowest column). Throws std::overflow_error.
SmithResult smith_normal_form(const SparseIntMatrix& m);

struct HomologyGroup {
  int betti = 0;
  std::vector<long long> torsion;  // factors > 1
  bool operator==(const HomologyGroup&) const = default;
  std::string to_string() const;  // e.g. "Z^2 + Z/2"
};

struct HomologyResult {
  std::vector<HomologyGroup> groups;  // index = degree
  const HomologyGroup& H(int k) const { return groups.at(k); }
};

struct ChainComplex {
  std::vector<int> dims;                 // rank of C_k
  std::vector<SparseIntMatrix> boundary;  // boundary[k]: C_k -> C_{k-1}; boundary[0] unused
};

HomologyResult compute_homology(const ChainComplex& cc);

// abelian group with `gens` generators and relation rows
HomologyGroup abelian_group(const SparseIntMatrix& relations);

}  // namespace octacube
