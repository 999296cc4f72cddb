#pragma once

#include <string>
#include <vector>

#include "scalar.hpp"

namespace coxforge {

// Symmetric label matrix of a Coxeter system: 1 on the diagonal, entries in
// {2, 3, ..., kInfinity} elsewhere. Generators carry user-visible names.
struct CoxeterMatrix {
  int n = 0;
  std::vector<int> labels;         // n*n, row-major
  std::vector<std::string> names;  // size n

  // n generators, every pair commuting (all off-diagonal labels 2).
  static CoxeterMatrix commuting(int n);

  int label(int s, int t) const { return labels[static_cast<size_t>(s) * n + t]; }
  void set(int s, int t, int m) {
    labels[static_cast<size_t>(s) * n + t] = m;
    labels[static_cast<size_t>(t) * n + s] = m;
  }

  // Distinct labels, for field construction. Never empty (always contains 2).
  std::vector<int> label_set() const;

  bool operator==(const CoxeterMatrix&) const = default;
};

// Structural validation; returns every violation (empty means valid).
std::vector<std::string> validate(const CoxeterMatrix& m);

struct DiagramEdge {
  int s, t;  // s < t
  int m;     // label >= 3
};

// Edges of the diagram graph: pairs with label >= 3, in lexicographic order.
std::vector<DiagramEdge> diagram_edges(const CoxeterMatrix& m);

bool is_connected(const CoxeterMatrix& m);

// Induced sub-matrix on the given vertices (order preserved, names kept).
CoxeterMatrix induced(const CoxeterMatrix& m, const std::vector<int>& vertices);

CoxeterMatrix disjoint_union(const std::vector<CoxeterMatrix>& parts);

struct Decomposition {
  std::vector<std::vector<int>> parts;   // sorted vertex sets, ordered by minimum
  std::vector<CoxeterMatrix> matrices;   // induced matrices, aligned with parts
};

// Connected components of the diagram; isolated vertices come out as rank-1
// parts, so every generator belongs to exactly one irreducible factor.
Decomposition components(const CoxeterMatrix& m);

}  // namespace coxforge
