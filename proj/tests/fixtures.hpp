#pragma once

#include <vector>

#include "catalog.hpp"
#include "coxeter.hpp"

namespace coxforge::fixtures {

inline CoxeterMatrix path(const std::vector<int>& edge_labels) {
  int n = static_cast<int>(edge_labels.size()) + 1;
  CoxeterMatrix m = CoxeterMatrix::commuting(n);
  for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, edge_labels[i]);
  return m;
}

inline CoxeterMatrix cycle(int n, int lab) {
  CoxeterMatrix m = CoxeterMatrix::commuting(n);
  for (int i = 0; i < n; ++i) m.set(i, (i + 1) % n, lab);
  return m;
}

// complete graph on three vertices, all labels infinite
inline CoxeterMatrix triangle_inf() { return cycle(3, kInfinity); }

// hexagon with all labels infinite (non-adjacent generators commute)
inline CoxeterMatrix hexagon_inf() { return cycle(6, kInfinity); }

// Five-vertex family with signature (3,1,1) for every a,b in {2,...,inf}
// and c,d >= 3: a 5-chain v0 -inf- v2 -c- v3 -d- v4 -inf- v1 with chords
// (v0,v3)=a and (v1,v3)=b.
inline CoxeterMatrix five_vertex(int a, int b, int c, int d) {
  CoxeterMatrix m = CoxeterMatrix::commuting(5);
  m.set(0, 2, kInfinity);
  m.set(1, 4, kInfinity);
  m.set(2, 3, c);
  m.set(3, 4, d);
  if (a != 2) m.set(0, 3, a);
  if (b != 2) m.set(1, 3, b);
  return m;
}

inline CoxeterMatrix path_inf_3_inf() { return path({kInfinity, 3, kInfinity}); }

inline CoxeterMatrix affine_a(int n) {
  return catalog_matrix({Family::AffA, n, 0});
}

inline CoxeterMatrix named(Family f, int rank, int i2 = 0) {
  return catalog_matrix({f, rank, i2});
}

// the non-affine fixtures of the verification suite
inline std::vector<CoxeterMatrix> nonaffine_fixtures() {
  return {triangle_inf(), hexagon_inf(), five_vertex(3, 3, 3, 3), path_inf_3_inf()};
}

}  // namespace coxforge::fixtures
