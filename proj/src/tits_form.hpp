#pragma once

#include <vector>

#include "coxeter.hpp"
#include "scalar.hpp"

namespace coxforge {

// Inertia of the Tits form: p positive, q negative, r zero.
struct Signature {
  int p = 0, q = 0, r = 0;
  bool operator==(const Signature&) const = default;
};

// The Tits form B(e_s, e_t) = -cos(pi/m_st) as an exact symmetric matrix.
struct GramForm {
  CoxeterMatrix source;
  FieldPtr ctx;
  std::vector<Scalar> entries;  // n*n, row-major

  int n() const { return source.n; }
  const Scalar& at(int s, int t) const {
    return entries[static_cast<size_t>(s) * source.n + t];
  }
};

GramForm gram(const CoxeterMatrix& m);

// Exact inertia by symmetric congruence elimination (Sylvester). Nonzero
// diagonal pivots are consumed first; an all-zero diagonal with a nonzero
// off-diagonal entry is handled as a hyperbolic pair contributing (+1, -1).
Signature signature_of(const GramForm& g);

// Exact basis of Ker(B) with a coordinate section of the quotient.
struct KernelBasis {
  std::vector<std::vector<Scalar>> vectors;  // r vectors of length n
  std::vector<int> complement;   // pivot coordinates, size n - r
  std::vector<int> free_coords;  // size r; vectors[j] has 1 at free_coords[j]
                                 // and 0 at every other free coordinate
};

KernelBasis kernel_of(const GramForm& g);

}  // namespace coxforge
