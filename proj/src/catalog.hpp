#pragma once

#include <string>
#include <vector>

#include "coxeter.hpp"

namespace coxforge {

enum class Family {
  A, B, D, E, F4, H3, H4, I2,              // spherical
  AffA, AffB, AffC, AffD, AffE, AffF4, AffG2,  // affine
  Unnamed
};

struct NamedType {
  Family family = Family::Unnamed;
  int rank = 0;   // the subscript (number of generators for spherical,
                  // subscript n for affine types on n+1 generators)
  int edge = 0;   // I2 edge label

  bool is_spherical() const;
  bool is_affine() const;
  bool is_unnamed() const { return family == Family::Unnamed; }
  std::string str() const;  // "A4", "I2(7)", "~B3", "Unnamed"

  bool operator==(const NamedType&) const = default;
};

// Canonical diagram for a named type; throws internal_error for parameters
// outside the catalog ranges.
CoxeterMatrix catalog_matrix(const NamedType& t);

// Labelled-graph isomorphism of Coxeter matrices (exact, backtracking).
bool isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b);

// Match a connected matrix against the spherical and affine catalogs.
// Redundant shapes report their earliest name: a rank-2 label-3 edge is A2
// (not I2(3)), label 4 is B2, and the D3 shape is A3.
NamedType recognize(const CoxeterMatrix& m);

// Catalog listings, used by classification tests and the acceptance suite.
std::vector<NamedType> spherical_types(int max_rank, int max_i2_label);
std::vector<NamedType> affine_types(int max_rank);

}  // namespace coxforge
