#pragma once

#include <string>
#include <vector>

#include "catalog.hpp"
#include "tits_form.hpp"

namespace coxforge {

enum class ComponentKind { Spherical, Affine, NonAffine };

std::string kind_str(ComponentKind k);

struct ComponentClass {
  ComponentKind kind = ComponentKind::NonAffine;
  NamedType name;
  Signature sig;
  std::vector<int> vertices;  // indices into the ambient matrix
};

// Trichotomy for a connected matrix from the exact signature:
// spherical iff q = r = 0, affine iff (p, q, r) = (p, 0, 1).
ComponentClass classify_component(const CoxeterMatrix& m);

// Indices of the spherical and affine components; the direct sum of these
// factors is the largest amenable normal subgroup.
std::vector<int> amenable_radical(const std::vector<ComponentClass>& comps);

struct CstarVerdict {
  bool simple = false;
  bool unique_trace = false;
};

// Simple (with unique normalized trace) iff every factor is non-affine.
CstarVerdict cstar_verdict(const std::vector<ComponentClass>& comps);

struct PrimitivityVerdict {
  bool primitive = false;
  std::string reason;
};

// Primitive iff irreducible and non-affine, except for the finite list
// A_n, D_{2n+1}, E_6, I_2(p) with p an odd prime.
PrimitivityVerdict primitivity(const std::vector<ComponentClass>& comps);

struct ClassificationReport {
  std::vector<ComponentClass> components;
  std::vector<int> radical_factors;
  CstarVerdict cstar;
  PrimitivityVerdict primitive;
};

ClassificationReport classify(const CoxeterMatrix& m);

}  // namespace coxforge
