#include "classify.hpp"

#include "errors.hpp"

namespace coxforge {

std::string kind_str(ComponentKind k) {
  switch (k) {
    case ComponentKind::Spherical: return "Spherical";
    case ComponentKind::Affine: return "Affine";
    case ComponentKind::NonAffine: return "NonAffine";
  }
  return "NonAffine";
}

ComponentClass classify_component(const CoxeterMatrix& m) {
  if (!is_connected(m))
    throw internal_error("classify_component requires a connected matrix");
  ComponentClass c;
  c.sig = signature_of(gram(m));
  if (c.sig.q == 0 && c.sig.r == 0)
    c.kind = ComponentKind::Spherical;
  else if (c.sig.q == 0 && c.sig.r == 1)
    c.kind = ComponentKind::Affine;
  else if (c.sig.q == 0)
    throw internal_error("connected diagram with q=0 and r>1 is impossible");
  else
    c.kind = ComponentKind::NonAffine;
  c.name = recognize(m);
  if (c.kind == ComponentKind::Spherical && c.name.is_unnamed())
    throw internal_error("positive definite diagram missed the catalog");
  if (c.kind == ComponentKind::Affine && c.name.is_unnamed())
    throw internal_error("affine diagram missed the catalog");
  return c;
}

std::vector<int> amenable_radical(const std::vector<ComponentClass>& comps) {
  std::vector<int> out;
  for (size_t i = 0; i < comps.size(); ++i)
    if (comps[i].kind != ComponentKind::NonAffine) out.push_back(static_cast<int>(i));
  return out;
}

CstarVerdict cstar_verdict(const std::vector<ComponentClass>& comps) {
  bool all_nonaffine = true;
  for (const auto& c : comps)
    if (c.kind != ComponentKind::NonAffine) all_nonaffine = false;
  return {all_nonaffine, all_nonaffine};
}

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

PrimitivityVerdict spherical_primitivity(const NamedType& t) {
  switch (t.family) {
    case Family::A:
      return {true, "finite type " + t.str() + " acts primitively"};
    case Family::D:
      if (t.rank % 2 == 1)
        return {true, "finite type " + t.str() + " acts primitively"};
      return {false, "finite type " + t.str() + " has centre of order 2"};
    case Family::E:
      if (t.rank == 6) return {true, "finite type E6 acts primitively"};
      return {false, "finite type " + t.str() + " has centre of order 2"};
    case Family::I2:
      if (is_odd_prime(t.edge))
        return {true, "finite type " + t.str() + " acts primitively"};
      if (t.edge % 2 == 0)
        return {false, "finite type " + t.str() + " has centre of order 2"};
      return {false, "finite type " + t.str() + " is dihedral of odd non-prime order"};
    case Family::B:
    case Family::F4:
    case Family::H3:
    case Family::H4:
      return {false, "finite type " + t.str() + " has centre of order 2"};
    default:
      throw internal_error("spherical component without a catalog name");
  }
}

}  // namespace

PrimitivityVerdict primitivity(const std::vector<ComponentClass>& comps) {
  if (comps.empty()) throw internal_error("primitivity of an empty group");
  if (comps.size() > 1)
    return {false, "reducible: " + std::to_string(comps.size()) +
                       " irreducible factors"};
  const ComponentClass& c = comps.front();
  switch (c.kind) {
    case ComponentKind::NonAffine:
      return {true, "irreducible and non-affine"};
    case ComponentKind::Affine:
      return {false, "affine: every maximal subgroup has finite index"};
    case ComponentKind::Spherical:
      return spherical_primitivity(c.name);
  }
  return {false, ""};
}

ClassificationReport classify(const CoxeterMatrix& m) {
  auto errs = validate(m);
  if (!errs.empty()) throw input_error("invalid Coxeter matrix: " + errs.front());
  ClassificationReport rep;
  Decomposition d = components(m);
  for (size_t i = 0; i < d.matrices.size(); ++i) {
    ComponentClass c = classify_component(d.matrices[i]);
    c.vertices = d.parts[i];
    rep.components.push_back(std::move(c));
  }
  rep.radical_factors = amenable_radical(rep.components);
  rep.cstar = cstar_verdict(rep.components);
  rep.primitive = primitivity(rep.components);
  return rep;
}

}  // namespace coxforge
