#include "catalog.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace coxforge {

bool NamedType::is_spherical() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::D:
    case Family::E:
    case Family::F4:
    case Family::H3:
    case Family::H4:
    case Family::I2:
      return true;
    default:
      return false;
  }
}

bool NamedType::is_affine() const {
  switch (family) {
    case Family::AffA:
    case Family::AffB:
    case Family::AffC:
    case Family::AffD:
    case Family::AffE:
    case Family::AffF4:
    case Family::AffG2:
      return true;
    default:
      return false;
  }
}

std::string NamedType::str() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F4: return "F4";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2(" + std::to_string(edge) + ")";
    case Family::AffA: return "~A" + std::to_string(rank);
    case Family::AffB: return "~B" + std::to_string(rank);
    case Family::AffC: return "~C" + std::to_string(rank);
    case Family::AffD: return "~D" + std::to_string(rank);
    case Family::AffE: return "~E" + std::to_string(rank);
    case Family::AffF4: return "~F4";
    case Family::AffG2: return "~G2";
    case Family::Unnamed: return "Unnamed";
  }
  return "Unnamed";
}

namespace {

CoxeterMatrix path(const std::vector<int>& edge_labels) {
  int n = static_cast<int>(edge_labels.size()) + 1;
  CoxeterMatrix m = CoxeterMatrix::commuting(n);
  for (int i = 0; i + 1 < n; ++i) m.set(i, i + 1, edge_labels[i]);
  return m;
}

CoxeterMatrix cycle(int n, int lab) {
  CoxeterMatrix m = CoxeterMatrix::commuting(n);
  for (int i = 0; i < n; ++i) m.set(i, (i + 1) % n, lab);
  return m;
}

// Tree with a centre vertex and simple (label 3) arms of the given lengths.
CoxeterMatrix tripod(int arm1, int arm2, int arm3) {
  int n = 1 + arm1 + arm2 + arm3;
  CoxeterMatrix m = CoxeterMatrix::commuting(n);
  int next = 1;
  for (int len : {arm1, arm2, arm3}) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      m.set(prev, next, 3);
      prev = next++;
    }
  }
  return m;
}

std::vector<int> repeated(int count, int lab) { return std::vector<int>(count, lab); }

}  // namespace

CoxeterMatrix catalog_matrix(const NamedType& t) {
  switch (t.family) {
    case Family::A:
      if (t.rank < 1) break;
      return path(repeated(t.rank - 1, 3));
    case Family::B: {
      if (t.rank < 2) break;
      auto labs = repeated(t.rank - 1, 3);
      labs.front() = 4;
      return path(labs);
    }
    case Family::D:
      if (t.rank < 3) break;
      return tripod(1, 1, t.rank - 3);
    case Family::E:
      if (t.rank < 6 || t.rank > 8) break;
      return tripod(1, 2, t.rank - 4);
    case Family::F4:
      return path({3, 4, 3});
    case Family::H3:
      return path({5, 3});
    case Family::H4:
      return path({5, 3, 3});
    case Family::I2:
      if (t.edge < 3 || t.edge == kInfinity) break;
      return path({t.edge});
    case Family::AffA:
      if (t.rank < 1) break;
      if (t.rank == 1) return path({kInfinity});
      return cycle(t.rank + 1, 3);
    case Family::AffB: {
      if (t.rank < 3) break;
      // fork at one end, terminal label 4 at the other; rank+1 vertices
      CoxeterMatrix m = CoxeterMatrix::commuting(t.rank + 1);
      m.set(0, 2, 3);
      m.set(1, 2, 3);
      for (int v = 2; v + 1 < t.rank; ++v) m.set(v, v + 1, 3);
      m.set(t.rank - 1, t.rank, 4);
      return m;
    }
    case Family::AffC: {
      if (t.rank < 2) break;
      auto labs = repeated(t.rank, 3);
      labs.front() = 4;
      labs.back() = 4;
      return path(labs);
    }
    case Family::AffD: {
      if (t.rank < 4) break;
      // forks at both ends of a simple chain; rank+1 vertices
      CoxeterMatrix m = CoxeterMatrix::commuting(t.rank + 1);
      m.set(0, 2, 3);
      m.set(1, 2, 3);
      for (int v = 2; v + 1 <= t.rank - 2; ++v) m.set(v, v + 1, 3);
      m.set(t.rank - 2, t.rank - 1, 3);
      m.set(t.rank - 2, t.rank, 3);
      return m;
    }
    case Family::AffE:
      if (t.rank == 6) return tripod(2, 2, 2);
      if (t.rank == 7) return tripod(1, 3, 3);
      if (t.rank == 8) return tripod(1, 2, 5);
      break;
    case Family::AffF4:
      return path({3, 3, 4, 3});
    case Family::AffG2:
      return path({6, 3});
    case Family::Unnamed:
      break;
  }
  throw internal_error("catalog parameters out of range: " + t.str());
}

namespace {

std::vector<std::vector<int>> incident_label_profile(const CoxeterMatrix& m) {
  std::vector<std::vector<int>> prof(m.n);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j)
      if (j != i && m.label(i, j) >= 3) prof[i].push_back(m.label(i, j));
    std::sort(prof[i].begin(), prof[i].end());
  }
  return prof;
}

bool extend(const CoxeterMatrix& a, const CoxeterMatrix& b,
            std::vector<int>& map, std::vector<bool>& used, int v) {
  if (v == a.n) return true;
  for (int w = 0; w < b.n; ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (a.label(v, u) != b.label(map[u], w)) ok = false;
    if (!ok) continue;
    used[w] = true;
    map[v] = w;
    if (extend(a, b, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  if (a.n != b.n) return false;
  auto pa = incident_label_profile(a);
  auto pb = incident_label_profile(b);
  auto sa = pa;
  auto sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(b.n, false);
  return extend(a, b, map, used, 0);
}

NamedType recognize(const CoxeterMatrix& m) {
  if (!is_connected(m)) throw internal_error("recognize requires a connected matrix");
  const int v = m.n;
  if (v == 1) return {Family::A, 1, 0};
  if (v == 2) {
    int lab = m.label(0, 1);
    if (lab == 3) return {Family::A, 2, 0};
    if (lab == 4) return {Family::B, 2, 0};
    if (lab == kInfinity) return {Family::AffA, 1, 0};
    return {Family::I2, 2, lab};
  }

  std::vector<NamedType> candidates;
  candidates.push_back({Family::A, v, 0});
  candidates.push_back({Family::B, v, 0});
  if (v >= 4) candidates.push_back({Family::D, v, 0});  // D3 is already A3
  if (v >= 6 && v <= 8) candidates.push_back({Family::E, v, 0});
  if (v == 4) candidates.push_back({Family::F4, 4, 0});
  if (v == 3) candidates.push_back({Family::H3, 3, 0});
  if (v == 4) candidates.push_back({Family::H4, 4, 0});
  candidates.push_back({Family::AffA, v - 1, 0});
  if (v - 1 >= 3) candidates.push_back({Family::AffB, v - 1, 0});
  if (v - 1 >= 2) candidates.push_back({Family::AffC, v - 1, 0});
  if (v - 1 >= 4) candidates.push_back({Family::AffD, v - 1, 0});
  if (v - 1 >= 6 && v - 1 <= 8) candidates.push_back({Family::AffE, v - 1, 0});
  if (v == 5) candidates.push_back({Family::AffF4, 4, 0});
  if (v == 3) candidates.push_back({Family::AffG2, 2, 0});

  for (const auto& t : candidates)
    if (isomorphic(m, catalog_matrix(t))) return t;
  return {Family::Unnamed, v, 0};
}

std::vector<NamedType> spherical_types(int max_rank, int max_i2_label) {
  std::vector<NamedType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n, 0});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n, 0});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n, 0});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n, 0});
  if (max_rank >= 4) out.push_back({Family::F4, 4, 0});
  if (max_rank >= 3) out.push_back({Family::H3, 3, 0});
  if (max_rank >= 4) out.push_back({Family::H4, 4, 0});
  if (max_rank >= 2)
    for (int lab = 3; lab <= max_i2_label; ++lab) out.push_back({Family::I2, 2, lab});
  return out;
}

std::vector<NamedType> affine_types(int max_rank) {
  std::vector<NamedType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::AffA, n, 0});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::AffB, n, 0});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::AffC, n, 0});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::AffD, n, 0});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::AffE, n, 0});
  if (max_rank >= 4) out.push_back({Family::AffF4, 4, 0});
  if (max_rank >= 2) out.push_back({Family::AffG2, 2, 0});
  return out;
}

}  // namespace coxforge
