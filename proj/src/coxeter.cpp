#include "coxeter.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace coxforge {

CoxeterMatrix CoxeterMatrix::commuting(int n) {
  CoxeterMatrix m;
  m.n = n;
  m.labels.assign(static_cast<size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) m.labels[static_cast<size_t>(i) * n + i] = 1;
  m.names.resize(n);
  for (int i = 0; i < n; ++i) m.names[i] = "s" + std::to_string(i);
  return m;
}

std::vector<int> CoxeterMatrix::label_set() const {
  std::set<int> s{2};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.insert(label(i, j));
  return {s.begin(), s.end()};
}

std::vector<std::string> validate(const CoxeterMatrix& m) {
  std::vector<std::string> errs;
  if (m.n <= 0) {
    errs.push_back("matrix must have at least one generator");
    return errs;
  }
  if (m.labels.size() != static_cast<size_t>(m.n) * m.n)
    errs.push_back("label array size does not match rank");
  if (m.names.size() != static_cast<size_t>(m.n))
    errs.push_back("name list size does not match rank");
  if (!errs.empty()) return errs;
  for (int i = 0; i < m.n; ++i)
    if (m.label(i, i) != 1)
      errs.push_back("diagonal must be 1 (generator " + m.names[i] + ")");
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      if (m.label(i, j) != m.label(j, i))
        errs.push_back("asymmetric labels for pair (" + m.names[i] + "," +
                       m.names[j] + ")");
      if (m.label(i, j) < 2)
        errs.push_back("off-diagonal label must be at least 2 for pair (" +
                       m.names[i] + "," + m.names[j] + ")");
    }
  return errs;
}

std::vector<DiagramEdge> diagram_edges(const CoxeterMatrix& m) {
  std::vector<DiagramEdge> edges;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (m.label(i, j) >= 3) edges.push_back({i, j, m.label(i, j)});
  return edges;
}

namespace {

std::vector<int> component_ids(const CoxeterMatrix& m) {
  std::vector<int> id(m.n, -1);
  int next = 0;
  for (int start = 0; start < m.n; ++start) {
    if (id[start] >= 0) continue;
    std::vector<int> stack{start};
    id[start] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < m.n; ++u)
        if (u != v && id[u] < 0 && m.label(v, u) >= 3) {
          id[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  return id;
}

}  // namespace

bool is_connected(const CoxeterMatrix& m) {
  if (m.n == 0) return false;
  auto id = component_ids(m);
  return *std::max_element(id.begin(), id.end()) == 0;
}

CoxeterMatrix induced(const CoxeterMatrix& m, const std::vector<int>& vertices) {
  CoxeterMatrix r;
  r.n = static_cast<int>(vertices.size());
  r.labels.assign(static_cast<size_t>(r.n) * r.n, 2);
  r.names.resize(r.n);
  for (int i = 0; i < r.n; ++i) {
    r.names[i] = m.names[vertices[i]];
    for (int j = 0; j < r.n; ++j)
      r.labels[static_cast<size_t>(i) * r.n + j] = m.label(vertices[i], vertices[j]);
  }
  return r;
}

CoxeterMatrix disjoint_union(const std::vector<CoxeterMatrix>& parts) {
  int n = 0;
  for (const auto& p : parts) n += p.n;
  CoxeterMatrix r = CoxeterMatrix::commuting(n);
  int base = 0;
  int part_index = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.n; ++i) {
      // qualify names across parts so they stay distinct identifiers
      r.names[base + i] = p.names[i] + "_" + std::to_string(part_index);
      for (int j = 0; j < p.n; ++j)
        r.labels[static_cast<size_t>(base + i) * n + (base + j)] = p.label(i, j);
    }
    base += p.n;
    ++part_index;
  }
  return r;
}

Decomposition components(const CoxeterMatrix& m) {
  auto id = component_ids(m);
  int count = m.n ? *std::max_element(id.begin(), id.end()) + 1 : 0;
  Decomposition d;
  d.parts.resize(count);
  for (int v = 0; v < m.n; ++v) d.parts[id[v]].push_back(v);
  // component_ids assigns ids by smallest contained vertex already; vertex
  // lists come out sorted because we scan vertices in order
  d.matrices.reserve(count);
  for (const auto& part : d.parts) d.matrices.push_back(induced(m, part));
  return d;
}

}  // namespace coxforge
