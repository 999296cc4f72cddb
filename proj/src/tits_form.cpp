#include "tits_form.hpp"

#include "errors.hpp"

namespace coxforge {

GramForm gram(const CoxeterMatrix& m) {
  auto errs = validate(m);
  if (!errs.empty()) throw input_error("invalid Coxeter matrix: " + errs.front());
  GramForm g;
  g.source = m;
  g.ctx = FieldContext::make(m.label_set());
  g.entries.reserve(static_cast<size_t>(m.n) * m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      g.entries.push_back(Scalar::entry_from_label(g.ctx, m.label(i, j)));
  return g;
}

namespace {

struct Matrix {
  int n;
  std::vector<Scalar> a;
  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

Matrix copy_of(const GramForm& g) { return Matrix{g.n(), g.entries}; }

// congruence row+column operation: row_j -= f*row_i, col_j -= f*col_i
void eliminate(Matrix& m, const std::vector<int>& active, int j, int i,
               const Scalar& f) {
  for (int k : active) m.at(j, k) -= f * m.at(i, k);
  for (int k : active) m.at(k, j) -= f * m.at(k, i);
}

}  // namespace

Signature signature_of(const GramForm& g) {
  Matrix m = copy_of(g);
  std::vector<int> active(m.n);
  for (int i = 0; i < m.n; ++i) active[i] = i;
  Signature sig;

  while (!active.empty()) {
    // diagonal pivot: first active index with a nonzero diagonal entry
    int pivot = -1;
    for (int i : active)
      if (!m.at(i, i).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot >= 0) {
      if (m.at(pivot, pivot).sign() > 0)
        ++sig.p;
      else
        ++sig.q;
      Scalar inv = m.at(pivot, pivot).inverse();
      std::vector<int> rest;
      for (int i : active)
        if (i != pivot) rest.push_back(i);
      for (int j : rest)
        if (!m.at(j, pivot).is_zero()) eliminate(m, active, j, pivot, m.at(j, pivot) * inv);
      active = std::move(rest);
      continue;
    }
    // all active diagonal entries are zero: look for a hyperbolic pair
    int hi = -1, hj = -1;
    for (size_t a = 0; a < active.size() && hi < 0; ++a)
      for (size_t b = a + 1; b < active.size(); ++b)
        if (!m.at(active[a], active[b]).is_zero()) {
          hi = active[a];
          hj = active[b];
          break;
        }
    if (hi < 0) {
      sig.r += static_cast<int>(active.size());
      break;
    }
    ++sig.p;
    ++sig.q;
    Scalar invb = m.at(hi, hj).inverse();
    std::vector<int> rest;
    for (int i : active)
      if (i != hi && i != hj) rest.push_back(i);
    for (int k : rest) {
      Scalar fj = m.at(k, hj) * invb;  // clears the hi-component
      Scalar fi = m.at(k, hi) * invb;  // clears the hj-component
      if (!fj.is_zero()) eliminate(m, active, k, hi, fj);
      if (!fi.is_zero()) eliminate(m, active, k, hj, fi);
    }
    active = std::move(rest);
  }

  if (sig.p + sig.q + sig.r != g.n())
    throw internal_error("inertia counts do not add up to the rank");
  return sig;
}

KernelBasis kernel_of(const GramForm& g) {
  const int n = g.n();
  Matrix m = copy_of(g);
  const Scalar zero = Scalar::zero(g.ctx);
  const Scalar one = Scalar::from_int(g.ctx, 1);

  // reduced row echelon form
  std::vector<int> pivot_cols;
  std::vector<int> pivot_rows;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int i = row; i < n; ++i)
      if (!m.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < n; ++j) std::swap(m.at(row, j), m.at(pr, j));
    Scalar inv = m.at(row, col).inverse();
    for (int j = 0; j < n; ++j) m.at(row, j) = m.at(row, j) * inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (int j = 0; j < n; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivot_cols.push_back(col);
    pivot_rows.push_back(row);
    ++row;
  }

  KernelBasis k;
  k.complement = pivot_cols;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) k.free_coords.push_back(c);

  for (int f : k.free_coords) {
    std::vector<Scalar> v(n, zero);
    v[f] = one;
    for (size_t t = 0; t < pivot_cols.size(); ++t)
      v[pivot_cols[t]] = -m.at(pivot_rows[t], f);
    k.vectors.push_back(std::move(v));
  }

  // exactness check: B.v = 0 for every basis vector
  for (const auto& v : k.vectors)
    for (int i = 0; i < n; ++i) {
      Scalar acc = zero;
      for (int j = 0; j < n; ++j) acc += g.at(i, j) * v[j];
      if (!acc.is_zero()) throw internal_error("kernel vector fails B.v = 0");
    }
  return k;
}

}  // namespace coxforge
