#include "representation.hpp"

#include "errors.hpp"

namespace coxforge {

namespace {

[[noreturn]] void overflow() {
  throw budget_error(
      "exact integer coefficients exceeded the 64-bit range; "
      "reduce the word length or the input size");
}

inline int64_t ck_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

inline int64_t ck_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) overflow();
  return r;
}

inline int64_t ck_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

// res (length h) = x*y mod minpoly, via a scratch buffer of length 2h-1
void poly_mul_mod(const std::vector<int64_t>& minpoly, int h, const int64_t* x,
                  const int64_t* y, int64_t* scratch, int64_t* res) {
  const int w = 2 * h - 1;
  for (int i = 0; i < w; ++i) scratch[i] = 0;
  for (int i = 0; i < h; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < h; ++j)
      if (y[j] != 0) scratch[i + j] = ck_add(scratch[i + j], ck_mul(x[i], y[j]));
  }
  for (int i = w - 1; i >= h; --i) {
    int64_t c = scratch[i];
    if (c == 0) continue;
    scratch[i] = 0;
    for (int j = 0; j < h; ++j)
      scratch[i - h + j] = ck_sub(scratch[i - h + j], ck_mul(c, minpoly[j]));
  }
  for (int i = 0; i < h; ++i) res[i] = scratch[i];
}

}  // namespace

RepContext::RepContext(const GramForm& g) : n_(g.n()), field_(g.ctx) {
  h_ = field_->degree();
  minpoly_.resize(h_ + 1);
  for (int i = 0; i <= h_; ++i) {
    const mpz_class& c = field_->minpoly()[i];
    if (!c.fits_slong_p()) overflow();
    minpoly_[i] = c.get_si();
  }
  two_b_.assign(static_cast<size_t>(n_) * n_ * h_, 0);
  const CoxeterMatrix& m = g.source;
  for (int s = 0; s < n_; ++s)
    for (int t = 0; t < n_; ++t) {
      int64_t* dst = &two_b_[(static_cast<size_t>(s) * n_ + t) * h_];
      int lab = m.label(s, t);
      if (lab == 1) {
        dst[0] = 2;  // diagonal: 2*B(e_s,e_s) = 2
      } else if (lab == 2) {
        // commuting pair: 0
      } else if (lab == kInfinity) {
        dst[0] = -2;
      } else {
        auto v = field_->two_cos_coeffs(field_->n() / lab);
        for (int i = 0; i < h_; ++i) {
          if (!v[i].fits_slong_p()) overflow();
          dst[i] = -v[i].get_si();
        }
      }
    }
}

RepMatrix rep_identity(const RepContext& c) {
  RepMatrix x;
  x.a.assign(static_cast<size_t>(c.n()) * c.n() * c.deg(), 0);
  for (int i = 0; i < c.n(); ++i)
    x.a[(static_cast<size_t>(i) * c.n() + i) * c.deg()] = 1;
  return x;
}

RepMatrix rep_reflection(const RepContext& c, int s) {
  return rep_right_mult_gen(c, rep_identity(c), s);
}

RepMatrix rep_right_mult_gen(const RepContext& c, const RepMatrix& x, int s) {
  const int n = c.n(), h = c.deg();
  RepMatrix y = x;
  // X * r_s = X - (X e_s) w^T with w_t = 2B(e_s, e_t)
  std::vector<int64_t> col(static_cast<size_t>(n) * h);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < h; ++k)
      col[static_cast<size_t>(i) * h + k] =
          x.a[(static_cast<size_t>(i) * n + s) * h + k];
  std::vector<int64_t> scratch(2 * h - 1), prod(h);
  for (int i = 0; i < n; ++i) {
    const int64_t* ci = &col[static_cast<size_t>(i) * h];
    bool zero = true;
    for (int k = 0; k < h; ++k)
      if (ci[k]) {
        zero = false;
        break;
      }
    if (zero) continue;
    for (int t = 0; t < n; ++t) {
      const int64_t* w = c.two_b(s, t);
      bool wzero = true;
      for (int k = 0; k < h; ++k)
        if (w[k]) {
          wzero = false;
          break;
        }
      if (wzero) continue;
      poly_mul_mod(c.minpoly(), h, ci, w, scratch.data(), prod.data());
      int64_t* dst = &y.a[(static_cast<size_t>(i) * n + t) * h];
      for (int k = 0; k < h; ++k) dst[k] = ck_sub(dst[k], prod[k]);
    }
  }
  return y;
}

RepMatrix rep_mult(const RepContext& c, const RepMatrix& x, const RepMatrix& y) {
  const int n = c.n(), h = c.deg();
  RepMatrix z;
  z.a.assign(static_cast<size_t>(n) * n * h, 0);
  std::vector<int64_t> scratch(2 * h - 1), prod(h);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int64_t* xik = &x.a[(static_cast<size_t>(i) * n + k) * h];
      bool zero = true;
      for (int u = 0; u < h; ++u)
        if (xik[u]) {
          zero = false;
          break;
        }
      if (zero) continue;
      for (int j = 0; j < n; ++j) {
        const int64_t* ykj = &y.a[(static_cast<size_t>(k) * n + j) * h];
        poly_mul_mod(c.minpoly(), h, xik, ykj, scratch.data(), prod.data());
        int64_t* dst = &z.a[(static_cast<size_t>(i) * n + j) * h];
        for (int u = 0; u < h; ++u) dst[u] = ck_add(dst[u], prod[u]);
      }
    }
  return z;
}

uint64_t rep_hash(const RepMatrix& x) {
  uint64_t hash = 1469598103934665603ull;  // FNV-1a over the coefficient words
  for (int64_t v : x.a) {
    uint64_t u = static_cast<uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      hash ^= (u >> (8 * b)) & 0xff;
      hash *= 1099511628211ull;
    }
  }
  return hash;
}

bool rep_is_identity(const RepContext& c, const RepMatrix& x) {
  return x == rep_identity(c);
}

std::vector<Scalar> rep_to_scalars(const RepContext& c, const RepMatrix& x) {
  const int n = c.n(), h = c.deg();
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<mpq_class> coeffs(h);
      for (int k = 0; k < h; ++k)
        coeffs[k] = mpq_class(static_cast<long>(
            x.a[(static_cast<size_t>(i) * n + j) * h + k]));
      out.push_back(Scalar::from_coeffs(c.field(), std::move(coeffs)));
    }
  return out;
}

int product_order(const RepContext& c, int s, int t, int max_pow) {
  RepMatrix rs = rep_reflection(c, s);
  RepMatrix rst = rep_right_mult_gen(c, rs, t);
  RepMatrix id = rep_identity(c);
  RepMatrix acc = rst;
  for (int k = 1; k <= max_pow; ++k) {
    if (acc == id) return k;
    acc = rep_mult(c, acc, rst);
  }
  return 0;
}

Ball enumerate_ball(const RepContext& c, int radius, uint64_t budget) {
  if (radius < 0) throw input_error("ball radius must be non-negative");
  Ball ball;
  ball.radius = radius;
  ball.count_by_length.assign(radius + 1, 0);

  std::unordered_map<uint64_t, std::vector<uint32_t>> index;
  auto find = [&](const RepMatrix& m, uint64_t h) -> int64_t {
    auto it = index.find(h);
    if (it == index.end()) return -1;
    for (uint32_t i : it->second)
      if (ball.elements[i].mat == m) return i;
    return -1;
  };

  RepMatrix id = rep_identity(c);
  uint64_t h0 = rep_hash(id);
  ball.elements.push_back({std::move(id), {}});
  index[h0].push_back(0);
  ball.count_by_length[0] = 1;

  size_t level_begin = 0, level_end = 1;
  for (int len = 1; len <= radius + 1; ++len) {
    const bool probe_only = (len == radius + 1);
    bool added = false;
    for (size_t e = level_begin; e < level_end; ++e)
      for (int s = 0; s < c.n(); ++s) {
        RepMatrix cand = rep_right_mult_gen(c, ball.elements[e].mat, s);
        uint64_t hash = rep_hash(cand);
        if (find(cand, hash) >= 0) continue;
        if (probe_only) {
          // an element of length radius+1 exists; the ball is not closed
          return ball;
        }
        if (ball.elements.size() >= budget)
          throw budget_error("ball enumeration exceeded the element budget of " +
                             std::to_string(budget));
        std::vector<uint8_t> word = ball.elements[e].word;
        word.push_back(static_cast<uint8_t>(s));
        uint32_t idx = static_cast<uint32_t>(ball.elements.size());
        ball.elements.push_back({std::move(cand), std::move(word)});
        index[hash].push_back(idx);
        ++ball.count_by_length[len];
        added = true;
      }
    if (probe_only || !added) {
      ball.closed = true;
      return ball;
    }
    level_begin = level_end;
    level_end = ball.elements.size();
  }
  return ball;
}

QuotientAction quotient_action(const GramForm& g, const KernelBasis& k,
                               const RepContext& c, const RepMatrix& x) {
  const int n = g.n();
  const int r = static_cast<int>(k.vectors.size());
  const int dim = n - r;
  std::vector<Scalar> xs = rep_to_scalars(c, x);
  auto at = [&](int i, int j) -> const Scalar& {
    return xs[static_cast<size_t>(i) * n + j];
  };
  const Scalar zero = Scalar::zero(g.ctx);

  // the element must fix Ker(B) pointwise (membership in O_f)
  for (const auto& kv : k.vectors)
    for (int i = 0; i < n; ++i) {
      Scalar acc = zero;
      for (int j = 0; j < n; ++j)
        if (!kv[j].is_zero()) acc += at(i, j) * kv[j];
      if (acc != kv[i])
        throw internal_error("element does not fix the kernel pointwise");
    }

  QuotientAction qa;
  qa.dim = dim;
  qa.q.assign(static_cast<size_t>(dim) * dim, zero);
  for (int cc = 0; cc < dim; ++cc) {
    const int src = k.complement[cc];
    // v = x * e_src; kernel components are read off the free coordinates
    // (each kernel vector is 1 on its own free coordinate, 0 on the others)
    for (int rr = 0; rr < dim; ++rr) {
      Scalar val = at(k.complement[rr], src);
      for (int j = 0; j < r; ++j) {
        const Scalar& y = at(k.free_coords[j], src);
        if (!y.is_zero()) val -= y * k.vectors[j][k.complement[rr]];
      }
      qa.q[static_cast<size_t>(rr) * dim + cc] = val;
    }
  }
  return qa;
}

namespace {

bool quotient_is_scalar(const GramForm& g, const QuotientAction& qa, long diag) {
  const Scalar d = Scalar::from_int(g.ctx, diag);
  for (int i = 0; i < qa.dim; ++i)
    for (int j = 0; j < qa.dim; ++j) {
      const Scalar& v = qa.q[static_cast<size_t>(i) * qa.dim + j];
      if (i == j ? (v != d) : !v.is_zero()) return false;
    }
  return true;
}

}  // namespace

bool quotient_is_identity(const GramForm& g, const QuotientAction& qa) {
  return quotient_is_scalar(g, qa, 1);
}

bool quotient_is_minus_identity(const GramForm& g, const QuotientAction& qa) {
  return quotient_is_scalar(g, qa, -1);
}

bool in_tf(const GramForm& g, const KernelBasis& k, const RepContext& c,
           const RepMatrix& x) {
  return quotient_is_identity(g, quotient_action(g, k, c, x));
}

FaithfulnessReport verify_reduced_faithful(const GramForm& g,
                                           const KernelBasis& k, int radius,
                                           uint64_t budget) {
  if (radius < 1) throw input_error("verification radius must be at least 1");
  RepContext c(g);
  Ball ball = enumerate_ball(c, radius, budget);
  FaithfulnessReport rep;
  rep.radius = radius;
  rep.ball_closed = ball.closed;
  rep.ball_size = ball.elements.size();
  rep.count_by_length = ball.count_by_length;
  for (size_t e = 1; e < ball.elements.size(); ++e) {
    QuotientAction qa = quotient_action(g, k, c, ball.elements[e].mat);
    if (quotient_is_identity(g, qa))
      rep.violations.push_back({ball.elements[e].word, false});
    else if (quotient_is_minus_identity(g, qa))
      rep.violations.push_back({ball.elements[e].word, true});
    ++rep.checked;
  }
  return rep;
}

}  // namespace coxforge
