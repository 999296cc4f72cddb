#include "scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace coxforge {

namespace {

using ZPoly = std::vector<mpz_class>;  // little-endian coefficients
using QPoly = std::vector<mpq_class>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

// p *= (x^k - 1)
void mul_binomial(ZPoly& p, long k) {
  ZPoly r(p.size() + k, mpz_class(0));
  for (size_t i = 0; i < p.size(); ++i) {
    r[i + k] += p[i];
    r[i] -= p[i];
  }
  p = std::move(r);
}

// p /= (x^k - 1), exact
void div_binomial(ZPoly& p, long k) {
  ZPoly q(p.size() - k, mpz_class(0));
  for (int i = zdeg(p); i >= k; --i) {
    q[i - k] = p[i];
    p[i - k] += p[i];
    p[i] = 0;
  }
  ztrim(p);
  if (!p.empty()) throw internal_error("cyclotomic division left a remainder");
  p = std::move(q);
}

struct Factorization {
  std::vector<long> primes;
  long totient;
};

Factorization factor(long m) {
  Factorization f;
  f.totient = 1;
  long rest = m;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    long e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.primes.push_back(p);
    f.totient *= (p - 1);
    for (long i = 1; i < e; ++i) f.totient *= p;
  }
  if (rest > 1) {
    f.primes.push_back(rest);
    f.totient *= rest - 1;
  }
  return f;
}

// The M-th cyclotomic polynomial via the Moebius product
// Phi_M(x) = prod_{d | rad(M)} (x^{M/d} - 1)^{mu(d)}.
ZPoly cyclotomic(long m) {
  Factorization f = factor(m);
  const size_t np = f.primes.size();
  ZPoly poly{mpz_class(1)};
  // first the mu = +1 factors (even number of primes in d), then divisions
  for (int pass = 0; pass < 2; ++pass) {
    for (uint32_t mask = 0; mask < (1u << np); ++mask) {
      long d = 1;
      for (size_t i = 0; i < np; ++i)
        if (mask & (1u << i)) d *= f.primes[i];
      bool odd = __builtin_popcount(mask) & 1;
      if (pass == 0 && !odd) mul_binomial(poly, m / d);
      if (pass == 1 && odd) div_binomial(poly, m / d);
    }
  }
  if (zdeg(poly) != f.totient)
    throw internal_error("cyclotomic degree mismatch");
  return poly;
}

// Minimal polynomial of gamma = 2*cos(pi/N): substitute y = z + 1/z into
// Phi_{2N}(z)/z^{h} using the basis z^k + z^{-k} = V_k(y), where
// V_0 = 2, V_1 = y, V_{k+1} = y V_k - V_{k-1}.
ZPoly minimal_poly_two_cos(long n) {
  if (n == 1) return {mpz_class(2), mpz_class(1)};  // gamma = -2
  ZPoly phi = cyclotomic(2 * n);
  const int h = zdeg(phi) / 2;
  std::vector<ZPoly> v(h + 1);
  v[0] = {mpz_class(2)};
  if (h >= 1) v[1] = {mpz_class(0), mpz_class(1)};
  for (int k = 2; k <= h; ++k) {
    ZPoly t(v[k - 1].size() + 1, mpz_class(0));
    for (size_t i = 0; i < v[k - 1].size(); ++i) t[i + 1] = v[k - 1][i];
    for (size_t i = 0; i < v[k - 2].size(); ++i) t[i] -= v[k - 2][i];
    v[k] = std::move(t);
  }
  ZPoly psi(h + 1, mpz_class(0));
  psi[0] = phi[h];
  for (int k = 1; k <= h; ++k)
    for (size_t i = 0; i < v[k].size(); ++i) psi[i] += phi[h + k] * v[k][i];
  if (zdeg(psi) != h || psi[h] != 1)
    throw internal_error("minimal polynomial is not monic of expected degree");
  return psi;
}

// r := r mod m (m monic over Z), over Z
void zmod_monic(ZPoly& r, const ZPoly& m) {
  const int h = zdeg(m);
  ztrim(r);
  while (zdeg(r) >= h) {
    const int d = zdeg(r);
    mpz_class c = r[d];
    for (int j = 0; j <= h; ++j) r[d - h + j] -= c * m[j];
    ztrim(r);
  }
  r.resize(h, mpz_class(0));
}

// q := q mod m (m monic over Z), over Q
void qmod_monic(QPoly& q, const ZPoly& m) {
  const int h = zdeg(m);
  int d = static_cast<int>(q.size()) - 1;
  while (d >= h) {
    if (q[d] != 0) {
      mpq_class c = q[d];
      for (int j = 0; j <= h; ++j) q[d - h + j] -= c * mpq_class(m[j]);
    }
    --d;
  }
  q.resize(h, mpq_class(0));
}

int qdeg(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Polynomial division over Q: returns quotient, leaves remainder in a.
QPoly qdivmod(QPoly& a, const QPoly& b) {
  const int db = qdeg(b);
  if (db < 0) throw internal_error("division by zero polynomial");
  QPoly quot;
  int da = qdeg(a);
  if (da >= db) quot.assign(da - db + 1, mpq_class(0));
  while (da >= db) {
    mpq_class c = a[da] / b[db];
    quot[da - db] = c;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= c * b[j];
    da = qdeg(a);
  }
  return quot;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size(), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

struct Interval {
  mpq_class lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
  mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
            p4 = a.hi * b.hi;
  Interval r{p1, p1};
  for (const mpq_class& p : {p2, p3, p4}) {
    if (p < r.lo) r.lo = p;
    if (p > r.hi) r.hi = p;
  }
  return r;
}

// Interval Horner evaluation of a rational polynomial on [x.lo, x.hi].
Interval ieval(const QPoly& c, const Interval& x) {
  Interval acc{mpq_class(0), mpq_class(0)};
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    acc = imul(acc, x);
    acc.lo += c[i];
    acc.hi += c[i];
  }
  return acc;
}

}  // namespace

int precision_cap() {
  if (const char* s = std::getenv("COXFORGE_PRECISION_CAP")) {
    long v = std::atol(s);
    if (v > 0) return static_cast<int>(v);
  }
  return 5000;
}

FieldPtr FieldContext::make(const std::vector<int>& labels, long max_n) {
  if (labels.empty()) throw input_error("label set for field construction is empty");
  long n = 1;
  for (int m : labels) {
    if (m == kInfinity || m <= 2) continue;  // 1, 2, infinity contribute trivially
    long g = std::gcd(n, static_cast<long>(m));
    long next = n / g * m;
    if (next > max_n)
      throw budget_error("lcm of labels exceeds exact-mode bound " +
                         std::to_string(max_n));
    n = next;
  }
  return make_order(n);
}

FieldPtr FieldContext::make_order(long n) {
  if (n < 1) throw input_error("field order must be positive");
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->n_ = n;
  ctx->minpoly_ = minimal_poly_two_cos(n);
  ctx->degree_ = zdeg(ctx->minpoly_);

  // Dyadic bracket around gamma seeded from a hardware cosine, then widened
  // until the minimal polynomial provably changes sign across it.
  double g0 = 2.0 * std::cos(M_PI / static_cast<double>(n));
  mpq_class mid(g0);
  mpq_class pad(1, 1);
  pad /= mpz_class(1) << 40;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 12)
      throw internal_error("could not bracket field generator");
    ctx->lo_ = mid - pad;
    ctx->hi_ = mid + pad;
    int slo = ctx->minpoly_sign(ctx->lo_);
    int shi = ctx->minpoly_sign(ctx->hi_);
    if (slo != 0 && shi == -slo) {
      ctx->sign_at_lo_ = slo;
      break;
    }
    pad *= 2;
  }
  return ctx;
}

bool FieldContext::admits_label(int m) const {
  if (m == kInfinity || m <= 2) return true;
  return n_ % m == 0;
}

std::vector<mpz_class> FieldContext::two_cos_coeffs(long k) const {
  if (k < 0 || k > n_) throw internal_error("two_cos index out of range");
  const int h = degree_;
  // Chebyshev-style recurrence p_{k+1} = gamma*p_k - p_{k-1}, reduced mod
  // the minimal polynomial at every step so degrees stay below h.
  ZPoly prev(h, mpz_class(0)), cur(h, mpz_class(0));
  prev[0] = 2;  // 2*cos(0)
  if (k == 0) return prev;
  if (h >= 2) {
    cur[1] = 1;
  } else {
    // degree-1 field: gamma reduces to the rational root -minpoly[0]
    cur[0] = -minpoly_[0];
  }
  if (k == 1) return cur;
  for (long i = 2; i <= k; ++i) {
    ZPoly next(h + 1, mpz_class(0));
    for (int j = 0; j < h; ++j) next[j + 1] = cur[j];  // multiply by x
    zmod_monic(next, minpoly_);
    for (int j = 0; j < h; ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
    cur.resize(h, mpz_class(0));
  }
  return cur;
}

int FieldContext::minpoly_sign(const mpq_class& x) const {
  mpq_class acc(0);
  for (int i = degree_; i >= 0; --i) {
    acc *= x;
    acc += mpq_class(minpoly_[i]);
  }
  return sgn(acc);
}

Scalar::Scalar(FieldPtr ctx, std::vector<mpq_class> c)
    : ctx_(std::move(ctx)), c_(std::move(c)) {
  if (static_cast<int>(c_.size()) != ctx_->degree())
    throw internal_error("scalar coefficient length mismatch");
}

Scalar Scalar::zero(const FieldPtr& ctx) {
  return Scalar(ctx, QPoly(ctx->degree(), mpq_class(0)));
}

Scalar Scalar::from_int(const FieldPtr& ctx, long v) {
  QPoly c(ctx->degree(), mpq_class(0));
  c[0] = v;
  return Scalar(ctx, std::move(c));
}

Scalar Scalar::from_rational(const FieldPtr& ctx, const mpq_class& v) {
  QPoly c(ctx->degree(), mpq_class(0));
  c[0] = v;
  return Scalar(ctx, std::move(c));
}

Scalar Scalar::from_coeffs(const FieldPtr& ctx, std::vector<mpq_class> coeffs) {
  qmod_monic(coeffs, ctx->minpoly());
  return Scalar(ctx, std::move(coeffs));
}

Scalar Scalar::two_cos(const FieldPtr& ctx, long k) {
  auto z = ctx->two_cos_coeffs(k);
  QPoly c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = mpq_class(z[i]);
  return Scalar(ctx, std::move(c));
}

Scalar Scalar::entry_from_label(const FieldPtr& ctx, int m) {
  if (m == kInfinity) return from_int(ctx, -1);  // -cos(0)
  if (m == 1) return from_int(ctx, 1);           // -cos(pi)
  if (m == 2) return zero(ctx);                  // -cos(pi/2)
  if (m < 1) throw input_error("label must be at least 1");
  if (!ctx->admits_label(m))
    throw input_error("label " + std::to_string(m) +
                      " does not divide the field order N=" +
                      std::to_string(ctx->n()));
  Scalar t = two_cos(ctx, ctx->n() / m);
  QPoly c = t.c_;
  for (auto& x : c) x /= -2;
  return Scalar(ctx, std::move(c));
}

bool Scalar::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (ctx_ != o.ctx_ && ctx_->n() != o.ctx_->n())
    throw internal_error("scalar arithmetic across different field contexts");
}

Scalar Scalar::operator-() const {
  QPoly c = c_;
  for (auto& x : c) x = -x;
  return Scalar(ctx_, std::move(c));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r = a;
  r += b;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r = a;
  r -= b;
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  QPoly prod = qmul(a.c_, b.c_);
  qmod_monic(prod, a.ctx_->minpoly());
  return Scalar(a.ctx_, std::move(prod));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw internal_error("inverse of zero scalar");
  // extended Euclid in Q[x] against the (irreducible) minimal polynomial
  QPoly r0(ctx_->minpoly().size());
  for (size_t i = 0; i < r0.size(); ++i) r0[i] = mpq_class(ctx_->minpoly()[i]);
  QPoly r1 = c_;
  QPoly t0{mpq_class(0)}, t1{mpq_class(1)};
  while (qdeg(r1) >= 0) {
    QPoly rem = r0;
    QPoly quot = qdivmod(rem, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly t2 = t0;
    QPoly qt = qmul(quot, t1);
    t2.resize(std::max(t2.size(), qt.size()), mpq_class(0));
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (qdeg(r0) != 0)
    throw internal_error("minimal polynomial not coprime to scalar");
  mpq_class lead = r0[0];
  for (auto& x : t0) x /= lead;
  qmod_monic(t0, ctx_->minpoly());
  return Scalar(ctx_, std::move(t0));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.c_ == b.c_;
}

bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

int Scalar::sign() const {
  if (is_zero()) return 0;
  if (ctx_->degree() == 1) return sgn(c_[0]);  // value is the constant term
  Interval x{ctx_->bracket_lo(), ctx_->bracket_hi()};
  const int s_lo = ctx_->sign_at_lo();
  const int cap = precision_cap();
  for (int iter = 0; iter < cap; ++iter) {
    Interval v = ieval(c_, x);
    if (sgn(v.lo) > 0) return 1;
    if (sgn(v.hi) < 0) return -1;
    mpq_class mid = (x.lo + x.hi) / 2;
    int sm = ctx_->minpoly_sign(mid);
    if (sm == 0)
      throw internal_error("rational root of irreducible minimal polynomial");
    if (sm == s_lo)
      x.lo = mid;
    else
      x.hi = mid;
  }
  throw internal_error(
      "sign refinement hit the precision cap (COXFORGE_PRECISION_CAP)");
}

std::string Scalar::decimal(int digits) const {
  Interval x{ctx_->bracket_lo(), ctx_->bracket_hi()};
  const int s_lo = ctx_->sign_at_lo();
  mpq_class tol(1);
  for (int i = 0; i < digits + 3; ++i) tol /= 10;
  const int cap = precision_cap();
  Interval v = ieval(c_, x);
  for (int iter = 0; iter < cap && v.hi - v.lo > tol; ++iter) {
    mpq_class mid = (x.lo + x.hi) / 2;
    int sm = ctx_->minpoly_sign(mid);
    if (sm == 0)
      throw internal_error("rational root of irreducible minimal polynomial");
    if (sm == s_lo)
      x.lo = mid;
    else
      x.hi = mid;
    v = ieval(c_, x);
  }
  if (v.hi - v.lo > tol)
    throw internal_error("decimal refinement hit the precision cap");
  mpq_class midv = (v.lo + v.hi) / 2;
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  mpq_class scaled = midv * mpq_class(scale);
  bool negative = sgn(scaled) < 0;
  if (negative) scaled = -scaled;
  scaled += mpq_class(1, 2);
  mpz_class units = scaled.get_num() / scaled.get_den();
  mpz_class ipart = units / scale;
  mpz_class fpart = units % scale;
  std::string frac = fpart.get_str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string out = (negative ? "-" : "") + ipart.get_str() + "." + frac;
  return out;
}

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i == 1) os << "*g";
    if (i > 1) os << "*g^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace coxforge
