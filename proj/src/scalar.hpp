#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace coxforge {

// Coxeter label standing for m = infinity. Chosen so that plain integer
// comparison sorts infinity above every finite label.
inline constexpr int kInfinity = 2147483647;

inline bool label_is_finite(int m) { return m != kInfinity; }

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

// The real cyclotomic field Q(gamma) with gamma = 2*cos(pi/N), where N is the
// lcm of the finite labels of one Coxeter matrix. Every Gram entry
// -cos(pi/m) of that matrix lives in this single field.
//
// gamma is an algebraic integer; its monic integer minimal polynomial is
// derived from the 2N-th cyclotomic polynomial via z + 1/z substitution.
class FieldContext {
 public:
  static constexpr long kDefaultMaxN = 10000;

  // labels: the labels occurring in the matrix (1, 2 and kInfinity are
  // allowed and contribute trivially). Throws input_error when the lcm of
  // the finite labels exceeds max_n.
  static FieldPtr make(const std::vector<int>& labels, long max_n = kDefaultMaxN);

  // the field Q(2cos(pi/n)) for a prescribed order n >= 1
  static FieldPtr make_order(long n);

  long n() const { return n_; }
  int degree() const { return degree_; }
  const std::vector<mpz_class>& minpoly() const { return minpoly_; }

  // m finite and >= 3 must divide N to be representable.
  bool admits_label(int m) const;

  // Integer coefficient vector (length degree) of 2*cos(k*pi/N), reduced
  // modulo the minimal polynomial. Requires 0 <= k <= N.
  std::vector<mpz_class> two_cos_coeffs(long k) const;

  // Dyadic bracket lo < gamma < hi isolating gamma among the minpoly roots;
  // minpoly changes sign across it.
  const mpq_class& bracket_lo() const { return lo_; }
  const mpq_class& bracket_hi() const { return hi_; }
  int sign_at_lo() const { return sign_at_lo_; }

  // Exact sign of the minimal polynomial at a rational point.
  int minpoly_sign(const mpq_class& x) const;

 private:
  FieldContext() = default;

  long n_ = 1;
  int degree_ = 1;
  std::vector<mpz_class> minpoly_;  // monic, little-endian, size degree_+1
  mpq_class lo_, hi_;
  int sign_at_lo_ = 0;
};

// Field element: polynomial in gamma of degree < ctx->degree() with rational
// coefficients, always kept fully reduced. The all-zero coefficient vector
// is the unique representation of 0, so equality is coefficient equality.
//
// Immutable after construction; safe to share across threads.
class Scalar {
 public:
  static Scalar zero(const FieldPtr& ctx);
  static Scalar from_int(const FieldPtr& ctx, long v);
  static Scalar from_rational(const FieldPtr& ctx, const mpq_class& v);
  static Scalar from_coeffs(const FieldPtr& ctx, std::vector<mpq_class> coeffs);

  // The exact Gram entry -cos(pi/m). Conventions: m = kInfinity -> -1,
  // m = 1 -> +1, m = 2 -> 0. Throws input_error when a finite m >= 3 does
  // not divide ctx->n().
  static Scalar entry_from_label(const FieldPtr& ctx, int m);

  // 2*cos(k*pi/N) as a field element, 0 <= k <= N.
  static Scalar two_cos(const FieldPtr& ctx, long k);

  const FieldPtr& ctx() const { return ctx_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;

  // Certified sign in {-1, 0, +1}. Zero is an exact coefficient test; a
  // nonzero value is resolved by interval evaluation around gamma with
  // bisection refinement (terminates; the iteration cap, overridable via
  // COXFORGE_PRECISION_CAP, raises internal_error instead of guessing).
  int sign() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  Scalar inverse() const;  // throws internal_error on zero

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b);

  // Correctly rounded decimal approximation with `digits` fractional
  // places, computed from a certified interval. Deterministic.
  std::string decimal(int digits = 12) const;

  // Human-readable exact form, e.g. "1/2 + 3*g" (g = 2*cos(pi/N)).
  std::string str() const;

 private:
  Scalar(FieldPtr ctx, std::vector<mpq_class> c);
  void require_same_field(const Scalar& o) const;

  FieldPtr ctx_;
  std::vector<mpq_class> c_;
};

// Iteration cap for certified interval refinement (default 5000, env
// COXFORGE_PRECISION_CAP overrides).
int precision_cap();

}  // namespace coxforge
