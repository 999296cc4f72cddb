#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tits_form.hpp"

namespace coxforge {

inline constexpr uint64_t kDefaultBallBudget = 1000000;

// Matrices in the image of the geometric representation have entries in
// Z[gamma] (gamma is an algebraic integer and the generator matrices are
// integral there), so group elements are stored as fixed-length integer
// coefficient vectors. All arithmetic is overflow-checked; exceeding the
// 64-bit range raises budget_error rather than ever wrapping.
class RepContext {
 public:
  explicit RepContext(const GramForm& g);

  int n() const { return n_; }
  int deg() const { return h_; }
  const FieldPtr& field() const { return field_; }
  // coefficients of 2*B(e_s, e_t)
  const int64_t* two_b(int s, int t) const {
    return &two_b_[(static_cast<size_t>(s) * n_ + t) * h_];
  }
  const std::vector<int64_t>& minpoly() const { return minpoly_; }

 private:
  int n_, h_;
  FieldPtr field_;
  std::vector<int64_t> minpoly_;  // monic, size h_+1
  std::vector<int64_t> two_b_;    // n*n*h
};

struct RepMatrix {
  std::vector<int64_t> a;  // n*n*h row-major entries, each h coefficients
  bool operator==(const RepMatrix&) const = default;
};

RepMatrix rep_identity(const RepContext& c);
// alpha(sigma_s): the reflection v -> v - 2 B(e_s, v) e_s
RepMatrix rep_reflection(const RepContext& c, int s);
// x * alpha(sigma_s), the word-append step
RepMatrix rep_right_mult_gen(const RepContext& c, const RepMatrix& x, int s);
RepMatrix rep_mult(const RepContext& c, const RepMatrix& x, const RepMatrix& y);
uint64_t rep_hash(const RepMatrix& x);
bool rep_is_identity(const RepContext& c, const RepMatrix& x);
// entries as exact field elements
std::vector<Scalar> rep_to_scalars(const RepContext& c, const RepMatrix& x);

// multiplicative order of alpha(sigma_s)alpha(sigma_t), or 0 if it exceeds max_pow
int product_order(const RepContext& c, int s, int t, int max_pow);

struct GroupElement {
  RepMatrix mat;
  std::vector<uint8_t> word;  // generator indices; ShortLex-minimal witness
};

struct Ball {
  int radius = 0;
  bool closed = false;  // true when radius+1 would add no new element
  std::vector<GroupElement> elements;     // BFS discovery order; [0] = identity
  std::vector<uint64_t> count_by_length;  // size radius+1
};

// Deterministic breadth-first enumeration of all elements of length <= radius,
// deduplicated by exact matrix equality. Throws budget_error when more than
// `budget` elements would be stored (no partial ball is returned).
Ball enumerate_ball(const RepContext& c, int radius,
                    uint64_t budget = kDefaultBallBudget);

// Action induced on the quotient by Ker(B), written in the complement
// coordinates of the kernel basis. Requires (and checks) that the element
// fixes the kernel pointwise.
struct QuotientAction {
  int dim = 0;
  std::vector<Scalar> q;  // dim*dim, row-major; column c = image of e_complement[c]
};

QuotientAction quotient_action(const GramForm& g, const KernelBasis& k,
                               const RepContext& c, const RepMatrix& x);

bool quotient_is_identity(const GramForm& g, const QuotientAction& qa);
bool quotient_is_minus_identity(const GramForm& g, const QuotientAction& qa);

// Membership in T_f: the element acts as the identity modulo the kernel.
bool in_tf(const GramForm& g, const KernelBasis& k, const RepContext& c,
           const RepMatrix& x);

struct Violation {
  std::vector<uint8_t> word;
  bool minus_identity = false;  // false: quotient is I; true: quotient is -I
};

struct FaithfulnessReport {
  int radius = 0;
  bool ball_closed = false;
  uint64_t ball_size = 0;
  uint64_t checked = 0;  // non-identity elements examined
  std::vector<uint64_t> count_by_length;
  std::vector<Violation> violations;  // ShortLex order
};

// Flags every non-identity element of the ball whose quotient action is I
// (lies in T_f) or -I (dies in the projective quotient).
FaithfulnessReport verify_reduced_faithful(const GramForm& g,
                                           const KernelBasis& k, int radius,
                                           uint64_t budget = kDefaultBallBudget);

}  // namespace coxforge
