#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "fixtures.hpp"
#include "representation.hpp"

using namespace coxforge;
namespace fx = coxforge::fixtures;

namespace {

struct Setup {
  GramForm g;
  KernelBasis k;
  RepContext c;
  explicit Setup(const CoxeterMatrix& m) : g(gram(m)), k(kernel_of(g)), c(g) {}
};

// exact check of M^T Gram M = Gram in the scalar field
bool preserves_form(const Setup& s, const RepMatrix& x) {
  const int n = s.g.n();
  auto xs = rep_to_scalars(s.c, x);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc = Scalar::zero(s.g.ctx);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          acc += xs[static_cast<size_t>(k) * n + i] * s.g.at(k, l) *
                 xs[static_cast<size_t>(l) * n + j];
      if (acc != s.g.at(i, j)) return false;
    }
  return true;
}

bool fixes_kernel(const Setup& s, const RepMatrix& x) {
  const int n = s.g.n();
  auto xs = rep_to_scalars(s.c, x);
  for (const auto& v : s.k.vectors)
    for (int i = 0; i < n; ++i) {
      Scalar acc = Scalar::zero(s.g.ctx);
      for (int j = 0; j < n; ++j) acc += xs[static_cast<size_t>(i) * n + j] * v[j];
      if (acc != v[i]) return false;
    }
  return true;
}

long entry_int(const RepContext& c, const RepMatrix& x, int i, int j) {
  REQUIRE(c.deg() == 1);
  return x.a[(static_cast<size_t>(i) * c.n() + j) * c.deg()];
}

}  // namespace

TEST_CASE("reflection matrices") {
  // A~1: columns (s, t) give [[-1, 2], [0, 1]]
  Setup s(fx::path({kInfinity}));
  RepMatrix r0 = rep_reflection(s.c, 0);
  CHECK(entry_int(s.c, r0, 0, 0) == -1);
  CHECK(entry_int(s.c, r0, 0, 1) == 2);
  CHECK(entry_int(s.c, r0, 1, 0) == 0);
  CHECK(entry_int(s.c, r0, 1, 1) == 1);

  // reflections are involutions and send e_s to -e_s
  for (const auto& m : fx::nonaffine_fixtures()) {
    Setup f(m);
    for (int g = 0; g < m.n; ++g) {
      RepMatrix r = rep_reflection(f.c, g);
      CHECK(rep_is_identity(f.c, rep_mult(f.c, r, r)));
      for (int i = 0; i < m.n; ++i)
        CHECK(entry_int(f.c, r, i, g) == (i == g ? -1 : 0));
    }
  }
}

TEST_CASE("A2 braid product") {
  Setup s(fx::path({3}));
  RepMatrix prod = rep_mult(s.c, rep_reflection(s.c, 0), rep_reflection(s.c, 1));
  // oracle: direct 2x2 multiplication gives [[0,-1],[1,-1]], with cube I
  CHECK(entry_int(s.c, prod, 0, 0) == 0);
  CHECK(entry_int(s.c, prod, 0, 1) == -1);
  CHECK(entry_int(s.c, prod, 1, 0) == 1);
  CHECK(entry_int(s.c, prod, 1, 1) == -1);
  RepMatrix cube = rep_mult(s.c, rep_mult(s.c, prod, prod), prod);
  CHECK(rep_is_identity(s.c, cube));
}

TEST_CASE("pairwise product orders equal the labels") {
  for (const auto& m : {fx::path({3, 4}), fx::path({5, 3}), fx::five_vertex(3, 4, 3, 5)}) {
    Setup s(m);
    for (int a = 0; a < m.n; ++a)
      for (int b = a + 1; b < m.n; ++b) {
        int lab = m.label(a, b);
        if (lab == kInfinity)
          CHECK(product_order(s.c, a, b, 20) == 0);
        else
          CHECK(product_order(s.c, a, b, 2 * lab) == lab);
      }
  }
}

TEST_CASE("ball enumeration sizes") {
  Setup a2(fx::path({3}));
  Ball b = enumerate_ball(a2.c, 3);
  CHECK(b.elements.size() == 6);  // oracle: |W(I2(3))| = 6: e,s,t,st,ts,sts
  CHECK(b.closed);

  Setup b2(fx::path({4}));
  b = enumerate_ball(b2.c, 4);
  CHECK(b.elements.size() == 8);  // dihedral of order 2*4
  CHECK(b.closed);

  Setup a3(fx::path({3, 3}));
  b = enumerate_ball(a3.c, 8);
  CHECK(b.elements.size() == 24);
  CHECK(b.closed);

  Setup h3(fx::named(Family::H3, 3));
  b = enumerate_ball(h3.c, 16);
  CHECK(b.elements.size() == 120);
  CHECK(b.closed);

  Setup aff(fx::path({kInfinity}));
  b = enumerate_ball(aff.c, 5);
  CHECK(b.elements.size() == 11);  // infinite dihedral: 2 elements per length
  CHECK(!b.closed);
  for (int len = 0; len <= 10; ++len) {
    Ball bl = enumerate_ball(aff.c, len);
    CHECK(bl.elements.size() == static_cast<size_t>(2 * len + 1));
    CHECK(!bl.closed);
  }
}

TEST_CASE("ball budget is enforced without partial results") {
  Setup s(fx::triangle_inf());
  CHECK_THROWS_AS(enumerate_ball(s.c, 10, 50), budget_error);
}

TEST_CASE("deterministic ShortLex witnesses") {
  Setup s(fx::path({3}));
  Ball b1 = enumerate_ball(s.c, 3);
  Ball b2 = enumerate_ball(s.c, 3);
  REQUIRE(b1.elements.size() == b2.elements.size());
  for (size_t i = 0; i < b1.elements.size(); ++i)
    CHECK(b1.elements[i].word == b2.elements[i].word);
  CHECK(b1.count_by_length == std::vector<uint64_t>{1, 2, 2, 1});
}

TEST_CASE("every ball element preserves B and fixes the kernel") {
  for (const auto& m : {fx::path({3}), fx::cycle(3, 3), fx::triangle_inf()}) {
    Setup s(m);
    Ball b = enumerate_ball(s.c, 4);
    for (const auto& e : b.elements) {
      CHECK(preserves_form(s, e.mat));
      CHECK(fixes_kernel(s, e.mat));
    }
  }
}

TEST_CASE("quotient action") {
  // trivial kernel: the quotient matrix is the matrix itself
  Setup a2(fx::path({3}));
  RepMatrix r0 = rep_reflection(a2.c, 0);
  QuotientAction qa = quotient_action(a2.g, a2.k, a2.c, r0);
  CHECK(qa.dim == 2);
  CHECK(qa.q == rep_to_scalars(a2.c, r0));

  // identity maps to the identity
  Setup aff(fx::path({kInfinity}));
  qa = quotient_action(aff.g, aff.k, aff.c, rep_identity(aff.c));
  CHECK(quotient_is_identity(aff.g, qa));

  // A~1: alpha(st) = [[3,-2],[2,-1]] acts as 1 on the quotient line
  RepMatrix st = rep_right_mult_gen(aff.c, rep_reflection(aff.c, 0), 1);
  CHECK(entry_int(aff.c, st, 0, 0) == 3);
  CHECK(entry_int(aff.c, st, 0, 1) == -2);
  CHECK(entry_int(aff.c, st, 1, 0) == 2);
  CHECK(entry_int(aff.c, st, 1, 1) == -1);
  qa = quotient_action(aff.g, aff.k, aff.c, st);
  REQUIRE(qa.dim == 1);
  CHECK(quotient_is_identity(aff.g, qa));
  CHECK(in_tf(aff.g, aff.k, aff.c, st));
  CHECK(in_tf(aff.g, aff.k, aff.c, rep_identity(aff.c)));

  // a single generator acts as -1 on the quotient line
  qa = quotient_action(aff.g, aff.k, aff.c, rep_reflection(aff.c, 0));
  CHECK(quotient_is_minus_identity(aff.g, qa));
}

TEST_CASE("quotient action is a homomorphism") {
  Setup s(fx::cycle(3, 3));
  Ball b = enumerate_ball(s.c, 4);
  std::mt19937 rng(15);
  std::uniform_int_distribution<size_t> pick(0, b.elements.size() - 1);
  for (int iter = 0; iter < 25; ++iter) {
    const RepMatrix& x = b.elements[pick(rng)].mat;
    const RepMatrix& y = b.elements[pick(rng)].mat;
    QuotientAction qx = quotient_action(s.g, s.k, s.c, x);
    QuotientAction qy = quotient_action(s.g, s.k, s.c, y);
    QuotientAction qxy = quotient_action(s.g, s.k, s.c, rep_mult(s.c, x, y));
    const int d = qx.dim;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Scalar acc = Scalar::zero(s.g.ctx);
        for (int k = 0; k < d; ++k)
          acc += qx.q[static_cast<size_t>(i) * d + k] * qy.q[static_cast<size_t>(k) * d + j];
        CHECK(acc == qxy.q[static_cast<size_t>(i) * d + j]);
      }
  }
}

TEST_CASE("non-identity elements outside T_f in a non-affine group") {
  Setup s(fx::triangle_inf());
  Ball b = enumerate_ball(s.c, 6);
  for (size_t i = 1; i < b.elements.size(); ++i)
    CHECK(!in_tf(s.g, s.k, s.c, b.elements[i].mat));
}

TEST_CASE("faithfulness verification") {
  // A2: no violations among the 5 non-identity elements
  Setup a2(fx::path({3}));
  FaithfulnessReport r = verify_reduced_faithful(a2.g, a2.k, 3);
  CHECK(r.checked == 5);
  CHECK(r.violations.empty());

  // A~1 at L=2: the translation st lies in T_f; the earliest violation with
  // quotient I is the word (0,1)
  Setup aff(fx::path({kInfinity}));
  r = verify_reduced_faithful(aff.g, aff.k, 2);
  bool found_st = false;
  for (const auto& v : r.violations)
    if (!v.minus_identity) {
      CHECK(v.word == std::vector<uint8_t>{0, 1});
      found_st = true;
      break;
    }
  CHECK(found_st);

  // A~2 reports a violation at some length <= 6 (translations)
  Setup aff2(fx::cycle(3, 3));
  r = verify_reduced_faithful(aff2.g, aff2.k, 6);
  CHECK(!r.violations.empty());
  for (const auto& v : r.violations) CHECK(!v.minus_identity);

  // non-affine fixtures are clean at L=6 (acceptance runs L=8)
  for (const auto& m : fx::nonaffine_fixtures()) {
    Setup s(m);
    FaithfulnessReport rep = verify_reduced_faithful(s.g, s.k, 6);
    CHECK(rep.violations.empty());
  }
}

TEST_CASE("int64 coefficient overflow fails loudly") {
  // repeated squaring of a hyperbolic translation overflows eventually
  Setup s(fx::path({kInfinity}));
  RepMatrix st = rep_right_mult_gen(s.c, rep_reflection(s.c, 0), 1);
  RepMatrix acc = st;
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 80; ++i) acc = rep_mult(s.c, acc, acc);
      }(),
      budget_error);
}
