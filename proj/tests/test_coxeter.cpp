#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "catalog.hpp"
#include "coxeter.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "tits_form.hpp"

using namespace coxforge;
namespace fx = coxforge::fixtures;

TEST_CASE("validation") {
  CoxeterMatrix ok = fx::path({3});
  CHECK(validate(ok).empty());

  CoxeterMatrix bad_diag = ok;
  bad_diag.labels[0] = 2;
  auto errs = validate(bad_diag);
  REQUIRE(!errs.empty());
  CHECK(errs.front().find("diagonal must be 1") != std::string::npos);

  CoxeterMatrix asym = fx::path({3});
  asym.labels[1] = 3;
  asym.labels[2] = 4;  // (0,1) != (1,0)
  errs = validate(asym);
  REQUIRE(!errs.empty());
  CHECK(errs.front().find("asymmetric") != std::string::npos);

  CoxeterMatrix low = fx::path({3});
  low.set(0, 1, 1);
  errs = validate(low);
  REQUIRE(!errs.empty());
  CHECK(errs.front().find("at least 2") != std::string::npos);
}

TEST_CASE("diagram edges appear exactly for labels >= 3") {
  CoxeterMatrix m = CoxeterMatrix::commuting(3);
  m.set(0, 1, 3);
  auto edges = diagram_edges(m);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].s == 0);
  CHECK(edges[0].t == 1);
  CHECK(edges[0].m == 3);
}

TEST_CASE("components") {
  // two commuting generators: two A1 parts
  auto d = components(CoxeterMatrix::commuting(2));
  REQUIRE(d.parts.size() == 2);
  CHECK(d.matrices[0].n == 1);

  // a 3-path is a single component
  d = components(fx::path({3, 3}));
  CHECK(d.parts.size() == 1);
  CHECK(d.parts[0] == std::vector<int>{0, 1, 2});

  // edges (0,1,3) and (2,3,5): two parts {0,1} and {2,3}
  CoxeterMatrix m = CoxeterMatrix::commuting(4);
  m.set(0, 1, 3);
  m.set(2, 3, 5);
  d = components(m);
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0] == std::vector<int>{0, 1});
  CHECK(d.parts[1] == std::vector<int>{2, 3});
  CHECK(d.matrices[1].label(0, 1) == 5);
}

TEST_CASE("components form a partition that reconstructs the matrix") {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 30; ++iter) {
    std::uniform_int_distribution<int> nd(1, 7);
    int n = nd(rng);
    CoxeterMatrix m = CoxeterMatrix::commuting(n);
    std::uniform_int_distribution<int> lab(0, 5);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int choice[] = {2, 2, 3, 4, 5, kInfinity};
        m.set(i, j, choice[lab(rng)]);
      }
    auto d = components(m);
    std::vector<int> seen;
    for (const auto& part : d.parts) seen.insert(seen.end(), part.begin(), part.end());
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    CHECK(seen == all);
    // cross-component labels are all 2
    for (size_t a = 0; a < d.parts.size(); ++a)
      for (size_t b = a + 1; b < d.parts.size(); ++b)
        for (int u : d.parts[a])
          for (int v : d.parts[b]) CHECK(m.label(u, v) == 2);
  }
}

TEST_CASE("recognition of catalog shapes") {
  CHECK(recognize(fx::path({3, 3, 3})).str() == "A4");
  CHECK(recognize(fx::cycle(3, 3)).str() == "~A2");
  CHECK(recognize(fx::path({kInfinity})).str() == "~A1");
  CHECK(recognize(fx::hexagon_inf()).str() == "Unnamed");
  CHECK(recognize(fx::triangle_inf()).str() == "Unnamed");
  CHECK(recognize(CoxeterMatrix::commuting(1)).str() == "A1");
}

TEST_CASE("redundancy policy") {
  CHECK(recognize(fx::path({3})).str() == "A2");   // I2(3) reports A2
  CHECK(recognize(fx::path({4})).str() == "B2");   // I2(4) reports B2
  CHECK(recognize(fx::path({5})).str() == "I2(5)");
  CHECK(recognize(fx::path({9})).str() == "I2(9)");
  // the D3 shape is a 3-path, reported as A3
  CHECK(recognize(catalog_matrix({Family::D, 3, 0})).str() == "A3");
}

TEST_CASE("recognition is permutation invariant") {
  std::mt19937 rng(17);
  auto types = spherical_types(8, 9);
  auto aff = affine_types(6);
  types.insert(types.end(), aff.begin(), aff.end());
  for (const auto& t : types) {
    CoxeterMatrix m = catalog_matrix(t);
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    NamedType got = recognize(induced(m, perm));
    // the known redundancies report their earlier catalog name
    if (t.family == Family::D && t.rank == 3)
      CHECK(got.str() == "A3");
    else if (t.family == Family::I2 && t.edge == 3)
      CHECK(got.str() == "A2");
    else if (t.family == Family::I2 && t.edge == 4)
      CHECK(got.str() == "B2");
    else
      CHECK(got == t);
  }
}

TEST_CASE("recognize agrees with the signature classification on templates") {
  for (const auto& t : spherical_types(8, 12)) {
    CoxeterMatrix m = catalog_matrix(t);
    Signature s = signature_of(gram(m));
    CHECK(s.q == 0);
    CHECK(s.r == 0);
    CHECK(recognize(m).is_spherical());
  }
  for (const auto& t : affine_types(7)) {
    CoxeterMatrix m = catalog_matrix(t);
    Signature s = signature_of(gram(m));
    CHECK(s.q == 0);
    CHECK(s.r == 1);
    CHECK(s.p == m.n - 1);
    CHECK(recognize(m).is_affine());
  }
}

TEST_CASE("isomorphism testing") {
  CHECK(isomorphic(fx::path({3, 4}), fx::path({4, 3})));
  CHECK(!isomorphic(fx::path({3, 4}), fx::path({3, 5})));
  CHECK(!isomorphic(fx::path({3, 3, 3}), fx::cycle(4, 3)));
  std::mt19937 rng(23);
  for (const auto& t : spherical_types(7, 8)) {
    CoxeterMatrix m = catalog_matrix(t);
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(isomorphic(m, induced(m, perm)));
  }
}
