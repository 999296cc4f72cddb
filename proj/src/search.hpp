#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "classify.hpp"
#include "coxeter.hpp"

namespace coxforge {

// Conjunction of comparisons on p, q, r, n plus kind equality, e.g.
// "p=3 and q=1 and r=2" or "kind=NonAffine and n>=4".
struct Predicate {
  enum class Key { P, Q, R, N, Kind };
  enum class Op { Eq, Ne, Le, Ge, Lt, Gt };
  struct Clause {
    Key key;
    Op op;
    int value = 0;
    ComponentKind kind = ComponentKind::NonAffine;
  };
  std::vector<Clause> clauses;

  static Predicate parse(const std::string& text);  // throws input_error
  bool eval(const Signature& s, int n, ComponentKind kind) const;
};

struct SearchSpec {
  int n_min = 2;
  int n_max = 2;
  std::vector<int> alphabet = {2, 3, 4, 5, 6, kInfinity};
  std::string where;         // empty = match everything
  uint64_t limit = 10000;    // max results
  int workers = 1;
};

// Flattened upper-triangle label sequence, minimized over all vertex
// relabelings; two connected matrices are isomorphic iff these agree.
std::vector<int> canonical_sequence(const CoxeterMatrix& m);
bool is_canonical(const CoxeterMatrix& m);

// One canonical representative per isomorphism class of connected diagrams
// on n vertices with edge labels drawn from the alphabet (a pair may always
// be label 2, i.e. no edge). Deterministic, sorted by canonical sequence,
// independent of the worker count. Requires n <= 9.
std::vector<CoxeterMatrix> enumerate_connected(int n, const std::vector<int>& alphabet,
                                               int workers = 1);

struct SearchHit {
  CoxeterMatrix matrix;
  Signature sig;
  ComponentKind kind = ComponentKind::NonAffine;
  NamedType name;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  bool truncated = false;
  uint64_t scanned = 0;  // isomorphism classes examined
};

// Enumerate and filter; every hit is re-verified by recomputing the
// signature on a relabeled copy before it is reported.
SearchResult hunt(const SearchSpec& spec);

}  // namespace coxforge
