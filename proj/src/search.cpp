#include "search.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <thread>

#include "errors.hpp"
#include "tits_form.hpp"

namespace coxforge {

namespace {

// row-major upper-triangle flatten of the matrix relabeled by perm
std::vector<int> flatten(const CoxeterMatrix& m, const std::vector<int>& perm) {
  std::vector<int> seq;
  seq.reserve(static_cast<size_t>(m.n) * (m.n - 1) / 2);
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) seq.push_back(m.label(perm[i], perm[j]));
  return seq;
}

// -1 / 0 / +1: flatten(m, perm) versus the reference sequence, early abort
int compare_flatten(const CoxeterMatrix& m, const std::vector<int>& perm,
                    const std::vector<int>& ref) {
  size_t pos = 0;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      int v = m.label(perm[i], perm[j]);
      if (v != ref[pos]) return v < ref[pos] ? -1 : 1;
      ++pos;
    }
  return 0;
}

}  // namespace

std::vector<int> canonical_sequence(const CoxeterMatrix& m) {
  std::vector<int> perm(m.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = flatten(m, perm);
  while (std::next_permutation(perm.begin(), perm.end()))
    if (compare_flatten(m, perm, best) < 0) best = flatten(m, perm);
  return best;
}

bool is_canonical(const CoxeterMatrix& m) {
  std::vector<int> perm(m.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> ref = flatten(m, perm);
  while (std::next_permutation(perm.begin(), perm.end()))
    if (compare_flatten(m, perm, ref) < 0) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> effective_choices(const std::vector<int>& alphabet) {
  std::vector<int> choices{2};
  for (int lab : alphabet) {
    if (lab < 2) throw input_error("alphabet labels must be at least 2");
    if (lab >= 3) choices.push_back(lab);
  }
  std::sort(choices.begin(), choices.end());
  choices.erase(std::unique(choices.begin(), choices.end()), choices.end());
  if (choices.size() < 2)
    throw input_error("alphabet must contain at least one label >= 3");
  return choices;
}

void enumerate_shard(int n, const std::vector<int>& choices, int workers, int wid,
                     std::vector<CoxeterMatrix>& out) {
  const int pairs = n * (n - 1) / 2;
  const int c = static_cast<int>(choices.size());
  const int row0 = n - 1;  // digits of the first row, the shard key
  std::vector<int> digit(pairs, 0);
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pos.emplace_back(i, j);

  CoxeterMatrix m = CoxeterMatrix::commuting(n);
  for (;;) {
    long key = 0;
    for (int p = std::min(row0, pairs) - 1; p >= 0; --p) key = key * c + digit[p];
    if (key % workers == wid) {
      for (int p = 0; p < pairs; ++p)
        m.set(pos[p].first, pos[p].second, choices[digit[p]]);
      UnionFind uf(n);
      for (int p = 0; p < pairs; ++p)
        if (digit[p] > 0) uf.unite(pos[p].first, pos[p].second);
      bool conn = true;
      for (int v = 1; v < n && conn; ++v)
        if (uf.find(v) != uf.find(0)) conn = false;
      if (conn && is_canonical(m)) out.push_back(m);
    }
    int p = 0;
    while (p < pairs && digit[p] == c - 1) digit[p++] = 0;
    if (p == pairs) return;
    ++digit[p];
  }
}

}  // namespace

std::vector<CoxeterMatrix> enumerate_connected(int n, const std::vector<int>& alphabet,
                                               int workers) {
  if (n < 1) throw input_error("vertex count must be at least 1");
  if (n > 9) throw input_error("diagram enumeration is bounded to n <= 9");
  if (workers < 1) workers = 1;
  if (workers > 64) workers = 64;
  std::vector<int> choices = effective_choices(alphabet);

  std::vector<std::vector<CoxeterMatrix>> per_worker(workers);
  if (workers == 1) {
    enumerate_shard(n, choices, 1, 0, per_worker[0]);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
      threads.emplace_back(enumerate_shard, n, std::cref(choices), workers, w,
                           std::ref(per_worker[w]));
    for (auto& t : threads) t.join();
  }
  std::vector<CoxeterMatrix> all;
  for (auto& v : per_worker)
    for (auto& m : v) all.push_back(std::move(m));
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::sort(all.begin(), all.end(),
            [&](const CoxeterMatrix& a, const CoxeterMatrix& b) {
              return flatten(a, id) < flatten(b, id);
            });
  return all;
}

Predicate Predicate::parse(const std::string& text) {
  Predicate pred;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto word = [&]() -> std::string {
    size_t b = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      ++i;
    return text.substr(b, i - b);
  };
  skip_ws();
  if (i == text.size()) return pred;
  for (;;) {
    skip_ws();
    std::string key = word();
    Clause cl;
    if (key == "p") cl.key = Key::P;
    else if (key == "q") cl.key = Key::Q;
    else if (key == "r") cl.key = Key::R;
    else if (key == "n") cl.key = Key::N;
    else if (key == "kind") cl.key = Key::Kind;
    else throw input_error("predicate: unknown key '" + key + "'");
    skip_ws();
    std::string op;
    while (i < text.size() && (text[i] == '=' || text[i] == '!' || text[i] == '<' ||
                               text[i] == '>'))
      op += text[i++];
    if (op == "=" || op == "==") cl.op = Op::Eq;
    else if (op == "!=") cl.op = Op::Ne;
    else if (op == "<=") cl.op = Op::Le;
    else if (op == ">=") cl.op = Op::Ge;
    else if (op == "<") cl.op = Op::Lt;
    else if (op == ">") cl.op = Op::Gt;
    else throw input_error("predicate: bad operator '" + op + "'");
    skip_ws();
    std::string val = word();
    if (val.empty()) throw input_error("predicate: missing value");
    if (cl.key == Key::Kind) {
      if (cl.op != Op::Eq && cl.op != Op::Ne)
        throw input_error("predicate: kind supports only = and !=");
      if (val == "Spherical") cl.kind = ComponentKind::Spherical;
      else if (val == "Affine") cl.kind = ComponentKind::Affine;
      else if (val == "NonAffine") cl.kind = ComponentKind::NonAffine;
      else throw input_error("predicate: unknown kind '" + val + "'");
    } else {
      try {
        cl.value = std::stoi(val);
      } catch (...) {
        throw input_error("predicate: '" + val + "' is not an integer");
      }
    }
    pred.clauses.push_back(cl);
    skip_ws();
    if (i == text.size()) break;
    std::string conj = word();
    if (conj != "and")
      throw input_error("predicate: expected 'and', got '" + conj + "'");
  }
  return pred;
}

bool Predicate::eval(const Signature& s, int n, ComponentKind kind) const {
  for (const Clause& cl : clauses) {
    if (cl.key == Key::Kind) {
      bool eq = (kind == cl.kind);
      if (cl.op == Op::Eq ? !eq : eq) return false;
      continue;
    }
    int lhs = 0;
    switch (cl.key) {
      case Key::P: lhs = s.p; break;
      case Key::Q: lhs = s.q; break;
      case Key::R: lhs = s.r; break;
      case Key::N: lhs = n; break;
      case Key::Kind: break;
    }
    bool ok = true;
    switch (cl.op) {
      case Op::Eq: ok = lhs == cl.value; break;
      case Op::Ne: ok = lhs != cl.value; break;
      case Op::Le: ok = lhs <= cl.value; break;
      case Op::Ge: ok = lhs >= cl.value; break;
      case Op::Lt: ok = lhs < cl.value; break;
      case Op::Gt: ok = lhs > cl.value; break;
    }
    if (!ok) return false;
  }
  return true;
}

SearchResult hunt(const SearchSpec& spec) {
  if (spec.n_min < 1 || spec.n_max < spec.n_min)
    throw input_error("bad vertex-count range");
  Predicate pred = Predicate::parse(spec.where);
  SearchResult res;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    auto reps = enumerate_connected(n, spec.alphabet, spec.workers);
    for (auto& m : reps) {
      ++res.scanned;
      SearchHit hit;
      hit.sig = signature_of(gram(m));
      if (hit.sig.q == 0 && hit.sig.r == 0)
        hit.kind = ComponentKind::Spherical;
      else if (hit.sig.q == 0 && hit.sig.r == 1)
        hit.kind = ComponentKind::Affine;
      else if (hit.sig.q == 0)
        throw internal_error("connected diagram with q=0 and r>1 is impossible");
      else
        hit.kind = ComponentKind::NonAffine;
      hit.name = recognize(m);
      if (!pred.eval(hit.sig, n, hit.kind)) continue;
      // independent re-verification: the signature of a relabeled copy must
      // agree (different elimination path, same inertia by Sylvester)
      std::vector<int> rev(n);
      for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
      if (signature_of(gram(induced(m, rev))) != hit.sig)
        throw internal_error("signature re-verification mismatch");
      hit.matrix = std::move(m);
      res.hits.push_back(std::move(hit));
      if (res.hits.size() >= spec.limit) {
        res.truncated = true;
        return res;
      }
    }
  }
  return res;
}

}  // namespace coxforge
