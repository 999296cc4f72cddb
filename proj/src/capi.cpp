#include "coxforge/coxforge.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>

#include "classify.hpp"
#include "dsl.hpp"
#include "errors.hpp"
#include "report.hpp"
#include "representation.hpp"
#include "search.hpp"

struct cox_group {
  coxforge::CoxeterMatrix m;
};

namespace {

using namespace coxforge;

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char **errmsg, const std::string &msg) {
  if (errmsg) *errmsg = dup_string(msg);
}

// run a callable, mapping the error taxonomy onto status codes
template <typename F>
cox_status guarded(char **errmsg, F &&f) {
  try {
    f();
    return COX_OK;
  } catch (const input_error &e) {
    set_err(errmsg, e.what());
    return COX_ERR_INPUT;
  } catch (const budget_error &e) {
    set_err(errmsg, e.what());
    return COX_ERR_BUDGET;
  } catch (const internal_error &e) {
    set_err(errmsg, e.what());
    return COX_ERR_INTERNAL;
  } catch (const std::exception &e) {
    set_err(errmsg, e.what());
    return COX_ERR_INTERNAL;
  }
}

CoxeterMatrix checked(CoxeterMatrix m) {
  auto errs = validate(m);
  if (!errs.empty()) {
    std::string joined;
    for (const auto &e : errs) {
      if (!joined.empty()) joined += "; ";
      joined += e;
    }
    throw input_error(joined);
  }
  return m;
}

std::vector<int> parse_alphabet(const char *text) {
  if (!text || !*text) return SearchSpec{}.alphabet;
  std::vector<int> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw input_error("alphabet: empty item");
    item = item.substr(b, e - b + 1);
    if (item == "inf") {
      out.push_back(kInfinity);
      continue;
    }
    for (char c : item)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw input_error("alphabet: bad label '" + item + "'");
    long v = std::stol(item);
    if (v < 2 || v > 1000000) throw input_error("alphabet: label out of range");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw input_error("alphabet: no labels given");
  return out;
}

}  // namespace

extern "C" {

const char *cox_version(void) { return "0.1.0"; }

void cox_string_free(char *s) { std::free(s); }

cox_status cox_group_parse(const char *text, cox_group **out, char **errmsg) {
  if (!text || !out) {
    set_err(errmsg, "null argument");
    return COX_ERR_INPUT;
  }
  *out = nullptr;
  return guarded(errmsg, [&] {
    auto g = std::make_unique<cox_group>();
    g->m = checked(parse_dsl(text));
    *out = g.release();
  });
}

cox_status cox_group_from_labels(int32_t n, const int32_t *labels,
                                 cox_group **out, char **errmsg) {
  if (!labels || !out || n < 1) {
    set_err(errmsg, "null argument or non-positive rank");
    return COX_ERR_INPUT;
  }
  *out = nullptr;
  return guarded(errmsg, [&] {
    CoxeterMatrix m = CoxeterMatrix::commuting(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int32_t v = labels[static_cast<size_t>(i) * n + j];
        m.labels[static_cast<size_t>(i) * n + j] = (v == 0) ? kInfinity : v;
      }
    auto g = std::make_unique<cox_group>();
    g->m = checked(std::move(m));
    *out = g.release();
  });
}

void cox_group_free(cox_group *g) { delete g; }

int32_t cox_group_rank(const cox_group *g) { return g ? g->m.n : 0; }

cox_status cox_group_render(const cox_group *g, char **dsl_out, char **errmsg) {
  if (!g || !dsl_out) {
    set_err(errmsg, "null argument");
    return COX_ERR_INPUT;
  }
  return guarded(errmsg, [&] { *dsl_out = dup_string(render_dsl(g->m)); });
}

cox_status cox_classify_json(const cox_group *g, char **json_out, char **errmsg) {
  if (!g || !json_out) {
    set_err(errmsg, "null argument");
    return COX_ERR_INPUT;
  }
  return guarded(errmsg, [&] {
    *json_out = dup_string(classify_report_json(g->m, classify(g->m)));
  });
}

cox_status cox_signature_json(const cox_group *g, char **json_out, char **errmsg) {
  if (!g || !json_out) {
    set_err(errmsg, "null argument");
    return COX_ERR_INPUT;
  }
  return guarded(errmsg, [&] {
    GramForm form = gram(g->m);
    Signature sig = signature_of(form);
    KernelBasis kb = kernel_of(form);
    *json_out = dup_string(signature_report_json(g->m, form, sig, kb));
  });
}

cox_status cox_repr_json(const cox_group *g, int32_t max_length, uint64_t budget,
                         char **json_out, char **errmsg) {
  if (!g || !json_out) {
    set_err(errmsg, "null argument");
    return COX_ERR_INPUT;
  }
  return guarded(errmsg, [&] {
    if (max_length < 0) throw input_error("max_length must be non-negative");
    GramForm form = gram(g->m);
    RepContext rc(form);
    Ball ball = enumerate_ball(rc, max_length,
                               budget ? budget : kDefaultBallBudget);
    *json_out = dup_string(repr_report_json(g->m, form, rc, ball));
  });
}

cox_status cox_verify_faithful_json(const cox_group *g, int32_t max_length,
                                    uint64_t budget, char **json_out,
                                    char **errmsg) {
  if (!g || !json_out) {
    set_err(errmsg, "null argument");
    return COX_ERR_INPUT;
  }
  return guarded(errmsg, [&] {
    GramForm form = gram(g->m);
    KernelBasis kb = kernel_of(form);
    FaithfulnessReport rep = verify_reduced_faithful(
        form, kb, max_length, budget ? budget : kDefaultBallBudget);
    *json_out = dup_string(faithful_report_json(g->m, rep));
  });
}

cox_status cox_search_jsonl(int32_t n_min, int32_t n_max, const char *alphabet,
                            const char *where, uint64_t limit, int32_t workers,
                            char **jsonl_out, int32_t *truncated, char **errmsg) {
  if (!jsonl_out) {
    set_err(errmsg, "null argument");
    return COX_ERR_INPUT;
  }
  return guarded(errmsg, [&] {
    SearchSpec spec;
    spec.n_min = n_min;
    spec.n_max = n_max;
    spec.alphabet = parse_alphabet(alphabet);
    spec.where = where ? where : "";
    spec.limit = limit ? limit : SearchSpec{}.limit;
    spec.workers = workers > 0 ? workers : 1;
    SearchResult res = hunt(spec);
    if (truncated) *truncated = res.truncated ? 1 : 0;
    *jsonl_out = dup_string(search_hits_jsonl(res));
  });
}

}  // extern "C"
