// Exercises the shared-library surface exactly as an external client would:
// only the public C header, no internal C++ types.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <string>

#include "coxforge/coxforge.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { cox_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct OwnedGroup {
  cox_group* g = nullptr;
  ~OwnedGroup() { cox_group_free(g); }
};

constexpr const char* kTriangle =
    "vertices s t u\nedge s t inf\nedge t u inf\nedge s u inf\n";

}  // namespace

TEST_CASE("version string") {
  CHECK(std::strlen(cox_version()) > 0);
}

TEST_CASE("parse, rank, render round trip") {
  OwnedGroup g;
  Owned err;
  REQUIRE(cox_group_parse(kTriangle, &g.g, &err.p) == COX_OK);
  CHECK(cox_group_rank(g.g) == 3);

  Owned dsl;
  REQUIRE(cox_group_render(g.g, &dsl.p, nullptr) == COX_OK);
  OwnedGroup g2;
  REQUIRE(cox_group_parse(dsl.p, &g2.g, nullptr) == COX_OK);
  Owned dsl2;
  REQUIRE(cox_group_render(g2.g, &dsl2.p, nullptr) == COX_OK);
  CHECK(dsl.str() == dsl2.str());
}

TEST_CASE("parse failures set status and message") {
  OwnedGroup g;
  Owned err;
  CHECK(cox_group_parse("vertices s t\nedge s t 1\n", &g.g, &err.p) ==
        COX_ERR_INPUT);
  CHECK(g.g == nullptr);
  CHECK(err.str().find("label must be at least 2") != std::string::npos);
  CHECK(cox_group_parse(nullptr, &g.g, nullptr) == COX_ERR_INPUT);
}

TEST_CASE("from_labels uses 0 for infinity and validates") {
  const int32_t labels[] = {1, 0, 0, 1};
  OwnedGroup g;
  REQUIRE(cox_group_from_labels(2, labels, &g.g, nullptr) == COX_OK);
  Owned json;
  REQUIRE(cox_classify_json(g.g, &json.p, nullptr) == COX_OK);
  CHECK(json.str().find("\"Affine\"") != std::string::npos);
  CHECK(json.str().find("\"~A1\"") != std::string::npos);

  const int32_t bad[] = {1, 1, 1, 1};
  OwnedGroup gb;
  Owned err;
  CHECK(cox_group_from_labels(2, bad, &gb.g, &err.p) == COX_ERR_INPUT);
}

TEST_CASE("classification and signature reports") {
  OwnedGroup g;
  REQUIRE(cox_group_parse(kTriangle, &g.g, nullptr) == COX_OK);

  Owned cls;
  REQUIRE(cox_classify_json(g.g, &cls.p, nullptr) == COX_OK);
  CHECK(cls.str().find("\"schema\": \"coxforge/1\"") != std::string::npos);
  CHECK(cls.str().find("\"NonAffine\"") != std::string::npos);
  CHECK(cls.str().find("\"simple\": true") != std::string::npos);

  Owned sig;
  REQUIRE(cox_signature_json(g.g, &sig.p, nullptr) == COX_OK);
  CHECK(sig.str().find("\"p\": 2") != std::string::npos);
  CHECK(sig.str().find("\"q\": 1") != std::string::npos);
  CHECK(sig.str().find("\"r\": 0") != std::string::npos);
}

TEST_CASE("repr and verify with budget mapping") {
  OwnedGroup g;
  REQUIRE(cox_group_parse(kTriangle, &g.g, nullptr) == COX_OK);

  Owned json;
  REQUIRE(cox_repr_json(g.g, 3, 0, &json.p, nullptr) == COX_OK);
  CHECK(json.str().find("\"closed\": false") != std::string::npos);

  Owned err;
  Owned json2;
  CHECK(cox_verify_faithful_json(g.g, 10, 50, &json2.p, &err.p) == COX_ERR_BUDGET);
  CHECK(err.str().find("budget") != std::string::npos);

  Owned json3;
  REQUIRE(cox_verify_faithful_json(g.g, 4, 0, &json3.p, nullptr) == COX_OK);
  CHECK(json3.str().find("\"violations\": []") != std::string::npos);
}

TEST_CASE("search returns JSON lines") {
  Owned jsonl, err;
  int32_t truncated = -1;
  REQUIRE(cox_search_jsonl(3, 3, "2,3", "", 0, 2, &jsonl.p, &truncated,
                           &err.p) == COX_OK);
  CHECK(truncated == 0);
  std::string out = jsonl.str();
  CHECK(std::count(out.begin(), out.end(), '\n') == 2);
  CHECK(out.find("\"~A2\"") != std::string::npos);

  Owned jsonl2, err2;
  CHECK(cox_search_jsonl(3, 3, "2", "", 0, 1, &jsonl2.p, nullptr, &err2.p) ==
        COX_ERR_INPUT);
  Owned jsonl3, err3;
  CHECK(cox_search_jsonl(3, 3, "2,3", "bogus~=1", 0, 1, &jsonl3.p, nullptr,
                         &err3.p) == COX_ERR_INPUT);
}
