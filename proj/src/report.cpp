#include "report.hpp"

#include <json.hpp>

namespace coxforge {

namespace {

using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"coeffs", std::move(coeffs)}, {"dec", s.decimal(12)}};
}

Json signature_json(const Signature& s) {
  return Json{{"p", s.p}, {"q", s.q}, {"r", s.r}};
}

Json label_json(int lab) {
  if (lab == kInfinity) return Json("inf");
  return Json(lab);
}

Json labels_json(const CoxeterMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(label_json(m.label(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json header(const char* command, const CoxeterMatrix& m) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["n"] = m.n;
  j["generators"] = m.names;
  return j;
}

std::string word_str(const CoxeterMatrix& m, const std::vector<uint8_t>& word) {
  std::string s;
  for (uint8_t g : word) s += m.names[g];
  return s;
}

Json word_json(const CoxeterMatrix& m, const std::vector<uint8_t>& word) {
  Json letters = Json::array();
  for (uint8_t g : word) letters.push_back(m.names[g]);
  return Json{{"word", word_str(m, word)},
              {"letters", std::move(letters)},
              {"length", word.size()}};
}

Json field_json(const GramForm& g) {
  Json minpoly = Json::array();
  for (const auto& c : g.ctx->minpoly()) minpoly.push_back(c.get_str());
  return Json{{"N", g.ctx->n()},
              {"degree", g.ctx->degree()},
              {"minpoly", std::move(minpoly)}};
}

}  // namespace

std::string classify_report_json(const CoxeterMatrix& m,
                                 const ClassificationReport& rep) {
  Json j = header("classify", m);
  Json comps = Json::array();
  for (const auto& c : rep.components) {
    Json names = Json::array();
    for (int v : c.vertices) names.push_back(m.names[v]);
    comps.push_back(Json{{"vertices", std::move(names)},
                         {"kind", kind_str(c.kind)},
                         {"name", c.name.str()},
                         {"signature", signature_json(c.sig)}});
  }
  j["components"] = std::move(comps);
  Json radical = Json::array();
  for (int idx : rep.radical_factors) radical.push_back(idx);
  j["amenableRadical"] =
      Json{{"trivial", rep.radical_factors.empty()}, {"factors", std::move(radical)}};
  j["cstar"] =
      Json{{"simple", rep.cstar.simple}, {"uniqueTrace", rep.cstar.unique_trace}};
  j["primitive"] = Json{{"verdict", rep.primitive.primitive ? "yes" : "no"},
                        {"reason", rep.primitive.reason}};
  return j.dump(2) + "\n";
}

std::string signature_report_json(const CoxeterMatrix& m, const GramForm& g,
                                  const Signature& sig, const KernelBasis& k) {
  Json j = header("signature", m);
  j["labels"] = labels_json(m);
  j["field"] = field_json(g);
  j["signature"] = signature_json(sig);
  Json basis = Json::array();
  for (const auto& v : k.vectors) {
    Json vec = Json::array();
    for (const auto& s : v) vec.push_back(scalar_json(s));
    basis.push_back(std::move(vec));
  }
  j["kernel"] = Json{{"dim", k.vectors.size()},
                     {"basis", std::move(basis)},
                     {"complement", k.complement}};
  return j.dump(2) + "\n";
}

std::string repr_report_json(const CoxeterMatrix& m, const GramForm& g,
                             const RepContext& c, const Ball& ball) {
  Json j = header("repr", m);
  j["field"] = field_json(g);
  Json gens = Json::array();
  for (int s = 0; s < m.n; ++s) {
    auto mat = rep_to_scalars(c, rep_reflection(c, s));
    Json rows = Json::array();
    for (int i = 0; i < m.n; ++i) {
      Json row = Json::array();
      for (int t = 0; t < m.n; ++t)
        row.push_back(scalar_json(mat[static_cast<size_t>(i) * m.n + t]));
      rows.push_back(std::move(row));
    }
    gens.push_back(Json{{"name", m.names[s]}, {"matrix", std::move(rows)}});
  }
  j["reflections"] = std::move(gens);
  j["ball"] = Json{{"radius", ball.radius},
                   {"closed", ball.closed},
                   {"size", ball.elements.size()},
                   {"countByLength", ball.count_by_length}};
  return j.dump(2) + "\n";
}

std::string faithful_report_json(const CoxeterMatrix& m,
                                 const FaithfulnessReport& rep) {
  Json j = header("verify-faithful", m);
  j["radius"] = rep.radius;
  j["ball"] = Json{{"closed", rep.ball_closed},
                   {"size", rep.ball_size},
                   {"countByLength", rep.count_by_length}};
  j["checked"] = rep.checked;
  Json viols = Json::array();
  for (const auto& v : rep.violations) {
    Json w = word_json(m, v.word);
    w["qmatrix"] = v.minus_identity ? "-I" : "I";
    viols.push_back(std::move(w));
  }
  j["violations"] = std::move(viols);
  return j.dump(2) + "\n";
}

std::string search_hits_jsonl(const SearchResult& res) {
  std::string out;
  for (const auto& hit : res.hits) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["n"] = hit.matrix.n;
    j["labels"] = labels_json(hit.matrix);
    j["signature"] = signature_json(hit.sig);
    j["kind"] = kind_str(hit.kind);
    j["name"] = hit.name.str();
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace coxforge
