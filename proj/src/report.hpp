#pragma once

#include <string>

#include "classify.hpp"
#include "representation.hpp"
#include "search.hpp"

namespace coxforge {

inline constexpr const char* kSchemaVersion = "coxforge/1";

// Stable-field-order JSON documents. Scalars are rendered as exact
// coefficient strings plus a 12-digit decimal approximation.
std::string classify_report_json(const CoxeterMatrix& m,
                                 const ClassificationReport& rep);
std::string signature_report_json(const CoxeterMatrix& m, const GramForm& g,
                                  const Signature& sig, const KernelBasis& k);
std::string repr_report_json(const CoxeterMatrix& m, const GramForm& g,
                             const RepContext& c, const Ball& ball);
std::string faithful_report_json(const CoxeterMatrix& m,
                                 const FaithfulnessReport& rep);
// one compact JSON object per line
std::string search_hits_jsonl(const SearchResult& res);

}  // namespace coxforge
