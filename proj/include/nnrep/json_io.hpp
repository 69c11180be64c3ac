#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "nnrep/boolfn.hpp"
#include "nnrep/circuit.hpp"
#include "nnrep/construct.hpp"
#include "nnrep/nnrepr.hpp"
#include "nnrep/search.hpp"

namespace nnrep::io {

using Json = nlohmann::json;

// Exact numbers travel as decimal strings ("p/q" or "p") so no precision is
// lost; parsers also accept plain JSON integers where they fit.

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

/// {"type":"symmetric","n":N,"values":[...]} |
/// {"type":"threshold","weights":[...],"threshold":...} |
/// {"type":"truth_table","n":N,"bits":"0110..."} (bit k = value on input k)
Json function_to_json(const BooleanFunction& f);
BooleanFunction function_from_json(const Json& j);

/// {"n":N,"anchors":[{"label":0|1,"coords":["1/2",...]},...]}
Json anchors_to_json(const AnchorMatrix& a);
AnchorMatrix anchors_from_json(const Json& j);

/// {"n":N,"thr":[{"w":[...],"b":...}],"and":[[...]],"or":[...]}
Json circuit_to_json(const ThresholdCircuit& c);
ThresholdCircuit circuit_from_json(const Json& j);

/// {"max_anchors":..,"max_resolution":..,"max_candidates":..}; every field
/// optional, missing ones keep the SearchBudget defaults.
Json budget_to_json(const SearchBudget& b);
SearchBudget budget_from_json(const Json& j);

/// {"eps":"1/2","lambdas":["1/2",...]}; both fields optional.
Json params_to_json(const ConstructionParams& p);
ConstructionParams params_from_json(const Json& j);

/// Verification outcome; failures are truncated to max_failures entries
/// (the total count is always reported).
Json report_to_json(const VerificationReport& r, std::size_t max_failures = 100);

Json search_result_to_json(const SearchResult& r);

/// Canonical text form used for every artifact: sorted keys, two-space
/// indent, trailing newline.  Equal values serialize byte-identically.
std::string dump_canonical(const Json& j);

void save_json(const Json& j, const std::filesystem::path& path);
Json load_json(const std::filesystem::path& path);

}  // namespace nnrep::io
