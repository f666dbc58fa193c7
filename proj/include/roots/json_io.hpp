#pragma once

#include "roots/catalog.hpp"
#include "roots/verifier.hpp"
#include "roots/weights.hpp"

#include <json.hpp>

#include <string>

namespace roots::io {

using nlohmann::json;  // std::map-backed: object keys serialize sorted

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rationals travel as canonical strings "p/q" (or "p"); parsing accepts
// integers and non-canonical fraction strings, normalizing them.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& where);

json gram_to_json(const GramMatrix& g);
GramMatrix gram_from_json(const json& j, const std::string& where);

// Root sets: { "basis_gram": [[...]], "vectors": [[...]] }; emitted sets
// carry a "norms" multiset summary.
json rootset_to_json(const RootSet& s, bool with_norms = true);
RootSet rootset_from_json(const json& j, const std::string& where);

json identification_to_json(const catalog::IdentificationResult& id);

// Weight configurations mirror the root-set schema plus "shape", "A",
// "Gamma"; the generators live under "vectors".
json weight_config_to_json(const weights::WeightConfig& cfg);
weights::WeightConfig weight_config_from_json(const json& j, const std::string& where);

json report_to_json(const verify::Report& r);
json aggregate_to_json(const verify::Aggregate& agg);

json parse_file(const std::string& path);

}  // namespace roots::io
