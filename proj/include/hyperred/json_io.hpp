#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "hyperred/bench.hpp"
#include "hyperred/series.hpp"
#include "hyperred/verify.hpp"

namespace hyperred {

using Json = nlohmann::ordered_json;

/// {"indices": n, "num": [{"value": "p/q", "weights": [..]}], "den": [...],
///  "args": [{"coeff": "p/q", "degree": g}], "prefactor": {"coeff": ..,
///  "degree": ..}}
Json series_to_json(const SeriesSpec& spec);
SeriesSpec series_from_json(const Json& j);

/// Builds a SeriesSpec from a function tag (pfq | kdf | sd | f3 | spec) and
/// the matching shape body. Throws InvalidSpec on malformed input.
SeriesSpec spec_from_function_json(std::string_view fn, const Json& body);

Json params_to_json(const ReductionParams& p);
ReductionParams params_from_json(const Json& j);

Json report_to_json(const VerifyReport& rep);

Json registry_to_json();

}  // namespace hyperred
