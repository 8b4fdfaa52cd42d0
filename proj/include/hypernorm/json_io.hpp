#pragma once

#include <json.hpp>

#include "hypernorm/cost_calculus.hpp"
#include "hypernorm/family_norm.hpp"
#include "hypernorm/hamming_entropy.hpp"
#include "hypernorm/projection.hpp"

// JSON schemas shared by the CLI and the Python bindings. Rationals travel
// as "num/den" strings ("2" for integers); readers also take plain JSON
// integers and {"num": "...", "den": "..."} objects. Schema violations throw
// StructuralError.
namespace hypernorm::json_io {

using nlohmann::json;

Rational rational_from_json(const json& j);
json to_json(const Rational& r);
std::vector<Rational> rationals_from_json(const json& j);
json to_json(const std::vector<Rational>& values);
json to_json(const Interval& interval);

/// {"n": 3, "sets": [[1,2],[1,3],[2,3]]}, coordinates 1-indexed.
SetFamily family_from_json(const json& j);
json to_json(const SetFamily& family);

/// {"value": "3/2" | "inf", "primal": [...], "dual": [...], "warnings": [...]}
json to_json(const NormResult& result);

/// {"sizes": [2,2,2], "tuples": [[0,0,0],[1,1,0]]}
FiniteRelation relation_from_json(const json& j);
json to_json(const FiniteRelation& rel);

json to_json(const Comparison& cmp);
/// {"base": "1/2", "exponents": ["1/3", ...]}
json to_json(const SymbolicBox& box);

/// {"length": 2, "stages": ["00","01","11"]}
Approximation approximation_from_json(const json& j);
json to_json(const Approximation& approx);
/// ["0", "1/2", "3/4"]
LeftCEApprox beta_from_json(const json& j);
json to_json(const CostReport& report);

const char* to_string(Verdict v);

}  // namespace hypernorm::json_io
