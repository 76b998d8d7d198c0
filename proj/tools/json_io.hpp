#pragma once

#include "json.hpp"
#include "lb/finite_group.hpp"
#include "lb/series.hpp"
#include "lb/tensor.hpp"

namespace lb::cli {

using Json = nlohmann::ordered_json;

// {"terms": [{"key": ["x","y"], "coeff": "1"}, ...]} in graded-lex key order.
Json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j, const Alphabet& alphabet, Ring ring);

Json series_to_json(const TruncSeries& s);

// {"size": n, "mul": [[...]], "gens": {"x": i, ...}}
FiniteGroupTable table_from_json(const Json& j);
Json table_to_json(const FiniteGroupTable& g);

}  // namespace lb::cli
