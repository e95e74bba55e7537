#pragma once

#include <json.hpp>

#include "charlab/laurent.hpp"
#include "charlab/partition.hpp"
#include "charlab/patterns.hpp"
#include "charlab/rsk.hpp"

namespace charlab {

using nlohmann::json;

// {"parts": ["3", "5/2"], "sign": "+"}
json partition_to_json(const SignedPartition& p);
SignedPartition partition_from_json(const json& j);

// {"vars": ["x1", "x2", "beta"], "terms": [{"exp": ["1", "-1", "0"], "coeff": "3"}]}
json poly_to_json(const LaurentPoly& p, const std::vector<std::string>& var_names = {});
LaurentPoly poly_from_json(const json& j);

// {"family": "split_orthogonal", "rows": [["1/2"], ["1"]]}
json pattern_to_json(const Pattern& p);
Pattern pattern_from_json(const json& j);

// {"rows": [["1","2"],["0"]], "outer": "half"}
json array_to_json(const MonoidTaggedArray& a);
MonoidTaggedArray array_from_json(const json& j);

}  // namespace charlab
