#pragma once

// JSON forms of matchings and combinations:
//   {"n":8,"arcs":[[4,6],[5,7]],"alpha":[1],"alphatheta":[2]}
//   [{"coeff":"-1","matching":{...}}, ...]

#include <json.hpp>

#include "supertorus/matching.hpp"

namespace supertorus {

nlohmann::json matching_to_json(const LabelledMatching& m);
/// Throws InvalidMatching on a malformed document.
LabelledMatching matching_from_json(const nlohmann::json& j);

nlohmann::json combination_to_json(const MatchingCombination& c);
MatchingCombination combination_from_json(const nlohmann::json& j);

}  // namespace supertorus
