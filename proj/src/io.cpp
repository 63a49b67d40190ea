#include "supertorus/io.hpp"

namespace supertorus {

nlohmann::json matching_to_json(const LabelledMatching& m) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : m.arcs()) arcs.push_back({a.left, a.right});
  return {{"n", m.n()}, {"arcs", arcs}, {"alpha", m.alpha()}, {"alphatheta", m.alphatheta()}};
}

LabelledMatching matching_from_json(const nlohmann::json& j) {
  try {
    std::vector<Arc> arcs;
    for (const auto& arc : j.value("arcs", nlohmann::json::array())) {
      if (!arc.is_array() || arc.size() != 2) throw InvalidMatching("arc must be a pair");
      arcs.push_back({arc.at(0).get<int>(), arc.at(1).get<int>()});
    }
    return LabelledMatching(j.at("n").get<int>(), std::move(arcs),
                            j.value("alpha", std::vector<int>{}),
                            j.value("alphatheta", std::vector<int>{}));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidMatching(std::string("malformed matching document: ") + e.what());
  }
}

nlohmann::json combination_to_json(const MatchingCombination& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, coeff] : c.terms()) {
    out.push_back({{"coeff", to_string(coeff)}, {"matching", matching_to_json(m)}});
  }
  return out;
}

MatchingCombination combination_from_json(const nlohmann::json& j) {
  MatchingCombination out;
  for (const auto& term : j) {
    out.add(matching_from_json(term.at("matching")), parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace supertorus
