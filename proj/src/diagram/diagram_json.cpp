#include "brunnel/diagram_json.hpp"

#include "brunnel/errors.hpp"

namespace brunnel {

namespace {

// Arcs run from one under visit to the next; a component with no under
// visits is a single arc.
int arc_count(const LinkDiagram& d) {
  int arcs = 0;
  for (const auto& comp : d.components()) {
    int unders = 0;
    for (const auto& v : comp) unders += v.over ? 0 : 1;
    arcs += unders == 0 ? 1 : unders;
  }
  return arcs;
}

}  // namespace

nlohmann::json diagram_to_json(const LinkDiagram& d) {
  nlohmann::json j;
  j["schema"] = "brunnel.diagram/1";
  j["crossing_count"] = d.crossing_count();
  j["component_count"] = d.component_count();
  j["signs"] = d.signs();
  j["gauss"] = gauss_code(d);
  j["arc_count"] = arc_count(d);
  j["pd"] = to_pd(d);
  return j;
}

LinkDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SyntaxError("diagram JSON must be an object");
  if (j.contains("schema") && j.at("schema") != "brunnel.diagram/1") {
    throw ValidationError("unexpected schema " + j.at("schema").dump());
  }
  try {
    if (!j.contains("gauss") && j.contains("pd")) return parse_pd(j.at("pd").get<std::string>());
    auto signs = j.at("signs").get<std::vector<int>>();
    auto gauss = j.at("gauss").get<std::vector<std::vector<int>>>();
    LinkDiagram d = from_gauss_code(gauss, signs);
    d.validate_planar();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("diagram JSON: ") + e.what());
  }
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

}  // namespace brunnel
