#include "brunnel/diagram_json.hpp"
#include "brunnel/errors.hpp"
#include "brunnel/surface.hpp"

namespace brunnel {

using nlohmann::json;

json component_to_json(const SurfaceComponent& c) {
  json j = {{"genus", c.genus},
            {"is_disk", c.is_disk()},
            {"trivial_disk", c.trivial_disk},
            {"knotted_boundary", c.knotted_boundary}};
  j["color"] = c.color ? json(*c.color) : json(nullptr);
  return j;
}

SurfaceComponent component_from_json(const json& j) {
  SurfaceComponent c;
  c.genus = j.at("genus").get<int>();
  c.trivial_disk = j.value("trivial_disk", false);
  c.knotted_boundary = j.value("knotted_boundary", false);
  if (j.contains("color") && !j["color"].is_null()) c.color = j["color"].get<std::string>();
  return c;
}

namespace {

json step_to_json(const HistoryStep& s) {
  json j = {{"step", step_kind_name(s.kind)}};
  switch (s.kind) {
    case StepKind::Base:
    case StepKind::Adjoin: {
      j["name"] = s.name;
      j["components"] = json::array();
      for (const auto& c : s.components) j["components"].push_back(component_to_json(c));
      j["brunnian_status"] = brunnian_status_name(s.status);
      j["boundary"] = s.boundary ? diagram_to_json(*s.boundary) : json(nullptr);
      j["assumptions"] = s.assumptions;
      break;
    }
    case StepKind::BingDoubleFirst:
      break;
    case StepKind::Band:
      j["i"] = s.i;
      j["j"] = s.j;
      break;
    case StepKind::RimSurgery:
      j["curve"] = s.curve;
      j["knot"] = s.knot;
      j["twist"] = s.twist;
      break;
  }
  return j;
}

HistoryStep step_from_json(const json& j) {
  const std::string kind = j.at("step").get<std::string>();
  HistoryStep s;
  if (kind == "base" || kind == "adjoin") {
    s.kind = kind == "base" ? StepKind::Base : StepKind::Adjoin;
    s.name = j.value("name", "");
    for (const auto& c : j.at("components")) s.components.push_back(component_from_json(c));
    s.status = parse_brunnian_status(j.value("brunnian_status", "unknown"));
    if (j.contains("boundary") && !j["boundary"].is_null()) s.boundary = diagram_from_json(j["boundary"]);
    if (j.contains("assumptions")) s.assumptions = j["assumptions"].get<std::vector<std::string>>();
  } else if (kind == "bing-double-first") {
    s.kind = StepKind::BingDoubleFirst;
  } else if (kind == "band") {
    s = band_step(j.at("i").get<int>(), j.at("j").get<int>());
  } else if (kind == "rim-surgery") {
    s = rim_surgery_step(j.at("curve").get<std::string>(), j.at("knot").get<std::string>(), j.value("twist", 1));
  } else {
    throw ValidationError("unknown history step '" + kind + "'");
  }
  return s;
}

}  // namespace

json descriptor_to_json(const SurfaceLinkDescriptor& s) {
  json j;
  j["schema"] = "brunnel.descriptor/1";
  j["component_count"] = s.component_count();
  j["components"] = json::array();
  for (const auto& c : s.components()) j["components"].push_back(component_to_json(c));
  j["brunnian_status"] = brunnian_status_name(s.brunnian_status());
  j["assumptions"] = s.assumptions();
  j["boundary"] = s.boundary() ? diagram_to_json(*s.boundary()) : json(nullptr);
  j["history"] = json::array();
  for (const auto& step : s.history()) j["history"].push_back(step_to_json(step));
  return j;
}

SurfaceLinkDescriptor descriptor_from_json(const json& j) {
  try {
    std::vector<HistoryStep> history;
    for (const auto& step : j.at("history")) history.push_back(step_from_json(step));
    SurfaceLinkDescriptor s = SurfaceLinkDescriptor::replay(history);
    if (j.contains("components")) {
      std::vector<SurfaceComponent> stored;
      for (const auto& c : j["components"]) stored.push_back(component_from_json(c));
      if (stored != s.components()) throw ValidationError("stored components disagree with the replayed history");
    }
    if (j.contains("brunnian_status") && parse_brunnian_status(j["brunnian_status"].get<std::string>()) != s.brunnian_status()) {
      throw ValidationError("stored Brunnian status disagrees with the replayed history");
    }
    return s;
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("descriptor JSON: ") + e.what());
  }
}

json omega_to_json(const OmegaValue& o) { return o.is_bottom() ? json("-inf") : json(o.value()); }

json ledger_to_json(const DistinctnessLedger& l) {
  json j;
  j["schema"] = "brunnel.omega-ledger/1";
  j["labels"] = l.labels;
  j["omega"] = json::array();
  for (const auto& o : l.omega) j["omega"].push_back(omega_to_json(o));
  j["verdicts"] = json::array();
  for (const auto& row : l.verdicts) {
    json r = json::array();
    for (auto v : row) r.push_back(verdict_name(v));
    j["verdicts"].push_back(r);
  }
  return j;
}

}  // namespace brunnel
