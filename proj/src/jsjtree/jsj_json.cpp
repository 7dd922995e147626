#include <sstream>

#include "brunnel/errors.hpp"
#include "brunnel/jsj.hpp"

namespace brunnel {

nlohmann::json jsj_to_json(const JsjTree& t) {
  nlohmann::json j;
  j["schema"] = "brunnel.jsj/1";
  j["vertices"] = nlohmann::json::array();
  for (const auto& l : t.vertices()) {
    j["vertices"].push_back(
        {{"kind", piece_kind_name(l.kind)}, {"name", l.name}, {"boundary_count", l.boundary_count}, {"external", l.external}});
  }
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : t.edges()) j["edges"].push_back({a, b});
  j["distinguished"] = t.distinguished() ? nlohmann::json(*t.distinguished()) : nlohmann::json(nullptr);
  return j;
}

JsjTree jsj_from_json(const nlohmann::json& j) {
  try {
    std::vector<PieceLabel> vertices;
    for (const auto& v : j.at("vertices")) {
      PieceLabel l;
      l.kind = parse_piece_kind(v.at("kind").get<std::string>());
      l.name = v.value("name", "");
      l.boundary_count = v.at("boundary_count").get<int>();
      l.external = v.at("external").get<int>();
      vertices.push_back(l);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::optional<int> d;
    if (j.contains("distinguished") && !j["distinguished"].is_null()) d = j["distinguished"].get<int>();
    return JsjTree(std::move(vertices), std::move(edges), d);
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("JSJ tree JSON: ") + e.what());
  }
}

std::string jsj_to_dot(const JsjTree& t) {
  std::ostringstream os;
  os << "graph jsj {\n";
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto& l = t.label(v);
    os << "  v" << v << " [label=\"" << piece_kind_name(l.kind);
    if (!l.name.empty()) os << " " << l.name;
    os << "\\n" << l.external << "/" << l.boundary_count << " external\"";
    if (t.distinguished() == v) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (auto [a, b] : t.edges()) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace brunnel
