#include <filesystem>
#include <fstream>
#include <sstream>

#include "brunnel/catalog.hpp"
#include "brunnel/cli.hpp"
#include "brunnel/codec.hpp"
#include "brunnel/diagram_json.hpp"
#include "brunnel/errors.hpp"

namespace brunnel::cli {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace

std::string read_source(const std::string& source, std::istream& in) {
  if (source.empty() || source == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream f(source, std::ios::binary);
    if (!f) throw Error("cannot read '" + source + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return source;
}

LinkDiagram parse_diagram_input(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw SyntaxError("empty diagram input");
  if (text.front() == '{') {
    const json j = parse_json(text);
    const std::string schema = j.value("schema", "brunnel.diagram/1");
    if (schema == "brunnel.dt/1") return dt_to_diagram(parse_dt(j.at("dt").get<std::string>()));
    if (schema == "brunnel.diagram/1") return diagram_from_json(j);
    throw ValidationError("expected a diagram or DT document, got schema '" + schema + "'");
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = trim(line);
    if (starts_with(line, "DT")) return dt_to_diagram(parse_dt(line));
    if (starts_with(line, "PD")) return parse_pd(line);
  }
  if (text.find_first_of(" \t\r\n") == std::string::npos) return catalog_diagram(text);
  throw SyntaxError("input is not a DT code, PD code, diagram JSON or catalog name");
}

GroupPresentation parse_presentation(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.size() < 2 || text.front() != '<' || text.back() != '>') {
    throw SyntaxError("presentation must look like <x1, x2 | r1, r2>");
  }
  const std::string body = text.substr(1, text.size() - 2);
  const auto bar = body.find('|');
  const std::string gens = trim(body.substr(0, bar));
  const std::string rels = bar == std::string::npos ? "" : trim(body.substr(bar + 1));
  int count = 0;
  if (!gens.empty()) {
    for (const auto& g : split(gens, ',')) {
      if (g != "x" + std::to_string(count + 1)) {
        throw SyntaxError("generator '" + g + "' out of order, expected x" + std::to_string(count + 1));
      }
      ++count;
    }
  }
  std::vector<Word> relators;
  if (!rels.empty()) {
    for (const auto& r : split(rels, ',')) relators.push_back(parse_word(r));
  }
  return GroupPresentation(count, relators);
}

JsjTree parse_jsj_input(const std::string& raw) {
  const std::string text = trim(raw);
  if (!text.empty() && text.front() == '{') return jsj_from_json(parse_json(text));
  if (text.find_first_of(" \t\r\n") == std::string::npos && !text.empty()) return knot_exterior_tree(text);
  throw SyntaxError("expected a JSJ tree document or a knot name");
}

SurfaceLinkDescriptor parse_descriptor_input(const std::string& raw) {
  const std::string text = trim(raw);
  if (!text.empty() && text.front() == '{') return descriptor_from_json(parse_json(text));
  if (text.find_first_of(" \t\r\n") == std::string::npos && !text.empty()) return base_descriptor(text);
  throw SyntaxError("expected a descriptor document or a base name");
}

}  // namespace brunnel::cli
