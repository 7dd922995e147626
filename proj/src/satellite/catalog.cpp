#include "brunnel/catalog.hpp"

#include <cctype>
#include <map>

#include "brunnel/codec.hpp"
#include "brunnel/errors.hpp"
#include "brunnel/satellite.hpp"

namespace brunnel {

namespace {

const std::map<std::string, std::string>& pd_table() {
  static const std::map<std::string, std::string> table = {
      {"trefoil", "PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]"},
      {"figure-eight", "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]"},
      {"5_1", "PD[X[2,8,3,7],X[4,10,5,9],X[6,2,7,1],X[8,4,9,3],X[10,6,1,5]]"},
      {"5_2", "PD[X[1,5,2,4],X[3,9,4,8],X[5,1,6,10],X[7,3,8,2],X[9,7,10,6]]"},
  };
  return table;
}

std::string canonical(const std::string& name) {
  if (name == "3_1") return "trefoil";
  if (name == "4_1") return "figure-eight";
  return name;
}

// Returns -1 unless name is "trefoil#N".
int trefoil_power(const std::string& name) {
  const std::string prefix = "trefoil#";
  if (name.compare(0, prefix.size(), prefix) != 0 || name.size() == prefix.size()) return -1;
  int n = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
    n = n * 10 + (name[i] - '0');
    if (n > 64) return -1;
  }
  return n;
}

LinkDiagram hopf() { return from_gauss_code({{1, -2}, {-1, 2}}, {1, 1}); }

}  // namespace

std::string slice_knot_dt() {
  return "DT:[(-70,20,-84,-82,-80,42,-32,56,-66,2,-44,18,36,-52,40,76,-16,-64,28,-60,-78,68,-22,-12,-30,62,-26,-74,14,"
         "50,-38,54,72,46,-4,-24,34,-58,48,-10,-8,-6)]";
}

std::string jsj_link_dt() {
  return "DT:[(16,34,-64,54,40,68,-44,-60,32,50,42,-66,-38,-56,70,-48),(30,-58,8,-24,-12,20,52,-2,-62,-14,-36,-26,6,46,"
         "18),(-4,28,10,-22)]";
}

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.component_count() != 1 || b.component_count() != 1) {
    throw PreconditionError("connected sum is defined here for knots only");
  }
  return band_sum(split_union(a, b), 0, 1);
}

LinkDiagram connected_sum_power(const LinkDiagram& k, int n) {
  if (n < 0) throw PreconditionError("negative summand count");
  if (n == 0) return LinkDiagram::unknot();
  LinkDiagram out = k;
  for (int i = 1; i < n; ++i) out = connected_sum(out, k);
  return out;
}

LinkDiagram catalog_diagram(const std::string& raw) {
  const std::string name = canonical(raw);
  if (name == "unknot") return LinkDiagram::unknot();
  auto it = pd_table().find(name);
  if (it != pd_table().end()) return parse_pd(it->second);
  const LinkDiagram trefoil = parse_pd(pd_table().at("trefoil"));
  if (name == "left-trefoil") return trefoil.mirror();
  if (name == "granny") return connected_sum(trefoil, trefoil);
  if (name == "square") return connected_sum(trefoil, trefoil.mirror());
  if (name == "hopf") return hopf();
  if (name == "slice-k") return dt_to_diagram(parse_dt(slice_knot_dt()));
  if (name == "wh+trefoil") return whitehead_double(trefoil, 0, 1);
  if (name == "wh-trefoil") return whitehead_double(trefoil, 0, -1);
  int n = trefoil_power(name);
  if (n >= 0) return connected_sum_power(trefoil, n);
  throw ValidationError("unknown catalog name '" + raw + "'");
}

bool catalog_has(const std::string& name) {
  const std::string c = canonical(name);
  for (const auto& n : catalog_names()) {
    if (n == c) return true;
  }
  return trefoil_power(c) >= 0;
}

std::vector<std::string> catalog_names() {
  return {"unknot", "trefoil", "left-trefoil", "figure-eight", "5_1", "5_2", "granny",
          "square", "hopf", "wh+trefoil", "wh-trefoil", "slice-k"};
}

}  // namespace brunnel
