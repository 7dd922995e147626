#include "brunnel/nk.hpp"

namespace brunnel {

using nlohmann::json;

json nk_to_json(const NkConstruction& c) {
  json j;
  j["schema"] = "brunnel.nk/1";
  j["n"] = c.n;
  j["k"] = c.k;
  j["base"] = descriptor_to_json(c.base);
  j["copies"] = json::array();
  for (const auto& colors : c.colors) j["copies"].push_back(colors);
  j["bands"] = json::array();
  for (const auto& b : c.bands) j["bands"].push_back({{"copy", b.copy}, {"color", b.color}, {"target", b.target}});
  j["merged"] = descriptor_to_json(c.merged);
  j["merged_colors"] = c.merged_colors;
  return j;
}

json nk_report_to_json(const NkReport& r) {
  json j;
  j["schema"] = "brunnel.nk-report/1";
  j["n"] = r.n;
  j["k"] = r.k;
  j["passed"] = r.passed;
  j["subsets"] = json::array();
  for (const auto& s : r.subsets) {
    json e = {{"kept", s.kept},
              {"expect_unlink", s.expect_unlink},
              {"token", nk_token_name(s.token, r.k)},
              {"distinguished_copy", s.distinguished_copy ? json(*s.distinguished_copy) : json(nullptr)},
              {"witness", s.witness},
              {"trace", s.trace},
              {"passed", s.passed}};
    j["subsets"].push_back(e);
  }
  return j;
}

json nk_pair_to_json(const NkPair& p) {
  json j;
  j["schema"] = "brunnel.nk-pair/1";
  j["first"] = nk_to_json(p.first);
  j["second"] = nk_to_json(p.second);
  j["ledger"] = p.ledger;
  return j;
}

}  // namespace brunnel
