#include "doctest.h"

#include "brunnel/errors.hpp"
#include "brunnel/jsj.hpp"
#include "oracles.hpp"

using namespace brunnel;

namespace {

PieceLabel other(const std::string& name, int boundary, int external = 0) {
  return PieceLabel{PieceKind::Other, name, boundary, external};
}

JsjTree from_edges(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<std::string>& names) {
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : edges) {
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
  }
  std::vector<PieceLabel> v;
  for (int i = 0; i < n; ++i) v.push_back(other(names[static_cast<std::size_t>(i)], std::max(1, degree[static_cast<std::size_t>(i)]), degree[static_cast<std::size_t>(i)] == 0 ? 1 : 0));
  return JsjTree(v, edges);
}

JsjTree genus_one_family_tree() {
  return JsjTree({PieceLabel{PieceKind::HyperbolicLinkExterior, "L", 3, 2}, PieceLabel{PieceKind::HyperbolicLinkExterior, "whitehead", 2, 0},
                  other("trefoil", 1)},
                 {{0, 1}, {1, 2}});
}

}  // namespace

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(JsjTree({other("a", 1), other("b", 1)}, {}), ValidationError);
  CHECK_THROWS_AS(JsjTree({other("a", 2), other("b", 2), other("c", 2)}, {{0, 1}, {1, 2}, {2, 0}}), ValidationError);
  CHECK_THROWS_AS(JsjTree({other("a", 2), other("b", 1)}, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(JsjTree({borromean_piece(1), other("b", 1)}, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(JsjTree({other("a", 1), other("b", 1)}, {{0, 1}}, 2), ValidationError);
  CHECK_NOTHROW(JsjTree({borromean_piece(2), other("b", 1)}, {{0, 1}}));
}

TEST_CASE("Bing extensions form a path") {
  JsjTree t = knot_exterior_tree("K");
  CHECK(t.vertex_count() == 1);
  CHECK(t.distinguished() == 0);
  for (int n = 1; n <= 7; ++n) {
    t = bing_extend(t);
    CHECK(t.vertex_count() == n + 1);
    CHECK(t.is_path());
    CHECK(t.distinguished() == n);
    CHECK(t.label(n).kind == PieceKind::BorromeanExterior);
    CHECK(t.label(n).external == 2);
    if (n > 1) CHECK(t.label(n - 1).external == 1);
    CHECK(automorphisms(t).size() == 1);
  }
}

TEST_CASE("covering trees have a flip") {
  JsjTree t = knot_exterior_tree("K");
  for (int n = 1; n <= 6; ++n) {
    t = bing_extend(t);
    const JsjTree c = covering_tree(t);
    CHECK(c.vertex_count() == 2 * t.vertex_count() + 1);
    CHECK_FALSE(c.distinguished().has_value());
    CHECK(c.label(c.vertex_count() - 1).kind == PieceKind::KeychainExterior);
    const auto auts = automorphisms(c);
    REQUIRE(auts.size() == 2);
    const int m = t.vertex_count();
    for (int v = 0; v < m; ++v) CHECK(auts[1][static_cast<std::size_t>(v)] == v + m);
  }
  CHECK_THROWS_AS(covering_tree(covering_tree(bing_extend(knot_exterior_tree("K")))), PreconditionError);
}

TEST_CASE("automorphisms agree with brute force on all trees up to 9 vertices") {
  std::vector<int> sizes;
  const auto trees = oracle::all_trees(9, &sizes);
  CHECK(trees.size() == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const int n = sizes[i];
    for (int variant = 0; variant < 3; ++variant) {
      std::vector<std::string> names;
      for (int v = 0; v < n; ++v) names.push_back(variant == 0 ? "a" : variant == 1 ? (v % 2 ? "a" : "b") : (v == 0 ? "b" : "a"));
      const JsjTree t = from_edges(n, trees[i], names);
      std::vector<std::string> labels;
      for (int v = 0; v < n; ++v) labels.push_back(names[static_cast<std::size_t>(v)] + "/" + std::to_string(t.label(v).boundary_count) + "/" + std::to_string(t.label(v).external));
      const auto fast = automorphisms(t);
      const auto slow = oracle::brute_force_automorphisms(n, trees[i], labels);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("automorphism limits") {
  std::vector<PieceLabel> v = {other("hub", 12)};
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= 12; ++i) {
    v.push_back(other("leaf", 1));
    e.emplace_back(0, i);
  }
  const JsjTree star(v, e);
  CHECK_THROWS_AS(automorphisms(star, {24, 1000}), PreconditionError);
  CHECK_THROWS_AS(automorphisms(star, {5, 1000000}), PreconditionError);
}

TEST_CASE("classification of boundary trees") {
  CHECK(classify_tree(bing_extend(knot_exterior_tree("K"))) == TreeCondition::ConditionII);
  CHECK(classify_tree(genus_one_family_tree()) == TreeCondition::ConditionI);
  CHECK(classify_tree(bing_extend(bing_extend(knot_exterior_tree("K")))) == TreeCondition::Neither);
  CHECK(classify_tree(covering_tree(bing_extend(knot_exterior_tree("K")))) == TreeCondition::Neither);
  CHECK(classify_tree(knot_exterior_tree("K")) == TreeCondition::ConditionI);
  CHECK(tree_condition_name(TreeCondition::ConditionII) == "II");
}

TEST_CASE("JSON and DOT") {
  const JsjTree t = bing_extend(bing_extend(knot_exterior_tree("K")));
  CHECK(jsj_from_json(jsj_to_json(t)) == t);
  CHECK(jsj_to_json(t).at("schema") == "brunnel.jsj/1");
  const JsjTree c = covering_tree(t);
  CHECK(jsj_from_json(jsj_to_json(c)) == c);
  CHECK(jsj_to_dot(t).find("doublecircle") != std::string::npos);
  CHECK(jsj_to_dot(c).find("doublecircle") == std::string::npos);
  nlohmann::json bad = jsj_to_json(t);
  bad["edges"].push_back({0, 2});
  CHECK_THROWS_AS(jsj_from_json(bad), ValidationError);
}
