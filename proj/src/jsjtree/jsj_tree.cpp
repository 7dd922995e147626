#include <algorithm>
#include <numeric>

#include "brunnel/errors.hpp"
#include "brunnel/jsj.hpp"

namespace brunnel {

std::string piece_kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::HyperbolicKnotExterior:
      return "hyperbolic-knot";
    case PieceKind::BorromeanExterior:
      return "borromean";
    case PieceKind::KeychainExterior:
      return "keychain";
    case PieceKind::HyperbolicLinkExterior:
      return "hyperbolic-link";
    case PieceKind::Other:
      return "other";
  }
  return "other";
}

PieceKind parse_piece_kind(const std::string& s) {
  for (PieceKind k : {PieceKind::HyperbolicKnotExterior, PieceKind::BorromeanExterior, PieceKind::KeychainExterior,
                      PieceKind::HyperbolicLinkExterior, PieceKind::Other}) {
    if (piece_kind_name(k) == s) return k;
  }
  throw ValidationError("unknown piece kind '" + s + "'");
}

PieceLabel borromean_piece(int external) { return PieceLabel{PieceKind::BorromeanExterior, "", 3, external}; }
PieceLabel keychain_piece(int external) { return PieceLabel{PieceKind::KeychainExterior, "", 3, external}; }

JsjTree::JsjTree(std::vector<PieceLabel> vertices, std::vector<std::pair<int, int>> edges,
                 std::optional<int> distinguished)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), distinguished_(distinguished) {
  const int n = static_cast<int>(vertices_.size());
  if (n == 0) throw ValidationError("JSJ tree needs at least one vertex");
  if (static_cast<int>(edges_.size()) != n - 1) {
    throw ValidationError("a tree on " + std::to_string(n) + " vertices has " + std::to_string(n - 1) + " edges, got " +
                          std::to_string(edges_.size()));
  }
  adj_.assign(static_cast<std::size_t>(n), {});
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (auto [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw ValidationError("bad edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    int ra = root(a), rb = root(b);
    if (ra == rb) throw ValidationError("edges contain a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  for (int v = 0; v < n; ++v) {
    const auto& l = vertices_[static_cast<std::size_t>(v)];
    if (l.boundary_count < 1) throw ValidationError("vertex " + std::to_string(v) + " has no boundary tori");
    if (l.external < 0) throw ValidationError("vertex " + std::to_string(v) + " has negative external count");
    if ((l.kind == PieceKind::BorromeanExterior || l.kind == PieceKind::KeychainExterior) && l.boundary_count != 3) {
      throw ValidationError("vertex " + std::to_string(v) + ": " + piece_kind_name(l.kind) +
                            " pieces have 3 boundary tori");
    }
    if (degree(v) + l.external != l.boundary_count) {
      throw ValidationError("vertex " + std::to_string(v) + ": degree " + std::to_string(degree(v)) + " + external " +
                            std::to_string(l.external) + " != boundary count " + std::to_string(l.boundary_count));
    }
  }
  if (distinguished_ && (*distinguished_ < 0 || *distinguished_ >= n)) {
    throw ValidationError("distinguished vertex out of range");
  }
}

bool JsjTree::is_path() const {
  if (vertex_count() == 1) return true;
  int ends = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    if (degree(v) > 2) return false;
    if (degree(v) == 1) ++ends;
  }
  return ends == 2;
}

JsjTree knot_exterior_tree(const std::string& name) {
  return JsjTree({PieceLabel{PieceKind::HyperbolicKnotExterior, name, 1, 1}}, {}, 0);
}

JsjTree bing_extend(const JsjTree& t) {
  if (!t.distinguished()) throw PreconditionError("bing_extend needs a distinguished vertex");
  const int y = *t.distinguished();
  auto vertices = t.vertices();
  if (vertices[static_cast<std::size_t>(y)].external < 1) {
    throw PreconditionError("distinguished vertex has no external boundary torus");
  }
  vertices[static_cast<std::size_t>(y)].external -= 1;
  const int e = t.vertex_count();
  vertices.push_back(borromean_piece(2));
  auto edges = t.edges();
  edges.emplace_back(y, e);
  return JsjTree(std::move(vertices), std::move(edges), e);
}

JsjTree covering_tree(const JsjTree& t) {
  if (!t.distinguished()) throw PreconditionError("covering_tree needs a distinguished vertex");
  const int y = *t.distinguished();
  const int n = t.vertex_count();
  if (t.label(y).external < 1) throw PreconditionError("distinguished vertex has no external boundary torus");
  std::vector<PieceLabel> vertices;
  std::vector<std::pair<int, int>> edges;
  for (int copy = 0; copy < 2; ++copy) {
    for (int v = 0; v < n; ++v) {
      PieceLabel l = t.label(v);
      if (v == y) l.external -= 1;
      vertices.push_back(l);
    }
    for (auto [a, b] : t.edges()) edges.emplace_back(a + copy * n, b + copy * n);
  }
  vertices.push_back(keychain_piece(1));
  edges.emplace_back(y, 2 * n);
  edges.emplace_back(y + n, 2 * n);
  return JsjTree(std::move(vertices), std::move(edges));
}

std::string tree_condition_name(TreeCondition c) {
  switch (c) {
    case TreeCondition::ConditionI:
      return "I";
    case TreeCondition::ConditionII:
      return "II";
    case TreeCondition::Neither:
      return "neither";
  }
  return "neither";
}

TreeCondition classify_tree(const JsjTree& t) {
  int borromean = 0, keychain = 0, borromean_external = 0;
  for (const auto& l : t.vertices()) {
    if (l.kind == PieceKind::BorromeanExterior) {
      ++borromean;
      borromean_external = l.external;
    }
    if (l.kind == PieceKind::KeychainExterior) ++keychain;
  }
  if (keychain == 0 && borromean == 0) return TreeCondition::ConditionI;
  if (keychain == 0 && borromean == 1 && borromean_external == 2) return TreeCondition::ConditionII;
  return TreeCondition::Neither;
}

}  // namespace brunnel
