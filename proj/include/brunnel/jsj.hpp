#pragma once

// Labeled trees standing for JSJ decompositions of link exteriors.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace brunnel {

enum class PieceKind { HyperbolicKnotExterior, BorromeanExterior, KeychainExterior, HyperbolicLinkExterior, Other };

std::string piece_kind_name(PieceKind k);
PieceKind parse_piece_kind(const std::string& s);

struct PieceLabel {
  PieceKind kind = PieceKind::Other;
  std::string name;
  int boundary_count = 1;
  // Boundary tori that are components of the link exterior boundary rather
  // than JSJ tori.
  int external = 0;

  friend bool operator==(const PieceLabel&, const PieceLabel&) = default;
};

PieceLabel borromean_piece(int external);
PieceLabel keychain_piece(int external);

class JsjTree {
 public:
  JsjTree() = default;
  // Validates: the graph is a tree, degree + external = boundary_count at
  // every vertex, Borromean and keychain pieces have 3 boundary tori.
  JsjTree(std::vector<PieceLabel> vertices, std::vector<std::pair<int, int>> edges,
          std::optional<int> distinguished = std::nullopt);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<PieceLabel>& vertices() const { return vertices_; }
  const PieceLabel& label(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  int degree(int v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }
  std::optional<int> distinguished() const { return distinguished_; }

  bool is_path() const;

  friend bool operator==(const JsjTree& a, const JsjTree& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.distinguished_ == b.distinguished_;
  }

 private:
  std::vector<PieceLabel> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::optional<int> distinguished_;
};

// One hyperbolic knot exterior with its single boundary torus external;
// the vertex is distinguished.
JsjTree knot_exterior_tree(const std::string& name);

// Adds a Borromean vertex with 2 external tori joined to the distinguished
// vertex, whose external torus becomes the new JSJ torus. The new vertex
// becomes distinguished.
JsjTree bing_extend(const JsjTree& t);

// Two copies of t (vertices 0..n-1 and n..2n-1) and a keychain vertex 2n
// with 1 external torus joined to both copies of the distinguished vertex.
// The result has no distinguished vertex.
JsjTree covering_tree(const JsjTree& t);

// A permutation p with p[v] the image of v.
using Permutation = std::vector<int>;

struct AutomorphismLimits {
  int max_vertices = 24;
  long max_automorphisms = 1000000;
};

// All label-preserving tree automorphisms, sorted lexicographically. The
// identity is always first.
std::vector<Permutation> automorphisms(const JsjTree& t, const AutomorphismLimits& limits = {});

enum class TreeCondition { ConditionI, ConditionII, Neither };
std::string tree_condition_name(TreeCondition c);

// ConditionI: no Borromean and no keychain piece. ConditionII: no keychain
// piece and exactly one Borromean piece, which has 2 external tori.
TreeCondition classify_tree(const JsjTree& t);

nlohmann::json jsj_to_json(const JsjTree& t);
JsjTree jsj_from_json(const nlohmann::json& j);
std::string jsj_to_dot(const JsjTree& t);

}  // namespace brunnel
