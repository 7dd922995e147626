#pragma once

// Oriented link diagrams stored as signed extended Gauss codes.
//
// Every crossing has a sign (+1 right-handed, -1 left-handed) and is visited
// exactly twice, once over and once under. A component is the cyclic
// sequence of its visits; an empty sequence is a crossingless circle. Edge t
// of a component is the arc segment entering visit t (from visit t-1).
//
// Around a crossing the four arc ends sit in counterclockwise order
//   sign +1: under-in, over-out, under-out, over-in
//   sign -1: under-in, over-in,  under-out, over-out
// which is what makes the Gauss code determine the planar embedding.

#include <array>
#include <string>
#include <vector>

namespace brunnel {

struct Visit {
  int crossing = 0;
  bool over = false;
  friend bool operator==(const Visit&, const Visit&) = default;
};

struct VisitRef {
  int component = -1;
  int index = -1;
  friend bool operator==(const VisitRef&, const VisitRef&) = default;
};

// The edge entering visit `index` of `component`.
using EdgeRef = VisitRef;

// One side of a face: the face lies to the right of the traversal; `along`
// says whether the traversal follows the edge orientation.
struct FaceSide {
  EdgeRef edge;
  bool along = true;
};

struct Face {
  std::vector<FaceSide> sides;
};

using IntMatrix = std::vector<std::vector<long>>;

class LinkDiagram {
 public:
  LinkDiagram() = default;
  // Checks that signs are +-1 and that every crossing is visited exactly
  // once over and once under. Planarity is checked by validate_planar().
  LinkDiagram(std::vector<int> signs, std::vector<std::vector<Visit>> components);

  static LinkDiagram unknot();
  static LinkDiagram unlink(int n);

  int crossing_count() const { return static_cast<int>(signs_.size()); }
  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<int>& signs() const { return signs_; }
  int sign(int crossing) const { return signs_.at(static_cast<std::size_t>(crossing)); }
  const std::vector<std::vector<Visit>>& components() const { return components_; }
  const std::vector<Visit>& component(int c) const { return components_.at(static_cast<std::size_t>(c)); }

  VisitRef over_visit(int crossing) const { return over_.at(static_cast<std::size_t>(crossing)); }
  VisitRef under_visit(int crossing) const { return under_.at(static_cast<std::size_t>(crossing)); }

  int writhe() const;
  // Sum of signs of crossings between component c and itself.
  int self_writhe(int c) const;

  // Throws ValidationError unless the Gauss code is realizable on the
  // sphere (Euler characteristic check on every connected piece).
  void validate_planar() const;
  bool is_planar() const;

  std::vector<Face> faces() const;
  // Connected pieces of the crossing graph: piece index per component,
  // -1 for crossingless components.
  std::vector<int> pieces(int* piece_count = nullptr) const;

  LinkDiagram mirror() const;
  // Reverses the orientation of component c. Edge 0 stays edge 0.
  LinkDiagram reversed(int c) const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.signs_ == b.signs_ && a.components_ == b.components_;
  }

 private:
  void index_visits();

  std::vector<int> signs_;
  std::vector<std::vector<Visit>> components_;
  std::vector<VisitRef> over_;
  std::vector<VisitRef> under_;
};

// Builds a diagram from a partially used crossing set: crossings that are
// not visited are dropped and the rest renumbered in increasing order.
LinkDiagram compact(const std::vector<int>& signs, const std::vector<std::vector<Visit>>& components);

// Off the diagonal, linking numbers; on it, the self-writhe of each
// component (the blackboard framing).
IntMatrix linking_matrix(const LinkDiagram& d);

// Keeps the listed components (any order, no duplicates) in increasing
// index order.
LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& keep);

LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b);

// Merges components i and j with an untwisted band. The merged component
// takes index min(i, j). Attaches at edge 0 of both components; when those
// edges share no face the band runs over the arcs it has to cross.
LinkDiagram band_sum(const LinkDiagram& d, int i, int j);

struct SimplifyStats {
  int r1_moves = 0;
  int r2_moves = 0;
};

// Greedy Reidemeister I/II reduction. Never increases the crossing count
// and always terminates; not an unknot detector.
LinkDiagram simplify(const LinkDiagram& d, SimplifyStats* stats = nullptr);

// PD text, `PD[X(a,b,c,d), ...]`. Crossingless components appear as
// `Loop(k)`. Edge labels run consecutively along each component.
std::string to_pd(const LinkDiagram& d);
LinkDiagram parse_pd(const std::string& text);

// Per component: +(crossing+1) for an over visit, -(crossing+1) for under.
std::vector<std::vector<int>> gauss_code(const LinkDiagram& d);
LinkDiagram from_gauss_code(const std::vector<std::vector<int>>& code, const std::vector<int>& signs);

}  // namespace brunnel
