#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "brunnel/diagram.hpp"
#include "brunnel/errors.hpp"

namespace brunnel {

namespace {

struct Crossed {
  EdgeRef edge;
  // The face the band leaves lies to the left of the edge.
  bool from_left = false;
};

struct BandPath {
  bool start_left = false;  // first face lies left of the attaching edge of i
  bool end_left = false;    // last face lies left of the attaching edge of j
  std::vector<Crossed> crossed;
};

bool is_edge(const EdgeRef& a, int c, int t) { return a.component == c && a.index == t; }

BandPath find_path(const LinkDiagram& d, int i, int j) {
  const auto faces = d.faces();
  // Face containing the opposite dart of every (edge, along).
  std::map<std::tuple<int, int, bool>, int> face_of;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (const auto& s : faces[f].sides) face_of[{s.edge.component, s.edge.index, s.along}] = static_cast<int>(f);
  }
  std::vector<int> parent(faces.size(), -2);
  std::vector<Crossed> via(faces.size());
  std::deque<int> queue;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (const auto& s : faces[f].sides) {
      if (is_edge(s.edge, i, 0) && parent[f] == -2) {
        parent[f] = -1;
        queue.push_back(static_cast<int>(f));
      }
    }
  }
  int target = -1;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    bool hit = false;
    for (const auto& s : faces[static_cast<std::size_t>(f)].sides) {
      if (is_edge(s.edge, j, 0)) hit = true;
    }
    if (hit) {
      target = f;
      break;
    }
    for (const auto& s : faces[static_cast<std::size_t>(f)].sides) {
      int g = face_of.at({s.edge.component, s.edge.index, !s.along});
      if (parent[static_cast<std::size_t>(g)] != -2) continue;
      parent[static_cast<std::size_t>(g)] = f;
      via[static_cast<std::size_t>(g)] = Crossed{s.edge, !s.along};
      queue.push_back(g);
    }
  }
  if (target < 0) throw Error("band path not found");
  BandPath path;
  for (int f = target; parent[static_cast<std::size_t>(f)] != -1; f = parent[static_cast<std::size_t>(f)]) {
    path.crossed.push_back(via[static_cast<std::size_t>(f)]);
  }
  std::reverse(path.crossed.begin(), path.crossed.end());
  int first = target;
  while (parent[static_cast<std::size_t>(first)] != -1) first = parent[static_cast<std::size_t>(first)];
  for (const auto& s : faces[static_cast<std::size_t>(first)].sides) {
    if (is_edge(s.edge, i, 0)) {
      path.start_left = !s.along;
      break;
    }
  }
  for (const auto& s : faces[static_cast<std::size_t>(target)].sides) {
    if (is_edge(s.edge, j, 0)) {
      path.end_left = !s.along;
      break;
    }
  }
  return path;
}

LinkDiagram merge(const LinkDiagram& d, int i, int j, std::vector<int> signs, std::vector<std::vector<Visit>> comps,
                  std::vector<Visit> merged) {
  (void)d;
  const int lo = std::min(i, j), hi = std::max(i, j);
  comps[static_cast<std::size_t>(lo)] = std::move(merged);
  comps.erase(comps.begin() + hi);
  return LinkDiagram(std::move(signs), std::move(comps));
}

}  // namespace

LinkDiagram band_sum(const LinkDiagram& d_in, int i, int j) {
  if (i == j) throw PreconditionError("band sum needs two distinct components");
  if (i < 0 || j < 0 || i >= d_in.component_count() || j >= d_in.component_count()) {
    throw PreconditionError("component index out of range");
  }
  const auto piece = d_in.pieces();
  const bool same_piece = piece[static_cast<std::size_t>(i)] >= 0 && piece[static_cast<std::size_t>(i)] == piece[static_cast<std::size_t>(j)];
  if (!same_piece) {
    std::vector<Visit> merged = d_in.component(i);
    merged.insert(merged.end(), d_in.component(j).begin(), d_in.component(j).end());
    return merge(d_in, i, j, d_in.signs(), d_in.components(), std::move(merged));
  }

  LinkDiagram d = d_in;
  BandPath path = find_path(d, i, j);
  if (path.start_left != path.end_left) {
    // Reverse j so that the band joins it with matching orientations. Edge 0
    // of j is kept; its other edges are renumbered and change side.
    const int k = static_cast<int>(d.component(j).size());
    d = d.reversed(j);
    path.end_left = !path.end_left;
    for (auto& c : path.crossed) {
      if (c.edge.component == j) {
        c.edge.index = (k - c.edge.index) % k;
        c.from_left = !c.from_left;
      }
    }
  }

  const bool p_left = path.start_left;
  std::vector<int> signs = d.signs();
  std::vector<Visit> p_visits, q_visits;
  // insertions[(component, edge)] = under visits in order along the edge.
  std::map<std::pair<int, int>, std::vector<Visit>> insertions;
  for (const auto& c : path.crossed) {
    const int a = static_cast<int>(signs.size());
    const int b = a + 1;
    const int p_sign = c.from_left ? 1 : -1;
    // Going along the crossed edge: right strand first when the band moves
    // from its left side, left strand first otherwise.
    const bool first_is_left = !c.from_left;
    const bool first_is_p = first_is_left == p_left;
    const int p_cross = first_is_p ? a : b;
    const int q_cross = first_is_p ? b : a;
    signs.push_back(first_is_p ? p_sign : -p_sign);
    signs.push_back(first_is_p ? -p_sign : p_sign);
    insertions[{c.edge.component, c.edge.index}] = {Visit{a, false}, Visit{b, false}};
    p_visits.push_back(Visit{p_cross, true});
    q_visits.insert(q_visits.begin(), Visit{q_cross, true});
  }
  std::vector<std::vector<Visit>> comps;
  for (int c = 0; c < d.component_count(); ++c) {
    std::vector<Visit> seq;
    const auto& comp = d.component(c);
    for (int t = 0; t < static_cast<int>(comp.size()); ++t) {
      auto it = insertions.find({c, t});
      if (it != insertions.end()) seq.insert(seq.end(), it->second.begin(), it->second.end());
      seq.push_back(comp[static_cast<std::size_t>(t)]);
    }
    comps.push_back(std::move(seq));
  }
  std::vector<Visit> merged = comps[static_cast<std::size_t>(i)];
  merged.insert(merged.end(), p_visits.begin(), p_visits.end());
  merged.insert(merged.end(), comps[static_cast<std::size_t>(j)].begin(), comps[static_cast<std::size_t>(j)].end());
  merged.insert(merged.end(), q_visits.begin(), q_visits.end());
  return merge(d, i, j, std::move(signs), std::move(comps), std::move(merged));
}

}  // namespace brunnel
