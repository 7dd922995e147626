#include <set>

#include "brunnel/diagram.hpp"

namespace brunnel {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

LinkDiagram remove_visits(const LinkDiagram& d, const std::set<std::pair<int, int>>& drop) {
  std::vector<std::vector<Visit>> comps;
  for (int c = 0; c < d.component_count(); ++c) {
    std::vector<Visit> seq;
    const auto& comp = d.component(c);
    for (int t = 0; t < static_cast<int>(comp.size()); ++t) {
      if (!drop.count({c, t})) seq.push_back(comp[static_cast<std::size_t>(t)]);
    }
    comps.push_back(std::move(seq));
  }
  return compact(d.signs(), comps);
}

bool try_r1(LinkDiagram& d) {
  for (int c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.component(c);
    const int n = static_cast<int>(comp.size());
    for (int t = 0; t < n; ++t) {
      int u = wrap(t + 1, n);
      if (u != t && comp[static_cast<std::size_t>(t)].crossing == comp[static_cast<std::size_t>(u)].crossing) {
        d = remove_visits(d, {{c, t}, {c, u}});
        return true;
      }
    }
  }
  return false;
}

bool try_r2(LinkDiagram& d) {
  for (const auto& face : d.faces()) {
    if (face.sides.size() != 2) continue;
    const EdgeRef e1 = face.sides[0].edge;
    const EdgeRef e2 = face.sides[1].edge;
    const auto& c1 = d.component(e1.component);
    const auto& c2 = d.component(e2.component);
    const int n1 = static_cast<int>(c1.size());
    const int n2 = static_cast<int>(c2.size());
    const Visit& a = c1[static_cast<std::size_t>(wrap(e1.index - 1, n1))];
    const Visit& b = c1[static_cast<std::size_t>(e1.index)];
    if (a.crossing == b.crossing || a.over != b.over) continue;
    d = remove_visits(d, {{e1.component, wrap(e1.index - 1, n1)},
                          {e1.component, e1.index},
                          {e2.component, wrap(e2.index - 1, n2)},
                          {e2.component, e2.index}});
    return true;
  }
  return false;
}

}  // namespace

LinkDiagram simplify(const LinkDiagram& d, SimplifyStats* stats) {
  LinkDiagram cur = d;
  SimplifyStats local;
  while (true) {
    if (try_r1(cur)) {
      ++local.r1_moves;
      continue;
    }
    if (try_r2(cur)) {
      ++local.r2_moves;
      continue;
    }
    break;
  }
  if (stats) *stats = local;
  return cur;
}

}  // namespace brunnel
