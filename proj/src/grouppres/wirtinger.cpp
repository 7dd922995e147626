#include <algorithm>

#include "brunnel/diagram.hpp"
#include "brunnel/grouppres.hpp"

namespace brunnel {

std::vector<std::vector<int>> wirtinger_arcs(const LinkDiagram& d, int* arc_count) {
  std::vector<std::vector<int>> arcs;
  int next = 0;
  for (const auto& comp : d.components()) {
    const std::size_t m = comp.size();
    std::vector<int> a(m, -1);
    std::size_t first_under = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (!comp[i].over) {
        first_under = i;
        break;
      }
    }
    if (first_under == m) {
      std::fill(a.begin(), a.end(), next);
      ++next;
    } else {
      int cur = -1;
      for (std::size_t k = 1; k <= m; ++k) {
        std::size_t e = (first_under + k) % m;
        std::size_t prev = (e + m - 1) % m;
        if (!comp[prev].over) cur = next++;
        a[e] = cur;
      }
    }
    arcs.push_back(std::move(a));
  }
  if (arc_count) *arc_count = next;
  return arcs;
}

GroupPresentation wirtinger(const LinkDiagram& d) {
  int n = 0;
  auto arcs = wirtinger_arcs(d, &n);
  std::vector<Word> rels;
  for (int x = 0; x < d.crossing_count(); ++x) {
    VisitRef u = d.under_visit(x);
    VisitRef o = d.over_visit(x);
    const auto& ua = arcs[static_cast<std::size_t>(u.component)];
    int a = ua[static_cast<std::size_t>(u.index)] + 1;
    int b = ua[(static_cast<std::size_t>(u.index) + 1) % ua.size()] + 1;
    int g = arcs[static_cast<std::size_t>(o.component)][static_cast<std::size_t>(o.index)] + 1;
    int e = d.sign(x);
    rels.push_back({-e * g, a, e * g, -b});
  }
  return GroupPresentation(n, std::move(rels));
}

}  // namespace brunnel
