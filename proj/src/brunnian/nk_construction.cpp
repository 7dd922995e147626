#include <algorithm>

#include "brunnel/errors.hpp"
#include "brunnel/nk.hpp"
#include "brunnel/satellite.hpp"
#include "subsets.hpp"

namespace brunnel {

std::string color_set_name(const std::vector<int>& colors) {
  std::string s;
  for (int c : colors) {
    if (!s.empty()) s += ' ';
    s += "C" + std::to_string(c + 1);
  }
  return s.empty() ? "(none)" : s;
}

namespace {

SurfaceLinkDescriptor without_boundary(const SurfaceLinkDescriptor& s) {
  std::vector<HistoryStep> h = s.history();
  for (auto& step : h) step.boundary.reset();
  return SurfaceLinkDescriptor::replay(h);
}

bool has(const std::vector<int>& set, int c) { return std::binary_search(set.begin(), set.end(), c); }

// Tracks which current component holds each (copy, color) piece while
// bands merge them.
class MergeTracker {
 public:
  explicit MergeTracker(const std::vector<std::vector<int>>& colors) {
    for (std::size_t i = 0; i < colors.size(); ++i) {
      for (int c : colors[i]) slots_.push_back({{static_cast<int>(i), c}});
    }
  }
  int index_of(int copy, int color) const {
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      for (auto [i, c] : slots_[s]) {
        if (i == copy && c == color) return static_cast<int>(s);
      }
    }
    throw Error("band endpoint not found");
  }
  void merge(int a, int b) {
    const auto lo = static_cast<std::size_t>(std::min(a, b)), hi = static_cast<std::size_t>(std::max(a, b));
    slots_[lo].insert(slots_[lo].end(), slots_[hi].begin(), slots_[hi].end());
    slots_.erase(slots_.begin() + static_cast<long>(hi));
  }
  std::vector<int> colors() const {
    std::vector<int> out;
    for (const auto& s : slots_) out.push_back(s.front().second);
    return out;
  }

 private:
  std::vector<std::vector<std::pair<int, int>>> slots_;
};

}  // namespace

NkConstruction generate_nk(int n, int k, const SurfaceLinkDescriptor& base) {
  if (n < 2) throw PreconditionError("n must be at least 2, got " + std::to_string(n));
  if (k < 1 || k > n) throw PreconditionError("k must satisfy 1 <= k <= n, got " + std::to_string(k));
  if (n > 12) throw PreconditionError("n is limited to 12");
  if (base.component_count() != 1 || !base.component(0).is_disk()) {
    throw PreconditionError("the base must be a single disk");
  }
  if (!base.component(0).knotted_boundary) throw PreconditionError("the base disk must have a nontrivial boundary knot");

  NkConstruction c;
  c.n = n;
  c.k = k;
  c.base = base;
  c.colors = detail::k_subsets(n, k);
  const int copies = static_cast<int>(c.colors.size());
  for (int i = 0; i < copies; ++i) {
    for (int color : c.colors[static_cast<std::size_t>(i)]) {
      for (int s = i + 1; s < copies; ++s) {
        if (has(c.colors[static_cast<std::size_t>(s)], color)) {
          c.bands.push_back(NkBand{i, color, s});
          break;
        }
      }
    }
  }

  const SurfaceLinkDescriptor copy = iterate_bing_double_first(without_boundary(base), k - 1);
  SurfaceLinkDescriptor m = copy;
  for (int i = 1; i < copies; ++i) m = adjoin(m, copy);
  MergeTracker tracker(c.colors);
  for (const auto& b : c.bands) {
    int a = tracker.index_of(b.copy, b.color);
    int t = tracker.index_of(b.target, b.color);
    m = band_join(m, a, t);
    tracker.merge(a, t);
  }
  c.merged = m;
  c.merged_colors = tracker.colors();
  if (m.component_count() != n) throw Error("merged construction does not have n components");
  return c;
}

LinkDiagram nk_boundary(const NkConstruction& c, const LinkDiagram& knot, int max_crossings) {
  if (knot.component_count() != 1) throw PreconditionError("nk boundary needs a knot diagram");
  const LinkDiagram copy = iterated_bing_double(knot, c.k - 1);
  const long total = static_cast<long>(copy.crossing_count()) * static_cast<long>(c.colors.size());
  if (total > max_crossings) {
    throw PreconditionError("boundary diagram would have at least " + std::to_string(total) + " crossings, limit " +
                            std::to_string(max_crossings));
  }
  LinkDiagram d = copy;
  for (std::size_t i = 1; i < c.colors.size(); ++i) d = split_union(d, copy);
  MergeTracker tracker(c.colors);
  for (const auto& b : c.bands) {
    int a = tracker.index_of(b.copy, b.color);
    int t = tracker.index_of(b.target, b.color);
    d = band_sum(d, a, t);
    tracker.merge(a, t);
    if (d.crossing_count() > max_crossings) {
      throw PreconditionError("boundary diagram exceeded " + std::to_string(max_crossings) + " crossings");
    }
  }
  return d;
}

}  // namespace brunnel
