#include <algorithm>
#include <deque>

#include "brunnel/errors.hpp"
#include "brunnel/jsj.hpp"

namespace brunnel {

namespace {

class Search {
 public:
  Search(const JsjTree& t, const AutomorphismLimits& limits) : t_(t), limits_(limits) {
    const int n = t.vertex_count();
    image_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), 0);
    parent_.assign(static_cast<std::size_t>(n), -1);
    // Breadth-first order from vertex 0; each later vertex has its parent
    // placed earlier, so its image must be a neighbor of the parent's image.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order_.push_back(v);
      for (int w : t.adjacency()[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        parent_[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }

  std::vector<Permutation> run() {
    extend(0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  bool compatible(int v, int w) const { return t_.label(v) == t_.label(w) && t_.degree(v) == t_.degree(w); }

  void extend(std::size_t k) {
    if (k == order_.size()) {
      if (static_cast<long>(found_.size()) >= limits_.max_automorphisms) {
        throw PreconditionError("automorphism count exceeds " + std::to_string(limits_.max_automorphisms));
      }
      found_.push_back(image_);
      return;
    }
    const int v = order_[k];
    const int p = parent_[static_cast<std::size_t>(v)];
    std::vector<int> candidates;
    if (p < 0) {
      for (int w = 0; w < t_.vertex_count(); ++w) candidates.push_back(w);
    } else {
      candidates = t_.adjacency()[static_cast<std::size_t>(image_[static_cast<std::size_t>(p)])];
    }
    for (int w : candidates) {
      if (used_[static_cast<std::size_t>(w)] || !compatible(v, w)) continue;
      image_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = 1;
      extend(k + 1);
      used_[static_cast<std::size_t>(w)] = 0;
      image_[static_cast<std::size_t>(v)] = -1;
    }
  }

  const JsjTree& t_;
  AutomorphismLimits limits_;
  std::vector<int> order_;
  std::vector<int> parent_;
  Permutation image_;
  std::vector<char> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> automorphisms(const JsjTree& t, const AutomorphismLimits& limits) {
  if (t.vertex_count() > limits.max_vertices) {
    throw PreconditionError("tree has " + std::to_string(t.vertex_count()) + " vertices, limit is " +
                            std::to_string(limits.max_vertices));
  }
  return Search(t, limits).run();
}

}  // namespace brunnel
