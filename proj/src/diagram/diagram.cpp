#include "brunnel/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "brunnel/errors.hpp"

namespace brunnel {

namespace {

enum Role { kUnderIn, kOverOut, kUnderOut, kOverIn };

// Role of the arc end at ccw slot s of a crossing with the given sign.
Role role_at(int sign, int slot) {
  static const Role pos[4] = {kUnderIn, kOverOut, kUnderOut, kOverIn};
  static const Role neg[4] = {kUnderIn, kOverIn, kUnderOut, kOverOut};
  return sign > 0 ? pos[slot] : neg[slot];
}

int slot_of(int sign, Role r) {
  for (int s = 0; s < 4; ++s) {
    if (role_at(sign, s) == r) return s;
  }
  return -1;
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<int> signs, std::vector<std::vector<Visit>> components)
    : signs_(std::move(signs)), components_(std::move(components)) {
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] != 1 && signs_[i] != -1) {
      throw ValidationError("crossing " + std::to_string(i) + " has sign " + std::to_string(signs_[i]));
    }
  }
  index_visits();
}

void LinkDiagram::index_visits() {
  over_.assign(signs_.size(), VisitRef{});
  under_.assign(signs_.size(), VisitRef{});
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    for (std::size_t i = 0; i < comp.size(); ++i) {
      int x = comp[i].crossing;
      if (x < 0 || x >= crossing_count()) {
        throw ValidationError("visit to unknown crossing " + std::to_string(x));
      }
      VisitRef& slot = comp[i].over ? over_[static_cast<std::size_t>(x)] : under_[static_cast<std::size_t>(x)];
      if (slot.component >= 0) {
        throw ValidationError("crossing " + std::to_string(x) + " visited twice " +
                              (comp[i].over ? "over" : "under"));
      }
      slot = VisitRef{static_cast<int>(c), static_cast<int>(i)};
    }
  }
  for (int x = 0; x < crossing_count(); ++x) {
    if (over_[static_cast<std::size_t>(x)].component < 0 || under_[static_cast<std::size_t>(x)].component < 0) {
      throw ValidationError("crossing " + std::to_string(x) + " is not visited both over and under");
    }
  }
}

LinkDiagram LinkDiagram::unknot() { return unlink(1); }

LinkDiagram LinkDiagram::unlink(int n) {
  if (n < 0) throw PreconditionError("negative component count");
  return LinkDiagram({}, std::vector<std::vector<Visit>>(static_cast<std::size_t>(n)));
}

int LinkDiagram::writhe() const { return std::accumulate(signs_.begin(), signs_.end(), 0); }

int LinkDiagram::self_writhe(int c) const {
  if (c < 0 || c >= component_count()) throw PreconditionError("component index out of range");
  int w = 0;
  for (int x = 0; x < crossing_count(); ++x) {
    if (over_[static_cast<std::size_t>(x)].component == c && under_[static_cast<std::size_t>(x)].component == c) {
      w += signs_[static_cast<std::size_t>(x)];
    }
  }
  return w;
}

std::vector<Face> LinkDiagram::faces() const {
  // Global edge ids: offset[c] + t.
  std::vector<int> offset(components_.size() + 1, 0);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    offset[c + 1] = offset[c] + static_cast<int>(components_[c].size());
  }
  const int edges = offset.back();
  auto edge_id = [&](int c, int t) {
    int n = static_cast<int>(components_[static_cast<std::size_t>(c)].size());
    return offset[static_cast<std::size_t>(c)] + ((t % n) + n) % n;
  };
  std::vector<EdgeRef> edge_ref(static_cast<std::size_t>(edges));
  for (std::size_t c = 0; c < components_.size(); ++c) {
    for (int t = 0; t < static_cast<int>(components_[c].size()); ++t) {
      edge_ref[static_cast<std::size_t>(offset[c] + t)] = EdgeRef{static_cast<int>(c), t};
    }
  }
  // Slot of the edge end at a visit: the incoming end at visit t, the
  // outgoing end at visit t (which starts edge t+1).
  auto in_slot = [&](int c, int t) {
    const Visit& v = components_[static_cast<std::size_t>(c)][static_cast<std::size_t>(t)];
    return slot_of(signs_[static_cast<std::size_t>(v.crossing)], v.over ? kOverIn : kUnderIn);
  };
  auto out_slot = [&](int c, int t) {
    const Visit& v = components_[static_cast<std::size_t>(c)][static_cast<std::size_t>(t)];
    return slot_of(signs_[static_cast<std::size_t>(v.crossing)], v.over ? kOverOut : kUnderOut);
  };

  // Dart = 2*edge + along.
  std::vector<char> seen(static_cast<std::size_t>(2 * edges), 0);
  std::vector<Face> out;
  for (int start = 0; start < 2 * edges; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Face face;
    int dart = start;
    while (!seen[static_cast<std::size_t>(dart)]) {
      seen[static_cast<std::size_t>(dart)] = 1;
      const EdgeRef e = edge_ref[static_cast<std::size_t>(dart / 2)];
      const bool along = dart % 2 == 1;
      face.sides.push_back(FaceSide{e, along});
      const int n = static_cast<int>(components_[static_cast<std::size_t>(e.component)].size());
      // Arrival point of this dart.
      int vc = e.component;
      int vt = along ? e.index : (e.index - 1 + n) % n;
      int slot = along ? in_slot(vc, vt) : out_slot(vc, vt);
      int x = components_[static_cast<std::size_t>(vc)][static_cast<std::size_t>(vt)].crossing;
      int next_slot = (slot + 1) % 4;
      Role r = role_at(signs_[static_cast<std::size_t>(x)], next_slot);
      VisitRef at = (r == kOverIn || r == kOverOut) ? over_[static_cast<std::size_t>(x)] : under_[static_cast<std::size_t>(x)];
      if (r == kOverOut || r == kUnderOut) {
        dart = 2 * edge_id(at.component, at.index + 1) + 1;
      } else {
        dart = 2 * edge_id(at.component, at.index);
      }
    }
    out.push_back(std::move(face));
  }
  return out;
}

std::vector<int> LinkDiagram::pieces(int* piece_count) const {
  const std::size_t nc = components_.size();
  std::vector<int> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (int x = 0; x < crossing_count(); ++x) {
    int a = find(over_[static_cast<std::size_t>(x)].component);
    int b = find(under_[static_cast<std::size_t>(x)].component);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> label(nc, -1);
  std::vector<int> root_label(nc, -1);
  int count = 0;
  for (std::size_t c = 0; c < nc; ++c) {
    if (components_[c].empty()) continue;
    int r = find(static_cast<int>(c));
    if (root_label[static_cast<std::size_t>(r)] < 0) root_label[static_cast<std::size_t>(r)] = count++;
    label[c] = root_label[static_cast<std::size_t>(r)];
  }
  if (piece_count) *piece_count = count;
  return label;
}

bool LinkDiagram::is_planar() const {
  int piece_count = 0;
  pieces(&piece_count);
  const long f = static_cast<long>(faces().size());
  // Each connected piece is a 4-valent sphere graph: V - E + F = 2.
  return f == static_cast<long>(crossing_count()) + 2L * piece_count;
}

void LinkDiagram::validate_planar() const {
  if (!is_planar()) throw ValidationError("Gauss code is not realizable as a planar diagram");
}

LinkDiagram LinkDiagram::mirror() const {
  std::vector<int> s = signs_;
  for (auto& v : s) v = -v;
  auto comps = components_;
  for (auto& comp : comps) {
    for (auto& v : comp) v.over = !v.over;
  }
  return LinkDiagram(std::move(s), std::move(comps));
}

LinkDiagram LinkDiagram::reversed(int c) const {
  if (c < 0 || c >= component_count()) throw PreconditionError("component index out of range");
  auto comps = components_;
  std::reverse(comps[static_cast<std::size_t>(c)].begin(), comps[static_cast<std::size_t>(c)].end());
  std::vector<int> s = signs_;
  for (int x = 0; x < crossing_count(); ++x) {
    bool a = over_[static_cast<std::size_t>(x)].component == c;
    bool b = under_[static_cast<std::size_t>(x)].component == c;
    if (a != b) s[static_cast<std::size_t>(x)] = -s[static_cast<std::size_t>(x)];
  }
  return LinkDiagram(std::move(s), std::move(comps));
}

LinkDiagram compact(const std::vector<int>& signs, const std::vector<std::vector<Visit>>& components) {
  std::vector<int> count(signs.size(), 0);
  for (const auto& comp : components) {
    for (const auto& v : comp) {
      if (v.crossing < 0 || v.crossing >= static_cast<int>(signs.size())) {
        throw ValidationError("visit to unknown crossing " + std::to_string(v.crossing));
      }
      ++count[static_cast<std::size_t>(v.crossing)];
    }
  }
  std::vector<int> remap(signs.size(), -1);
  std::vector<int> new_signs;
  for (std::size_t x = 0; x < signs.size(); ++x) {
    if (count[x] == 0) continue;
    remap[x] = static_cast<int>(new_signs.size());
    new_signs.push_back(signs[x]);
  }
  auto comps = components;
  for (auto& comp : comps) {
    for (auto& v : comp) v.crossing = remap[static_cast<std::size_t>(v.crossing)];
  }
  return LinkDiagram(std::move(new_signs), std::move(comps));
}

IntMatrix linking_matrix(const LinkDiagram& d) {
  const std::size_t n = static_cast<std::size_t>(d.component_count());
  IntMatrix m(n, std::vector<long>(n, 0));
  for (int x = 0; x < d.crossing_count(); ++x) {
    auto a = static_cast<std::size_t>(d.over_visit(x).component);
    auto b = static_cast<std::size_t>(d.under_visit(x).component);
    if (a == b) {
      m[a][a] += d.sign(x);
    } else {
      m[a][b] += d.sign(x);
      m[b][a] += d.sign(x);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] % 2 != 0) throw ValidationError("odd number of crossings between two components");
      m[i][j] /= 2;
    }
  }
  return m;
}

LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& keep) {
  if (keep.empty()) throw PreconditionError("sublink needs at least one component");
  std::vector<int> k = keep;
  std::sort(k.begin(), k.end());
  if (std::adjacent_find(k.begin(), k.end()) != k.end()) throw PreconditionError("duplicate component in sublink");
  std::vector<char> kept(static_cast<std::size_t>(d.component_count()), 0);
  for (int c : k) {
    if (c < 0 || c >= d.component_count()) throw PreconditionError("component index out of range");
    kept[static_cast<std::size_t>(c)] = 1;
  }
  std::vector<std::vector<Visit>> comps;
  for (int c : k) {
    std::vector<Visit> seq;
    for (const auto& v : d.component(c)) {
      int other = v.over ? d.under_visit(v.crossing).component : d.over_visit(v.crossing).component;
      if (kept[static_cast<std::size_t>(other)]) seq.push_back(v);
    }
    comps.push_back(std::move(seq));
  }
  return compact(d.signs(), comps);
}

LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<int> signs = a.signs();
  signs.insert(signs.end(), b.signs().begin(), b.signs().end());
  auto comps = a.components();
  for (auto comp : b.components()) {
    for (auto& v : comp) v.crossing += a.crossing_count();
    comps.push_back(std::move(comp));
  }
  return LinkDiagram(std::move(signs), std::move(comps));
}

std::vector<std::vector<int>> gauss_code(const LinkDiagram& d) {
  std::vector<std::vector<int>> out;
  for (const auto& comp : d.components()) {
    std::vector<int> seq;
    for (const auto& v : comp) seq.push_back(v.over ? v.crossing + 1 : -(v.crossing + 1));
    out.push_back(std::move(seq));
  }
  return out;
}

LinkDiagram from_gauss_code(const std::vector<std::vector<int>>& code, const std::vector<int>& signs) {
  std::vector<std::vector<Visit>> comps;
  for (const auto& seq : code) {
    std::vector<Visit> comp;
    for (int e : seq) {
      if (e == 0) throw ValidationError("Gauss code entry 0");
      comp.push_back(Visit{std::abs(e) - 1, e > 0});
    }
    comps.push_back(std::move(comp));
  }
  return LinkDiagram(signs, std::move(comps));
}

}  // namespace brunnel
