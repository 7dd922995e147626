#include "brunnel/satellite.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "brunnel/errors.hpp"

namespace brunnel {

namespace {

enum Copy { kLeft = 0, kRight = 1 };

// Blackboard 2-cable of component c. Both copies keep the orientation of c
// here; the pattern builders traverse the right copy backwards, which is
// already folded into the signs.
struct Cable {
  std::vector<int> signs;
  // Visits of the other components, indexed like the input.
  std::vector<std::vector<Visit>> others;
  // Per visit of c, the visits of each copy that replace it.
  std::vector<std::vector<Visit>> left;
  std::vector<std::vector<Visit>> right;
};

LinkDiagram add_curls(const LinkDiagram& d, int c) {
  const int w = d.self_writhe(c);
  if (w == 0) return d;
  std::vector<int> signs = d.signs();
  auto comps = d.components();
  const int s = w > 0 ? -1 : 1;
  for (int i = 0; i < std::abs(w); ++i) {
    int x = static_cast<int>(signs.size());
    signs.push_back(s);
    comps[static_cast<std::size_t>(c)].push_back(Visit{x, true});
    comps[static_cast<std::size_t>(c)].push_back(Visit{x, false});
  }
  return LinkDiagram(std::move(signs), std::move(comps));
}

Cable make_cable(const LinkDiagram& d, int c) {
  Cable cab;
  const int n = d.crossing_count();
  // Per crossing: single id, or ids per copy, or ids per (over copy, under copy).
  std::vector<int> single(static_cast<std::size_t>(n), -1);
  std::vector<std::array<int, 2>> mixed(static_cast<std::size_t>(n), {-1, -1});
  std::vector<std::array<std::array<int, 2>, 2>> self(static_cast<std::size_t>(n));
  auto fresh = [&](int sign) {
    cab.signs.push_back(sign);
    return static_cast<int>(cab.signs.size()) - 1;
  };
  for (int x = 0; x < n; ++x) {
    const bool oc = d.over_visit(x).component == c;
    const bool uc = d.under_visit(x).component == c;
    const int s = d.sign(x);
    if (!oc && !uc) {
      single[static_cast<std::size_t>(x)] = fresh(s);
    } else if (oc != uc) {
      mixed[static_cast<std::size_t>(x)][kLeft] = fresh(s);
      mixed[static_cast<std::size_t>(x)][kRight] = fresh(-s);
    } else {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) self[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = fresh(a == b ? s : -s);
      }
    }
  }
  auto copies_in_order = [](bool left_first) {
    return left_first ? std::array<int, 2>{kLeft, kRight} : std::array<int, 2>{kRight, kLeft};
  };
  for (int k = 0; k < d.component_count(); ++k) {
    if (k == c) {
      cab.others.emplace_back();
      continue;
    }
    std::vector<Visit> seq;
    for (const auto& v : d.component(k)) {
      const auto xs = static_cast<std::size_t>(v.crossing);
      if (single[xs] >= 0) {
        seq.push_back(Visit{single[xs], v.over});
        continue;
      }
      const bool positive = d.sign(v.crossing) > 0;
      // Crossing the cable of c: under it, a positive crossing meets the
      // right copy first; over it, the left copy first.
      bool left_first = v.over ? positive : !positive;
      for (int cp : copies_in_order(left_first)) seq.push_back(Visit{mixed[xs][static_cast<std::size_t>(cp)], v.over});
    }
    cab.others.push_back(std::move(seq));
  }
  for (const auto& v : d.component(c)) {
    const auto xs = static_cast<std::size_t>(v.crossing);
    const bool positive = d.sign(v.crossing) > 0;
    std::vector<Visit> l, r;
    if (mixed[xs][0] >= 0) {
      l.push_back(Visit{mixed[xs][kLeft], v.over});
      r.push_back(Visit{mixed[xs][kRight], v.over});
    } else if (v.over) {
      // Over pass: meets the under copies left first when positive.
      for (int b : copies_in_order(positive)) {
        l.push_back(Visit{self[xs][kLeft][static_cast<std::size_t>(b)], true});
        r.push_back(Visit{self[xs][kRight][static_cast<std::size_t>(b)], true});
      }
    } else {
      // Under pass: meets the over copies right first when positive.
      for (int a : copies_in_order(!positive)) {
        l.push_back(Visit{self[xs][static_cast<std::size_t>(a)][kLeft], false});
        r.push_back(Visit{self[xs][static_cast<std::size_t>(a)][kRight], false});
      }
    }
    cab.left.push_back(std::move(l));
    cab.right.push_back(std::move(r));
  }
  return cab;
}

std::vector<Visit> flatten(const std::vector<std::vector<Visit>>& parts, std::size_t from, std::size_t to) {
  std::vector<Visit> out;
  for (std::size_t i = from; i < to; ++i) out.insert(out.end(), parts[i].begin(), parts[i].end());
  return out;
}

std::vector<Visit> reversed(std::vector<Visit> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

void check_component(const LinkDiagram& d, int c) {
  if (c < 0 || c >= d.component_count()) {
    throw PreconditionError("component index " + std::to_string(c) + " out of range");
  }
}

// A clasp between the hook formed by the ends of a pair of strands (A) and
// the hook formed by their starts (B). Returns the two crossing ids; A
// meets them as c1, c2 and B as c2, c1.
struct Clasp {
  int c1;
  int c2;
  bool a_over_first;  // A is over at c1 (and under at c2)
};

Clasp make_clasp(std::vector<int>& signs, int sign) {
  Clasp k{static_cast<int>(signs.size()), static_cast<int>(signs.size()) + 1, sign > 0};
  signs.push_back(sign);
  signs.push_back(sign);
  return k;
}

std::vector<Visit> hook_a(const Clasp& k) { return {Visit{k.c1, k.a_over_first}, Visit{k.c2, !k.a_over_first}}; }
std::vector<Visit> hook_b(const Clasp& k) { return {Visit{k.c2, k.a_over_first}, Visit{k.c1, !k.a_over_first}}; }

std::vector<Visit> concat(std::initializer_list<std::vector<Visit>> parts) {
  std::vector<Visit> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

LinkDiagram bing_double(const LinkDiagram& d_in, int c) {
  check_component(d_in, c);
  const std::size_t half = d_in.component(c).size() / 2;
  const LinkDiagram d = add_curls(d_in, c);
  Cable cab = make_cable(d, c);
  const std::size_t m = cab.left.size();
  Clasp p = make_clasp(cab.signs, 1);
  Clasp q = make_clasp(cab.signs, -1);
  std::vector<Visit> l1 = flatten(cab.left, 0, half), l2 = flatten(cab.left, half, m);
  std::vector<Visit> r1 = flatten(cab.right, 0, half), r2 = flatten(cab.right, half, m);
  std::vector<Visit> b1 = concat({l1, hook_a(q), reversed(r1), hook_b(p)});
  std::vector<Visit> b2 = concat({l2, hook_a(p), reversed(r2), hook_b(q)});
  std::vector<std::vector<Visit>> comps;
  for (int k = 0; k < d.component_count(); ++k) {
    if (k == c) {
      comps.push_back(std::move(b1));
      comps.push_back(std::move(b2));
    } else {
      comps.push_back(std::move(cab.others[static_cast<std::size_t>(k)]));
    }
  }
  return LinkDiagram(std::move(cab.signs), std::move(comps));
}

LinkDiagram iterated_bing_double(const LinkDiagram& d, int n) {
  if (n < 0) throw PreconditionError("negative iteration count");
  if (n > 0 && d.component_count() == 0) throw PreconditionError("empty diagram");
  LinkDiagram cur = d;
  for (int i = 0; i < n; ++i) cur = bing_double(cur, 0);
  return cur;
}

LinkDiagram whitehead_double(const LinkDiagram& d_in, int c, int sign) {
  check_component(d_in, c);
  if (sign != 1 && sign != -1) throw PreconditionError("clasp sign must be +1 or -1");
  const LinkDiagram d = add_curls(d_in, c);
  Cable cab = make_cable(d, c);
  const std::size_t m = cab.left.size();
  Clasp k = make_clasp(cab.signs, sign);
  std::vector<Visit> w = concat({flatten(cab.left, 0, m), hook_a(k), reversed(flatten(cab.right, 0, m)), hook_b(k)});
  std::vector<std::vector<Visit>> comps;
  for (int j = 0; j < d.component_count(); ++j) {
    comps.push_back(j == c ? w : std::move(cab.others[static_cast<std::size_t>(j)]));
  }
  return LinkDiagram(std::move(cab.signs), std::move(comps));
}

LinkDiagram apply_pattern(const LinkDiagram& d, int c, const DoublingPattern& p) {
  if (p.framing != 0) throw UnsupportedError("only 0-framed doubling is supported");
  switch (p.kind) {
    case PatternKind::Bing:
      return bing_double(d, c);
    case PatternKind::WhiteheadPositive:
      return whitehead_double(d, c, 1);
    case PatternKind::WhiteheadNegative:
      return whitehead_double(d, c, -1);
  }
  throw PreconditionError("unknown pattern");
}

namespace {

int cable_crossings(const LinkDiagram& d, int c) {
  check_component(d, c);
  int other = 0, mixed = 0, self = 0;
  for (int x = 0; x < d.crossing_count(); ++x) {
    bool oc = d.over_visit(x).component == c;
    bool uc = d.under_visit(x).component == c;
    if (oc && uc) {
      ++self;
    } else if (oc || uc) {
      ++mixed;
    } else {
      ++other;
    }
  }
  return other + 2 * mixed + 4 * (self + std::abs(d.self_writhe(c)));
}

}  // namespace

int bing_double_crossings(const LinkDiagram& d, int c) { return cable_crossings(d, c) + 4; }
int whitehead_double_crossings(const LinkDiagram& d, int c) { return cable_crossings(d, c) + 2; }

}  // namespace brunnel
