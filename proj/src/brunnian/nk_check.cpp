#include <algorithm>

#include "brunnel/nk.hpp"
#include "subsets.hpp"

namespace brunnel {

std::string nk_token_name(NkToken t, int k) {
  const std::string bd = k == 1 ? "D" : (k == 2 ? "BD(D)" : "BD^" + std::to_string(k - 1) + "(D)");
  switch (t) {
    case NkToken::Unlink:
      return "unlink";
    case NkToken::BingDoubleOfBase:
      return bd;
    case NkToken::ContainsBingDoubleOfBase:
      return "contains " + bd;
    case NkToken::Failed:
      return "failed";
  }
  return "failed";
}

namespace {

std::vector<int> lost_colors(const std::vector<int>& copy, const std::vector<int>& kept) {
  std::vector<int> out;
  std::set_difference(copy.begin(), copy.end(), kept.begin(), kept.end(), std::back_inserter(out));
  return out;
}

std::string copy_name(const NkConstruction& c, int i) {
  return "copy " + std::to_string(i + 1) + " {" + color_set_name(c.colors[static_cast<std::size_t>(i)]) + "}";
}

// One copy that lost components: the rest is a proper sublink of
// BD^{k-1}(D), hence trivial disks, and its bands become trivial.
bool collapse(const NkConstruction& c, int i, const std::vector<int>& kept, const char* direction,
              std::vector<std::string>& trace) {
  auto lost = lost_colors(c.colors[static_cast<std::size_t>(i)], kept);
  if (lost.empty()) {
    trace.push_back(copy_name(c, i) + ": keeps all its colors, cannot collapse");
    return false;
  }
  trace.push_back(copy_name(c, i) + ": loses " + color_set_name(lost) + "; collapse " + direction +
                  " to trivial disks with trivial bands");
  return true;
}

NkSubsetResult evaluate(const NkConstruction& c, const std::vector<int>& kept) {
  NkSubsetResult r;
  r.kept = kept;
  const int copies = static_cast<int>(c.colors.size());
  const int size = static_cast<int>(kept.size());
  r.expect_unlink = size < c.k;
  bool ok = true;
  if (size < c.k) {
    for (int i = 0; i < copies; ++i) ok = collapse(c, i, kept, "left to right", r.trace) && ok;
    r.token = ok ? NkToken::Unlink : NkToken::Failed;
    if (ok) r.trace.push_back("all copies collapsed: unlink of " + std::to_string(size) + (size == 1 ? " trivial disk" : " trivial disks"));
  } else if (size == c.k) {
    std::vector<int> full;
    for (int i = 0; i < copies; ++i) {
      if (lost_colors(c.colors[static_cast<std::size_t>(i)], kept).empty()) full.push_back(i);
    }
    if (full.size() != 1) {
      r.trace.push_back(std::to_string(full.size()) + " copies carry every kept color, expected exactly 1");
      r.token = NkToken::Failed;
    } else {
      const int m = full[0];
      r.distinguished_copy = m;
      for (int i = 0; i < m; ++i) ok = collapse(c, i, kept, "rightward", r.trace) && ok;
      for (int i = copies - 1; i > m; --i) ok = collapse(c, i, kept, "leftward", r.trace) && ok;
      r.token = ok ? NkToken::BingDoubleOfBase : NkToken::Failed;
      if (ok) r.trace.push_back(copy_name(c, m) + " remains: " + nk_token_name(r.token, c.k));
    }
  } else {
    std::vector<int> witness(kept.begin(), kept.begin() + c.k);
    NkSubsetResult sub = evaluate(c, witness);
    r.witness = witness;
    r.trace.push_back("witness {" + color_set_name(witness) + "}:");
    for (const auto& line : sub.trace) r.trace.push_back("  " + line);
    r.token = sub.token == NkToken::BingDoubleOfBase ? NkToken::ContainsBingDoubleOfBase : NkToken::Failed;
  }
  r.passed = r.expect_unlink ? r.token == NkToken::Unlink
                             : (r.token == NkToken::BingDoubleOfBase || r.token == NkToken::ContainsBingDoubleOfBase);
  return r;
}

std::vector<std::vector<int>> kept_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int r = 1; r < n; ++r) {
    auto s = detail::k_subsets(n, r);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

NkReport finish(const NkConstruction& c, std::vector<NkSubsetResult> results) {
  NkReport rep;
  rep.n = c.n;
  rep.k = c.k;
  rep.passed = !results.empty();
  for (const auto& r : results) rep.passed = rep.passed && r.passed;
  rep.subsets = std::move(results);
  return rep;
}

}  // namespace

NkReport check_nk_serial(const NkConstruction& c) {
  std::vector<NkSubsetResult> results;
  for (const auto& kept : kept_subsets(c.n)) results.push_back(evaluate(c, kept));
  return finish(c, std::move(results));
}

NkReport check_nk(const NkConstruction& c) {
  const auto subsets = kept_subsets(c.n);
  std::vector<NkSubsetResult> results(subsets.size());
  const long count = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    results[static_cast<std::size_t>(i)] = evaluate(c, subsets[static_cast<std::size_t>(i)]);
  }
  return finish(c, std::move(results));
}

}  // namespace brunnel
