#pragma once

// (n,k)-Brunnian disk links from copies of iterated Bing doubles joined by
// bands, and the symbolic sublink-collapse checker.

#include <optional>
#include <string>
#include <vector>

#include "brunnel/surface.hpp"
#include "json.hpp"

namespace brunnel {

struct NkBand {
  int copy = 0;
  int color = 0;
  int target = 0;

  friend bool operator==(const NkBand&, const NkBand&) = default;
};

struct NkConstruction {
  int n = 0;
  int k = 0;
  SurfaceLinkDescriptor base;
  // colors[i] is the sorted k-subset carried by copy i; component m of the
  // copy has color colors[i][m]. Copies are in lexicographic subset order.
  std::vector<std::vector<int>> colors;
  std::vector<NkBand> bands;
  // Split union of the copies followed by the bands; one disk per color.
  SurfaceLinkDescriptor merged;
  std::vector<int> merged_colors;
};

// Colors are 0..n-1 (printed C1..Cn). The base must be a single disk with
// a nontrivial boundary knot. The boundary diagram of the base is not
// carried into the copies.
NkConstruction generate_nk(int n, int k, const SurfaceLinkDescriptor& base);

// Colors as "C1 C3".
std::string color_set_name(const std::vector<int>& colors);

enum class NkToken { Unlink, BingDoubleOfBase, ContainsBingDoubleOfBase, Failed };
std::string nk_token_name(NkToken t, int k);

struct NkSubsetResult {
  std::vector<int> kept;
  bool expect_unlink = false;
  NkToken token = NkToken::Failed;
  // The copy colored by exactly the kept colors (exactly k kept).
  std::optional<int> distinguished_copy;
  // A k-subset of the kept colors whose sublink reduces to BD^{k-1}(D)
  // (more than k kept).
  std::vector<int> witness;
  std::vector<std::string> trace;
  bool passed = false;
};

struct NkReport {
  int n = 0;
  int k = 0;
  // Every nonempty proper subset of kept colors, by size then
  // lexicographically.
  std::vector<NkSubsetResult> subsets;
  bool passed = false;
};

// Parallel over subsets; results are identical to check_nk_serial.
NkReport check_nk(const NkConstruction& c);
NkReport check_nk_serial(const NkConstruction& c);

// Boundary link of the construction: copies of BD^{k-1} of the knot,
// placed as a split union and joined by the bands. Throws when the diagram
// would exceed max_crossings.
LinkDiagram nk_boundary(const NkConstruction& c, const LinkDiagram& knot, int max_crossings = 4000);

struct NkPair {
  NkConstruction first;
  NkConstruction second;
  std::vector<std::string> ledger;
};

// Same colors and bands on two bases that share their boundary.
NkPair pair_nk(int n, int k, const SurfaceLinkDescriptor& base1, const SurfaceLinkDescriptor& base2);

nlohmann::json nk_to_json(const NkConstruction& c);
nlohmann::json nk_report_to_json(const NkReport& r);
nlohmann::json nk_pair_to_json(const NkPair& p);

}  // namespace brunnel
