#include "brunnel/errors.hpp"
#include "brunnel/nk.hpp"

namespace brunnel {

namespace {

std::string base_name(const SurfaceLinkDescriptor& s) {
  return s.history().empty() ? std::string("base") : s.history().front().name;
}

std::string bd_name(int k, const std::string& d) {
  if (k == 1) return d;
  if (k == 2) return "BD(" + d + ")";
  return "BD^" + std::to_string(k - 1) + "(" + d + ")";
}

}  // namespace

NkPair pair_nk(int n, int k, const SurfaceLinkDescriptor& base1, const SurfaceLinkDescriptor& base2) {
  if (!base1.boundary() || !base2.boundary() || !(*base1.boundary() == *base2.boundary())) {
    throw PreconditionError("mismatched boundary: both bases need the same boundary diagram");
  }
  NkPair p{generate_nk(n, k, base1), generate_nk(n, k, base2), {}};
  if (p.first.colors != p.second.colors || p.first.bands != p.second.bands) {
    throw Error("the two constructions do not share colors and bands");
  }
  const std::string a = base_name(base1), b = base_name(base2);
  p.ledger.push_back("same colors and " + std::to_string(p.first.bands.size()) + " bands on both bases");
  p.ledger.push_back("a topological isotopy " + a + " ~ " + b + " rel boundary applied in every copy gives a topological isotopy of the two links");
  p.ledger.push_back("each k-sublink with k = " + std::to_string(k) + " reduces to " + bd_name(k, a) + " resp. " +
                     bd_name(k, b) + ", so smooth distinctness of those sublinks separates the two links");
  if (k == 1) {
    p.ledger.push_back("k = 1: each copy is a single disk and the link is a band-joined split union of copies of the base");
  }
  return p;
}

}  // namespace brunnel
