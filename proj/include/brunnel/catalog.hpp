#pragma once

// Named knot and link diagrams used as bases, test corpus and rim-surgery
// knots.

#include <string>
#include <vector>

#include "brunnel/diagram.hpp"

namespace brunnel {

// Accepted names: unknot, trefoil (3_1, right-handed), left-trefoil,
// figure-eight (4_1), 5_1, 5_2, granny, square, hopf, trefoil#N (N-fold
// connected sum of right-handed trefoils, N >= 0), wh+trefoil, wh-trefoil,
// slice-k (the 42-crossing knot of slice_knot_dt()).
LinkDiagram catalog_diagram(const std::string& name);
bool catalog_has(const std::string& name);
std::vector<std::string> catalog_names();

// DT codes of the 42-crossing knot K bounding the two disks D1 and D2, and
// of the 3-component link L whose exterior is the hyperbolic JSJ piece of
// the genus one family.
std::string slice_knot_dt();
std::string jsj_link_dt();

// n-fold connected sum of k with itself; n = 0 gives the unknot.
LinkDiagram connected_sum_power(const LinkDiagram& k, int n);
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b);

}  // namespace brunnel
