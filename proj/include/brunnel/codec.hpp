#pragma once

// Dowker-Thistlethwaite codes: parsing, validation, serialization, knot
// reconstruction and the external verification script.

#include <string>
#include <vector>

#include "brunnel/diagram.hpp"

namespace brunnel {

struct DtCode {
  // Entries per component, signed even integers, in the given order.
  std::vector<std::vector<int>> components;
  int crossing_count = 0;

  friend bool operator==(const DtCode&, const DtCode&) = default;
};

// Validates the entries and builds a code. Every entry must be even and
// nonzero, and the absolute values must be exactly {2, 4, ..., 2N}.
DtCode make_dt(std::vector<std::vector<int>> components);

// Grammar: `DT:[(e,...),(e,...)]`, whitespace allowed between tokens.
DtCode parse_dt(const std::string& text);

// Compact form without spaces, e.g. `DT:[(4,6,2)]`.
std::string serialize_dt(const DtCode& code);

// Reconstructs a knot diagram. Label i is visit i-1 of the single
// component; crossing k holds odd label 2k+1. A negative entry means the
// odd-labelled visit passes under. The planar embedding is found with a
// planarity test and its reflection fixed so that the crossing holding
// label 1 has sign +1 when entry 1 is positive and -1 otherwise.
LinkDiagram dt_to_diagram(const DtCode& code);

// DT code of a knot diagram, labels following visit order from visit 0.
DtCode diagram_to_dt(const LinkDiagram& d);

// Script in the hyperbolicity / canonical retriangulation / isometry group
// transcript shape. `label` becomes the variable name.
std::string export_verification_script(const DtCode& code, const std::string& label);

}  // namespace brunnel
