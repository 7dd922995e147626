#pragma once

#include "brunnel/diagram.hpp"
#include "json.hpp"

namespace brunnel {

// Schema "brunnel.diagram/1": crossing signs, signed Gauss code per
// component, arc count and the PD text.
nlohmann::json diagram_to_json(const LinkDiagram& d);
// Reads the signs and gauss fields; checks planarity.
LinkDiagram diagram_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);

}  // namespace brunnel
