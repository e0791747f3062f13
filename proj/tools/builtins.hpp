#pragma once

#include <string>

#include "kcheeger/polygon.hpp"

namespace kcheeger::cli {

// resolves "disc" (regular m-gon inscribed in the unit circle), "square"
// (unit area, origin centered), "pgon:<n>" (circumscribed regular n-gon,
// apothem 1), or a path to a polygon JSON file
ConvexPolygon resolve_body(const std::string& name, int m);

}  // namespace kcheeger::cli
