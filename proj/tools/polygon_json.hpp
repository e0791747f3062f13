#pragma once

#include <string>

#include "json.hpp"
#include "kcheeger/polygon.hpp"

namespace kcheeger::cli {

// accepts {"vertices": [[x, y], ...]}; malformed documents raise parse_error,
// degenerate vertex sets raise the geometry errors from make_polygon
ConvexPolygon parse_polygon_json(const std::string& text);

nlohmann::ordered_json polygon_to_json(const ConvexPolygon& p);

}  // namespace kcheeger::cli
