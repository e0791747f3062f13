#include "polygon_json.hpp"

#include <vector>

#include "kcheeger/error.hpp"

namespace kcheeger::cli {

ConvexPolygon parse_polygon_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorCode::parse_error, "expected an object with a \"vertices\" array");

  std::vector<Point2> pts;
  pts.reserve(doc["vertices"].size());
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw Error(ErrorCode::parse_error, "each vertex must be a pair of numbers");
    pts.push_back(Point2{v[0].get<double>(), v[1].get<double>()});
  }
  return make_polygon(pts);
}

nlohmann::ordered_json polygon_to_json(const ConvexPolygon& p) {
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const Point2& v : p.vertices())
    verts.push_back(nlohmann::ordered_json::array({v.x, v.y}));
  return nlohmann::ordered_json{{"vertices", std::move(verts)}};
}

}  // namespace kcheeger::cli
