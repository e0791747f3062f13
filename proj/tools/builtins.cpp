#include "builtins.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "kcheeger/disc_polygon.hpp"
#include "kcheeger/error.hpp"
#include "polygon_json.hpp"

namespace kcheeger::cli {

ConvexPolygon resolve_body(const std::string& name, int m) {
  if (name == "disc") return regular_polygon(m, 1.0, 0.0);
  if (name == "square") {
    const Point2 corners[] = {{0.5, 0.5}, {-0.5, 0.5}, {-0.5, -0.5}, {0.5, -0.5}};
    return make_polygon(corners);
  }
  if (name.rfind("pgon:", 0) == 0) {
    int n = 0;
    const char* first = name.data() + 5;
    const char* last = name.data() + name.size();
    auto [p, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || p != last)
      throw Error(ErrorCode::bad_parameter, "bad polygon order in \"" + name + "\"");
    return disc::circumscribed_polygon(n);
  }
  std::ifstream in(name);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open \"" + name + "\"");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_polygon_json(text.str());
}

}  // namespace kcheeger::cli
