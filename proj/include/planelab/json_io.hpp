// Shared JSON encodings. Points are [x, y]; rationals travel as "p/q" or
// decimal strings; plain JSON numbers are read exactly (a double is a dyadic
// rational). All emitters use ordered_json so reports are byte-stable.

#pragma once

#include "planelab/geom.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace planelab {

using Json = nlohmann::ordered_json;

double json_to_double(const Json& j);
Rational json_to_rational(const Json& j);

geom::Vec2 json_to_point(const Json& j);
geom::Point2<Rational> json_to_point_exact(const Json& j);

Json point_to_json(const geom::Vec2& p);

std::vector<geom::Vec2> json_to_vertices(const Json& j);  // {"vertices": [...]}
Json vertices_to_json(const std::vector<geom::Vec2>& v);

geom::RigidMotion json_to_motion(const Json& j);
Json motion_to_json(const geom::RigidMotion& m);

geom::Line2<Rational> json_to_line_exact(const Json& j);
template <class S>
Json line_to_json(const geom::Line2<S>& l) {
  return Json{{"a", ScalarOps<S>::to_double(l.a)},
              {"b", ScalarOps<S>::to_double(l.b)},
              {"c", ScalarOps<S>::to_double(l.c)}};
}

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace planelab
