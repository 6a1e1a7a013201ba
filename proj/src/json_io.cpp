#include "planelab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace planelab {

double json_to_double(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.find('/') != std::string::npos)
      return parse_rational(s).convert_to<double>();
    return std::stod(s);
  }
  throw std::invalid_argument("expected number or numeric string, got: " + j.dump());
}

Rational json_to_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) return Rational(j.get<double>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected rational literal, got: " + j.dump());
}

geom::Vec2 json_to_point(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("point must be [x, y], got: " + j.dump());
  return {json_to_double(j[0]), json_to_double(j[1])};
}

geom::Point2<Rational> json_to_point_exact(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("point must be [x, y], got: " + j.dump());
  return {json_to_rational(j[0]), json_to_rational(j[1])};
}

Json point_to_json(const geom::Vec2& p) { return Json::array({p.x, p.y}); }

std::vector<geom::Vec2> json_to_vertices(const Json& j) {
  const Json& arr = j.is_object() ? j.at("vertices") : j;
  if (!arr.is_array()) throw std::invalid_argument("expected a vertex array");
  std::vector<geom::Vec2> out;
  out.reserve(arr.size());
  for (const auto& p : arr) out.push_back(json_to_point(p));
  return out;
}

Json vertices_to_json(const std::vector<geom::Vec2>& v) {
  Json arr = Json::array();
  for (const auto& p : v) arr.push_back(point_to_json(p));
  return Json{{"vertices", arr}};
}

geom::RigidMotion json_to_motion(const Json& j) {
  return {json_to_double(j.at("theta")), json_to_double(j.at("tx")),
          json_to_double(j.at("ty"))};
}

Json motion_to_json(const geom::RigidMotion& m) {
  return Json{{"theta", m.theta}, {"tx", m.tx}, {"ty", m.ty}};
}

geom::Line2<Rational> json_to_line_exact(const Json& j) {
  geom::Line2<Rational> l;
  l.a = json_to_rational(j.at("a"));
  l.b = json_to_rational(j.at("b"));
  l.c = json_to_rational(j.at("c"));
  l.normalize();
  return l;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace planelab
