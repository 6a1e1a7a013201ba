#include "planelab/json_io.hpp"
#include "planelab/svg.hpp"

#include <doctest.h>

using namespace planelab;

TEST_CASE("point and line JSON round trips") {
  Json p = Json::array({0.5, -1.25});
  auto v = json_to_point(p);
  CHECK(v.x == 0.5);
  CHECK(v.y == -1.25);

  auto pe = json_to_point_exact(Json::array({"1/3", "0.2"}));
  CHECK(pe.x == Rational(1, 3));
  CHECK(pe.y == Rational(1, 5));

  Json lj{{"a", "1"}, {"b", "-2/3"}, {"c", 0.5}};
  auto l = json_to_line_exact(lj);
  // Canonical: integer coefficients, gcd 1, positive leading.
  CHECK(l.a == Rational(6));
  CHECK(l.b == Rational(-4));
  CHECK(l.c == Rational(3));
}

TEST_CASE("motion and vertices JSON") {
  Json mj{{"theta", 0.5}, {"tx", 1.0}, {"ty", -2.0}};
  auto m = json_to_motion(mj);
  CHECK(m.theta == 0.5);
  Json back = motion_to_json(m);
  CHECK(back["theta"] == 0.5);

  std::vector<geom::Vec2> poly{{0, 0}, {1, 0}, {0.5, 2}};
  Json vj = vertices_to_json(poly);
  auto poly2 = json_to_vertices(vj);
  REQUIRE(poly2.size() == 3);
  CHECK(poly2[2].y == 2.0);
}

TEST_CASE("json reports are byte-stable") {
  Json a{{"x", 0.1}, {"y", 1234567.25}, {"s", "t"}};
  Json b{{"x", 0.1}, {"y", 1234567.25}, {"s", "t"}};
  CHECK(a.dump() == b.dump());
}

TEST_CASE("svg output is well-formed and bounded") {
  SvgCanvas svg;
  svg.polygon({{0, 0}, {2, 0}, {1, 1.5}}, "#eeeeee", "#222222", 0.02);
  svg.circle({0.5, 0.5}, 0.25);
  svg.segment({-1, 0}, {3, 0.5});
  svg.line(1, -1, 0.25);
  std::string s = svg.render();
  CHECK(s.rfind("<?xml", 0) == 0);
  CHECK(s.find("viewBox=") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
  // Every opened tag is self-closed.
  size_t opens = 0, closes = 0;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '<' && s[i + 1] != '/' && s[i + 1] != '?') ++opens;
    if (s[i] == '/' && s[i + 1] == '>') ++closes;
  }
  CHECK(opens == closes + 1);  // <svg> is the only non-self-closing element
}
