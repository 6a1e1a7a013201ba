#include "planelab/geom.hpp"

#include "planelab/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace planelab;
using namespace planelab::geom;

namespace {

// Brute-force width oracle: directional extent over sampled directions.
double width_oracle(const std::vector<Vec2>& pts, int dirs = 360) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < dirs; ++k) {
    double a = M_PI * k / dirs;
    double lo = 1e300, hi = -1e300;
    for (const auto& p : pts) {
      double v = p.x * std::cos(a) + p.y * std::sin(a);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    best = std::min(best, hi - lo);
  }
  return best;
}

std::vector<Vec2> regular_ngon(int n, double r) {
  std::vector<Vec2> v;
  for (int k = 0; k < n; ++k)
    v.push_back({r * std::cos(2 * M_PI * k / n), r * std::sin(2 * M_PI * k / n)});
  return v;
}

}  // namespace

TEST_CASE("orientation basic examples") {
  Point2<Rational> o{Rational(0), Rational(0)}, e1{Rational(1), Rational(0)},
      e2{Rational(0), Rational(1)};
  CHECK(orientation(o, e1, e2) == Orientation::CCW);
  Point2<Rational> d1{Rational(1), Rational(1)}, d2{Rational(2), Rational(2)};
  CHECK(orientation(o, d1, d2) == Orientation::COLLINEAR);
  // Hand cross product: (q-p) x (r-p) = (0,1) x (1,1) = -1 -> CW.
  CHECK(orientation(o, e2, d1) == Orientation::CW);
}

TEST_CASE("orientation antisymmetry under argument swap") {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    Vec2 p{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    Vec2 q{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    Vec2 r{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    auto o1 = orientation(p, q, r);
    if (o1 == Orientation::COLLINEAR) continue;
    auto o2 = orientation(p, r, q);
    CHECK(o1 != o2);
    CHECK(o2 != Orientation::COLLINEAR);
  }
}

TEST_CASE("adaptive orientation agrees with exact rational orientation") {
  Rng rng(11);
  AdaptivePrecision prec(128);
  for (int i = 0; i < 1000; ++i) {
    // Random rationals with moderate denominators.
    auto rq = [&] { return Rational(static_cast<long>(rng.below(2001)) - 1000, 1 + static_cast<long>(rng.below(97))); };
    Point2<Rational> p{rq(), rq()}, q{rq(), rq()}, r{rq(), rq()};
    // Convert exactly through strings to avoid double rounding.
    auto to_ar = [](const Rational& v) {
      return AdaptiveReal(MpFloat(numerator(v).str()) / MpFloat(denominator(v).str()));
    };
    Point2<AdaptiveReal> ap{to_ar(p.x), to_ar(p.y)}, aq{to_ar(q.x), to_ar(q.y)},
        ar{to_ar(r.x), to_ar(r.y)};
    CHECK(orientation(ap, aq, ar) == orientation(p, q, r));
  }
}

TEST_CASE("line intersection") {
  auto mku = [](double a, double b, double c) {
    Line2<Rational> l;
    l.a = Rational(a);
    l.b = Rational(b);
    l.c = Rational(c);
    l.normalize();
    return l;
  };
  auto x0 = mku(1, 0, 0), y0 = mku(0, 1, 0), x1 = mku(1, 0, -1);
  auto p = intersect(x0, y0);
  REQUIRE(p.has_value());
  CHECK(p->x == Rational(0));
  CHECK(p->y == Rational(0));
  CHECK(!intersect(x0, x1).has_value());
  auto diag = mku(1, 1, -1), anti = mku(1, -1, 0);
  auto q = intersect(diag, anti);
  REQUIRE(q.has_value());
  CHECK(q->x == Rational(1, 2));
  CHECK(q->y == Rational(1, 2));
}

TEST_CASE("canonical line normalization makes equal lines equal") {
  auto through = [](double px, double py, double qx, double qy) {
    return Line2<Rational>::through({Rational(px), Rational(py)}, {Rational(qx), Rational(qy)});
  };
  auto l1 = through(0, 0, 1, 1);
  auto l2 = through(2, 2, -3, -3);
  CHECK(l1.a == l2.a);
  CHECK(l1.b == l2.b);
  CHECK(l1.c == l2.c);
}

TEST_CASE("convex hull basics") {
  std::vector<Vec2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  auto h = convex_hull(sq);
  CHECK(!h.degenerate);
  CHECK(h.points.size() == 4);

  std::vector<Vec2> tri{{0, 0}, {2, 0}, {1, 1}};
  CHECK(convex_hull(tri).points.size() == 3);

  std::vector<Vec2> line{{0, 0}, {1, 1}, {2, 2}};
  auto hd = convex_hull(line);
  CHECK(hd.degenerate);
}

TEST_CASE("convex hull contains all inputs (random disk points)") {
  Rng rng(3);
  std::vector<Vec2> pts;
  for (int i = 0; i < 100; ++i) {
    double a = rng.uniform(0, 2 * M_PI), r = std::sqrt(rng.uniform());
    pts.push_back({r * std::cos(a), r * std::sin(a)});
  }
  auto h = convex_hull(pts);
  REQUIRE(!h.degenerate);
  for (const auto& p : pts) {
    // p must be inside or on the CCW hull.
    size_t n = h.points.size();
    for (size_t i = 0; i < n; ++i) {
      double c = cross(h.points[(i + 1) % n] - h.points[i], p - h.points[i]);
      CHECK(c >= -1e-12);
    }
  }
}

TEST_CASE("convex hull is idempotent") {
  Rng rng(5);
  std::vector<Vec2> pts;
  for (int i = 0; i < 60; ++i) pts.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3)});
  auto h1 = convex_hull(pts);
  auto h2 = convex_hull(h1.points);
  CHECK(h1.points.size() == h2.points.size());
}

TEST_CASE("min_width matches oracles") {
  CHECK(min_width({{0, 0}, {1, 0}}) == doctest::Approx(0.0));
  std::vector<Vec2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(min_width(sq) == doctest::Approx(width_oracle(sq)).epsilon(1e-9));
  CHECK(min_width(sq) == doctest::Approx(1.0).epsilon(1e-12));
  auto gon = regular_ngon(256, 0.5);
  CHECK(min_width(gon) == doctest::Approx(1.0).epsilon(1e-3));
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec2> pts;
    int n = 3 + static_cast<int>(rng.below(40));
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-2, 2), rng.uniform(-2, 2)});
    double w = min_width(pts);
    double dia = diameter(pts).value;
    CHECK(w <= width_oracle(pts) + 1e-9);  // sampled oracle overestimates
    // Width minima sit at kinks, so the sampled oracle is off by at most a
    // first-order term dia * dtheta.
    CHECK(w >= width_oracle(pts, 2000) - dia * (M_PI / 2000) - 1e-9);
    CHECK(w <= dia + 1e-12);
  }
}

TEST_CASE("diameter via antipodal pairs matches brute force") {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    std::vector<Vec2> pts;
    int n = 2 + static_cast<int>(rng.below(50));
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-2, 2), rng.uniform(-2, 2)});
    double brute = 0;
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) brute = std::max(brute, dist(pts[i], pts[j]));
    CHECK(diameter(pts).value == doctest::Approx(brute).epsilon(1e-12));
  }
}

TEST_CASE("polygon area") {
  std::vector<Vec2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(polygon_area(sq) == doctest::Approx(1.0));
  std::vector<Vec2> tri{{0, 0}, {1, 0}, {0, 1}};
  CHECK(polygon_area(tri) == doctest::Approx(0.5));
  auto gon = regular_ngon(4096, 1.0);
  double formula = 4096 * std::sin(2 * M_PI / 4096) / 2;
  CHECK(polygon_area(gon) == doctest::Approx(formula).epsilon(1e-12));
  CHECK(polygon_area(gon) == doctest::Approx(M_PI).epsilon(1e-5));
  std::vector<Vec2> bow{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  CHECK_THROWS_AS(polygon_area(bow), std::invalid_argument);
}

TEST_CASE("rigid motions") {
  RigidMotion id = RigidMotion::identity();
  Vec2 p{0.3, -0.7};
  CHECK(dist(id(p), p) == doctest::Approx(0.0));
  RigidMotion quarter{M_PI / 2, 0, 0};
  Vec2 q = quarter({1, 0});
  CHECK(q.x == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(q.y == doctest::Approx(1.0));

  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    RigidMotion m{rng.uniform(0, 2 * M_PI), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    std::vector<Vec2> poly;
    for (int i = 0; i < 12; ++i) poly.push_back({rng.uniform(-2, 2), rng.uniform(-2, 2)});
    auto moved = apply_motion(m, poly);
    for (size_t i = 0; i < poly.size(); ++i)
      for (size_t j = i + 1; j < poly.size(); ++j)
        CHECK(dist(moved[i], moved[j]) == doctest::Approx(dist(poly[i], poly[j])).epsilon(1e-12));
    CHECK(polyline_length(moved) == doctest::Approx(polyline_length(poly)).epsilon(1e-12));
    // composition and inversion are closed
    RigidMotion round = m.then(m.inverse());
    Vec2 back = round(p);
    CHECK(dist(back, p) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("motion preserves polygon area") {
  Rng rng(37);
  std::vector<Vec2> sq{{0, 0}, {2, 0}, {2, 1}, {0, 1}};
  for (int t = 0; t < 10; ++t) {
    RigidMotion m{rng.uniform(0, 2 * M_PI), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    CHECK(polygon_area(apply_motion(m, sq)) == doctest::Approx(polygon_area(sq)).epsilon(1e-12));
  }
}

TEST_CASE("polygon region signed margin") {
  PolygonRegion sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  CHECK(sq.convex());
  CHECK(sq.signed_margin({2, 2}) == doctest::Approx(2.0));
  CHECK(sq.signed_margin({2, 1}) == doctest::Approx(1.0));
  CHECK(sq.signed_margin({-1, 2}) == doctest::Approx(-1.0));

  // Regular polygon fast path agrees with the generic formula.
  auto gon = regular_ngon(4096, 1.0);
  PolygonRegion reg(gon);
  PolygonRegion irregular([&] {
    auto v = gon;
    v[7].x += 1e-6;  // break regularity
    return v;
  }());
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    Vec2 p{rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2)};
    CHECK(std::abs(reg.signed_margin(p) - irregular.signed_margin(p)) < 1e-5);
  }
  // Non-convex region.
  PolygonRegion ell({{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 3}});
  CHECK(!ell.convex());
  CHECK(ell.signed_margin({0.5, 0.5}) == doctest::Approx(0.5));
  CHECK(ell.signed_margin({2, 2}) < 0);
}
