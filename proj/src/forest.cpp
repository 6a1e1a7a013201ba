#include "planelab/forest.hpp"

#include "planelab/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace planelab::forest {

using geom::RigidMotion;
using geom::Vec2;

Forest Forest::strip(double width) {
  if (width <= 0) throw std::invalid_argument("strip width must be positive");
  Forest f;
  f.shape_ = StripForest{width};
  return f;
}

Forest Forest::polygon(std::vector<Vec2> vertices) {
  Forest f;
  f.shape_ = geom::PolygonRegion(std::move(vertices));
  return f;
}

double Forest::margin(const Vec2& p) const {
  if (is_strip()) {
    double w = strip_width();
    return std::min(p.y, w - p.y);
  }
  return poly().signed_margin(p);
}

void Forest::translation_window(double& x0, double& x1, double& y0, double& y1) const {
  if (is_strip()) {
    x0 = x1 = 0;  // x-invariant
    y0 = 0;
    y1 = strip_width();
    return;
  }
  x0 = y0 = 1e300;
  x1 = y1 = -1e300;
  for (const auto& v : poly().vertices()) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
}

EscapePath segment_path(double length) {
  if (length <= 0) throw std::invalid_argument("segment length must be positive");
  return {{{0, 0}, {length, 0}}};
}

bool strip_escape_certifies(const EscapePath& p, double width) {
  if (width <= 0) throw std::invalid_argument("width must be positive");
  if (p.path.size() < 2) return false;
  // Densify; the width of a polyline equals the width of its vertex hull,
  // but the densified set keeps the check honest for callers that pass
  // sparse paths.
  std::vector<Vec2> pts;
  for (size_t i = 0; i + 1 < p.path.size(); ++i) {
    const Vec2 &a = p.path[i], &b = p.path[i + 1];
    pts.push_back(a);
    int cuts = 8;
    for (int k = 1; k < cuts; ++k) {
      double f = double(k) / cuts;
      pts.push_back({a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)});
    }
  }
  pts.push_back(p.path.back());
  return geom::min_width(pts) >= width;
}

std::optional<double> is_fat_forest(const Forest& f, double tol) {
  if (f.is_strip()) return std::nullopt;  // unbounded: no diameter pair
  const auto& verts = f.poly().vertices();
  auto dia = geom::diameter(verts);
  double L = dia.value;
  if (L <= 0) return std::nullopt;
  Vec2 mid{(dia.p.x + dia.q.x) / 2, (dia.p.y + dia.q.y) / 2};
  Vec2 axis{(dia.q.x - dia.p.x) / L, (dia.q.y - dia.p.y) / L};
  Vec2 perp{-axis.y, axis.x};
  double h = L / (2.0 * std::sqrt(3.0));
  std::array<Vec2, 4> rhombus = {dia.p,
                                 Vec2{mid.x + h * perp.x, mid.y + h * perp.y}, dia.q,
                                 Vec2{mid.x - h * perp.x, mid.y - h * perp.y}};

  // Vertex containment within tol.
  for (const auto& v : rhombus)
    if (f.poly().signed_margin(v) < -tol) return std::nullopt;
  // Representative interior point.
  if (f.poly().signed_margin(mid) < -tol) return std::nullopt;
  // Rhombus edges must not properly cross the polygon boundary; sampled
  // edge points keep the test robust for curved (finely tessellated) walls.
  for (int e = 0; e < 4; ++e) {
    const Vec2 &a = rhombus[e], &b = rhombus[(e + 1) % 4];
    for (int k = 1; k < 24; ++k) {
      double t = double(k) / 24;
      Vec2 q{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      if (f.poly().signed_margin(q) < -tol) return std::nullopt;
    }
  }
  return L;
}

EscapePath best_path_fat(double L) { return segment_path(L); }

namespace {

double placement_margin(const Forest& f, const std::vector<Vec2>& pts, const RigidMotion& m) {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) worst = std::min(worst, f.margin(m(p)));
  return worst;
}

}  // namespace

Placement escape_falsify(const Forest& f, const EscapePath& p, int orientation_samples,
                         int grid) {
  if (p.path.size() < 2) throw std::invalid_argument("escape path needs >= 2 vertices");
  // Densified path points; containment of every point is what "stays inside
  // the forest" means for a polyline.
  std::vector<Vec2> pts;
  for (size_t i = 0; i + 1 < p.path.size(); ++i) {
    const Vec2 &a = p.path[i], &b = p.path[i + 1];
    pts.push_back(a);
    for (int k = 1; k < 8; ++k) {
      double t = double(k) / 8;
      pts.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  pts.push_back(p.path.back());

  Vec2 path_cen{0, 0};
  for (const auto& q : pts) path_cen = path_cen + q;
  path_cen = (1.0 / pts.size()) * path_cen;

  double x0, x1, y0, y1;
  f.translation_window(x0, x1, y0, y1);

  struct Best {
    double margin = -std::numeric_limits<double>::infinity();
    RigidMotion m;
  };
  auto bests = parallel_map<Best>(orientation_samples, [&](size_t oi) {
    double theta = M_PI * double(oi) / orientation_samples;  // segment-symmetric range
    double ct = std::cos(theta), st = std::sin(theta);
    Vec2 rc{ct * path_cen.x - st * path_cen.y, st * path_cen.x + ct * path_cen.y};
    Best b;
    auto eval = [&](double tx, double ty) {
      RigidMotion m{theta, tx, ty};
      double v = placement_margin(f, pts, m);
      if (v > b.margin) {
        b.margin = v;
        b.m = m;
      }
    };
    if (f.is_strip()) {
      for (int gy = 0; gy <= grid; ++gy)
        eval(-rc.x, y0 + (y1 - y0) * gy / grid - rc.y);
    } else {
      for (int gx = 0; gx <= grid; ++gx)
        for (int gy = 0; gy <= grid; ++gy)
          eval(x0 + (x1 - x0) * gx / grid - rc.x, y0 + (y1 - y0) * gy / grid - rc.y);
    }
    // Coordinate descent refinement (translation, then orientation).
    double step = std::max(x1 - x0, y1 - y0) / std::max(1, grid);
    RigidMotion cur = b.m;
    double dth = M_PI / orientation_samples / 2;
    while (step > 1e-9 || dth > 1e-11) {
      bool improved = false;
      const RigidMotion trials[] = {
          {cur.theta, cur.tx + step, cur.ty}, {cur.theta, cur.tx - step, cur.ty},
          {cur.theta, cur.tx, cur.ty + step}, {cur.theta, cur.tx, cur.ty - step},
          {cur.theta + dth, cur.tx, cur.ty},  {cur.theta - dth, cur.tx, cur.ty}};
      for (const auto& m : trials) {
        double v = placement_margin(f, pts, m);
        if (v > b.margin) {
          b.margin = v;
          b.m = m;
          cur = m;
          improved = true;
        }
      }
      if (!improved) {
        step /= 2;
        dth /= 2;
      }
    }
    return b;
  });

  Placement out;
  for (const auto& b : bests)
    if (b.margin > out.margin) {
      out.margin = b.margin;
      out.motion = b.m;
    }
  out.found = out.margin >= 1e-9;
  return out;
}

}  // namespace planelab::forest
