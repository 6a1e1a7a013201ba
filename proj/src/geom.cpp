#include "planelab/geom.hpp"

namespace planelab::geom {

Orientation orientation(const Point2<AdaptiveReal>& p, const Point2<AdaptiveReal>& q,
                        const Point2<AdaptiveReal>& r) {
  AdaptiveReal det = cross(q - p, r - p);
  MpFloat eps = AdaptivePrecision::eps_snap();
  if (abs(det.v) >= eps) return det.v > 0 ? Orientation::CCW : Orientation::CW;
  // Near-zero at working precision: recompute at doubled precision and
  // compare against the original snap threshold.
  AdaptivePrecision fine(2 * AdaptivePrecision::current_bits());
  MpFloat det2 = MpFloat(q.x.v - p.x.v) * MpFloat(r.y.v - p.y.v) -
                 MpFloat(q.y.v - p.y.v) * MpFloat(r.x.v - p.x.v);
  if (abs(det2) < eps) return Orientation::COLLINEAR;
  return det2 > 0 ? Orientation::CCW : Orientation::CW;
}

double min_width(const std::vector<Vec2>& points) {
  if (points.size() < 2) return 0;
  Hull<double> h = convex_hull(points);
  if (h.degenerate) return 0;
  const auto& v = h.points;
  size_t n = v.size();
  // For each hull edge, the farthest vertex; both advance monotonically so
  // the walk is linear overall. Strict comparison stops on tie plateaus.
  double best = std::numeric_limits<double>::infinity();
  size_t far = 1;
  size_t guard = 0;
  for (size_t i = 0; i < n; ++i) {
    Vec2 e = v[(i + 1) % n] - v[i];
    double elen = norm(e);
    if (elen == 0) continue;
    auto height = [&](size_t k) { return cross(e, v[k] - v[i]) / elen; };
    while (height((far + 1) % n) > height(far) && guard++ < 4 * n) far = (far + 1) % n;
    best = std::min(best, height(far));
  }
  return best;
}

DiameterResult diameter(const std::vector<Vec2>& points) {
  DiameterResult r;
  if (points.empty()) return r;
  r.p = r.q = points[0];
  Hull<double> h = convex_hull(points);
  const auto& v = h.points;
  size_t n = v.size();
  if (n == 1) return r;
  if (n == 2) {
    r.p = v[0];
    r.q = v[1];
    r.value = dist(v[0], v[1]);
    return r;
  }
  auto consider = [&](size_t i, size_t j) {
    double d = dist(v[i], v[j]);
    if (d > r.value) {
      r.value = d;
      r.p = v[i];
      r.q = v[j];
    }
  };
  // Antipodal pairs.
  size_t k = 1;
  for (size_t i = 0; i < n; ++i) {
    Vec2 e = v[(i + 1) % n] - v[i];
    while (cross(e, v[(k + 1) % n] - v[k]) > 0) k = (k + 1) % n;
    consider(i, k);
    consider((i + 1) % n, k);
  }
  return r;
}

bool polygon_is_simple(const std::vector<Vec2>& v, double eps) {
  size_t n = v.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i)
    if (dist(v[i], v[(i + 1) % n]) <= eps) return false;
  // Per-segment bounding boxes prune the quadratic scan.
  std::vector<std::array<double, 4>> box(n);
  for (size_t i = 0; i < n; ++i) {
    const Vec2 &a = v[i], &b = v[(i + 1) % n];
    box[i] = {std::min(a.x, b.x) - eps, std::max(a.x, b.x) + eps, std::min(a.y, b.y) - eps,
              std::max(a.y, b.y) + eps};
  }
  auto seg_intersect = [&](size_t i, size_t j) {
    Vec2 a = v[i], b = v[(i + 1) % n], c = v[j], d = v[(j + 1) % n];
    double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
    double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
    if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
        ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
      return true;
    // Near-touching counts as non-simple only when a vertex of one segment
    // sits inside the other segment (shared polygon vertices excluded by the
    // caller's adjacency skip).
    auto on = [&](const Vec2& p, const Vec2& s, const Vec2& t) {
      return point_segment_dist(p, s, t) <= eps;
    };
    return on(c, a, b) || on(d, a, b) || on(a, c, d) || on(b, c, d);
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (box[i][0] > box[j][1] || box[j][0] > box[i][1] || box[i][2] > box[j][3] ||
          box[j][2] > box[i][3])
        continue;
      if (seg_intersect(i, j)) return false;
    }
  }
  return true;
}

double polygon_area(const std::vector<Vec2>& v) {
  if (!polygon_is_simple(v)) throw std::invalid_argument("polygon_area: non-simple polygon");
  return std::abs(polygon_signed_area2(v)) / 2.0;
}

std::vector<Vec2> apply_motion(const RigidMotion& m, const std::vector<Vec2>& pts) {
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (const Vec2& p : pts) out.push_back(m(p));
  return out;
}

double polyline_length(const std::vector<Vec2>& v) {
  double len = 0;
  for (size_t i = 0; i + 1 < v.size(); ++i) len += dist(v[i], v[i + 1]);
  return len;
}

double point_segment_dist(const Vec2& p, const Vec2& a, const Vec2& b) {
  Vec2 ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 == 0) return dist(p, a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  Vec2 proj{a.x + t * ab.x, a.y + t * ab.y};
  return dist(p, proj);
}

PolygonRegion::PolygonRegion(std::vector<Vec2> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 3) throw std::invalid_argument("polygon needs >= 3 vertices");
  if (polygon_signed_area2(verts_) < 0) std::reverse(verts_.begin(), verts_.end());
  size_t n = verts_.size();
  convex_ = true;
  for (size_t i = 0; i < n && convex_; ++i) {
    Vec2 a = verts_[i], b = verts_[(i + 1) % n], c = verts_[(i + 2) % n];
    if (cross(b - a, c - b) < -kDefaultEps) convex_ = false;
  }
  if (convex_ && n >= 8) {
    Vec2 cen{0, 0};
    for (const Vec2& v : verts_) cen = cen + v;
    cen = (1.0 / n) * cen;
    double r0 = dist(cen, verts_[0]);
    double a0 = std::atan2(verts_[0].y - cen.y, verts_[0].x - cen.x);
    double step = 2 * M_PI / n;
    regular_ = true;
    for (size_t i = 0; i < n; ++i) {
      double r = dist(cen, verts_[i]);
      double want = a0 + step * i;
      double got = std::atan2(verts_[i].y - cen.y, verts_[i].x - cen.x);
      double da = std::remainder(got - want, 2 * M_PI);
      if (std::abs(r - r0) > 1e-12 * std::max(1.0, r0) || std::abs(da) > 1e-12) {
        regular_ = false;
        break;
      }
    }
    if (regular_) {
      center_ = cen;
      circum_r_ = r0;
      apothem_ = r0 * std::cos(M_PI / n);
      angle0_ = a0;
    }
  }
}

double PolygonRegion::signed_margin(const Vec2& p) const {
  size_t n = verts_.size();
  if (regular_) {
    Vec2 d = p - center_;
    double r = norm(d);
    if (r < 1e-15) return apothem_;
    double ang = std::atan2(d.y, d.x);
    double step = 2 * M_PI / n;
    // Nearest edge normals are the two bracketing mid-vertex directions.
    double k = std::floor((ang - angle0_) / step);
    double m = apothem_;
    for (int dk = -1; dk <= 2; ++dk) {
      double na = angle0_ + (k + dk + 0.5) * step;
      m = std::min(m, apothem_ - (d.x * std::cos(na) + d.y * std::sin(na)));
    }
    return m;
  }
  if (convex_) {
    double m = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
      Vec2 a = verts_[i], b = verts_[(i + 1) % n];
      Vec2 e = b - a;
      double len = norm(e);
      if (len == 0) continue;
      m = std::min(m, cross(e, p - a) / len);
    }
    return m;
  }
  double d = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n; ++i)
    d = std::min(d, point_segment_dist(p, verts_[i], verts_[(i + 1) % n]));
  // Crossing-number parity for insideness.
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 &a = verts_[i], &b = verts_[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      double xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside ? d : -d;
}

}  // namespace planelab::geom
