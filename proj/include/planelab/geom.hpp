// Planar primitives and predicates, templated over the arithmetic mode.
//
// The same code paths serve three scalar types: double (numerical search
// modules), Rational (exact arrangements) and AdaptiveReal (high-precision
// constructions with snapping). All values are immutable after construction
// and every operation is a pure function.

#pragma once

#include "planelab/scalar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace planelab::geom {

enum class Orientation { CCW, CW, COLLINEAR };

template <class S>
struct Point2 {
  S x{};
  S y{};

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(const S& k, const Point2& p) { return {k * p.x, k * p.y}; }
};

using Vec2 = Point2<double>;

template <class S>
S dot(const Point2<S>& a, const Point2<S>& b) {
  return a.x * b.x + a.y * b.y;
}

template <class S>
S cross(const Point2<S>& a, const Point2<S>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class S>
S sq_dist(const Point2<S>& a, const Point2<S>& b) {
  Point2<S> d = b - a;
  return dot(d, d);
}

inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }
inline double dist(const Vec2& a, const Vec2& b) { return norm(b - a); }

// Line a*x + b*y + c = 0 with (a,b) != (0,0), stored canonically so equal
// lines compare equal: rational coefficients are scaled to coprime integers
// with positive leading coefficient; floating modes normalize (a,b) to unit
// length with the same sign rule.
template <class S>
struct Line2 {
  S a{}, b{}, c{};

  static Line2 through(const Point2<S>& p, const Point2<S>& q) {
    Line2 l;
    l.a = q.y - p.y;
    l.b = p.x - q.x;
    l.c = S(0) - (l.a * p.x + l.b * p.y);
    l.normalize();
    return l;
  }

  void normalize();
};

template <>
inline void Line2<Rational>::normalize() {
  if (a == 0 && b == 0) throw std::invalid_argument("degenerate line: a = b = 0");
  BigInt na = numerator(a), da = denominator(a);
  BigInt nb = numerator(b), db = denominator(b);
  BigInt nc = numerator(c), dc = denominator(c);
  BigInt l = lcm(lcm(da, db), dc);
  BigInt ia = na * (l / da), ib = nb * (l / db), ic = nc * (l / dc);
  BigInt g = gcd(gcd(abs(ia), abs(ib)), abs(ic));
  if (g == 0) g = 1;
  ia /= g;
  ib /= g;
  ic /= g;
  BigInt lead = ia != 0 ? ia : ib;
  if (lead < 0) {
    ia = -ia;
    ib = -ib;
    ic = -ic;
  }
  a = Rational(ia);
  b = Rational(ib);
  c = Rational(ic);
}

template <class S>
inline void Line2<S>::normalize() {
  using Ops = ScalarOps<S>;
  if (Ops::sign(a) == 0 && Ops::sign(b) == 0)
    throw std::invalid_argument("degenerate line: a = b = 0");
  using std::sqrt;
  using planelab::sqrt;
  S n = sqrt(a * a + b * b);
  a = a / n;
  b = b / n;
  c = c / n;
  int lead = Ops::geom_sign(a) != 0 ? Ops::sign(a) : Ops::sign(b);
  if (lead < 0) {
    a = S(0) - a;
    b = S(0) - b;
    c = S(0) - c;
  }
}

// Sign of the cross product (q-p) x (r-p). Exact in rational mode; snapped
// against the active epsilon otherwise. The adaptive overload escalates the
// working precision before deciding collinearity.
template <class S>
Orientation orientation(const Point2<S>& p, const Point2<S>& q, const Point2<S>& r) {
  S det = cross(q - p, r - p);
  int s = ScalarOps<S>::geom_sign(det);
  if (s > 0) return Orientation::CCW;
  if (s < 0) return Orientation::CW;
  return Orientation::COLLINEAR;
}

Orientation orientation(const Point2<AdaptiveReal>& p, const Point2<AdaptiveReal>& q,
                        const Point2<AdaptiveReal>& r);

// Unique intersection point, or empty if parallel under the mode's equality.
template <class S>
std::optional<Point2<S>> intersect(const Line2<S>& l1, const Line2<S>& l2) {
  S det = l1.a * l2.b - l2.a * l1.b;
  if (ScalarOps<S>::geom_sign(det) == 0) return std::nullopt;
  S x = (l1.b * l2.c - l2.b * l1.c) / det;
  S y = (l2.a * l1.c - l1.a * l2.c) / det;
  return Point2<S>{x, y};
}

template <class S>
int side_of(const Line2<S>& l, const Point2<S>& p) {
  return ScalarOps<S>::geom_sign(l.a * p.x + l.b * p.y + l.c);
}

// Convex hull, CCW, collinear interior points dropped. Degenerate inputs
// (all points collinear) come back as the flagged 1- or 2-point hull rather
// than an error: min_width legitimately needs them.
template <class S>
struct Hull {
  std::vector<Point2<S>> points;  // CCW when proper
  bool degenerate = false;        // < 3 hull points
};

template <class S>
Hull<S> convex_hull(std::vector<Point2<S>> pts) {
  Hull<S> h;
  std::sort(pts.begin(), pts.end(), [](const Point2<S>& a, const Point2<S>& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n <= 2) {
    h.points = pts;
    h.degenerate = true;
    return h;
  }
  std::vector<Point2<S>> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 &&
           ScalarOps<S>::sign(cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2])) <= 0)
      --k;
    hull[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {  // upper
    while (k >= lower &&
           ScalarOps<S>::sign(cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2])) <= 0)
      --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) {
    h.degenerate = true;
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
  }
  h.points = std::move(hull);
  return h;
}

// Minimum directional extent over all directions (rotating calipers on the
// hull). Collinear point sets have width zero.
double min_width(const std::vector<Vec2>& points);

// Maximum pairwise distance via antipodal pairs; returns the realizing pair.
struct DiameterResult {
  double value = 0;
  Vec2 p, q;
};
DiameterResult diameter(const std::vector<Vec2>& points);

// Absolute shoelace area; the polygon must be simple.
template <class S>
S polygon_signed_area2(const std::vector<Point2<S>>& v) {
  S s{};
  for (size_t i = 0, n = v.size(); i < n; ++i) s += cross(v[i], v[(i + 1) % n]);
  return s;
}

bool polygon_is_simple(const std::vector<Vec2>& v, double eps = kDefaultEps);
double polygon_area(const std::vector<Vec2>& v);  // throws on non-simple input

// Rotation by theta followed by translation; reflections excluded.
struct RigidMotion {
  double theta = 0;
  double tx = 0;
  double ty = 0;

  Vec2 operator()(const Vec2& p) const {
    double c = std::cos(theta), s = std::sin(theta);
    return {c * p.x - s * p.y + tx, s * p.x + c * p.y + ty};
  }

  RigidMotion then(const RigidMotion& m) const {  // m after *this
    double c = std::cos(m.theta), s = std::sin(m.theta);
    return {theta + m.theta, c * tx - s * ty + m.tx, s * tx + c * ty + m.ty};
  }

  RigidMotion inverse() const {
    double c = std::cos(theta), s = std::sin(theta);
    return {-theta, -(c * tx + s * ty), -(-s * tx + c * ty)};
  }

  static RigidMotion identity() { return {}; }
};

std::vector<Vec2> apply_motion(const RigidMotion& m, const std::vector<Vec2>& pts);

double polyline_length(const std::vector<Vec2>& v);

// Distance from p to segment [a,b].
double point_segment_dist(const Vec2& p, const Vec2& a, const Vec2& b);

// Signed distance to a simple polygon boundary, positive inside. Convex
// inputs take the min-over-edge-lines shortcut (exact for interior points);
// the general path combines a crossing test with edge distances.
class PolygonRegion {
 public:
  explicit PolygonRegion(std::vector<Vec2> vertices);

  double signed_margin(const Vec2& p) const;
  bool convex() const { return convex_; }
  const std::vector<Vec2>& vertices() const { return verts_; }

 private:
  std::vector<Vec2> verts_;  // CCW
  bool convex_ = false;
  // Regular-polygon fast path (uniform radius and angular step about the
  // centroid): margin costs O(1) instead of O(n).
  bool regular_ = false;
  Vec2 center_{};
  double circum_r_ = 0, apothem_ = 0, angle0_ = 0;
};

}  // namespace planelab::geom
