#include "planelab/sofa.hpp"

#include "planelab/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace planelab::sofa {

using geom::RigidMotion;
using geom::Vec2;

bool hallway_contains(const Vec2& p) {
  return p.x <= 1.0 && p.y <= 1.0 && (p.x >= 0.0 || p.y >= 0.0);
}

double hallway_margin(const Vec2& p) {
  return std::min({1.0 - p.x, 1.0 - p.y, std::max(p.x, p.y)});
}

SofaShape make_shape(std::vector<Vec2> boundary, std::optional<double> nominal,
                     double tess_tol) {
  if (!geom::polygon_is_simple(boundary, 1e-12))
    throw std::invalid_argument("sofa boundary must be a simple polygon");
  SofaShape s;
  s.boundary = std::move(boundary);
  s.nominal_area = nominal;
  s.tess_tol = tess_tol;
  return s;
}

void check_plan(const SofaShape& s, const MotionPlan& plan) {
  if (plan.samples.size() < 2) throw std::invalid_argument("motion plan needs >= 2 samples");
  if (plan.samples.front().t != 0.0 || plan.samples.back().t != 1.0)
    throw std::invalid_argument("motion plan must span t in [0, 1]");
  for (size_t i = 0; i + 1 < plan.samples.size(); ++i)
    if (!(plan.samples[i].t < plan.samples[i + 1].t))
      throw std::invalid_argument("motion plan t values must be strictly increasing");
  if (plan.delta_step <= 0) throw std::invalid_argument("motion plan delta_step must be positive");
  for (size_t i = 0; i + 1 < plan.samples.size(); ++i) {
    double worst = 0;
    for (const auto& v : s.boundary)
      worst = std::max(worst, geom::dist(plan.samples[i].motion(v),
                                         plan.samples[i + 1].motion(v)));
    if (worst > plan.delta_step * (1 + 1e-9))
      throw std::invalid_argument("motion plan violates its continuity bound at sample " +
                                  std::to_string(i));
  }
}

namespace {

// Boundary points densified so no gap exceeds step.
std::vector<Vec2> densify(const std::vector<Vec2>& poly, double step) {
  std::vector<Vec2> out;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2 &a = poly[i], &b = poly[(i + 1) % n];
    out.push_back(a);
    double len = geom::dist(a, b);
    int cuts = static_cast<int>(std::floor(len / step));
    for (int k = 1; k <= cuts; ++k) {
      double f = double(k) / (cuts + 1);
      out.push_back({a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)});
    }
  }
  return out;
}

}  // namespace

MotionReport verify_motion(const SofaShape& s, const MotionPlan& plan, double tol) {
  check_plan(s, plan);
  if (tol < 0) tol = kDefaultEps + s.tess_tol;
  MotionReport rep;
  rep.samples = static_cast<int>(plan.samples.size());
  rep.densify_step = plan.delta_step;
  std::vector<Vec2> pts = densify(s.boundary, plan.delta_step);

  rep.per_sample_margin = parallel_map<double>(plan.samples.size(), [&](size_t i) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) m = std::min(m, hallway_margin(plan.samples[i].motion(p)));
    return m;
  });
  rep.min_margin = *std::min_element(rep.per_sample_margin.begin(), rep.per_sample_margin.end());
  rep.valid = rep.min_margin >= -tol;

  auto all_below = [&](const RigidMotion& m, bool check_y) {
    for (const auto& p : s.boundary) {
      Vec2 q = m(p);
      if ((check_y ? q.y : q.x) > -1.0 + 1e-9) return false;
    }
    return true;
  };
  rep.traversal = all_below(plan.samples.front().motion, true) &&
                  all_below(plan.samples.back().motion, false);
  return rep;
}

std::pair<SofaShape, MotionPlan> hammersley_sofa(double tess_tol, int samples) {
  if (tess_tol <= 0) throw std::invalid_argument("hammersley_sofa: tess_tol must be positive");
  const double a = 2.0 / M_PI;

  // Boundary, counterclockwise. Outer quarter-disk arcs are inscribed
  // (vertices on the circle); the notch is circumscribed (chords tangent to
  // the notch circle), so the polygon is a subset of the true shape and the
  // exact corner sweep keeps it strictly inside the hallway.
  auto arc_steps = [&](double r, double sweep) {
    double dphi = 2 * std::acos(std::max(0.0, 1 - tess_tol / r));
    return std::max(8, static_cast<int>(std::ceil(sweep / dphi)));
  };

  std::vector<Vec2> b;
  b.push_back({-a - 1, 0});
  b.push_back({-a, 0});
  {  // notch: tangent-chord polyline from (-a,0) over the top to (a,0);
     // every segment lies on a tangent line of the notch circle, so the
     // polygon never dips inside the removed semicircle
    int m = arc_steps(a, M_PI);
    double r_out = a / std::cos(M_PI / (2.0 * m));  // tangent-polygon radius
    for (int k = 1; k <= m; ++k) {
      double phi = M_PI - M_PI * (2.0 * k - 1) / (2.0 * m);
      b.push_back({r_out * std::cos(phi), r_out * std::sin(phi)});
    }
  }
  b.push_back({a, 0});
  b.push_back({a + 1, 0});
  {  // right quarter disk, arc from angle 0 to pi/2 about (a, 0)
    int m = arc_steps(1.0, M_PI / 2);
    for (int k = 1; k < m; ++k) {
      double phi = (M_PI / 2) * k / m;
      b.push_back({a + std::cos(phi), std::sin(phi)});
    }
  }
  b.push_back({a, 1});
  b.push_back({-a, 1});
  {  // left quarter disk, arc from pi/2 to pi about (-a, 0)
    int m = arc_steps(1.0, M_PI / 2);
    for (int k = 1; k < m; ++k) {
      double phi = M_PI / 2 + (M_PI / 2) * k / m;
      b.push_back({-a + std::cos(phi), std::sin(phi)});
    }
  }

  SofaShape shape = make_shape(std::move(b), M_PI / 2 + 2.0 / M_PI, tess_tol);

  // Corner sweep: slide deep in the vertical leg, rotate by pi/2 while the
  // notch center runs the quarter circle c = -a (sin alpha, cos alpha), then
  // slide out deep into the horizontal leg.
  MotionPlan plan;
  if (samples < 16) samples = 16;
  double slide = 2.0;
  for (int i = 0; i < samples; ++i) {
    double t = double(i) / (samples - 1);
    RigidMotion m;
    if (t <= 0.25) {
      double f = t / 0.25;
      m = {-M_PI / 2, 0, -a - slide + slide * f};
    } else if (t <= 0.75) {
      double alpha = (t - 0.25) / 0.5 * (M_PI / 2);
      m = {-M_PI / 2 + alpha, -a * std::sin(alpha), -a * std::cos(alpha)};
    } else {
      double f = (t - 0.75) / 0.25;
      m = {0, -a - slide * f, 0};
    }
    plan.samples.push_back({t, m});
  }
  double worst = 0;
  for (size_t i = 0; i + 1 < plan.samples.size(); ++i)
    for (const auto& v : shape.boundary)
      worst = std::max(worst, geom::dist(plan.samples[i].motion(v),
                                         plan.samples[i + 1].motion(v)));
  plan.delta_step = worst * 1.05;
  return {std::move(shape), std::move(plan)};
}

MotionPlan l_slide_plan(const SofaShape& s, int samples) {
  double maxx = -1e300, maxy = -1e300, minx = 1e300, miny = 1e300;
  for (const auto& p : s.boundary) {
    maxx = std::max(maxx, p.x);
    maxy = std::max(maxy, p.y);
    minx = std::min(minx, p.x);
    miny = std::min(miny, p.y);
  }
  // Place the shape's bounding box inside the unit corner square, slide up
  // from the deep vertical leg, then out along the horizontal leg.
  double up = maxy - miny + 1.0 + 1e-9;
  double out = maxx - minx + 1.0 + 1e-9;
  MotionPlan plan;
  if (samples < 8) samples = 8;
  for (int i = 0; i < samples; ++i) {
    double t = double(i) / (samples - 1);
    double dx = -minx, dy = -miny;  // into the corner square
    RigidMotion m;
    if (t <= 0.5) {
      m = {0, dx, dy - up * (1.0 - t / 0.5)};
    } else {
      m = {0, dx - out * ((t - 0.5) / 0.5), dy};
    }
    plan.samples.push_back({t, m});
  }
  double worst = 0;
  for (size_t i = 0; i + 1 < plan.samples.size(); ++i)
    for (const auto& v : s.boundary)
      worst = std::max(worst, geom::dist(plan.samples[i].motion(v),
                                         plan.samples[i + 1].motion(v)));
  plan.delta_step = worst * 1.05;
  return plan;
}

MotionPlan corner_pivot_plan(const SofaShape& s, int samples) {
  // Slide to the corner at theta = -pi/2, pivot to 0 about the origin,
  // slide out. Suits shapes built flat-side-down around the origin.
  MotionPlan plan;
  if (samples < 16) samples = 16;
  double slide = 2.0;
  for (int i = 0; i < samples; ++i) {
    double t = double(i) / (samples - 1);
    RigidMotion m;
    if (t <= 0.25) {
      m = {-M_PI / 2, 0, -slide * (1.0 - t / 0.25)};
    } else if (t <= 0.75) {
      m = {-M_PI / 2 + (t - 0.25) / 0.5 * (M_PI / 2), 0, 0};
    } else {
      m = {0, -slide * ((t - 0.75) / 0.25), 0};
    }
    plan.samples.push_back({t, m});
  }
  double worst = 0;
  for (size_t i = 0; i + 1 < plan.samples.size(); ++i)
    for (const auto& v : s.boundary)
      worst = std::max(worst, geom::dist(plan.samples[i].motion(v),
                                         plan.samples[i + 1].motion(v)));
  plan.delta_step = worst * 1.05;
  return plan;
}

SofaReport sofa_report(const SofaShape& s, const MotionPlan& plan) {
  SofaReport r;
  r.area = geom::polygon_area(s.boundary);
  MotionReport mr = verify_motion(s, plan);
  r.valid = mr.valid;
  r.traversal = mr.traversal;
  r.min_margin = mr.min_margin;
  if (r.area < kGerverArea)
    r.bracket_position = "below Gerver";
  else if (r.area <= kUpperBound)
    r.bracket_position = "between Gerver and the 2.37 bound";
  else
    r.bracket_position = "above the 2.37 bound";
  r.numerical_error = r.valid && r.traversal && r.area > kUpperBound + 1e-6;
  return r;
}

}  // namespace planelab::sofa
