#include "planelab/cages.hpp"

#include "planelab/parallel.hpp"
#include "planelab/rng.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace planelab::cages {

using geom::RigidMotion;
using geom::Vec2;

Worm make_worm(std::vector<Vec2> pts) {
  if (pts.size() < 2) throw std::invalid_argument("worm needs >= 2 vertices");
  double len = geom::polyline_length(pts);
  if (len <= 0) throw std::invalid_argument("worm has zero length");
  Worm w;
  Vec2 origin = pts[0];
  for (const auto& p : pts)
    w.path.push_back({origin.x + (p.x - origin.x) / len, origin.y + (p.y - origin.y) / len});
  return w;
}

Cage Cage::disk(double diameter) {
  if (diameter <= 0) throw std::invalid_argument("disk diameter must be positive");
  Cage c;
  c.kind_ = Kind::Disk;
  c.diameter_ = diameter;
  return c;
}

Cage Cage::rhombus(double d1, double d2) {
  if (d1 <= 0 || d2 <= 0) throw std::invalid_argument("rhombus diagonals must be positive");
  Cage c;
  c.kind_ = Kind::Rhombus;
  c.d1_ = d1;
  c.d2_ = d2;
  return c;
}

Cage Cage::sector(double angle_rad, double radius) {
  if (angle_rad <= 0 || angle_rad > M_PI || radius <= 0)
    throw std::invalid_argument("sector needs angle in (0, pi] and positive radius");
  Cage c;
  c.kind_ = Kind::Sector;
  c.angle_ = angle_rad;
  c.radius_ = radius;
  return c;
}

Cage Cage::polygon(std::vector<Vec2> vertices) {
  Cage c;
  c.kind_ = Kind::Polygon;
  c.poly_.emplace(std::move(vertices));
  return c;
}

double Cage::area() const {
  switch (kind_) {
    case Kind::Disk: return M_PI * diameter_ * diameter_ / 4.0;
    case Kind::Rhombus: return d1_ * d2_ / 2.0;
    case Kind::Sector: return 0.5 * angle_ * radius_ * radius_;
    case Kind::Polygon: return geom::polygon_area(poly_->vertices());
  }
  return 0;
}

double cage_area(const Cage& c) { return c.area(); }

double Cage::margin(const Vec2& p) const {
  switch (kind_) {
    case Kind::Disk: return diameter_ / 2.0 - geom::norm(p);
    case Kind::Rhombus: {
      double h1 = d1_ / 2.0, h2 = d2_ / 2.0;
      double scale = std::sqrt(1.0 / (h1 * h1) + 1.0 / (h2 * h2));
      return (1.0 - std::abs(p.x) / h1 - std::abs(p.y) / h2) / scale;
    }
    case Kind::Sector: {
      double m = radius_ - geom::norm(p);
      m = std::min(m, p.y);
      m = std::min(m, p.x * std::sin(angle_) - p.y * std::cos(angle_));
      return m;
    }
    case Kind::Polygon: return poly_->signed_margin(p);
  }
  return 0;
}

bool Cage::convex() const { return kind_ != Kind::Polygon || poly_->convex(); }

std::vector<double> Cage::principal_directions() const {
  switch (kind_) {
    case Kind::Disk: return {0.0};
    case Kind::Rhombus: return d1_ >= d2_ ? std::vector<double>{0.0, M_PI / 2}
                                          : std::vector<double>{M_PI / 2, 0.0};
    case Kind::Sector: return {0.0, angle_, angle_ / 2};
    case Kind::Polygon: {
      auto d = geom::diameter(poly_->vertices());
      return {std::atan2(d.q.y - d.p.y, d.q.x - d.p.x)};
    }
  }
  return {0.0};
}

double Cage::scale() const {
  switch (kind_) {
    case Kind::Disk: return diameter_ / 2.0;
    case Kind::Rhombus: return std::max(d1_, d2_) / 2.0;
    case Kind::Sector: return radius_;
    case Kind::Polygon: {
      double r = 0;
      for (const auto& v : poly_->vertices()) r = std::max(r, geom::norm(v));
      return r;
    }
  }
  return 1;
}

std::string Cage::name() const {
  switch (kind_) {
    case Kind::Disk: return "disk";
    case Kind::Rhombus: return "rhombus";
    case Kind::Sector: return "sector";
    case Kind::Polygon: return "polygon";
  }
  return "?";
}

const std::vector<Vec2>& Cage::polygon_vertices() const {
  if (!poly_) throw std::logic_error("not a polygon cage");
  return poly_->vertices();
}

namespace {

constexpr double kFitTol = 1e-9;
constexpr double kGolden = 0.6180339887498949;

struct EvalCounter {
  long used = 0;
  long cap = 0;
  bool spent() const { return cap > 0 && used >= cap; }
};

double worm_margin(const Cage& cage, const std::vector<Vec2>& pts, double ct, double st,
                   const Vec2& t, EvalCounter& ev) {
  ++ev.used;
  double m = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    Vec2 q{ct * p.x - st * p.y + t.x, st * p.x + ct * p.y + t.y};
    m = std::min(m, cage.margin(q));
    if (m < -10) break;  // hopeless placement
  }
  return m;
}

// Nelder-Mead on translation (maximizing the worst margin; concave for
// convex cages, still effective otherwise).
double nm_translate(const Cage& cage, const std::vector<Vec2>& pts, double ct, double st,
                    Vec2& t, double step, int iters, EvalCounter& ev) {
  struct P {
    Vec2 x;
    double f;
  };
  auto F = [&](const Vec2& x) { return worm_margin(cage, pts, ct, st, x, ev); };
  std::array<P, 3> s{{{t, F(t)},
                      {{t.x + step, t.y}, 0},
                      {{t.x, t.y + step}, 0}}};
  s[1].f = F(s[1].x);
  s[2].f = F(s[2].x);
  for (int it = 0; it < iters; ++it) {
    std::sort(s.begin(), s.end(), [](const P& a, const P& b) { return a.f > b.f; });
    Vec2 cen{(s[0].x.x + s[1].x.x) / 2, (s[0].x.y + s[1].x.y) / 2};
    Vec2 refl{2 * cen.x - s[2].x.x, 2 * cen.y - s[2].x.y};
    double fr = F(refl);
    if (fr > s[0].f) {
      Vec2 exp{3 * cen.x - 2 * s[2].x.x, 3 * cen.y - 2 * s[2].x.y};
      double fe = F(exp);
      s[2] = fe > fr ? P{exp, fe} : P{refl, fr};
    } else if (fr > s[1].f) {
      s[2] = {refl, fr};
    } else {
      Vec2 con{(cen.x + s[2].x.x) / 2, (cen.y + s[2].x.y) / 2};
      double fc = F(con);
      if (fc > s[2].f) {
        s[2] = {con, fc};
      } else {
        for (int i = 1; i < 3; ++i) {
          s[i].x = {(s[i].x.x + s[0].x.x) / 2, (s[i].x.y + s[0].x.y) / 2};
          s[i].f = F(s[i].x);
        }
      }
    }
    if (ev.spent()) break;
  }
  std::sort(s.begin(), s.end(), [](const P& a, const P& b) { return a.f > b.f; });
  t = s[0].x;
  return s[0].f;
}

Vec2 centroid(const std::vector<Vec2>& pts) {
  Vec2 c{0, 0};
  for (const auto& p : pts) c = c + p;
  return {c.x / pts.size(), c.y / pts.size()};
}

Vec2 cage_center(const Cage& cage) {
  switch (cage.kind()) {
    case Cage::Kind::Sector: {
      // Interior point halfway out along the bisector.
      double half = 0.5 * cage.scale();
      auto dirs = cage.principal_directions();
      double bis = dirs.back();  // angle/2
      return {half * std::cos(bis), half * std::sin(bis)};
    }
    case Cage::Kind::Polygon: return centroid(cage.polygon_vertices());
    default: return {0, 0};
  }
}

double eval_rotation(const Cage& cage, const std::vector<Vec2>& pts, double theta, Vec2& t,
                     int nm_iters, EvalCounter& ev) {
  double ct = std::cos(theta), st = std::sin(theta);
  Vec2 wc = centroid(pts);
  Vec2 wcr{ct * wc.x - st * wc.y, st * wc.x + ct * wc.y};
  Vec2 cc = cage_center(cage);
  t = {cc.x - wcr.x, cc.y - wcr.y};
  return nm_translate(cage, pts, ct, st, t, 0.2 * cage.scale(), nm_iters, ev);
}

bool certify(const Cage& cage, const Worm& w, const RigidMotion& m) {
  // Independent recheck at doubled sampling density.
  std::vector<Vec2> dense;
  for (size_t i = 0; i + 1 < w.path.size(); ++i) {
    dense.push_back(w.path[i]);
    dense.push_back({(w.path[i].x + w.path[i + 1].x) / 2, (w.path[i].y + w.path[i + 1].y) / 2});
  }
  dense.push_back(w.path.back());
  for (const auto& p : dense)
    if (cage.margin(m(p)) < -kFitTol) return false;
  return true;
}

}  // namespace

FitResult accommodate(const Worm& w, const Cage& cage, long budget) {
  FitResult res;

  // Constructive route for disks: every curve point is within arclength 1/2
  // of the arclength midpoint, hence within distance 1/2.
  if (cage.kind() == Cage::Kind::Disk) {
    double half = 0.5, acc = 0;
    Vec2 mid = w.path.back();
    for (size_t i = 0; i + 1 < w.path.size(); ++i) {
      double seg = geom::dist(w.path[i], w.path[i + 1]);
      if (acc + seg >= half) {
        double f = seg > 0 ? (half - acc) / seg : 0;
        mid = {w.path[i].x + f * (w.path[i + 1].x - w.path[i].x),
               w.path[i].y + f * (w.path[i + 1].y - w.path[i].y)};
        break;
      }
      acc += seg;
    }
    RigidMotion m{0, -mid.x, -mid.y};
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& p : w.path) worst = std::min(worst, cage.margin(m(p)));
    res.margin = worst;
    if (worst >= -kFitTol && certify(cage, w, m)) {
      res.found = true;
      res.motion = m;
      return res;
    }
    if (budget <= 0) return res;
  }

  EvalCounter ev;
  ev.cap = budget;
  const auto& pts = w.path;

  // Rotation candidates: worm-diameter alignments with the cage's principal
  // directions first, then a golden-ratio sequence over the circle.
  auto wd = geom::diameter(pts);
  double worm_dir = std::atan2(wd.q.y - wd.p.y, wd.q.x - wd.p.x);
  std::vector<double> thetas;
  for (double cd : cage.principal_directions()) {
    thetas.push_back(cd - worm_dir);
    thetas.push_back(cd - worm_dir + M_PI);
  }
  const int kGrid = 720;
  for (int k = 0; k < kGrid; ++k) {
    double frac = std::fmod(k * kGolden, 1.0);
    thetas.push_back(2 * M_PI * frac);
  }

  struct Cand {
    double theta, f;
    Vec2 t;
  };
  std::vector<Cand> cands;
  for (double theta : thetas) {
    Vec2 t;
    double f = eval_rotation(cage, pts, theta, t, 14, ev);
    cands.push_back({theta, f, t});
    if (f > res.margin) res.margin = f;
    if (f >= -kFitTol) {
      RigidMotion m{theta, t.x, t.y};
      if (certify(cage, w, m)) {
        res.found = true;
        res.motion = m;
        res.margin = f;
        return res;
      }
    }
    if (ev.spent()) return res;
  }

  // Refine the most promising rotations: deeper translation search plus a
  // golden-section sweep over theta.
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.f > b.f; });
  size_t top = std::min<size_t>(6, cands.size());
  double span = 2 * M_PI / kGrid * 2.0;
  for (size_t i = 0; i < top; ++i) {
    double lo = cands[i].theta - span, hi = cands[i].theta + span;
    auto deep_eval = [&](double theta, Vec2& t) {
      return eval_rotation(cage, pts, theta, t, 90, ev);
    };
    double a = lo + (1 - kGolden) * (hi - lo), b = lo + kGolden * (hi - lo);
    Vec2 ta, tb;
    double fa = deep_eval(a, ta), fb = deep_eval(b, tb);
    for (int it = 0; it < 48 && !ev.spent(); ++it) {
      if (fa < fb) {
        lo = a;
        a = b;
        fa = fb;
        ta = tb;
        b = lo + kGolden * (hi - lo);
        fb = deep_eval(b, tb);
      } else {
        hi = b;
        b = a;
        fb = fa;
        tb = ta;
        a = lo + (1 - kGolden) * (hi - lo);
        fa = deep_eval(a, ta);
      }
      double best_f = std::max(fa, fb);
      if (best_f > res.margin) res.margin = best_f;
      if (best_f >= -kFitTol) {
        double theta = fa >= fb ? a : b;
        Vec2 t = fa >= fb ? ta : tb;
        RigidMotion m{theta, t.x, t.y};
        if (certify(cage, w, m)) {
          res.found = true;
          res.motion = m;
          res.margin = best_f;
          return res;
        }
      }
    }
    if (ev.spent()) break;
  }
  return res;
}

Worm random_worm(std::uint64_t seed, int segments) {
  if (segments < 1) throw std::invalid_argument("random_worm: segments must be >= 1");
  Rng rng(seed * 2654435761ULL + 17);
  std::vector<Vec2> pts{{0, 0}};
  double dir = rng.uniform(0, 2 * M_PI);
  for (int i = 0; i < segments; ++i) {
    if (i > 0) dir += rng.uniform(-2.5, 2.5);
    double len = rng.uniform(0.3, 1.0);
    Vec2 last = pts.back();
    pts.push_back({last.x + len * std::cos(dir), last.y + len * std::sin(dir)});
  }
  return make_worm(std::move(pts));
}

std::vector<Worm> three_segment_worms(int grid_steps) {
  if (grid_steps < 2) throw std::invalid_argument("three_segment_worms: grid_steps must be >= 2");
  const int g = grid_steps;
  std::vector<double> angles{0.0};
  for (int k = 1; k < g; ++k) {
    double a = -M_PI + 2 * M_PI * k / g;
    if (std::abs(a) > 1e-12) angles.push_back(a);
  }
  std::sort(angles.begin(), angles.end());

  std::vector<Worm> out;
  std::map<std::vector<long long>, bool> seen;
  auto emit = [&](double l1, double l2, double l3, double a1, double a2) {
    std::vector<Vec2> pts{{0, 0}};
    double dir = 0;
    for (auto [len, turn] : {std::pair{l1, 0.0}, {l2, a1}, {l3, a2}}) {
      dir += turn;
      if (len <= 0) continue;
      Vec2 last = pts.back();
      pts.push_back({last.x + len * std::cos(dir), last.y + len * std::sin(dir)});
    }
    if (pts.size() < 2) return;
    Worm w = make_worm(std::move(pts));
    std::vector<long long> key;
    for (const auto& p : w.path) {
      key.push_back(std::llround(p.x * 1e9));
      key.push_back(std::llround(p.y * 1e9));
    }
    if (seen.emplace(std::move(key), true).second) out.push_back(std::move(w));
  };
  for (int i = 0; i <= g; ++i)
    for (int j = 0; i + j <= g; ++j) {
      double l1 = double(i) / g, l2 = double(j) / g, l3 = double(g - i - j) / g;
      for (double a1 : angles)
        for (double a2 : angles) emit(l1, l2, l3, a1, a2);
    }
  return out;
}

FalsifyResult cage_falsify(const Cage& c, const std::vector<Worm>& family, long budget) {
  FalsifyResult res;
  // Parallel sweep in ordered chunks so the first failure index is stable.
  const size_t chunk = 64;
  for (size_t base = 0; base < family.size(); base += chunk) {
    size_t count = std::min(chunk, family.size() - base);
    auto fits = parallel_map<FitResult>(
        count, [&](size_t i) { return accommodate(family[base + i], c, budget); });
    for (size_t i = 0; i < count; ++i) {
      if (fits[i].found) continue;
      // Escalated retry before reporting evidence of non-cage-ness.
      FitResult retry = accommodate(family[base + i], c, budget * 4);
      if (retry.found) continue;
      res.falsified = true;
      res.worm_index = static_cast<int>(base + i);
      res.margin = retry.margin;
      return res;
    }
  }
  return res;
}

}  // namespace planelab::cages
