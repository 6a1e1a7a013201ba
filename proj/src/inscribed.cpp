#include "planelab/inscribed.hpp"

#include "planelab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace planelab::insq {

using geom::Vec2;

ClosedCurve::ClosedCurve(std::vector<Vec2> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 3) throw std::invalid_argument("closed curve needs >= 3 vertices");
  if (!geom::polygon_is_simple(verts_, 1e-12))
    throw std::invalid_argument("closed curve must be simple");
  build_arclength();
}

ClosedCurve::ClosedCurve(std::vector<Vec2> vertices, AlreadySimple) : verts_(std::move(vertices)) {
  build_arclength();
}

void ClosedCurve::build_arclength() {
  cum_.resize(verts_.size() + 1);
  cum_[0] = 0;
  for (size_t i = 0; i < verts_.size(); ++i)
    cum_[i + 1] = cum_[i] + geom::dist(verts_[i], verts_[(i + 1) % verts_.size()]);
  total_len_ = cum_.back();
}

Vec2 ClosedCurve::point_at(double u) const {
  u -= std::floor(u);
  double s = u * total_len_;
  size_t lo = std::upper_bound(cum_.begin(), cum_.end(), s) - cum_.begin();
  lo = lo == 0 ? 0 : lo - 1;
  if (lo >= verts_.size()) lo = verts_.size() - 1;
  const Vec2 &a = verts_[lo], &b = verts_[(lo + 1) % verts_.size()];
  double seg = cum_[lo + 1] - cum_[lo];
  double f = seg > 0 ? (s - cum_[lo]) / seg : 0;
  return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
}

double ClosedCurve::project(const Vec2& p) const {
  double best_d = std::numeric_limits<double>::infinity();
  double best_u = 0;
  size_t n = verts_.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2 &a = verts_[i], &b = verts_[(i + 1) % n];
    Vec2 ab = b - a;
    double len2 = geom::dot(ab, ab);
    double t = len2 > 0 ? std::clamp(geom::dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
    Vec2 q{a.x + t * ab.x, a.y + t * ab.y};
    double d = geom::dist(p, q);
    if (d < best_d) {
      best_d = d;
      best_u = (cum_[i] + t * (cum_[i + 1] - cum_[i])) / total_len_;
    }
  }
  return best_u;
}

double ClosedCurve::distance_to(const Vec2& p) const {
  return geom::dist(p, point_at(project(p)));
}

ClosedCurve ClosedCurve::refined(int k) const {
  if (k < 1) throw std::invalid_argument("refinement factor must be >= 1");
  std::vector<Vec2> out;
  size_t n = verts_.size();
  out.reserve(n * k);
  for (size_t i = 0; i < n; ++i) {
    const Vec2 &a = verts_[i], &b = verts_[(i + 1) % n];
    for (int j = 0; j < k; ++j) {
      double f = double(j) / k;
      out.push_back({a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)});
    }
  }
  // Splitting edges of a simple closed polyline keeps it simple.
  return ClosedCurve(std::move(out), AlreadySimple{});
}

SquareCheck is_square(const Vec2& p1, const Vec2& p2, const Vec2& p3, const Vec2& p4,
                      double tol) {
  SquareCheck r;
  double s1 = geom::dist(p1, p2), s2 = geom::dist(p2, p3);
  double s3 = geom::dist(p3, p4), s4 = geom::dist(p4, p1);
  double d1 = geom::dist(p1, p3), d2 = geom::dist(p2, p4);
  double mean = (s1 + s2 + s3 + s4) / 4.0;
  r.side = mean;
  if (mean <= 0) {
    r.residual = std::numeric_limits<double>::infinity();
    return r;
  }
  double worst = 0;
  for (double s : {s1, s2, s3, s4}) worst = std::max(worst, std::abs(s - mean) / mean);
  const double sqrt2 = std::sqrt(2.0);
  for (double d : {d1, d2}) worst = std::max(worst, std::abs(d - sqrt2 * mean) / (sqrt2 * mean));
  r.residual = worst;
  r.is_square = worst <= tol;
  return r;
}

namespace {

std::array<Vec2, 4> points_of(const ClosedCurve& c, const std::array<double, 4>& u) {
  return {c.point_at(u[0]), c.point_at(u[1]), c.point_at(u[2]), c.point_at(u[3])};
}

double residual_of(const ClosedCurve& c, const std::array<double, 4>& u) {
  auto p = points_of(c, u);
  return is_square(p[0], p[1], p[2], p[3]).residual;
}

// Residual vector for Gauss-Newton: side differences, diagonal difference,
// and the diagonal/side ratio, all scale-balanced.
std::array<double, 5> residual_vec(const ClosedCurve& c, const std::array<double, 4>& u) {
  auto p = points_of(c, u);
  double s1 = geom::dist(p[0], p[1]), s2 = geom::dist(p[1], p[2]);
  double s3 = geom::dist(p[2], p[3]), s4 = geom::dist(p[3], p[0]);
  double d1 = geom::dist(p[0], p[2]), d2 = geom::dist(p[1], p[3]);
  double mean = std::max(1e-300, (s1 + s2 + s3 + s4) / 4.0);
  const double sqrt2 = std::sqrt(2.0);
  return {(s1 - s2) / mean, (s2 - s3) / mean, (s3 - s4) / mean, (d1 - d2) / mean,
          (d1 + d2 - sqrt2 * (s1 + s2 + s3 + s4) / 2.0) / mean};
}

// Damped Gauss-Newton with numerical Jacobian on the 4 curve parameters.
double refine(const ClosedCurve& c, std::array<double, 4>& u, int iters, long& evals) {
  double best = residual_of(c, u);
  const double h = 1e-7;
  for (int it = 0; it < iters; ++it) {
    auto r0 = residual_vec(c, u);
    double J[5][4];
    for (int j = 0; j < 4; ++j) {
      auto up = u;
      up[j] += h;
      auto r1 = residual_vec(c, up);
      for (int i = 0; i < 5; ++i) J[i][j] = (r1[i] - r0[i]) / h;
    }
    evals += 5;
    // Normal equations with Levenberg damping.
    double A[4][4] = {}, g[4] = {};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 4; ++j) {
        g[j] += J[i][j] * r0[i];
        for (int k = 0; k < 4; ++k) A[j][k] += J[i][j] * J[i][k];
      }
    double lambda = 1e-8;
    for (int j = 0; j < 4; ++j) A[j][j] += lambda * (A[j][j] + 1e-12);
    // Gaussian elimination.
    double x[4];
    {
      double M[4][5];
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) M[i][j] = A[i][j];
        M[i][4] = -g[i];
      }
      for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
          if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
        if (std::abs(M[piv][col]) < 1e-300) return best;
        std::swap(M[col], M[piv]);
        for (int r = 0; r < 4; ++r) {
          if (r == col) continue;
          double f = M[r][col] / M[col][col];
          for (int k = col; k < 5; ++k) M[r][k] -= f * M[col][k];
        }
      }
      for (int i = 0; i < 4; ++i) x[i] = M[i][4] / M[i][i];
    }
    // Backtracking line search on the scalar residual.
    double step = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 12; ++bt) {
      std::array<double, 4> cand = u;
      for (int j = 0; j < 4; ++j) cand[j] += step * x[j];
      double rc = residual_of(c, cand);
      ++evals;
      if (rc < best) {
        u = cand;
        best = rc;
        accepted = true;
        break;
      }
      step /= 2;
    }
    if (!accepted) break;
    if (best < 1e-14) break;
  }
  return best;
}

}  // namespace

FindResult find_inscribed_squares(const ClosedCurve& c, int grid, double tol, long budget) {
  if (grid < 8) throw std::invalid_argument("find_inscribed_squares: grid must be >= 8");
  FindResult out;

  // Subsampled curve for cheap seed projection.
  const ClosedCurve* proj_curve = &c;
  std::optional<ClosedCurve> coarse;
  if (c.size() > 512) {
    std::vector<Vec2> cs;
    size_t stride = c.size() / 256;
    for (size_t i = 0; i < c.size(); i += stride) cs.push_back(c.vertices()[i]);
    if (cs.size() >= 3) {
      try {
        coarse.emplace(std::move(cs));
        proj_curve = &*coarse;
      } catch (...) {
      }
    }
  }

  // Seed pass: ordered parameter triples, fourth vertex from the
  // square-completion map (rotate p2 by 90 degrees about the p1-p3
  // midpoint), projected back to the curve.
  struct Seed {
    std::array<double, 4> u;
    double res;
  };
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < grid; ++i)
    for (int j = i + 1; j < grid; ++j)
      for (int k = j + 1; k < grid; ++k) triples.push_back({i, j, k});

  auto seeds = parallel_map<Seed>(triples.size(), [&](size_t idx) {
    auto [i, j, k] = triples[idx];
    double u1 = double(i) / grid, u2 = double(j) / grid, u3 = double(k) / grid;
    Vec2 p1 = c.point_at(u1), p2 = c.point_at(u2), p3 = c.point_at(u3);
    Vec2 mid{(p1.x + p3.x) / 2, (p1.y + p3.y) / 2};
    // Square diagonals bisect each other: the vertex opposite p2 is its
    // point reflection through the p1-p3 midpoint.
    Vec2 p4{2 * mid.x - p2.x, 2 * mid.y - p2.y};
    double u4 = proj_curve->project(p4);
    Seed s;
    s.u = {u1, u2, u3, u4};
    s.res = residual_of(c, s.u);
    return s;
  });

  std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
    if (a.res != b.res) return a.res < b.res;
    return a.u < b.u;
  });

  // Budget caps the refinement work (a refine pass costs ~400 residual
  // evaluations on top of the seed scan).
  size_t max_refine = std::min<size_t>(seeds.size(), 4u * grid);
  if (budget > 0) {
    long after_seeds = budget - static_cast<long>(seeds.size());
    max_refine = std::min<size_t>(max_refine,
                                  static_cast<size_t>(std::max(8L, after_seeds / 400)));
  }
  const double keep_res = 0.25;
  std::vector<SquareCandidate> found;
  std::vector<Seed> to_refine;
  for (size_t i = 0; i < max_refine && i < seeds.size() && seeds[i].res < keep_res; ++i)
    to_refine.push_back(seeds[i]);

  auto refined = parallel_map<SquareCandidate>(to_refine.size(), [&](size_t i) {
    long local_evals = 0;
    auto u = to_refine[i].u;
    double res = refine(c, u, 60, local_evals);
    SquareCandidate cand;
    cand.params = u;
    cand.vertices = points_of(c, u);
    auto chk = is_square(cand.vertices[0], cand.vertices[1], cand.vertices[2], cand.vertices[3],
                         tol);
    cand.side = chk.side;
    cand.residual = res;
    return cand;
  });

  const double min_side = 1e-6 * c.length();  // degenerate squares excluded
  for (auto& cand : refined) {
    if (cand.residual > tol || cand.side < min_side) continue;
    // Normalize parameters into [0,1).
    for (auto& u : cand.params) u -= std::floor(u);
    found.push_back(cand);
  }

  // Dedup by parameter distance >= 1/(4 grid).
  std::sort(found.begin(), found.end(), [](const SquareCandidate& a, const SquareCandidate& b) {
    if (a.residual != b.residual) return a.residual < b.residual;
    return a.params[0] < b.params[0];
  });
  const double dedup = 1.0 / (4.0 * grid);
  auto param_dist = [](const SquareCandidate& a, const SquareCandidate& b) {
    double d = 0;
    for (int i = 0; i < 4; ++i) {
      double di = std::abs(a.params[i] - b.params[i]);
      di = std::min(di, 1.0 - di);
      d = std::max(d, di);
    }
    return d;
  };
  for (const auto& cand : found) {
    bool dup = false;
    for (const auto& kept : out.candidates)
      if (param_dist(cand, kept) < dedup) {
        dup = true;
        break;
      }
    if (!dup) out.candidates.push_back(cand);
  }
  std::sort(out.candidates.begin(), out.candidates.end(),
            [](const SquareCandidate& a, const SquareCandidate& b) {
              if (a.residual != b.residual) return a.residual < b.residual;
              return a.params[0] < b.params[0];
            });
  out.family_detected = out.candidates.size() > static_cast<size_t>(grid) / 2;
  return out;
}

bool verify_candidate(const ClosedCurve& c, const SquareCandidate& cand, double tol) {
  ClosedCurve fine = c.refined(4);
  std::array<Vec2, 4> pts;
  for (int i = 0; i < 4; ++i) pts[i] = fine.point_at(cand.params[i]);
  auto chk = is_square(pts[0], pts[1], pts[2], pts[3], std::max(tol, 1e-9));
  if (!chk.is_square) return false;
  for (const auto& p : pts)
    if (c.distance_to(p) > std::max(tol, 1e-9) * std::max(1.0, c.length())) return false;
  return true;
}

}  // namespace planelab::insq
