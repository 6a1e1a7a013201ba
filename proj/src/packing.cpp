#include "planelab/packing.hpp"

#include "planelab/parallel.hpp"
#include "planelab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace planelab::packing {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;

// Inward margins to the three side lines.
std::array<double, 3> side_margins(double s, const geom::Vec2& c) {
  return {c.y, (kSqrt3 * c.x - c.y) / 2.0, (kSqrt3 * (s - c.x) - c.y) / 2.0};
}
}  // namespace

double triangle_margin(double side, const geom::Vec2& c) {
  auto m = side_margins(side, c);
  return std::min({m[0], m[1], m[2]});
}

VerifyResult verify_packing(const PackingInstance& inst, double tol) {
  VerifyResult r;
  if (inst.centers.empty()) throw std::invalid_argument("verify_packing: no centers");
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& c : inst.centers) worst = std::min(worst, triangle_margin(inst.side, c) - 1.0);
  for (size_t i = 0; i < inst.centers.size(); ++i)
    for (size_t j = i + 1; j < inst.centers.size(); ++j)
      worst = std::min(worst, geom::dist(inst.centers[i], inst.centers[j]) - 2.0);
  r.worst_margin = worst;
  r.valid = worst >= -tol;
  return r;
}

std::optional<TriangularNumber> triangular_index(long long n) {
  if (n < 1) return std::nullopt;
  long long k = static_cast<long long>((std::sqrt(8.0 * n + 1) - 1) / 2);
  for (long long kk = std::max(1LL, k - 1); kk <= k + 1; ++kk)
    if (kk * (kk + 1) / 2 == n) return TriangularNumber{static_cast<int>(kk), n};
  return std::nullopt;
}

PackingInstance optimal_triangular_packing(int k) {
  if (k < 1) throw std::invalid_argument("optimal_triangular_packing: k must be >= 1");
  PackingInstance inst;
  inst.side = 2.0 * (k - 1) + 2.0 * kSqrt3;
  for (int row = 0; row < k; ++row) {
    double y = 1.0 + kSqrt3 * row;
    for (int col = 0; col < k - row; ++col)
      inst.centers.push_back({kSqrt3 + row + 2.0 * col, y});
  }
  return inst;
}

namespace {

// One penalty-descent pass: push overlapping circles apart, pull strays back
// inside the wall offset. Returns the worst margin reached.
double descend(double side, std::vector<geom::Vec2>& c, int sweeps) {
  const size_t n = c.size();
  double worst = -std::numeric_limits<double>::infinity();
  for (int it = 0; it < sweeps; ++it) {
    worst = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
      auto m = side_margins(side, c[i]);
      // Wall projections: each violated side pushes along its inward normal.
      if (m[0] < 1.0) c[i].y += 1.0 - m[0];
      if (m[1] < 1.0) {
        double d = 1.0 - m[1];
        c[i].x += d * kSqrt3 / 2.0;
        c[i].y -= d / 2.0;
      }
      if (m[2] < 1.0) {
        double d = 1.0 - m[2];
        c[i].x -= d * kSqrt3 / 2.0;
        c[i].y -= d / 2.0;
      }
    }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        geom::Vec2 delta = c[j] - c[i];
        double d = geom::norm(delta);
        if (d < 1e-12) {  // coincident: split along a fixed direction
          c[i].x -= 1.0;
          c[j].x += 1.0;
          continue;
        }
        if (d < 2.0) {
          double push = (2.0 - d) / (2.0 * d);
          c[i].x -= delta.x * push;
          c[i].y -= delta.y * push;
          c[j].x += delta.x * push;
          c[j].y += delta.y * push;
        }
      }
    for (const auto& p : c) worst = std::min(worst, triangle_margin(side, p) - 1.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) worst = std::min(worst, geom::dist(c[i], c[j]) - 2.0);
    if (worst >= -1e-9) return worst;
  }
  return worst;
}

bool centers_less(const std::vector<geom::Vec2>& a, const std::vector<geom::Vec2>& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i].x != b[i].x) return a[i].x < b[i].x;
    if (a[i].y != b[i].y) return a[i].y < b[i].y;
  }
  return a.size() < b.size();
}

}  // namespace

PackingInstance optimize_packing(int n, std::uint64_t seed, long budget) {
  if (n < 1) throw std::invalid_argument("optimize_packing: n must be >= 1");

  // Feasible start: subset of the smallest grid holding n circles.
  int k_min = 1;
  while (k_min * (k_min + 1) / 2 < n) ++k_min;
  PackingInstance grid = optimal_triangular_packing(k_min);
  PackingInstance best;
  best.side = grid.side;
  best.centers.assign(grid.centers.begin(), grid.centers.begin() + n);
  if (!verify_packing(best, 1e-9).valid)
    throw std::runtime_error("optimize_packing: seed instance infeasible");
  if (budget <= 0)
    throw std::runtime_error("optimize_packing: budget exhausted before any feasible instance");

  double lo = std::max(2.0 * kSqrt3, std::sqrt(4.0 * n * M_PI / kSqrt3));
  double hi = best.side;

  const int kRestarts = 8;
  const int kSweeps = 240;
  const long phase_cost = static_cast<long>(kRestarts) * kSweeps;

  long spent = 0;
  int phase = 0;
  while (spent + phase_cost <= budget && hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    struct Attempt {
      bool feasible = false;
      std::vector<geom::Vec2> centers;
    };
    auto attempts = parallel_map<Attempt>(kRestarts, [&](size_t r) {
      Rng rng = Rng::derive(seed, (static_cast<std::uint64_t>(phase) << 8) | r);
      std::vector<geom::Vec2> c;
      if (r == 0) {
        // Structured start: grid subset squeezed toward the incenter.
        geom::Vec2 incenter{mid / 2.0, mid / (2.0 * kSqrt3)};
        double r_now = mid / (2.0 * kSqrt3) - 1.0;
        double r_grid = grid.side / (2.0 * kSqrt3) - 1.0;
        double lam = r_grid > 1e-12 ? r_now / r_grid : 0.0;
        geom::Vec2 g_incenter{grid.side / 2.0, grid.side / (2.0 * kSqrt3)};
        for (int i = 0; i < n; ++i) {
          geom::Vec2 d = grid.centers[i] - g_incenter;
          c.push_back({incenter.x + lam * d.x, incenter.y + lam * d.y});
        }
      } else {
        for (int i = 0; i < n; ++i) {
          // Uniform in the valid-offset triangle via barycentric folding.
          double u = rng.uniform(), v = rng.uniform();
          if (u + v > 1) {
            u = 1 - u;
            v = 1 - v;
          }
          double w = 1 - u - v;
          double in_r = mid / (2.0 * kSqrt3) - 1.0;
          geom::Vec2 a{mid / 2.0 - in_r * kSqrt3, 1.0};
          geom::Vec2 b{mid / 2.0 + in_r * kSqrt3, 1.0};
          geom::Vec2 t{mid / 2.0, 1.0 + 3.0 * in_r};
          c.push_back({u * a.x + v * b.x + w * t.x, u * a.y + v * b.y + w * t.y});
        }
      }
      Attempt att;
      double worst = descend(mid, c, kSweeps);
      att.feasible = worst >= -1e-9;
      att.centers = std::move(c);
      return att;
    });
    spent += phase_cost;
    ++phase;

    const Attempt* found = nullptr;
    for (const auto& a : attempts) {
      if (!a.feasible) continue;
      if (!found || centers_less(a.centers, found->centers)) found = &a;
    }
    if (found) {
      hi = mid;
      best.side = mid;
      best.centers = found->centers;
    } else {
      lo = mid;
    }
  }
  return best;
}

ErdosOlerReport erdos_oler_check(int k, std::uint64_t seed, long budget) {
  if (k < 2) throw std::invalid_argument("erdos_oler_check: k must be >= 2");
  ErdosOlerReport rep;
  rep.k = k;
  rep.n = static_cast<long long>(k) * (k + 1) / 2;
  rep.side_n = optimal_triangular_packing(k).side;
  PackingInstance m1 = optimize_packing(static_cast<int>(rep.n) - 1, seed, budget);
  rep.side_n_minus_1 = m1.side;
  rep.gap = rep.side_n - rep.side_n_minus_1;
  return rep;
}

}  // namespace planelab::packing
