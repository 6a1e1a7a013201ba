// Numerical inscribed-square finder for closed polygonal Jordan curves.
//
// Candidates are found by seeding parameter triples on a coarse grid,
// completing the fourth vertex with the square-completion map, and then
// damped Gauss-Newton refinement of the residual. An empty result means
// "none found at this budget", never a disproof.

#pragma once

#include "planelab/geom.hpp"

#include <optional>
#include <vector>

namespace planelab::insq {

class ClosedCurve {
 public:
  // Vertices of a simple closed polyline (closing edge implied).
  explicit ClosedCurve(std::vector<geom::Vec2> vertices);

  geom::Vec2 point_at(double u) const;  // arclength-proportional, u mod 1
  double length() const { return total_len_; }
  size_t size() const { return verts_.size(); }
  const std::vector<geom::Vec2>& vertices() const { return verts_; }

  // Curve parameter of the point closest to p (coarse + local refine).
  double project(const geom::Vec2& p) const;
  double distance_to(const geom::Vec2& p) const;

  // Same geometry re-sampled with each edge split in k parts.
  ClosedCurve refined(int k) const;

 private:
  struct AlreadySimple {};
  ClosedCurve(std::vector<geom::Vec2> vertices, AlreadySimple);
  void build_arclength();
  std::vector<geom::Vec2> verts_;
  std::vector<double> cum_;  // cumulative arclength, cum_[0] = 0
  double total_len_ = 0;
};

struct SquareCheck {
  bool is_square = false;
  double residual = 0;  // worst relative deviation
  double side = 0;
};

// Four equal sides, two equal diagonals, diagonal/side = sqrt(2), all within
// tol (relative to the mean side).
SquareCheck is_square(const geom::Vec2& p1, const geom::Vec2& p2, const geom::Vec2& p3,
                      const geom::Vec2& p4, double tol = 1e-9);

struct SquareCandidate {
  std::array<double, 4> params;  // cyclic order on the curve
  std::array<geom::Vec2, 4> vertices;
  double side = 0;
  double residual = 0;
};

struct FindResult {
  std::vector<SquareCandidate> candidates;  // sorted by (residual, u1)
  bool family_detected = false;  // > grid/2 distinct hits (rotational family)
};

FindResult find_inscribed_squares(const ClosedCurve& c, int grid = 64, double tol = 1e-6,
                                  long budget = 100000);

// Independent recheck on a 4x refined curve plus curve-distance test.
bool verify_candidate(const ClosedCurve& c, const SquareCandidate& cand, double tol = 1e-6);

}  // namespace planelab::insq
