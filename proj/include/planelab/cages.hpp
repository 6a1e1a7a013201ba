// Worm/cage accommodation for Moser's worm problem: decide numerically
// whether a cage accommodates given unit-length worms. A "found" motion is
// certified by an independent recheck; "not found" is evidence at the given
// budget, never a proof.

#pragma once

#include "planelab/geom.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace planelab::cages {

struct Worm {
  std::vector<geom::Vec2> path;  // total length 1 within 1e-12
};

// Builds a worm from an arbitrary polyline by rescaling to unit length.
Worm make_worm(std::vector<geom::Vec2> pts);

class Cage {
 public:
  enum class Kind { Disk, Rhombus, Sector, Polygon };

  static Cage disk(double diameter);
  static Cage rhombus(double d1, double d2);
  static Cage sector(double angle_rad, double radius = 1.0);
  static Cage polygon(std::vector<geom::Vec2> vertices);

  Kind kind() const { return kind_; }
  double area() const;

  // Signed containment margin (>= 0 inside). Exact boundary distance for
  // interior points of the convex shapes; conservative near corners.
  double margin(const geom::Vec2& p) const;

  bool convex() const;
  // Directions of the longest chords, used to seed rotation search.
  std::vector<double> principal_directions() const;
  double scale() const;  // rough circumradius
  std::string name() const;

  const std::vector<geom::Vec2>& polygon_vertices() const;

 private:
  Cage() = default;
  Kind kind_ = Kind::Disk;
  double diameter_ = 1;            // disk
  double d1_ = 1, d2_ = 1;         // rhombus
  double angle_ = 0, radius_ = 1;  // sector
  std::optional<geom::PolygonRegion> poly_;
};

double cage_area(const Cage& c);

struct FitResult {
  bool found = false;
  geom::RigidMotion motion;
  double margin = -std::numeric_limits<double>::infinity();  // best seen
};

// Rotation grid (heuristic alignments first, then a golden-ratio sequence)
// with per-rotation translation maximization, then local refinement.
// budget caps margin evaluations. Disk cages use the constructive
// arclength-midpoint placement, which needs no budget at all.
FitResult accommodate(const Worm& w, const Cage& c, long budget = 100000);

Worm random_worm(std::uint64_t seed, int segments);

// Deterministic enumeration of 3-segment unit chains over a simplex grid of
// lengths and turning angles; duplicates collapsed.
std::vector<Worm> three_segment_worms(int grid_steps);

struct FalsifyResult {
  bool falsified = false;
  int worm_index = -1;
  double margin = 0;  // best margin reached for the falsifying worm
};

// First worm in the family that fails accommodation at the budget and again
// at an escalated (4x) budget.
FalsifyResult cage_falsify(const Cage& c, const std::vector<Worm>& family, long budget = 20000);

}  // namespace planelab::cages
