// Bellman lost-in-forest toolkit: strip-escape certification via minimal
// width, fat-forest detection, and escape-path falsification.
//
// "Best" is the worst-case reading: the shortest trajectory guaranteeing
// escape. A found trapping placement proves a path does NOT guarantee
// escape; an empty search is evidence only.

#pragma once

#include "planelab/geom.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace planelab::forest {

struct StripForest {
  double width;  // region 0 <= y <= width, infinite in x
};

class Forest {
 public:
  static Forest strip(double width);
  static Forest polygon(std::vector<geom::Vec2> vertices);

  bool is_strip() const { return std::holds_alternative<StripForest>(shape_); }
  double strip_width() const { return std::get<StripForest>(shape_).width; }
  const geom::PolygonRegion& poly() const { return std::get<geom::PolygonRegion>(shape_); }

  double margin(const geom::Vec2& p) const;
  // Search window for translations (strips are x-invariant).
  void translation_window(double& x0, double& x1, double& y0, double& y1) const;

 private:
  std::variant<StripForest, geom::PolygonRegion> shape_;
};

struct EscapePath {
  std::vector<geom::Vec2> path;
};

EscapePath segment_path(double length);

// True iff the minimal directional extent of the (densified) path is at
// least the strip width: then no placement of the path, under any rotation,
// fits strictly between the strip walls.
bool strip_escape_certifies(const EscapePath& p, double width);

// Diameter pair of the polygon, then containment of the rhombus with
// diagonals L and L/sqrt(3) on that segment. Returns L when fat.
std::optional<double> is_fat_forest(const Forest& f, double tol = 1e-9);

EscapePath best_path_fat(double L);

struct Placement {
  bool found = false;
  geom::RigidMotion motion;
  double margin = -std::numeric_limits<double>::infinity();
};

// Orientation grid x translation lattice, refined by coordinate descent.
// "Trapped" requires the whole path strictly inside (margin >= 1e-9).
Placement escape_falsify(const Forest& f, const EscapePath& p, int orientation_samples = 360,
                         int grid = 24);

}  // namespace planelab::forest
