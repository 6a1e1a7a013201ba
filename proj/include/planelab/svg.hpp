// Minimal SVG emitter. Presentation only, never parsed back; the viewBox is
// grown to cover every element so output is always visually bounded.

#pragma once

#include "planelab/geom.hpp"

#include <string>
#include <vector>

namespace planelab {

class SvgCanvas {
 public:
  void polyline(const std::vector<geom::Vec2>& pts, const std::string& stroke = "#1f4e8c",
                double width = 0.01);
  void polygon(const std::vector<geom::Vec2>& pts, const std::string& fill = "none",
               const std::string& stroke = "#222222", double width = 0.01);
  void circle(const geom::Vec2& c, double r, const std::string& fill = "none",
              const std::string& stroke = "#222222", double width = 0.01);
  void segment(const geom::Vec2& a, const geom::Vec2& b, const std::string& stroke = "#aa3333",
               double width = 0.01);

  // Infinite line a x + b y + c = 0, clipped to the current bounds.
  void line(double a, double b, double c, const std::string& stroke = "#1f4e8c",
            double width = 0.01);

  std::string render() const;
  void save(const std::string& path) const;

 private:
  void grow(const geom::Vec2& p, double r = 0);
  std::vector<std::string> elems_;
  double minx_ = 1e300, miny_ = 1e300, maxx_ = -1e300, maxy_ = -1e300;
};

}  // namespace planelab
