#include "planelab/svg.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace planelab {

namespace {
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}
}  // namespace

void SvgCanvas::grow(const geom::Vec2& p, double r) {
  minx_ = std::min(minx_, p.x - r);
  miny_ = std::min(miny_, p.y - r);
  maxx_ = std::max(maxx_, p.x + r);
  maxy_ = std::max(maxy_, p.y + r);
}

void SvgCanvas::polyline(const std::vector<geom::Vec2>& pts, const std::string& stroke,
                         double width) {
  if (pts.size() < 2) return;
  std::ostringstream os;
  os << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width)
     << "\" points=\"";
  for (const auto& p : pts) {
    os << fmt(p.x) << "," << fmt(-p.y) << " ";
    grow(p);
  }
  os << "\"/>";
  elems_.push_back(os.str());
}

void SvgCanvas::polygon(const std::vector<geom::Vec2>& pts, const std::string& fill,
                        const std::string& stroke, double width) {
  if (pts.size() < 3) return;
  std::ostringstream os;
  os << "<polygon fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
     << fmt(width) << "\" points=\"";
  for (const auto& p : pts) {
    os << fmt(p.x) << "," << fmt(-p.y) << " ";
    grow(p);
  }
  os << "\"/>";
  elems_.push_back(os.str());
}

void SvgCanvas::circle(const geom::Vec2& c, double r, const std::string& fill,
                       const std::string& stroke, double width) {
  std::ostringstream os;
  os << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(-c.y) << "\" r=\"" << fmt(r)
     << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width)
     << "\"/>";
  grow(c, r);
  elems_.push_back(os.str());
}

void SvgCanvas::segment(const geom::Vec2& a, const geom::Vec2& b, const std::string& stroke,
                        double width) {
  std::ostringstream os;
  os << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(-a.y) << "\" x2=\"" << fmt(b.x)
     << "\" y2=\"" << fmt(-b.y) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width)
     << "\"/>";
  grow(a);
  grow(b);
  elems_.push_back(os.str());
}

void SvgCanvas::line(double a, double b, double c, const std::string& stroke, double width) {
  // Clip against the current bounds (plus slack); fall back to a unit box
  // when nothing has been drawn yet.
  double x0 = minx_ < maxx_ ? minx_ : -1, x1 = minx_ < maxx_ ? maxx_ : 1;
  double y0 = miny_ < maxy_ ? miny_ : -1, y1 = miny_ < maxy_ ? maxy_ : 1;
  double pad = 0.05 * std::max(x1 - x0, y1 - y0);
  x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
  std::vector<geom::Vec2> hits;
  auto add = [&](double x, double y) {
    if (x >= x0 - 1e-12 && x <= x1 + 1e-12 && y >= y0 - 1e-12 && y <= y1 + 1e-12)
      hits.push_back({x, y});
  };
  if (std::abs(b) > 1e-300) {
    add(x0, (-c - a * x0) / b);
    add(x1, (-c - a * x1) / b);
  }
  if (std::abs(a) > 1e-300) {
    add((-c - b * y0) / a, y0);
    add((-c - b * y1) / a, y1);
  }
  for (size_t i = 0; i < hits.size(); ++i)
    for (size_t j = i + 1; j < hits.size(); ++j)
      if (geom::dist(hits[i], hits[j]) > 1e-9) {
        segment(hits[i], hits[j], stroke, width);
        return;
      }
}

std::string SvgCanvas::render() const {
  double x0 = minx_, y0 = miny_, x1 = maxx_, y1 = maxy_;
  if (!(x0 < x1) || !(y0 < y1)) {
    x0 = y0 = -1;
    x1 = y1 = 1;
  }
  double pad = 0.05 * std::max(x1 - x0, y1 - y0);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(x0 - pad) << " "
     << fmt(-y1 - pad) << " " << fmt((x1 - x0) + 2 * pad) << " " << fmt((y1 - y0) + 2 * pad)
     << "\">\n";
  for (const auto& e : elems_) os << "  " << e << "\n";
  os << "</svg>\n";
  return os.str();
}

void SvgCanvas::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << render();
}

}  // namespace planelab
