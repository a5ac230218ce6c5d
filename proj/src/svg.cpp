#include "gmt/svg.hpp"

#include "gmt/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace gmt {

void SvgFigure::add_current(const PolyhedralCurrent& t, const std::string& color) {
  if (t.ambient_dim() != 2) throw Error(ErrorCode::DimensionMismatch, "svg: only planar currents");
  for (const auto& c : t.cells()) {
    items_.push_back({c.simplex.vertices, c.multiplicity * c.simplex.orientation, color, false});
  }
}

void SvgFigure::add_mesh(const TriangleMesh& mesh, const std::string& color) {
  for (const auto& tr : mesh.triangles) {
    std::vector<Point> pts;
    for (int i : tr) {
      const Point& p = mesh.vertices[static_cast<std::size_t>(i)];
      if (p.size() < 2) throw Error(ErrorCode::DimensionMismatch, "svg: mesh vertices need two coordinates");
      pts.push_back(p.head(2));
    }
    items_.push_back({std::move(pts), 1, color, true});
  }
}

void SvgFigure::write(std::ostream& out) const {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const auto& it : items_) {
    for (const auto& p : it.points) {
      lo_x = std::min(lo_x, p(0));
      hi_x = std::max(hi_x, p(0));
      lo_y = std::min(lo_y, p(1));
      hi_y = std::max(hi_y, p(1));
    }
  }
  if (items_.empty()) lo_x = lo_y = 0.0, hi_x = hi_y = 1.0;
  const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double pad = 0.05 * extent;
  const double scale = width_px_ / (extent + 2 * pad);
  const double w = std::ceil((hi_x - lo_x + 2 * pad) * scale);
  const double h = std::ceil((hi_y - lo_y + 2 * pad) * scale);
  auto px = [&](const Point& p) {
    std::ostringstream s;
    s.precision(6);
    s << (p(0) - lo_x + pad) * scale << ',' << (hi_y + pad - p(1)) * scale;
    return s.str();
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  for (const auto& it : items_) {
    const double m = static_cast<double>(std::llabs(it.multiplicity));
    if (it.points.size() == 1) {
      const std::string c = px(it.points[0]);
      const auto comma = c.find(',');
      out << "  <circle cx=\"" << c.substr(0, comma) << "\" cy=\"" << c.substr(comma + 1) << "\" r=\""
          << 2.0 + m << "\" fill=\"" << it.color << "\"/>\n";
    } else if (it.points.size() == 2) {
      out << "  <polyline points=\"" << px(it.points[0]) << ' ' << px(it.points[1]) << "\" fill=\"none\" stroke=\""
          << it.color << "\" stroke-width=\"" << m << "\"/>\n";
    } else {
      out << "  <polygon points=\"";
      for (std::size_t i = 0; i < it.points.size(); ++i) out << (i ? " " : "") << px(it.points[i]);
      if (it.outline_only) {
        out << "\" fill=\"none\" stroke=\"" << it.color << "\" stroke-width=\"0.3\"/>\n";
      } else {
        out << "\" fill=\"" << it.color << "\" fill-opacity=\"" << std::min(1.0, 0.25 * m)
            << "\" stroke=\"none\"/>\n";
      }
    }
  }
  out << "</svg>\n";
}

void SvgFigure::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  write(out);
}

}  // namespace gmt
