#pragma once

// Static SVG 1.1 figures of planar currents and triangle meshes. Stroke width
// of a 1-cell grows with |multiplicity|; 2-cells are filled with an opacity
// that grows with |multiplicity|; 0-cells are dots.

#include "gmt/current.hpp"
#include "gmt/mesh_io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gmt {

class SvgFigure {
 public:
  explicit SvgFigure(double width_px = 480.0) : width_px_(width_px) {}

  /// Throws DimensionMismatch unless the current lives in the plane.
  void add_current(const PolyhedralCurrent& t, const std::string& color);
  void add_mesh(const TriangleMesh& mesh, const std::string& color);

  void write(std::ostream& out) const;
  void write_file(const std::string& path) const;

 private:
  struct Item {
    std::vector<Point> points;
    long long multiplicity = 1;
    std::string color;
    bool outline_only = false;
  };
  double width_px_;
  std::vector<Item> items_;
};

}  // namespace gmt
