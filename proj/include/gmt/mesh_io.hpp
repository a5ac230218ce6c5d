#pragma once

// Triangle meshes and the OFF subset we read and write: header, counts line,
// vertex lines, and faces with exactly three indices. Comments (#) allowed.

#include "gmt/geometry.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace gmt {

struct TriangleMesh {
  std::vector<Point> vertices;
  std::vector<std::array<int, 3>> triangles;
};

/// Throws Error(Parse) on malformed input or non-triangular faces.
TriangleMesh read_off(std::istream& in);
TriangleMesh read_off_file(const std::string& path);
void write_off(std::ostream& out, const TriangleMesh& mesh);
void write_off_file(const std::string& path, const TriangleMesh& mesh);

}  // namespace gmt
