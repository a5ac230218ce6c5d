#pragma once

// Planar constrained triangulation: incremental Lawson insertion followed by
// flip-based recovery of constraint edges.

#include <Eigen/Dense>

#include <array>
#include <utility>
#include <vector>

namespace gmt {

using Point2 = Eigen::Vector2d;

struct Triangulation2D {
  std::vector<Point2> points;               // the input points, same indices
  std::vector<std::array<int, 3>> triangles;  // counter-clockwise
};

/// Triangulates `points` so that every constraint segment (pair of point
/// indices) is an edge. Triangles touching the auxiliary enclosing triangle
/// are dropped, so the hull is only guaranteed where constraints bound it;
/// callers close their domain with constraint edges. Points must be distinct. Throws PairError(RefinementFailure) when a constraint passes
/// through another point or two constraints cross.
Triangulation2D constrained_triangulation(const std::vector<Point2>& points,
                                          const std::vector<std::pair<int, int>>& constraints);

/// Signed doubled area of (a, b, c), positive for counter-clockwise.
double orient2d(const Point2& a, const Point2& b, const Point2& c);

}  // namespace gmt
