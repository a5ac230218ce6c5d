#pragma once

// The flat football M_eps = B_- u R_eps u B_+: a lower unit half-disk, a
// strip of width eps with a slot of length L cut out of its middle, and an
// upper half-disk shifted up by eps. The collapse map f_eps squeezes the
// strip onto the x-axis.

#include "gmt/current.hpp"
#include "gmt/flatnorm.hpp"
#include "gmt/mesh_io.hpp"
#include "gmt/metric_space.hpp"

#include <vector>

namespace gmt {

struct FootballParams {
  double eps = 0.05;
  double slot = 1.0;   // L, in (0, 2)
  double h = 0.01;     // target mesh size
  double probe_t = 0.01;  // probe points (0, -t) and (0, eps + t)
};

struct Football {
  FootballParams params;
  TriangleMesh mesh;           // planar, counter-clockwise triangles
  PolyhedralCurrent current;   // [M_eps]
  PiecewiseAffineMap collapse;  // f_eps
  int probe_below = -1;        // vertex index of (0, -t)
  int probe_above = -1;        // vertex index of (0, eps + t)
};

/// Throws InvalidInput unless 0 < L < 2, eps > 0, h > 0 and 0 < t < 1 - h.
Football make_flat_football(const FootballParams& p);

PiecewiseAffineMap football_collapse(double eps);

struct FootballReport {
  double area = 0.0;              // Vol^2(M_eps)
  double max_edge_stretch = 0.0;  // of f_eps over mesh edges
  double across_distance = 0.0;   // intrinsic distance between the probes
  double slit_distance = 0.0;     // 2 sqrt((L/2)^2 + t^2)
  double straight_distance = 0.0;  // eps + 2t, the distance in the plane
  int vertices = 0;
  int triangles = 0;
  PolyhedralCurrent boundary_image = PolyhedralCurrent::zero(AmbientNorm::euclidean(2), 1);  // f_eps#[boundary M_eps]
  int boundary_loops = 0;
  int boundary_paths = 0;
  double winding_number = 0.0;  // of the boundary image about the origin
  double boundary_image_mass = 0.0;
};

FootballReport football_report(const Football& f);

/// Signed angle sum of a 1-cycle about `center`, divided by 2 pi.
double winding_number(const PolyhedralCurrent& cycle, const Point& center);

/// Boundary of the planar domain D_eps (outer loop plus the slot hole) with
/// polygons of `segments` edges per half-circle, and the matching polygonal
/// unit circle sharing the lower half.
PolyhedralCurrent football_domain_boundary(double eps, double slot, int segments);
PolyhedralCurrent polygonal_circle(int segments);

struct FootballFlatReport {
  double eps = 0.0;
  double flat_distance = 0.0;  // F(boundary D_eps - S^1) in a box complex
  double filling_bound = 0.0;  // (2 + L) eps, mass of the symmetric difference
  bool certified = false;
};

FootballFlatReport football_flat_distance(double eps, double slot, int segments);

}  // namespace gmt
