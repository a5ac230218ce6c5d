#pragma once

// Filling experiments: McShane extensions, candidate fillings of planar
// convex bodies, the sphere-sampling embedding into weighted l2, and the
// l-infinity square non-rigidity witness.

#include "gmt/current.hpp"
#include "gmt/mesh_io.hpp"
#include "gmt/metric_space.hpp"

#include <string>
#include <vector>

namespace gmt {

/// f(x) = min_a (f(a) + L d(x, a)). d_aa holds the distances within A,
/// d_qa the distances from each query point (rows) to A (columns).
/// Throws PairError(NotLipschitz) with the offending pair of A.
Vec mcshane_extend(const Mat& d_aa, const Vec& f, double lipschitz, const Mat& d_qa);

/// Planar convex polygon with counter-clockwise vertices.
class ConvexBody {
 public:
  /// Throws InvalidInput unless the vertices are in strictly convex position
  /// and counter-clockwise.
  explicit ConvexBody(std::vector<Point> vertices);
  static ConvexBody unit_square();
  /// Regular hexagon with circumradius 1 centred at the origin.
  static ConvexBody hexagon();
  static ConvexBody named(const std::string& name);  // "square" or "hexagon"

  const std::vector<Point>& vertices() const { return vertices_; }
  int dim() const { return 2; }
  double volume() const;
  double perimeter() const;
  /// Fan triangulation from vertex 0.
  PolyhedralCurrent current() const;
  PolyhedralCurrent boundary_current() const;
  /// Arc-length position of a boundary point, or -1 if the point is not on
  /// the boundary within tol.
  double boundary_parameter(const Point& p, double tol = 1e-9) const;
  /// Boundary polygon refined at the given boundary points.
  PolyhedralCurrent refined_boundary(const std::vector<Point>& points) const;
  bool contains(const Point& p, double tol = 0.0) const;

 private:
  std::vector<Point> vertices_;
};

/// Triangulated surface X with the boundary identification iota(x) = first
/// two coordinates of each boundary vertex.
struct FillingCandidate {
  std::string name;
  TriangleMesh mesh;
};

struct FillingReport {
  std::string name;
  double volume = 0.0;          // Vol(C)
  double mass_ir = 0.0;         // M^ir([X])
  double mass_star = 0.0;       // M^m*([X])
  double gap_ir = 0.0;          // mass_ir - volume
  double gap_star = 0.0;        // mass_star - volume
  double pushforward_mass = 0.0;  // sum over cells of M^m*(f#cell) in l-infinity
  double max_edge_stretch = 0.0;  // max over edges of |f(u) - f(v)|_inf / length
  bool lipschitz = false;         // max_edge_stretch <= 1 + 1e-12
  bool boundary_matches = false;  // f#[boundary X] equals the refined boundary of C
  bool degree_one = false;        // degree 1 at every sampled point of C
  bool isometric_boundary = false;  // iota preserves all boundary distances within 1e-9
  int boundary_vertices = 0;
};

/// Throws NotIsometric (with the offending boundary vertex pair) when iota
/// is not 1-Lipschitz from the intrinsic metric of X to the plane.
FillingReport ell_infty_filling_bound(const ConvexBody& c, const FillingCandidate& x,
                                      int degree_samples = 20, std::uint64_t seed = 0);

/// Boundary loop of a triangle mesh (counter-clockwise when the triangles
/// are). Throws InvalidInput unless the boundary is a single loop.
std::vector<int> boundary_loop(const TriangleMesh& mesh);

/// The shipped corpus as (body name, candidate): identity square, square tents (0.5, 0.2), square bump,
/// hexagon tent and hexagon bump.
std::vector<std::pair<std::string, FillingCandidate>> filling_corpus(int resolution = 12);
/// body name ("square" or "hexagon") and candidate by corpus name.
FillingCandidate corpus_candidate(const std::string& name, int resolution = 12);
std::string corpus_body(const std::string& name);

struct SphereDiscretization {
  int n = 2;
  std::vector<Vec> directions;
  std::vector<double> weights;  // n / m each

  /// Equally spaced directions for n = 2, a Fibonacci lattice for n = 3.
  static SphereDiscretization uniform(int n, int m);
  int m() const { return static_cast<int>(directions.size()); }
  AmbientNorm weighted_l2() const;
};

Vec phi_embedding(const Vec& x, const SphereDiscretization& d);

struct DetProbeReport {
  int trials = 0;
  int det_violations = 0;     // sqrt(det A^T W A) > 1 + 1e-9
  int ir_violations = 0;      // Jac^ir(W o A) > Jac^ir(max o A) + 1e-9
  int ir_trials = 0;
  double max_det = 0.0;
  double max_ir_excess = -1.0;  // max of Jac^ir(W o A) - Jac^ir(max o A)
};

/// Random A with rows in the closed unit ball (so A is 1-Lipschitz into the
/// max norm) and m uniform in [m_min, m_max]. The Jac^ir comparison runs on
/// the first ir_trials samples.
DetProbeReport det_nonincrease_probe(int trials, int n, int m_min, int m_max, int ir_trials,
                                     std::uint64_t seed = 0);

struct WitnessReport {
  double mass_euclidean = 0.0;
  double mass_max = 0.0;
  double boundary_euclidean = 0.0;
  double boundary_max = 0.0;
  double distance_euclidean = 0.0;  // between (0,0) and (1,1)
  double distance_max = 0.0;
  bool identity_one_lipschitz = false;
};

WitnessReport make_linfty_square();

}  // namespace gmt
