#pragma once

// Low-dimensional affine geometry: points, affine maps, oriented simplices,
// origin-symmetric polytopes given by facet functionals, half-space clipping.

#include <Eigen/Dense>

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace gmt {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Point = Vec;

bool all_finite(const Vec& v);

/// x -> linear * x + offset
struct AffineMap {
  Mat linear;
  Vec offset;

  AffineMap() = default;
  AffineMap(Mat linear_part, Vec offset_part);

  static AffineMap identity(int dim);
  static AffineMap linear_only(Mat linear_part);

  int in_dim() const { return static_cast<int>(linear.cols()); }
  int out_dim() const { return static_cast<int>(linear.rows()); }
  Vec operator()(const Vec& x) const { return linear * x + offset; }
  /// (this o inner)(x) = this(inner(x))
  AffineMap after(const AffineMap& inner) const;
};

/// Oriented affine k-simplex in R^N. The orientation multiplies the
/// orientation induced by the vertex order.
struct Simplex {
  std::vector<Point> vertices;
  int orientation = 1;

  Simplex() = default;
  explicit Simplex(std::vector<Point> verts, int orient = 1);

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  int ambient_dim() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.front().size());
  }
  /// N x k matrix whose columns are v_i - v_0.
  Mat edge_matrix() const;
  Point barycenter() const;
  double max_edge_length() const;
  Simplex reversed() const;
};

/// Gram determinant det(E^T E) of the edge matrix.
double gram_determinant(const Simplex& s);

/// Scale-invariant rejection test: det G < 1e-20 * (max edge)^(2k).
bool is_degenerate(const Simplex& s);

struct VolumeResult {
  double value = 0.0;
  bool degenerate = false;
};

/// k-dimensional Euclidean Hausdorff measure sqrt(det G) / k!.
VolumeResult simplex_volume(const Simplex& s);

double factorial(int k);

/// Volume of the Euclidean unit ball in R^k.
double unit_ball_volume(int k);

/// Sign (+1/-1) of the frame of `piece` expressed in the tangent coordinates
/// of `reference` (both k-simplices spanning the same k-plane), ignoring the
/// stored orientation fields. Returns 0 for degenerate pieces.
int frame_sign_in(const Simplex& piece, const Simplex& reference);

/// {v : |xi_j . v| <= 1 for all j}
struct SymmetricPolytope {
  std::vector<Vec> facets;

  int dim() const {
    return facets.empty() ? 0 : static_cast<int>(facets.front().size());
  }
  bool contains(const Vec& v, double tol = 0.0) const;
  /// Gauge function max_j |xi_j . v|.
  double gauge(const Vec& v) const;
};

struct PolytopeVolume {
  double value = 0.0;
  double std_error = 0.0;  // zero on the exact path
  bool exact = true;
};

/// Exact for dimension <= 3 (vertex enumeration plus facet fans); radial
/// Monte Carlo with a reported standard error above that.
PolytopeVolume polytope_volume(const SymmetricPolytope& p,
                               std::uint64_t seed = 0,
                               std::size_t samples = 400000);

/// Vertices of a symmetric polytope in dimension 2 (counter-clockwise) or 3.
std::vector<Vec> polytope_vertices(const SymmetricPolytope& p);

/// Deduplicates points up to an absolute tolerance (max-norm). The first
/// inserted representative is kept.
class PointPool {
 public:
  explicit PointPool(double tolerance);

  /// Index of an existing point within tolerance, or of the newly added one.
  int insert(const Point& p);
  /// -1 when absent.
  int find(const Point& p) const;
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double tolerance() const { return tol_; }

 private:
  std::uint64_t key_of(const std::vector<long long>& cell) const;
  std::vector<long long> cell_of(const Point& p) const;

  double tol_;
  std::vector<Point> points_;
  std::unordered_map<std::uint64_t, std::vector<int>> grid_;
};

/// Lexicographic comparison of coordinate tuples.
bool lex_less(const Point& a, const Point& b);

/// {x : normal . x <= offset}
struct HalfSpace {
  Vec normal;
  double offset = 0.0;

  bool contains(const Vec& x, double tol = 0.0) const {
    return normal.dot(x) <= offset + tol;
  }
  HalfSpace complement() const { return {-normal, -offset}; }
};

/// Triangulation of s intersected with h. Pieces carry the orientation of s;
/// degenerate pieces are dropped. Empty result for an empty intersection.
std::vector<Simplex> clip_simplex_halfspace(const Simplex& s, const HalfSpace& h);

/// Clips against every half-space in turn.
std::vector<Simplex> clip_simplex_region(const Simplex& s,
                                         const std::vector<HalfSpace>& region);

/// Unoriented (k-1)-simplices triangulating s intersected with the hyperplane
/// {normal . x = level}. Throws DegenerateLevel if a vertex lies on the
/// hyperplane (relative tolerance 1e-12).
std::vector<std::vector<Point>> triangulate_cut(const Simplex& s, const Vec& normal,
                                                double level);

}  // namespace gmt
