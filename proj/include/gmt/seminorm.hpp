#pragma once

#include "gmt/geometry.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace gmt {

/// Norm on the ambient R^N.
///
/// Product norms combine block norms on consecutive coordinate blocks as
/// sqrt(sum_b |x_b|_b^2); they carry the l2-products sigma_1 x sigma_2 of
/// seminorms and the cone-chart differentials.
class AmbientNorm {
 public:
  enum class Kind { Euclidean, MaxNorm, SumNorm, Quadratic, Product };

  static AmbientNorm euclidean(int dim);
  static AmbientNorm max_norm(int dim);
  static AmbientNorm sum_norm(int dim);
  /// q must be symmetric positive semidefinite; |x| = sqrt(x^T q x).
  static AmbientNorm quadratic(Mat q);
  static AmbientNorm product(std::vector<AmbientNorm> parts);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  const Mat& quadratic_form() const { return q_; }
  const std::vector<AmbientNorm>& parts() const { return parts_; }

  double operator()(const Vec& x) const;
  bool operator==(const AmbientNorm& other) const;

  /// Short tag used by the JSON schema and the CLI: l2, linf, l1, quad, prod.
  std::string tag() const;

 private:
  AmbientNorm(Kind kind, int dim) : kind_(kind), dim_(dim) {}

  Kind kind_;
  int dim_;
  Mat q_;
  std::vector<AmbientNorm> parts_;
};

/// sigma(v) = ambient(A v) on R^k, A an N x k matrix.
class Seminorm {
 public:
  Seminorm(Mat a, AmbientNorm ambient);

  /// The ambient norm itself, viewed as a seminorm on R^N.
  static Seminorm of(const AmbientNorm& ambient);

  int domain_dim() const { return static_cast<int>(a_.cols()); }
  const Mat& matrix() const { return a_; }
  const AmbientNorm& ambient() const { return ambient_; }

  double evaluate(const Vec& v) const;
  double operator()(const Vec& v) const { return evaluate(v); }

  /// sigma o T for a linear map T: R^j -> R^k.
  Seminorm compose(const Mat& t) const;
  Seminorm scaled(double lambda) const;

  /// True when A has a nontrivial kernel (relative tolerance 1e-12).
  bool is_degenerate() const;

 private:
  Mat a_;
  AmbientNorm ambient_;
};

/// (v1, v2) -> sqrt(s1(v1)^2 + s2(v2)^2).
Seminorm product(const Seminorm& s1, const Seminorm& s2);

/// Metric differential of a piecewise-affine map on a cell: its linear part
/// read through the target norm.
Seminorm metric_differential(const AffineMap& f, const AmbientNorm& target);

/// Representation sigma(v) = max_i |G_i v|_2 with r_i x k blocks G_i. Every
/// supported ambient lowers to this form; polytopal norms have only rank-one
/// blocks (rows are facet functionals).
struct GaugeBlocks {
  std::vector<Mat> blocks;

  int dim() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().cols()); }
  bool polytopal() const;
  double evaluate(const Vec& v) const;
};

GaugeBlocks gauge_blocks(const Seminorm& s);

/// {v : v^T M v <= 1}, M symmetric positive definite.
struct Ellipsoid {
  Mat shape;

  int dim() const { return static_cast<int>(shape.rows()); }
  double volume() const;
  bool contains(const Vec& v, double tol = 0.0) const;
};

/// Unit ball that is neither a polytope nor an ellipsoid.
struct GaugeBody {
  GaugeBlocks gauge;
};

using UnitBall = std::variant<SymmetricPolytope, Ellipsoid, GaugeBody>;

/// Throws UnboundedBall for degenerate seminorms.
UnitBall unit_ball(const Seminorm& s);

/// Dual norm sup{xi.x : |x| <= 1}; Lipschitz constant of x -> xi.x.
/// Quadratic ambients must be positive definite.
double dual_norm(const AmbientNorm& n, const Vec& xi);

}  // namespace gmt
