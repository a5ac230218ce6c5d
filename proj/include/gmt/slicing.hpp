#pragma once

// Slicing polyhedral currents by affine maps.
//
// Orientation convention: a slice piece inside a cell is oriented so that
// (n, f_1, ..., f_{k-1}) is a positive frame of the cell, where n is the
// tangential gradient of the slicing function and f_i is a positive frame of
// the piece. With this choice  boundary(slice(T)) = -slice(boundary(T)).

#include "gmt/current.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gmt {

/// Orthogonal projection R^N -> R^m given by orthonormal rows.
struct Projection {
  Mat matrix;

  explicit Projection(Mat rows);
  static Projection axis(int ambient_dim, int axis);
  int m() const { return static_cast<int>(matrix.rows()); }
};

/// Slice by a scalar piecewise-affine map g (target dimension 1) at `level`.
/// Throws DegenerateLevel if the level hits the image of a vertex.
PolyhedralCurrent slice(const PolyhedralCurrent& t, const PiecewiseAffineMap& g, double level);

/// Iterated codimension-one slicing, rows in order.
PolyhedralCurrent slice(const PolyhedralCurrent& t, const Projection& rho, const Vec& p);

/// Sorted distinct values of rho over the vertices of t (m = 1).
std::vector<double> breakpoints(const PolyhedralCurrent& t, const Vec& row);

struct FubiniReport {
  double slice_integral = 0.0;   // integral of M(<T,rho,p>) dp
  double restricted_mass = 0.0;  // M(T restricted to d rho)
  double gap = 0.0;
  double total_mass = 0.0;       // M(T)
  double lipschitz = 0.0;        // Lip(rho) for the ambient norm
  bool inequality_holds = false;  // slice_integral <= lipschitz * total_mass (+1e-9)
  std::vector<std::pair<double, double>> samples;  // (p, slice mass) at the quadrature nodes
};

FubiniReport verify_mass_fubini(const PolyhedralCurrent& t, const Projection& rho,
                                JacobianKind kind = JacobianKind::MassStar);

/// Compactly supported piecewise-linear function on R (zero outside the knots).
struct PiecewiseLinear {
  std::vector<double> knots;  // strictly increasing
  std::vector<double> values;  // values at knots; first and last must be zero

  double operator()(double x) const;
};

struct UniversalPropertyReport {
  double lhs = 0.0;  // integral of <T,rho,p>(h, pi) psi(p) dp
  double rhs = 0.0;  // T(psi(rho) h, rho, pi)
};

/// pi has k-1 rows. Both sides are integrated exactly.
UniversalPropertyReport verify_universal_property(const PolyhedralCurrent& t, const Vec& row,
                                                  const PiecewiseLinear& psi,
                                                  const AffineFunction& h, const Mat& pi);

struct CommuteReport {
  std::vector<double> levels;
  std::vector<double> difference_mass;  // per level
  double max_difference = 0.0;
};

/// Compares f#<T, rho o f, p> with <f#T, rho, p> at `levels` random regular levels.
CommuteReport verify_slice_pushforward_commute(const PolyhedralCurrent& t,
                                               const PiecewiseAffineMap& f, const Vec& row,
                                               int levels = 100, std::uint64_t seed = 0);

struct CharacteristicSliceReport {
  std::vector<double> levels;
  double max_discrepancy = 0.0;  // (k-1)-measure of the set difference
};

CharacteristicSliceReport slice_characteristic_consistency(const PolyhedralCurrent& t,
                                                           const Vec& row, int levels = 20,
                                                           std::uint64_t seed = 0);

/// Gauss-Legendre nodes and weights on [a, b].
std::vector<std::pair<double, double>> gauss_legendre(int n, double a, double b);

}  // namespace gmt
