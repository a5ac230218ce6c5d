#pragma once

// Polyhedral integral currents: finite sums of oriented affine simplices with
// integer multiplicities in a normed ambient R^N.

#include "gmt/jacobian.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace gmt {

struct Cell {
  Simplex simplex;
  long long multiplicity = 1;
};

/// Canonical form: vertices snapped (tolerance 1e-9 relative to the
/// coordinate scale), each cell's vertices sorted lexicographically with the
/// permutation sign folded into the multiplicity, equal cells merged, zero
/// cells dropped, cells ordered lexicographically. Stored orientations are +1.
class PolyhedralCurrent {
 public:
  /// Throws InvalidInput on degenerate cells or cells of the wrong dimension.
  PolyhedralCurrent(AmbientNorm ambient, int k, std::vector<Cell> cells);

  static PolyhedralCurrent zero(AmbientNorm ambient, int k);
  /// Drops degenerate cells instead of rejecting them.
  static PolyhedralCurrent from_cells_dropping_degenerate(AmbientNorm ambient, int k,
                                                          std::vector<Cell> cells);

  const AmbientNorm& ambient() const { return ambient_; }
  int dim() const { return k_; }
  int ambient_dim() const { return ambient_.dim(); }
  const std::vector<Cell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  /// Distinct vertices in lexicographic order.
  std::vector<Point> vertices() const;

  PolyhedralCurrent operator+(const PolyhedralCurrent& other) const;
  PolyhedralCurrent operator-(const PolyhedralCurrent& other) const;
  PolyhedralCurrent operator-() const;
  PolyhedralCurrent scaled(long long factor) const;

 private:
  PolyhedralCurrent(AmbientNorm ambient, int k) : ambient_(std::move(ambient)), k_(k) {}
  void canonicalize(std::vector<Cell> raw);

  AmbientNorm ambient_;
  int k_;
  std::vector<Cell> cells_;
};

/// Snapping tolerance used by canonicalization for the given points.
double snap_tolerance(const std::vector<Point>& points);

PolyhedralCurrent boundary(const PolyhedralCurrent& t);

/// A map that is affine on each of finitely many polyhedral regions.
struct AffinePiece {
  std::vector<HalfSpace> region;  // empty: whole space
  AffineMap map;
};

class PiecewiseAffineMap {
 public:
  PiecewiseAffineMap(std::vector<AffinePiece> pieces, AmbientNorm target);
  static PiecewiseAffineMap global(AffineMap map, AmbientNorm target);

  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const AmbientNorm& target() const { return target_; }

  /// First piece whose region contains every vertex of s (tolerance 1e-9
  /// relative); nullptr if none.
  const AffinePiece* piece_for(const Simplex& s) const;
  /// Throws RefinementRequired if no piece contains s.
  const AffinePiece& require_piece(const Simplex& s) const;
  /// Evaluates the first piece containing x.
  Point operator()(const Point& x) const;

 private:
  std::vector<AffinePiece> pieces_;
  AmbientNorm target_;
};

/// Throws RefinementRequired if some cell straddles pieces.
PolyhedralCurrent push_forward(const PiecewiseAffineMap& f, const PolyhedralCurrent& t);

PolyhedralCurrent restrict(const PolyhedralCurrent& t, const std::vector<HalfSpace>& region);

/// T restricted to f^{-1}(region), cell by cell through the affine pieces.
PolyhedralCurrent restrict_preimage(const PolyhedralCurrent& t, const PiecewiseAffineMap& f,
                                    const std::vector<HalfSpace>& region);

struct MassMeasureReport {
  double total = 0.0;
  std::vector<double> per_cell;
  /// nullopt: Ambrosio-Kirchheim mass (computed as the mass* Finsler mass)
  std::optional<JacobianKind> kind;
};

/// Seminorm of the cell's affine chart from the standard simplex: ambient o E.
Seminorm cell_seminorm(const Simplex& s, const AmbientNorm& ambient);

MassMeasureReport mass(const PolyhedralCurrent& t, JacobianKind kind);
/// Serial reference for the parallel per-cell evaluation.
MassMeasureReport mass_serial(const PolyhedralCurrent& t, JacobianKind kind);
MassMeasureReport mass_ambrosio_kirchheim(const PolyhedralCurrent& t);

/// Cells with nonzero multiplicity after cancellation.
std::vector<Simplex> characteristic_set(const PolyhedralCurrent& t);

/// Oriented polyline; repeated consecutive points are dropped.
PolyhedralCurrent curve_current(const std::vector<Point>& polyline, bool closed,
                                const AmbientNorm& ambient);

/// Affine function x -> a.x + b.
struct AffineFunction {
  Vec a;
  double b = 0.0;
  double operator()(const Vec& x) const { return a.dot(x) + b; }
};

/// T(h, pi_1, ..., pi_k) for affine h and linear pi (rows of pi, k x N).
double evaluate_form(const PolyhedralCurrent& t, const AffineFunction& h, const Mat& pi);

/// Current given through charts from parameter simplices, with the metric
/// differential of each chart (constant per cell).
struct ChartCell {
  Seminorm md;
  double param_volume = 0.0;
  long long multiplicity = 1;
};

struct ChartedCurrent {
  int k = 0;
  std::vector<ChartCell> cells;
};

ChartedCurrent charted(const PolyhedralCurrent& t);
MassMeasureReport mass(const ChartedCurrent& t, JacobianKind kind);

}  // namespace gmt
