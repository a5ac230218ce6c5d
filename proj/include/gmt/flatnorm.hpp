#pragma once

// Simplicial flat norm  F(t) = min M(u) + M(v)  subject to  t = u + boundary v,
// solved as a linear program over a finite complex.

#include "gmt/current.hpp"
#include "gmt/lp.hpp"

#include <map>
#include <vector>

namespace gmt {

/// Cells are sorted vertex-id tuples, one list per dimension, each list in
/// lexicographic order. Orientation of a cell is the order of its ids.
class SimplicialComplex {
 public:
  SimplicialComplex(AmbientNorm ambient, std::vector<Point> vertices,
                    std::vector<std::vector<std::vector<int>>> cells);

  const AmbientNorm& ambient() const { return ambient_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  int dim() const { return static_cast<int>(cells_.size()) - 1; }
  int count(int d) const;
  const std::vector<std::vector<int>>& cells(int d) const;
  /// -1 when absent.
  int index_of(int d, const std::vector<int>& sorted_ids) const;
  Simplex simplex(int d, int i) const;

  /// Rows: (k-1)-cells, columns: k-cells, entries +-1.
  Mat boundary_matrix(int k) const;
  /// Mass of each d-cell with multiplicity one.
  Vec weights(int d, JacobianKind kind) const;

 private:
  AmbientNorm ambient_;
  std::vector<Point> vertices_;
  std::vector<std::vector<std::vector<int>>> cells_;
  std::vector<std::map<std::vector<int>, int>> index_;
};

struct Chain {
  int k = 0;
  Vec coefficients;
};

Chain operator-(const Chain& a, const Chain& b);

struct BuildOptions {
  /// Planar only: add a constrained triangulation of an enlarged bounding box
  /// so that 1-chains admit 2-dimensional fillings.
  bool augment_box = false;
  double margin = 0.25;       // relative to the bounding-box extent
  int box_subdivisions = 8;   // points per box side
  double interior_spacing = 0.0;  // > 0: add a grid of interior points
};

struct ComplexBuild {
  SimplicialComplex complex;
  std::vector<Chain> chains;  // one per input current
};

/// Throws DimensionMismatch for mixed ambients and PairError(RefinementFailure)
/// with the offending cell indices when planar cells intersect improperly.
ComplexBuild build_complex(const std::vector<PolyhedralCurrent>& currents,
                           const BuildOptions& options = {});

/// Throws InvalidInput if some cell of t is not in the complex.
Chain chain_of(const PolyhedralCurrent& t, const SimplicialComplex& k);
/// Rounds coefficients to integers.
PolyhedralCurrent current_of(const Chain& c, const SimplicialComplex& k);

struct FlatNormResult {
  double value = 0.0;          // LP optimum, a lower bound for the integral problem
  double integer_upper = 0.0;  // cost of the rounded integral decomposition
  Chain u;
  Chain v;
  bool integral = false;   // LP solution integral within 1e-9
  bool certified = false;  // integral and the rounded pair reproduces t exactly
  int pivots = 0;
  bool bland = false;
};

FlatNormResult flat_norm(const Chain& t, const SimplicialComplex& k,
                         JacobianKind kind = JacobianKind::MassStar, const LpOptions& lp = {});

double chain_mass(const Chain& t, const SimplicialComplex& k, JacobianKind kind);

/// Extrinsic flat distance in the shared complex. This is only an upper
/// bound for the intrinsic flat distance.
FlatNormResult flat_distance(const PolyhedralCurrent& a, const PolyhedralCurrent& b,
                             const BuildOptions& options = {},
                             JacobianKind kind = JacobianKind::MassStar);

struct SemicontinuityReport {
  std::vector<double> masses;            // M(t_i)
  std::vector<double> flat_distances;    // F(t_i - t), each in its own complex
  std::vector<double> weak_differences;  // max over test forms of |t_i(w) - t(w)|
  double limit_mass = 0.0;
  double liminf_mass = 0.0;  // min over the second half of the sequence
  bool holds = false;        // limit_mass <= liminf_mass + 1e-9
};

/// Each term is compared with the limit in a complex built for that pair.
SemicontinuityReport lower_semicontinuity_probe(const std::vector<PolyhedralCurrent>& sequence,
                                                const PolyhedralCurrent& limit,
                                                const BuildOptions& options,
                                                JacobianKind kind = JacobianKind::MassStar,
                                                int test_forms = 10, std::uint64_t seed = 0);

/// Staircase with n steps from (0,0) to (1,1), and the diagonal subdivided at
/// the staircase corners.
PolyhedralCurrent staircase(int n);
PolyhedralCurrent subdivided_diagonal(int n);

/// Boundary of the axis-parallel square [0,s]^2 as a 1-current.
PolyhedralCurrent square_boundary(double side, const AmbientNorm& ambient);
/// The square [0,s]^2 as two positively oriented triangles.
PolyhedralCurrent square_current(double side, const AmbientNorm& ambient);

}  // namespace gmt
