#pragma once

// Euclidean cones CX = X x [0,1] / (X x {0}) over metric spaces, cone charts,
// and cone chains over abstract simplicial chains.

#include "gmt/current.hpp"

#include <map>
#include <vector>

namespace gmt {

/// sqrt(r^2 + s^2 - 2 r s cos d) for d < pi, r + s otherwise.
double cone_distance(double d_base, double r, double s);

/// Differential of the lifted chart (x, r) -> [(phi(x), r)]:
/// (v, s) -> sqrt(r^2 md(v)^2 + s^2).
Seminorm cone_chart_seminorm(const Seminorm& base, double r);

/// Chart of a flat simplex given only its edge lengths: the identity chart of
/// the standard simplex with the metric tensor determined by the lengths.
/// lengths is (k+1) x (k+1) symmetric with zero diagonal.
ChartCell chart_from_edge_lengths(const Mat& lengths, long long multiplicity = 1);

/// Closed regular m-gon carrying the intrinsic metric of the unit circle:
/// each edge has length 2 pi / m.
ChartedCurrent circle_base(int m);

struct ConeMassReport {
  int k = 0;
  double base_mass = 0.0;        // M^ir(T)
  double cone_mass = 0.0;        // M^ir(CT), r-integral by Gauss-Legendre
  double closed_form = 0.0;      // M^ir(T) / (k + 1)
  double ratio = 0.0;            // cone_mass / base_mass
  double base_mass_star = 0.0;   // mass* data, no identity asserted
  double cone_mass_star = 0.0;
  double mass_star_ratio = 0.0;
};

/// Integrates the cone chart Jacobians over the prism simplex x [0,1] with
/// `order` Gauss-Legendre nodes in r (0: k + 1 nodes).
ConeMassReport cone_mass_ir(const ChartedCurrent& base, int order = 0);
ConeMassReport cone_mass_ir(const PolyhedralCurrent& base, int order = 0);

/// Integer chain on abstract vertex ids. Keys are sorted id tuples; the
/// permutation sign lives in the coefficient.
struct AbstractChain {
  int k = 0;
  std::map<std::vector<int>, long long> cells;

  void add(std::vector<int> ids, long long coefficient);
  bool empty() const { return cells.empty(); }
  AbstractChain operator+(const AbstractChain& other) const;
  AbstractChain operator-(const AbstractChain& other) const;
  bool operator==(const AbstractChain& other) const { return k == other.k && cells == other.cells; }
};

AbstractChain chain_boundary(const AbstractChain& c);

/// Vertices of t get ids in lexicographic order.
AbstractChain abstract_chain(const PolyhedralCurrent& t);

/// C[v0..vk] = [apex, v0, ..., vk]; boundary(C c) = c - C(boundary c).
AbstractChain cone_chain(const AbstractChain& c, int apex);

struct ConeBoundary {
  AbstractChain cone_part;  // -C(boundary T)
  AbstractChain end_part;   // e#T, the copy of T at r = 1
  AbstractChain boundary;   // boundary(C T), equal to cone_part + end_part
  double cone_part_mass = 0.0;
  double end_part_mass = 0.0;
  double boundary_mass = 0.0;
};

/// The apex is the id one past the last vertex of t. Masses are inscribed
/// Riemannian masses through the cone charts.
ConeBoundary cone_boundary_decomposition(const PolyhedralCurrent& t);

}  // namespace gmt
