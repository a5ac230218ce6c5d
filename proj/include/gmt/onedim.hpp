#pragma once

// Integral 1-currents as directed multigraphs: decomposition into injective
// paths and simple loops, and the n = 1 rigidity chain.

#include "gmt/current.hpp"

#include <string>
#include <vector>

namespace gmt {

struct CurrentGraph {
  struct Edge {
    int from = 0;
    int to = 0;
    long long multiplicity = 0;
    double length = 0.0;  // ambient norm of to - from
  };

  AmbientNorm ambient = AmbientNorm::euclidean(1);
  std::vector<Point> vertices;  // lexicographic order
  std::vector<Edge> edges;      // one per canonical cell

  static CurrentGraph from_current(const PolyhedralCurrent& t);
  double mass() const;  // sum of |multiplicity| * length
};

/// Paths are injective vertex sequences. A loop [v0, ..., vr] uses the edges
/// v_i -> v_{i+1} and the closing edge vr -> v0.
struct Decomposition {
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> loops;

  double total_length(const CurrentGraph& g) const;
};

double path_length(const CurrentGraph& g, const std::vector<int>& path, bool closed);

/// Shortest available simple cycle is peeled first; ties go to the
/// lexicographically smallest closing edge. The acyclic rest is walked from
/// vertices with surplus out-degree.
Decomposition decompose_1current(const CurrentGraph& g);
Decomposition decompose_1current(const PolyhedralCurrent& t);

/// Directed edges (with repetition, sorted) used by the decomposition, and
/// the |multiplicity|-expanded, orientation-corrected edges of the graph.
std::vector<std::pair<int, int>> expanded_edges(const Decomposition& d);
std::vector<std::pair<int, int>> expanded_edges(const CurrentGraph& g);

enum class Rigidity { Rigid, EndpointGap, Detour, ExcessMass };

std::string to_string(Rigidity r);

/// Chain |b - a| <= d(x1, x2) <= l(gamma) <= M(T).
struct RigidityVerdict {
  Rigidity verdict = Rigidity::Rigid;
  double endpoint_gap = 0.0;  // |b - a|
  double distance = 0.0;      // d(x1, x2) in the ambient norm
  double path_length = 0.0;   // l(gamma)
  double mass = 0.0;          // M(T)
  Point start;                // x1
  Point end;                  // x2
  std::string witness;        // first strict inequality, empty when rigid
};

/// f must be scalar and affine on every edge. Throws NotLipschitz if some
/// edge is stretched, BoundaryConditionViolated unless f#(boundary T) = [b] - [a].
RigidityVerdict check_n1_rigidity(const PolyhedralCurrent& t, const PiecewiseAffineMap& f,
                                  double a, double b);

}  // namespace gmt
