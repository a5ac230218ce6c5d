#include "gmt/metric_space.hpp"

#include "gmt/error.hpp"

#include <algorithm>
#include <set>

namespace gmt {

MeshMetricSpace::MeshMetricSpace(std::vector<Point> vertices,
                                 const std::vector<std::array<int, 3>>& triangles)
    : vertices_(std::move(vertices)) {
  std::set<std::pair<int, int>> seen;
  for (const auto& t : triangles) {
    for (int i = 0; i < 3; ++i) {
      const int a = std::min(t[i], t[(i + 1) % 3]);
      const int b = std::max(t[i], t[(i + 1) % 3]);
      if (a < 0 || b >= size()) throw Error(ErrorCode::InvalidInput, "triangle index out of range");
      if (seen.insert({a, b}).second) {
        edges_.push_back({a, b, (vertices_[a] - vertices_[b]).norm()});
      }
    }
  }
  build_graph();
}

MeshMetricSpace::MeshMetricSpace(std::vector<Point> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  build_graph();
}

void MeshMetricSpace::build_graph() {
  graph_.adjacency.assign(vertices_.size(), {});
  for (const auto& e : edges_) {
    if (e.a < 0 || e.b < 0 || e.a >= size() || e.b >= size() || e.a == e.b) {
      throw Error(ErrorCode::InvalidInput, "mesh edge with invalid endpoints");
    }
    if (!(e.length > 0.0)) throw Error(ErrorCode::InvalidInput, "mesh edge lengths must be positive");
    graph_.add_edge(e.a, e.b, e.length);
  }
}

std::vector<double> MeshMetricSpace::distances_from(int source, std::vector<int>* predecessor) const {
  return dijkstra(graph_, source, predecessor);
}

const Mat& MeshMetricSpace::distance_matrix() const {
  if (!dist_) {
    // Dijkstra from i and from j sum the same path in opposite orders; both
    // are path lengths, so the smaller one is kept on both sides.
    const Mat d = all_pairs_shortest_paths(graph_);
    dist_ = d.cwiseMin(d.transpose());
  }
  return *dist_;
}

double MeshMetricSpace::metric_axiom_defect() const {
  const Mat& d = distance_matrix();
  const int n = size();
  double worst = d.diagonal().cwiseAbs().maxCoeff();
  worst = std::max(worst, (d - d.transpose()).cwiseAbs().maxCoeff());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) worst = std::max(worst, d(i, k) - d(i, j) - d(j, k));
  return worst;
}

}  // namespace gmt
