#pragma once

// Finite metric spaces given by edge-weighted meshes with the shortest-path
// (intrinsic graph) metric.

#include "gmt/kernels.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace gmt {

class MeshMetricSpace {
 public:
  struct Edge {
    int a = 0;
    int b = 0;
    double length = 0.0;
  };

  /// Edge lengths are Euclidean distances between the given vertices.
  MeshMetricSpace(std::vector<Point> vertices, const std::vector<std::array<int, 3>>& triangles);
  /// Throws InvalidInput for non-positive lengths or bad indices.
  MeshMetricSpace(std::vector<Point> vertices, std::vector<Edge> edges);

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(vertices_.size()); }

  /// Single-source shortest-path distances.
  std::vector<double> distances_from(int source, std::vector<int>* predecessor = nullptr) const;
  /// All-pairs matrix, computed on first use (parallel over sources).
  const Mat& distance_matrix() const;
  double distance(int i, int j) const { return distance_matrix()(i, j); }

  /// Largest violation of symmetry, triangle inequality or zero diagonal
  /// over all pairs / triples (0 for a graph metric).
  double metric_axiom_defect() const;

 private:
  void build_graph();

  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
  WeightedGraph graph_;
  mutable std::optional<Mat> dist_;
};

}  // namespace gmt
