#pragma once

// Data-parallel kernels. Each has an OpenMP version and a serial reference
// used by the tests and the benchmark. Results are written to per-index slots
// and reduced serially, so both versions produce identical bits.

#include "gmt/geometry.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace gmt {

/// Thread cap from GMT_THREADS (unset, empty or invalid: OpenMP default).
int configured_threads();

/// out[i] = f(i). The first exception thrown by any f(i) is rethrown.
std::vector<double> parallel_map(std::size_t n, const std::function<double(std::size_t)>& f);
std::vector<double> serial_map(std::size_t n, const std::function<double(std::size_t)>& f);

/// Weighted graph in adjacency-list form.
struct WeightedGraph {
  std::vector<std::vector<std::pair<int, double>>> adjacency;

  int size() const { return static_cast<int>(adjacency.size()); }
  void add_edge(int u, int v, double w);  // both directions
  void add_arc(int u, int v, double w);   // u -> v only
};

/// Single-source Dijkstra; unreachable vertices get +inf.
std::vector<double> dijkstra(const WeightedGraph& g, int source,
                             std::vector<int>* predecessor = nullptr);

/// All-pairs shortest paths by Dijkstra from every source.
Mat all_pairs_shortest_paths(const WeightedGraph& g);
Mat all_pairs_shortest_paths_serial(const WeightedGraph& g);

using Tableau = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Gauss-Jordan pivot of a dense tableau on (row, col): the pivot row is
/// normalized and eliminated from every other row.
void pivot_tableau(Tableau& tableau, Eigen::Index row, Eigen::Index col);
void pivot_tableau_serial(Tableau& tableau, Eigen::Index row, Eigen::Index col);

}  // namespace gmt
