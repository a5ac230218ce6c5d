#include "gmt/kernels.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <queue>
#include <string>

namespace gmt {

int configured_threads() {
  const char* env = std::getenv("GMT_THREADS");
  if (env == nullptr || *env == '\0') return omp_get_max_threads();
  try {
    const int n = std::stoi(env);
    return n > 0 ? n : omp_get_max_threads();
  } catch (const std::exception&) {
    return omp_get_max_threads();
  }
}

std::vector<double> parallel_map(std::size_t n, const std::function<double(std::size_t)>& f) {
  std::vector<double> out(n, 0.0);
  std::exception_ptr first;
  std::mutex guard;
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(configured_threads())
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
  return out;
}

std::vector<double> serial_map(std::size_t n, const std::function<double(std::size_t)>& f) {
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

void WeightedGraph::add_edge(int u, int v, double w) {
  const int need = std::max(u, v) + 1;
  if (size() < need) adjacency.resize(static_cast<std::size_t>(need));
  adjacency[u].push_back({v, w});
  adjacency[v].push_back({u, w});
}

void WeightedGraph::add_arc(int u, int v, double w) {
  const int need = std::max(u, v) + 1;
  if (size() < need) adjacency.resize(static_cast<std::size_t>(need));
  adjacency[u].push_back({v, w});
}

std::vector<double> dijkstra(const WeightedGraph& g, int source, std::vector<int>* predecessor) {
  const int n = g.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  if (predecessor) predecessor->assign(n, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, w] : g.adjacency[u]) {
      const double nd = d + w;
      // ties resolved toward the smaller predecessor index for determinism
      if (nd < dist[v] || (predecessor && nd == dist[v] && u < (*predecessor)[v])) {
        const bool improved = nd < dist[v];
        dist[v] = nd;
        if (predecessor) (*predecessor)[v] = u;
        if (improved) heap.push({nd, v});
      }
    }
  }
  return dist;
}

Mat all_pairs_shortest_paths(const WeightedGraph& g) {
  const int n = g.size();
  Mat d(n, n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(configured_threads())
  for (int s = 0; s < n; ++s) {
    const std::vector<double> row = dijkstra(g, s);
    for (int t = 0; t < n; ++t) d(s, t) = row[t];
  }
  return d;
}

Mat all_pairs_shortest_paths_serial(const WeightedGraph& g) {
  const int n = g.size();
  Mat d(n, n);
  for (int s = 0; s < n; ++s) {
    const std::vector<double> row = dijkstra(g, s);
    for (int t = 0; t < n; ++t) d(s, t) = row[t];
  }
  return d;
}

void pivot_tableau(Tableau& tableau, Eigen::Index row, Eigen::Index col) {
  const double p = tableau(row, col);
  tableau.row(row) /= p;
  const Eigen::RowVectorXd prow = tableau.row(row);
  const Eigen::Index rows = tableau.rows();
#pragma omp parallel for schedule(static) num_threads(configured_threads())
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (r == row) continue;
    const double f = tableau(r, col);
    if (f != 0.0) tableau.row(r) -= f * prow;
  }
}

void pivot_tableau_serial(Tableau& tableau, Eigen::Index row, Eigen::Index col) {
  const double p = tableau(row, col);
  tableau.row(row) /= p;
  const Eigen::RowVectorXd prow = tableau.row(row);
  for (Eigen::Index r = 0; r < tableau.rows(); ++r) {
    if (r == row) continue;
    const double f = tableau(r, col);
    if (f != 0.0) tableau.row(r) -= f * prow;
  }
}

}  // namespace gmt
