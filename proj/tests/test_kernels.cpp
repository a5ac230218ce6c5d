#include "support.hpp"

#include "gmt/kernels.hpp"

#include <cstdlib>

using namespace gmt;
using namespace gmt::test;

namespace {

WeightedGraph random_graph(Rng& rng, int n) {
  WeightedGraph g;
  g.adjacency.resize(n);
  for (int e = 0; e < 3 * n; ++e) {
    const int a = uniform_int(rng, 0, n - 1), b = uniform_int(rng, 0, n - 1);
    if (a != b) g.add_edge(a, b, uniform(rng, 0.1, 1.0));
  }
  return g;
}

}  // namespace

TEST_CASE("parallel map equals the serial reference", "[kernels]") {
  auto f = [](std::size_t i) { return std::sin(static_cast<double>(i)) * std::sqrt(static_cast<double>(i) + 0.5); };
  CHECK(parallel_map(1000, f) == serial_map(1000, f));
  CHECK(parallel_map(0, f).empty());
}

TEST_CASE("parallel map rethrows the first exception", "[kernels]") {
  auto f = [](std::size_t i) -> double {
    if (i == 37) throw Error(ErrorCode::NonConvergence, "boom");
    return 0.0;
  };
  CHECK(code_of([&] { parallel_map(100, f); }) == ErrorCode::NonConvergence);
}

TEST_CASE("all-pairs shortest paths against Floyd-Warshall", "[kernels]") {
  Rng rng(120);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = uniform_int(rng, 5, 40);
    const WeightedGraph g = random_graph(rng, n);
    Mat fw = Mat::Constant(n, n, std::numeric_limits<double>::infinity());
    for (int i = 0; i < n; ++i) {
      fw(i, i) = 0.0;
      for (const auto& [j, w] : g.adjacency[i]) fw(i, j) = std::min(fw(i, j), w);
    }
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) fw(i, j) = std::min(fw(i, j), fw(i, k) + fw(k, j));
      }
    }
    const Mat d = all_pairs_shortest_paths(g);
    CHECK(d == all_pairs_shortest_paths_serial(g));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (std::isinf(fw(i, j))) CHECK(std::isinf(d(i, j)));
        else CHECK(std::abs(d(i, j) - fw(i, j)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("Dijkstra predecessors trace shortest paths", "[kernels]") {
  WeightedGraph g;
  g.adjacency.resize(4);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);
  g.add_edge(0, 2, 3.0);
  g.add_arc(2, 3, 0.5);
  std::vector<int> pred;
  const std::vector<double> d = dijkstra(g, 0, &pred);
  CHECK(d == std::vector<double>{0.0, 1.0, 2.0, 2.5});
  CHECK(pred[3] == 2);
  CHECK(pred[2] == 1);
  CHECK(std::isinf(dijkstra(g, 3)[0]));
}

TEST_CASE("pivot kernels agree bit for bit", "[kernels]") {
  Rng rng(121);
  Tableau a(30, 80);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = uniform(rng, -1, 1);
  Tableau b = a;
  pivot_tableau(a, 3, 7);
  pivot_tableau_serial(b, 3, 7);
  CHECK(a == b);
  CHECK(a(3, 7) == 1.0);
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    if (r != 3) CHECK(a(r, 7) == 0.0);
  }
}

TEST_CASE("thread count follows GMT_THREADS", "[kernels]") {
  const char* old = std::getenv("GMT_THREADS");
  const std::string saved = old ? old : "";
  setenv("GMT_THREADS", "3", 1);
  CHECK(configured_threads() == 3);
  setenv("GMT_THREADS", "nonsense", 1);
  CHECK(configured_threads() >= 1);
  setenv("GMT_THREADS", "-2", 1);
  CHECK(configured_threads() >= 1);
  if (old) setenv("GMT_THREADS", saved.c_str(), 1);
  else unsetenv("GMT_THREADS");
}
