// Parallel kernels against their serial references: per-cell mass,
// all-pairs shortest paths and the simplex pivot. Thread count follows
// GMT_THREADS.

#include "gmt/current.hpp"
#include "gmt/instances.hpp"
#include "gmt/kernels.hpp"

#include <chrono>
#include <cstdio>
#include <string>

namespace {

using namespace gmt;

PolyhedralCurrent bench_current(int n) {
  Rng rng(7);
  const AmbientNorm ambient = AmbientNorm::max_norm(3);
  std::vector<Cell> cells;
  for (int i = 0; i < n; ++i) {
    std::vector<Point> v;
    for (int j = 0; j < 3; ++j) v.push_back(Vec::NullaryExpr(3, [&](Eigen::Index) { return uniform(rng, -1.0, 1.0); }));
    cells.push_back({Simplex(v), 1});
  }
  return PolyhedralCurrent(ambient, 2, std::move(cells));
}

WeightedGraph bench_graph(int n) {
  Rng rng(11);
  WeightedGraph g;
  g.adjacency.resize(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, uniform(rng, 0.1, 1.0));
  for (int e = 0; e < 3 * n; ++e) {
    const int a = uniform_int(rng, 0, n - 1), b = uniform_int(rng, 0, n - 1);
    if (a != b) g.add_edge(a, b, uniform(rng, 0.1, 2.0));
  }
  return g;
}

Tableau bench_tableau(int rows, int cols) {
  Rng rng(13);
  Tableau t(rows, cols);
  for (Eigen::Index i = 0; i < t.size(); ++i) t.data()[i] = uniform(rng, -1.0, 1.0);
  t(0, 0) = 2.0;
  return t;
}

}  // namespace

#ifdef GMT_HAVE_BENCHMARK
#include <benchmark/benchmark.h>

static void BM_Mass(benchmark::State& st) {
  const PolyhedralCurrent t = bench_current(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mass(t, JacobianKind::InscribedRiemannian).total);
}
static void BM_MassSerial(benchmark::State& st) {
  const PolyhedralCurrent t = bench_current(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mass_serial(t, JacobianKind::InscribedRiemannian).total);
}
static void BM_Apsp(benchmark::State& st) {
  const WeightedGraph g = bench_graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(all_pairs_shortest_paths(g)(0, 1));
}
static void BM_ApspSerial(benchmark::State& st) {
  const WeightedGraph g = bench_graph(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(all_pairs_shortest_paths_serial(g)(0, 1));
}
static void BM_Pivot(benchmark::State& st) {
  Tableau t = bench_tableau(static_cast<int>(st.range(0)), 4 * static_cast<int>(st.range(0)));
  for (auto _ : st) pivot_tableau(t, 0, 0);
}
static void BM_PivotSerial(benchmark::State& st) {
  Tableau t = bench_tableau(static_cast<int>(st.range(0)), 4 * static_cast<int>(st.range(0)));
  for (auto _ : st) pivot_tableau_serial(t, 0, 0);
}

BENCHMARK(BM_Mass)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MassSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Apsp)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApspSerial)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pivot)->Arg(500)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PivotSerial)->Arg(500)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();

#else

template <class F>
double seconds(int reps, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

int main() {
  std::printf("threads: %d\n", configured_threads());
  const PolyhedralCurrent t = bench_current(200);
  std::printf("mass       parallel %.4fs  serial %.4fs\n",
              seconds(3, [&] { mass(t, JacobianKind::InscribedRiemannian); }),
              seconds(3, [&] { mass_serial(t, JacobianKind::InscribedRiemannian); }));
  const WeightedGraph g = bench_graph(400);
  std::printf("apsp       parallel %.4fs  serial %.4fs\n", seconds(3, [&] { all_pairs_shortest_paths(g); }),
              seconds(3, [&] { all_pairs_shortest_paths_serial(g); }));
  Tableau a = bench_tableau(500, 2000);
  std::printf("pivot      parallel %.6fs  serial %.6fs\n", seconds(50, [&] { pivot_tableau(a, 0, 0); }),
              seconds(50, [&] { pivot_tableau_serial(a, 0, 0); }));
}

#endif
