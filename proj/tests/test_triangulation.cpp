#include "support.hpp"

#include "gmt/triangulation.hpp"

#include <set>

using namespace gmt;
using namespace gmt::test;

namespace {

double total_area(const Triangulation2D& t) {
  double a = 0.0;
  for (const auto& tri : t.triangles) a += 0.5 * orient2d(t.points[tri[0]], t.points[tri[1]], t.points[tri[2]]);
  return a;
}

std::set<std::pair<int, int>> edge_set(const Triangulation2D& t) {
  std::set<std::pair<int, int>> e;
  for (const auto& tri : t.triangles) {
    for (int i = 0; i < 3; ++i) e.insert(std::minmax(tri[i], tri[(i + 1) % 3]));
  }
  return e;
}

}  // namespace

TEST_CASE("constrained square with interior points", "[triangulation]") {
  Rng rng(80);
  std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (int i = 0; i < 40; ++i) pts.emplace_back(uniform(rng, 0.05, 0.95), uniform(rng, 0.05, 0.95));
  const std::vector<std::pair<int, int>> cons{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}};
  const Triangulation2D t = constrained_triangulation(pts, cons);
  CHECK(total_area(t) == Catch::Approx(1.0).epsilon(1e-12));
  for (const auto& tri : t.triangles) CHECK(orient2d(t.points[tri[0]], t.points[tri[1]], t.points[tri[2]]) > 0);
  const auto edges = edge_set(t);
  for (const auto& [a, b] : cons) CHECK(edges.count(std::minmax(a, b)) == 1);
  // Euler: every point is used, V - E + F = 1 for a disk.
  CHECK(static_cast<long>(pts.size()) - static_cast<long>(edges.size()) + static_cast<long>(t.triangles.size()) == 1);
}

TEST_CASE("crossing constraints are reported with their indices", "[triangulation]") {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  try {
    constrained_triangulation(pts, {{0, 2}, {1, 3}});
    FAIL("expected a PairError");
  } catch (const PairError& e) {
    CHECK(e.code() == ErrorCode::RefinementFailure);
    CHECK(std::set<std::size_t>{e.first(), e.second()} == std::set<std::size_t>{0, 1});
  }
}

TEST_CASE("orientation predicate", "[triangulation]") {
  CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) == 1.0);
  CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) == -1.0);
  CHECK(orient2d({0, 0}, {1, 1}, {2, 2}) == 0.0);
}
