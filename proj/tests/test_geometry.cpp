#include "support.hpp"

#include "gmt/geometry.hpp"

#include <numbers>

using namespace gmt;
using namespace gmt::test;

namespace {

Simplex random_simplex(Rng& rng, int k, int n) {
  std::vector<Point> v;
  for (int i = 0; i <= k; ++i) v.push_back(random_vec(rng, n));
  return Simplex(v);
}

}  // namespace

TEST_CASE("simplex volume matches the determinant formula", "[geometry]") {
  const Simplex tri({pt(0, 0), pt(2, 0), pt(0, 3)});
  CHECK(simplex_volume(tri).value == Catch::Approx(3.0).epsilon(1e-15));
  // Tetrahedron with unit legs: 1/6.
  const Simplex tet({pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  CHECK(simplex_volume(tet).value == Catch::Approx(1.0 / 6.0).epsilon(1e-15));
  // A triangle in R^3 with sides along two axes, area by the cross product.
  const Eigen::Vector3d a(0.2, -0.1, 0.4), b(1.1, 0.3, -0.5), c(-0.7, 0.9, 0.2);
  const Simplex t3({a, b, c});
  CHECK(simplex_volume(t3).value == Catch::Approx(0.5 * (b - a).cross(c - a).norm()).epsilon(1e-13));
}

TEST_CASE("simplex volume is invariant under isometries", "[geometry]") {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 4);
    const int k = uniform_int(rng, 1, n);
    const Simplex s = random_simplex(rng, k, n);
    if (is_degenerate(s)) continue;
    const Mat r = random_rotation(rng, n);
    const Vec shift = random_vec(rng, n, -5, 5);
    std::vector<Point> moved;
    for (const auto& v : s.vertices) moved.push_back(r * v + shift);
    CHECK(close(simplex_volume(Simplex(moved)).value, simplex_volume(s).value, 1e-12));
  }
}

TEST_CASE("clipping by a half-space is additive", "[geometry]") {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform_int(rng, 2, 3);
    const int k = uniform_int(rng, 1, n);
    const Simplex s = random_simplex(rng, k, n);
    if (is_degenerate(s)) continue;
    const HalfSpace h{random_vec(rng, n), uniform(rng, -0.5, 0.5)};
    double pieces = 0.0;
    for (const auto& p : clip_simplex_halfspace(s, h)) pieces += simplex_volume(p).value;
    for (const auto& p : clip_simplex_halfspace(s, h.complement())) pieces += simplex_volume(p).value;
    CHECK(close(pieces, simplex_volume(s).value, 1e-12));
  }
}

TEST_CASE("clipped pieces keep the orientation of the parent", "[geometry]") {
  const Simplex s({pt(0, 0), pt(0, 1), pt(1, 0)});  // clockwise
  for (const auto& p : clip_simplex_halfspace(s, HalfSpace{pt(1, 0), 0.5})) {
    CHECK(frame_sign_in(p, s) * p.orientation == 1);
  }
}

TEST_CASE("polytope volumes on the exact path", "[geometry]") {
  SymmetricPolytope square{{pt(1, 0), pt(0, 1)}};
  CHECK(polytope_volume(square).value == Catch::Approx(4.0).epsilon(1e-14));
  CHECK(polytope_volume(square).exact);
  SymmetricPolytope diamond{{pt(1, 1), pt(1, -1)}};
  CHECK(polytope_volume(diamond).value == Catch::Approx(2.0).epsilon(1e-14));
  SymmetricPolytope octahedron{{pt(1, 1, 1), pt(1, 1, -1), pt(1, -1, 1), pt(-1, 1, 1)}};
  CHECK(polytope_volume(octahedron).value == Catch::Approx(4.0 / 3.0).epsilon(1e-13));
  // Regular hexagon with inradius 1 (facet normals at 60 degree steps).
  SymmetricPolytope hex;
  for (int j = 0; j < 3; ++j) hex.facets.push_back(pt(std::cos(j * std::numbers::pi / 3), std::sin(j * std::numbers::pi / 3)));
  CHECK(polytope_volume(hex).value == Catch::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-13));
  CHECK(polytope_vertices(hex).size() == 6);
}

TEST_CASE("polytope volume scales as lambda^k", "[geometry]") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = uniform_int(rng, 1, 3);
    SymmetricPolytope p;
    for (int i = 0; i < k; ++i) p.facets.push_back(Vec::Unit(k, i));
    for (int extra = uniform_int(rng, 0, 4); extra > 0; --extra) p.facets.push_back(random_vec(rng, k));
    const double lambda = uniform(rng, 0.2, 5.0);
    SymmetricPolytope scaled;
    for (const auto& f : p.facets) scaled.facets.push_back(f / lambda);
    CHECK(close(polytope_volume(scaled).value, std::pow(lambda, k) * polytope_volume(p).value, 1e-12));
  }
}

TEST_CASE("Monte Carlo volume in dimension 4", "[geometry]") {
  SymmetricPolytope cube;
  for (int i = 0; i < 4; ++i) cube.facets.push_back(Vec::Unit(4, i));
  const PolytopeVolume v = polytope_volume(cube, 5, 200000);
  CHECK_FALSE(v.exact);
  CHECK(std::abs(v.value - 16.0) < 5 * v.std_error + 1e-9);
}

TEST_CASE("degeneracy test is scale invariant", "[geometry]") {
  for (double s : {1e-6, 1.0, 1e6}) {
    CHECK(is_degenerate(Simplex({pt(0, 0), pt(s, 0), pt(2 * s, 1e-13 * s)})));
    CHECK_FALSE(is_degenerate(Simplex({pt(0, 0), pt(s, 0), pt(0, s)})));
  }
  CHECK(simplex_volume(Simplex({pt(0, 0), pt(1, 1), pt(2, 2)})).degenerate);
}

TEST_CASE("point pool merges within tolerance", "[geometry]") {
  PointPool pool(1e-9);
  CHECK(pool.insert(pt(0, 0)) == 0);
  CHECK(pool.insert(pt(1, 0)) == 1);
  CHECK(pool.insert(pt(5e-10, -5e-10)) == 0);
  CHECK(pool.insert(pt(1 + 3e-9, 0)) == 2);
  CHECK(pool.find(pt(1 - 1e-10, 0)) == 1);
  CHECK(pool.find(pt(0.5, 0.5)) == -1);
  CHECK(pool.size() == 3);
}

TEST_CASE("cuts through a vertex are rejected", "[geometry]") {
  const Simplex tri({pt(0, 0), pt(1, 0), pt(0, 1)});
  CHECK(code_of([&] { triangulate_cut(tri, pt(1, 0), 0.0); }) == ErrorCode::DegenerateLevel);
  const auto cut = triangulate_cut(tri, pt(1, 0), 0.25);
  REQUIRE(cut.size() == 1);
  CHECK((cut[0][0] - cut[0][1]).norm() == Catch::Approx(0.75));
}

TEST_CASE("affine maps compose", "[geometry]") {
  Rng rng(4);
  const AffineMap f(random_mat(rng, 2, 3), random_vec(rng, 2));
  const AffineMap g(random_mat(rng, 3, 2), random_vec(rng, 3));
  const Vec x = random_vec(rng, 2);
  CHECK((f.after(g)(x) - f(g(x))).norm() < 1e-14);
  CHECK(all_finite(x));
  CHECK_FALSE(all_finite(pt(0, std::nan(""))));
}
