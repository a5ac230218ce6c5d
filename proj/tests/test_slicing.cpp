#include "support.hpp"

#include "gmt/slicing.hpp"

using namespace gmt;
using namespace gmt::test;

namespace {

const AmbientNorm kE2 = AmbientNorm::euclidean(2);

PolyhedralCurrent unit_square() {
  return PolyhedralCurrent(kE2, 2, {{Simplex({pt(0, 0), pt(1, 0), pt(1, 1)}), 1},
                                    {Simplex({pt(0, 0), pt(1, 1), pt(0, 1)}), 1}});
}

Vec random_direction(Rng& rng, int n) {
  Vec v = random_vec(rng, n);
  return v / v.norm();
}

}  // namespace

TEST_CASE("slice of the unit square", "[slicing]") {
  const PolyhedralCurrent s = slice(unit_square(), Projection::axis(2, 0), Vec::Constant(1, 0.3));
  CHECK(s.dim() == 1);
  CHECK(mass(s, JacobianKind::MassStar).total == Catch::Approx(1.0).epsilon(1e-12));
  for (const auto& v : s.vertices()) CHECK(v(0) == Catch::Approx(0.3).margin(1e-12));
  // Slicing the boundary at x = 0.3 gives the two crossing points with opposite signs.
  const PolyhedralCurrent b = slice(boundary(unit_square()), Projection::axis(2, 0), Vec::Constant(1, 0.3));
  CHECK(b.cells().size() == 2);
  CHECK(slice(unit_square(), Projection::axis(2, 0), Vec::Constant(1, 2.0)).empty());
}

TEST_CASE("boundary of a slice is minus the slice of the boundary", "[slicing]") {
  Rng rng(40);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const PolyhedralCurrent t = random_planar_current(rng, 2);
    const Vec row = random_direction(rng, 2);
    const auto g = PiecewiseAffineMap::global(AffineMap(row.transpose(), Vec::Zero(1)), AmbientNorm::euclidean(1));
    const double p = uniform(rng, -0.8, 0.8);
    try {
      CHECK((boundary(slice(t, g, p)) + slice(boundary(t), g, p)).empty());
      ++checked;
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::DegenerateLevel);
    }
  }
  CHECK(checked > 150);
}

TEST_CASE("slices are supported in the level set", "[slicing]") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyhedralCurrent t = random_planar_current(rng, uniform_int(rng, 1, 2));
    const Vec row = random_direction(rng, 2);
    const double p = uniform(rng, -0.8, 0.8);
    try {
      for (const auto& v : slice(t, Projection(row.transpose()), Vec::Constant(1, p)).vertices()) {
        CHECK(std::abs(row.dot(v) - p) <= 1e-9);
      }
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::DegenerateLevel);
    }
  }
}

TEST_CASE("universal property against piecewise-linear test functions", "[slicing]") {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = uniform_int(rng, 1, 2);
    const PolyhedralCurrent t = random_planar_current(rng, k);
    const Vec row = random_direction(rng, 2);
    PiecewiseLinear psi;
    double x = uniform(rng, -1.5, -0.5);
    const int knots = uniform_int(rng, 3, 6);
    for (int i = 0; i < knots; ++i) {
      psi.knots.push_back(x);
      psi.values.push_back(i == 0 || i + 1 == knots ? 0.0 : uniform(rng, -2, 2));
      x += uniform(rng, 0.1, 0.8);
    }
    for (int form = 0; form < 10; ++form) {
      const AffineFunction h{random_vec(rng, 2), uniform(rng, -1, 1)};
      const Mat pi = random_mat(rng, k - 1, 2);
      const UniversalPropertyReport r = verify_universal_property(t, row, psi, h, pi);
      CHECK(std::abs(r.lhs - r.rhs) <= 1e-6);
    }
  }
}

TEST_CASE("slicing inequality and mass identity", "[slicing]") {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const PolyhedralCurrent t = random_planar_current(rng, uniform_int(rng, 1, 2));
    const Projection rho(random_direction(rng, 2).transpose());
    const FubiniReport f = verify_mass_fubini(t, rho);
    CHECK(f.inequality_holds);
    if (t.ambient().kind() == AmbientNorm::Kind::Euclidean) CHECK(f.slice_integral <= f.total_mass + 1e-9);
    CHECK(f.gap <= 1e-9 * std::max(1.0, f.restricted_mass));
  }
}

TEST_CASE("Fubini on the square: area from unit slices", "[slicing]") {
  const FubiniReport f = verify_mass_fubini(unit_square(), Projection::axis(2, 1));
  CHECK(f.slice_integral == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(f.restricted_mass == Catch::Approx(1.0).epsilon(1e-12));
  CHECK(f.lipschitz == Catch::Approx(1.0));
}

TEST_CASE("slicing commutes with affine push-forward", "[slicing]") {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const PolyhedralCurrent t = random_planar_current(rng, 2);
    const auto f = PiecewiseAffineMap::global(AffineMap(random_invertible(rng, 2), random_vec(rng, 2)), t.ambient());
    const CommuteReport r = verify_slice_pushforward_commute(t, f, random_direction(rng, 2), 10, trial);
    CHECK(r.max_difference <= 1e-9);
  }
}

TEST_CASE("slices of characteristic sets", "[slicing]") {
  Rng rng(45);
  for (int trial = 0; trial < 10; ++trial) {
    const PolyhedralCurrent t = random_planar_current(rng, 2);
    CHECK(slice_characteristic_consistency(t, random_direction(rng, 2), 10, trial).max_discrepancy <= 1e-9);
  }
}

TEST_CASE("iterated slicing down to points", "[slicing]") {
  const AmbientNorm e3 = AmbientNorm::euclidean(3);
  const PolyhedralCurrent tet(e3, 3, {{Simplex({pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}), 1}});
  Mat rows(2, 3);
  rows << 1, 0, 0, 0, 1, 0;
  const PolyhedralCurrent s = slice(tet, Projection(rows), pt(0.2, 0.3));
  REQUIRE(s.dim() == 1);
  CHECK(mass(s, JacobianKind::MassStar).total == Catch::Approx(0.5).epsilon(1e-12));
  CHECK(code_of([] { Projection(Mat::Constant(1, 2, 1.0)); }) == ErrorCode::InvalidInput);
}

TEST_CASE("Gauss-Legendre is exact to degree 2n - 1", "[slicing]") {
  for (int n = 1; n <= 6; ++n) {
    double sum = 0.0;
    for (const auto& [x, w] : gauss_legendre(n, 0.5, 2.0)) sum += w * std::pow(x, 2 * n - 1);
    CHECK(sum == Catch::Approx((std::pow(2.0, 2 * n) - std::pow(0.5, 2 * n)) / (2 * n)).epsilon(1e-13));
  }
}
