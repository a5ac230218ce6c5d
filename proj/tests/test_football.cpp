#include "support.hpp"

#include "gmt/football.hpp"

#include <numbers>

using namespace gmt;
using namespace gmt::test;

namespace {

// Area of the polygonal domain: two half n-gons of the unit circle plus the
// strip, minus the slot.
double expected_area(const FootballParams& p) {
  return std::numbers::pi + 2.0 * p.eps - p.slot * p.eps;
}

}  // namespace

TEST_CASE("coarse football geometry", "[football]") {
  FootballParams p;
  p.eps = 0.1;
  p.h = 0.04;
  p.probe_t = 0.04;
  const Football f = make_flat_football(p);
  const FootballReport r = football_report(f);
  // Inscribed polygons lose O(h^2) area against the circle.
  CHECK(std::abs(r.area - expected_area(p)) <= 2.0 * p.h * p.h);
  CHECK(r.area < expected_area(p));
  CHECK(r.max_edge_stretch <= 1 + 1e-12);
  CHECK(r.boundary_loops == 1);
  CHECK(r.boundary_paths == 0);
  CHECK(r.winding_number == Catch::Approx(1.0).margin(1e-9));
  CHECK(r.straight_distance == Catch::Approx(p.eps + 2 * p.probe_t));
  CHECK(r.slit_distance == Catch::Approx(2 * std::hypot(p.slot / 2, p.probe_t)));
  // The graph path must go around the slot.
  CHECK(r.across_distance >= r.slit_distance - 1e-12);
  CHECK(r.across_distance <= 1.15 * r.slit_distance);
  CHECK(f.mesh.vertices[f.probe_below].isApprox(pt(0, -p.probe_t)));
  CHECK(f.mesh.vertices[f.probe_above].isApprox(pt(0, p.eps + p.probe_t)));
}

TEST_CASE("collapse map squeezes the strip", "[football]") {
  const PiecewiseAffineMap f = football_collapse(0.1);
  CHECK(f(pt(0.3, -0.5)).isApprox(pt(0.3, -0.5)));
  CHECK(f(pt(0.3, 0.05)).isApprox(pt(0.3, 0.0)));
  CHECK(f(pt(0.3, 0.6)).isApprox(pt(0.3, 0.5)));
}

TEST_CASE("winding numbers of polygonal circles", "[football]") {
  const PolyhedralCurrent c = polygonal_circle(24);
  CHECK(winding_number(c, pt(0, 0)) == Catch::Approx(1.0));
  CHECK(winding_number(c, pt(0.3, -0.2)) == Catch::Approx(1.0));
  CHECK(winding_number(c, pt(3, 0)) == Catch::Approx(0.0).margin(1e-12));
  CHECK(winding_number(-c, pt(0, 0)) == Catch::Approx(-1.0));
  CHECK(boundary(c).empty());
}

TEST_CASE("domain boundary is a cycle of the right length", "[football]") {
  const double eps = 0.2, slot = 1.0;
  const int segments = 16;
  const PolyhedralCurrent b = football_domain_boundary(eps, slot, segments);
  CHECK(boundary(b).empty());
  const double half_polygon = segments * 2.0 * std::sin(std::numbers::pi / (2 * segments));
  // Two half polygons, two strip sides and the slot rim.
  const double expected = 2 * half_polygon + 2 * eps + 2 * slot + 2 * eps;
  CHECK(mass(b, JacobianKind::MassStar).total == Catch::Approx(expected).epsilon(1e-12));
}

TEST_CASE("flat distance to the circle is bounded by (2 + L) eps", "[football]") {
  for (double eps : {0.2, 0.1}) {
    const FootballFlatReport r = football_flat_distance(eps, 1.0, 8);
    CHECK(r.filling_bound == Catch::Approx(3.0 * eps));
    CHECK(r.flat_distance <= r.filling_bound + 1e-9);
    CHECK(r.flat_distance > 0.0);
  }
}

TEST_CASE("football parameter checks", "[football]") {
  FootballParams p;
  p.slot = 2.5;
  CHECK(code_of([&] { make_flat_football(p); }) == ErrorCode::InvalidInput);
  p = {};
  p.eps = 0.0;
  CHECK(code_of([&] { make_flat_football(p); }) == ErrorCode::InvalidInput);
  p = {};
  p.h = -1;
  CHECK(code_of([&] { make_flat_football(p); }) == ErrorCode::InvalidInput);
}
