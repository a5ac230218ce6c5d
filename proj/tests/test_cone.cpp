#include "support.hpp"

#include "gmt/cone.hpp"

#include <numbers>

using namespace gmt;
using namespace gmt::test;

namespace {

constexpr double kPi = std::numbers::pi;

AbstractChain random_chain(Rng& rng, int k, int vertices) {
  AbstractChain c;
  c.k = k;
  for (int i = uniform_int(rng, 1, 6); i > 0; --i) {
    std::vector<int> ids;
    while (static_cast<int>(ids.size()) < k + 1) {
      const int v = uniform_int(rng, 0, vertices - 1);
      if (std::find(ids.begin(), ids.end(), v) == ids.end()) ids.push_back(v);
    }
    c.add(ids, uniform_int(rng, 1, 3) * (uniform_int(rng, 0, 1) ? 1 : -1));
  }
  return c;
}

}  // namespace

TEST_CASE("cone metric satisfies the triangle inequality", "[cone]") {
  // Base: points on the unit circle with the intrinsic (arc) metric.
  Rng rng(60);
  auto arc = [](double a, double b) {
    const double d = std::fmod(std::abs(a - b), 2 * kPi);
    return std::min(d, 2 * kPi - d);
  };
  for (int trial = 0; trial < 20000; ++trial) {
    const double a = uniform(rng, 0, 2 * kPi), b = uniform(rng, 0, 2 * kPi), c = uniform(rng, 0, 2 * kPi);
    const double r = uniform(rng, 0, 1), s = uniform(rng, 0, 1), u = uniform(rng, 0, 1);
    const double ab = cone_distance(arc(a, b), r, s), bc = cone_distance(arc(b, c), s, u),
                 ac = cone_distance(arc(a, c), r, u);
    REQUIRE(ac <= ab + bc + 1e-9);
    REQUIRE(cone_distance(arc(a, b), r, s) == Catch::Approx(cone_distance(arc(b, a), s, r)).margin(1e-15));
  }
  CHECK(cone_distance(1.0, 0.0, 0.7) == Catch::Approx(0.7));  // distance to the apex is r
  CHECK(cone_distance(0.0, 0.3, 0.3) == 0.0);
  CHECK(cone_distance(4.0, 0.3, 0.5) == Catch::Approx(0.8));  // beyond pi: through the apex
}

TEST_CASE("end map and base maps are 1-Lipschitz", "[cone]") {
  Rng rng(61);
  for (int trial = 0; trial < 10000; ++trial) {
    const double d = uniform(rng, 0, 5);
    REQUIRE(cone_distance(d, 1, 1) <= d + 1e-12);
    const double smaller = uniform(rng, 0, std::min(d, kPi));
    const double r = uniform(rng, 0, 1), s = uniform(rng, 0, 1);
    REQUIRE(cone_distance(smaller, r, s) <= cone_distance(std::min(d, kPi), r, s) + 1e-12);
  }
}

TEST_CASE("cone chart seminorm", "[cone]") {
  Rng rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const Seminorm base = random_seminorm(rng, uniform_int(rng, 1, 2));
    const double r = uniform(rng, 0, 1);
    const Seminorm cone = cone_chart_seminorm(base, r);
    REQUIRE(cone.domain_dim() == base.domain_dim() + 1);
    const Vec v = random_vec(rng, base.domain_dim());
    const double s = uniform(rng, -1, 1);
    Vec vs(v.size() + 1);
    vs << v, s;
    CHECK(std::abs(cone(vs) - std::sqrt(r * r * base(v) * base(v) + s * s)) <= 1e-9);
  }
}

TEST_CASE("coning divides the inscribed Riemannian mass by k + 1", "[cone]") {
  Rng rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = uniform_int(rng, 1, 2);
    PolyhedralCurrent t = random_planar_current(rng, k);
    t = PolyhedralCurrent(AmbientNorm::euclidean(2), k, t.cells());
    const ConeMassReport r = cone_mass_ir(t);
    CHECK(r.k == k);
    CHECK(std::abs(r.cone_mass - r.base_mass / (k + 1)) <= 1e-9 * std::max(1.0, r.base_mass));
  }
  const ConeMassReport circle = cone_mass_ir(circle_base(64));
  CHECK(circle.base_mass == Catch::Approx(2 * kPi).epsilon(1e-12));
  CHECK(circle.ratio == Catch::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("edge-length charts", "[cone]") {
  // Right triangle with legs 3, 4 has area 6.
  Mat lengths(3, 3);
  lengths << 0, 3, 4, 3, 0, 5, 4, 5, 0;
  const ChartCell c = chart_from_edge_lengths(lengths);
  ChartedCurrent t{2, {c}};
  CHECK(mass(t, JacobianKind::InscribedRiemannian).total == Catch::Approx(6.0).epsilon(1e-12));
  Mat bad(3, 3);
  bad << 0, 1, 1, 1, 0, 5, 1, 5, 0;
  CHECK(code_of([&] { chart_from_edge_lengths(bad); }) == ErrorCode::InvalidInput);
}

TEST_CASE("boundary of a cone chain", "[cone]") {
  Rng rng(64);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = uniform_int(rng, 0, 3);
    const AbstractChain c = random_chain(rng, k, 8);
    const AbstractChain cone = cone_chain(c, 100);
    if (k == 0) continue;
    REQUIRE(chain_boundary(chain_boundary(cone)).empty());
    REQUIRE(chain_boundary(cone) == c - cone_chain(chain_boundary(c), 100));
  }
}

TEST_CASE("cone boundary decomposition of a square", "[cone]") {
  const AmbientNorm e2 = AmbientNorm::euclidean(2);
  const PolyhedralCurrent sq(e2, 2, {{Simplex({pt(0, 0), pt(1, 0), pt(1, 1)}), 1},
                                     {Simplex({pt(0, 0), pt(1, 1), pt(0, 1)}), 1}});
  const ConeBoundary b = cone_boundary_decomposition(sq);
  CHECK(b.boundary == b.cone_part + b.end_part);
  CHECK(b.end_part == abstract_chain(sq));
  CHECK(b.end_part_mass == Catch::Approx(1.0).epsilon(1e-12));
  // The cone over the boundary square: perimeter 4 coned, 4 / 2.
  CHECK(b.cone_part_mass == Catch::Approx(2.0).epsilon(1e-9));
}
