#include "support.hpp"

#include "gmt/onedim.hpp"

#include <algorithm>

using namespace gmt;
using namespace gmt::test;

namespace {

PiecewiseAffineMap x_coordinate(int dim) {
  Mat row = Mat::Zero(1, dim);
  row(0, 0) = 1.0;
  return PiecewiseAffineMap::global(AffineMap(row, Vec::Zero(1)), AmbientNorm::euclidean(1));
}

}  // namespace

TEST_CASE("decomposition conserves edges, length and boundary", "[onedim]") {
  Rng rng(50);
  for (int trial = 0; trial < 1000; ++trial) {
    const PolyhedralCurrent t = random_graph_current(rng, uniform_int(rng, 2, 3));
    const CurrentGraph g = CurrentGraph::from_current(t);
    const Decomposition d = decompose_1current(g);
    REQUIRE(expanded_edges(d) == expanded_edges(g));
    CHECK(std::abs(d.total_length(g) - g.mass()) <= 1e-12 * std::max(1.0, g.mass()));
    long long boundary_mass = 0;
    for (const auto& c : boundary(t).cells()) boundary_mass += std::abs(c.multiplicity);
    CHECK(boundary_mass == 2 * static_cast<long long>(d.paths.size()));
    for (const auto& p : d.paths) {
      std::vector<int> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
  }
}

TEST_CASE("a square loop and a doubled segment", "[onedim]") {
  const AmbientNorm e2 = AmbientNorm::euclidean(2);
  const PolyhedralCurrent loop = curve_current({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, true, e2);
  const Decomposition d = decompose_1current(loop);
  CHECK(d.paths.empty());
  REQUIRE(d.loops.size() == 1);
  CHECK(d.loops[0].size() == 4);
  const PolyhedralCurrent seg(e2, 1, {{Simplex({pt(0, 0), pt(2, 0)}), 2}});
  const Decomposition ds = decompose_1current(seg);
  CHECK(ds.paths.size() == 2);
  CHECK(ds.total_length(CurrentGraph::from_current(seg)) == Catch::Approx(4.0));
}

TEST_CASE("rigidity verdicts", "[onedim]") {
  const AmbientNorm e2 = AmbientNorm::euclidean(2);
  const PolyhedralCurrent straight = curve_current({pt(0, 0), pt(0.5, 0), pt(1, 0)}, false, e2);
  const RigidityVerdict rigid = check_n1_rigidity(straight, x_coordinate(2), 0.0, 1.0);
  CHECK(rigid.verdict == Rigidity::Rigid);
  CHECK(rigid.witness.empty());

  const PolyhedralCurrent detour = curve_current({pt(0, 0), pt(0.5, 0.3), pt(1, 0)}, false, e2);
  CHECK(check_n1_rigidity(detour, x_coordinate(2), 0.0, 1.0).verdict == Rigidity::Detour);

  const PolyhedralCurrent with_loop =
      straight + curve_current({pt(2, 0), pt(2.5, 0), pt(2.5, 0.5)}, true, e2);
  CHECK(check_n1_rigidity(with_loop, x_coordinate(2), 0.0, 1.0).verdict == Rigidity::ExcessMass);

  // f squeezes [0,1] onto [0,0.5]: endpoints closer than the curve is long.
  Mat half = Mat::Zero(1, 2);
  half(0, 0) = 0.5;
  const auto squeeze = PiecewiseAffineMap::global(AffineMap(half, Vec::Zero(1)), AmbientNorm::euclidean(1));
  CHECK(check_n1_rigidity(straight, squeeze, 0.0, 0.5).verdict == Rigidity::EndpointGap);

  // In the max norm a monotone staircase is a geodesic.
  const AmbientNorm linf = AmbientNorm::max_norm(2);
  const PolyhedralCurrent stairs = curve_current({pt(0, 0), pt(0.5, 0.2), pt(1, 0.4)}, false, linf);
  CHECK(check_n1_rigidity(stairs, x_coordinate(2), 0.0, 1.0).verdict == Rigidity::Rigid);
}

TEST_CASE("rigidity input checks", "[onedim]") {
  const AmbientNorm e2 = AmbientNorm::euclidean(2);
  const PolyhedralCurrent straight = curve_current({pt(0, 0), pt(1, 0)}, false, e2);
  Mat twice = Mat::Zero(1, 2);
  twice(0, 0) = 2.0;
  const auto stretch = PiecewiseAffineMap::global(AffineMap(twice, Vec::Zero(1)), AmbientNorm::euclidean(1));
  CHECK(code_of([&] { check_n1_rigidity(straight, stretch, 0.0, 2.0); }) == ErrorCode::NotLipschitz);
  CHECK(code_of([&] { check_n1_rigidity(straight, x_coordinate(2), 0.0, 0.5); }) ==
        ErrorCode::BoundaryConditionViolated);
  CHECK(to_string(Rigidity::ExcessMass) == "EXCESS_MASS");
}
