#include "support.hpp"

#include "gmt/current.hpp"
#include "gmt/flatnorm.hpp"

using namespace gmt;
using namespace gmt::test;

namespace {

const AmbientNorm kE2 = AmbientNorm::euclidean(2);

PolyhedralCurrent rect(double x0, double y0, double x1, double y1, const AmbientNorm& a = kE2) {
  return PolyhedralCurrent(a, 2, {{Simplex({pt(x0, y0), pt(x1, y0), pt(x1, y1)}), 1},
                                  {Simplex({pt(x0, y0), pt(x1, y1), pt(x0, y1)}), 1}});
}

// Fold along x = 0: 1-Lipschitz, isometric on each side.
PiecewiseAffineMap fold() {
  Mat flip = Mat::Identity(2, 2);
  flip(0, 0) = -1;
  return PiecewiseAffineMap({{{HalfSpace{pt(-1, 0), 0.0}}, AffineMap::identity(2)},
                             {{HalfSpace{pt(1, 0), 0.0}}, AffineMap(flip, Vec::Zero(2))}},
                            kE2);
}

bool inside_triangle(const Simplex& s, const Vec& p) {
  auto cross = [](const Vec& a, const Vec& b, const Vec& c) {
    return (b(0) - a(0)) * (c(1) - a(1)) - (b(1) - a(1)) * (c(0) - a(0));
  };
  const double d0 = cross(s.vertices[0], s.vertices[1], p), d1 = cross(s.vertices[1], s.vertices[2], p),
               d2 = cross(s.vertices[2], s.vertices[0], p);
  return (d0 > 0 && d1 > 0 && d2 > 0) || (d0 < 0 && d1 < 0 && d2 < 0);
}

}  // namespace

TEST_CASE("canonical form merges and cancels cells", "[current]") {
  const Simplex e({pt(0, 0), pt(1, 0)});
  const PolyhedralCurrent t(kE2, 1, {{e, 2}, {e.reversed(), 2}});
  CHECK(t.empty());
  const PolyhedralCurrent u(kE2, 1, {{Simplex({pt(1, 0), pt(0, 0)}), 3}});
  REQUIRE(u.cells().size() == 1);
  CHECK(u.cells()[0].multiplicity == -3);  // vertices sorted, sign folded in
  CHECK((u - u).empty());
  CHECK((u + u).cells()[0].multiplicity == -6);
  CHECK(u.scaled(-2).cells()[0].multiplicity == 6);
  CHECK(code_of([] { PolyhedralCurrent(kE2, 2, {{Simplex({pt(0, 0), pt(1, 1), pt(2, 2)}), 1}}); }) ==
        ErrorCode::InvalidInput);
}

TEST_CASE("boundary of a boundary vanishes", "[current]") {
  Rng rng(30);
  for (int trial = 0; trial < 200; ++trial) {
    const PolyhedralCurrent t = random_planar_current(rng, 2);
    CHECK(boundary(boundary(t)).empty());
  }
  CHECK(boundary(rect(0, 0, 1, 1)).cells().size() == 4);
}

TEST_CASE("mass orderings and totals", "[current]") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyhedralCurrent t = random_planar_current(rng, uniform_int(rng, 1, 2));
    const MassMeasureReport star = mass(t, JacobianKind::MassStar);
    const MassMeasureReport ir = mass(t, JacobianKind::InscribedRiemannian);
    CHECK(star.total <= ir.total + 1e-9 * std::max(1.0, ir.total));
    double sum = 0.0;
    for (double c : ir.per_cell) sum += c;
    CHECK(std::abs(sum - ir.total) <= 1e-12 * std::max(1.0, ir.total));
    CHECK(mass_ambrosio_kirchheim(t).total == star.total);
    const MassMeasureReport serial = mass_serial(t, JacobianKind::InscribedRiemannian);
    CHECK(serial.total == ir.total);
    CHECK(serial.per_cell == ir.per_cell);
  }
}

TEST_CASE("mass of explicit currents", "[current]") {
  CHECK(mass(rect(0, 0, 2, 3), JacobianKind::MassStar).total == Catch::Approx(6.0));
  const AmbientNorm linf = AmbientNorm::max_norm(2);
  const PolyhedralCurrent diag = curve_current({pt(0, 0), pt(1, 1)}, false, linf);
  CHECK(mass(diag, JacobianKind::MassStar).total == Catch::Approx(1.0));
  CHECK(mass(curve_current({pt(0, 0), pt(1, 1)}, false, kE2), JacobianKind::Busemann).total ==
        Catch::Approx(std::sqrt(2.0)));
  // Square of side 1 in the max norm: Busemann area pi/4.
  CHECK(mass(rect(0, 0, 1, 1, linf), JacobianKind::Busemann).total == Catch::Approx(std::numbers::pi / 4));
}

TEST_CASE("push-forward mass is at most L^k times the mass", "[current]") {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = uniform_int(rng, 1, 2);
    const PolyhedralCurrent t = random_planar_current(rng, k);
    const PolyhedralCurrent te = PolyhedralCurrent(kE2, k, t.cells());
    const Mat a = random_mat(rng, 2, 2) * 2.0;
    const double lip = Eigen::JacobiSVD<Mat>(a).singularValues()(0);
    const PolyhedralCurrent image = PolyhedralCurrent::from_cells_dropping_degenerate(
        kE2, k, push_forward(PiecewiseAffineMap::global(AffineMap(a, Vec::Zero(2)), kE2), te).cells());
    CHECK(mass(image, JacobianKind::MassStar).total <=
          std::pow(lip, k) * mass(te, JacobianKind::MassStar).total + 1e-9);
  }
}

TEST_CASE("boundary commutes with push-forward", "[current]") {
  Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const PolyhedralCurrent t = random_planar_current(rng, 2);
    const auto f = PiecewiseAffineMap::global(AffineMap(random_invertible(rng, 2), random_vec(rng, 2)), t.ambient());
    CHECK((boundary(push_forward(f, t)) - push_forward(f, boundary(t))).empty());
  }
}

TEST_CASE("mass-preserving fold: measures agree on boxes", "[current]") {
  // Two rectangles on either side of the fold line whose images do not overlap.
  const PolyhedralCurrent t = rect(0.5, 0.0, 1.0, 1.0) + rect(-0.4, 0.0, -0.1, 1.0);
  const PiecewiseAffineMap f = fold();
  const PolyhedralCurrent ft = push_forward(f, t);
  const double mt = mass(t, JacobianKind::MassStar).total;
  REQUIRE(mt <= mass(ft, JacobianKind::MassStar).total + 1e-12);
  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    double x0 = uniform(rng, -0.2, 1.1), x1 = uniform(rng, -0.2, 1.1);
    double y0 = uniform(rng, -0.2, 1.1), y1 = uniform(rng, -0.2, 1.1);
    if (x0 > x1) std::swap(x0, x1);
    if (y0 > y1) std::swap(y0, y1);
    const std::vector<HalfSpace> box{{pt(1, 0), x1}, {pt(-1, 0), -x0}, {pt(0, 1), y1}, {pt(0, -1), -y0}};
    const double image_side = mass(restrict(ft, box), JacobianKind::MassStar).total;
    const double source_side = mass(restrict_preimage(t, f, box), JacobianKind::MassStar).total;
    CHECK(std::abs(image_side - source_side) <= 1e-9);
  }
}

TEST_CASE("mass-preserving fold: almost every fiber meets one cell", "[current]") {
  const PolyhedralCurrent t = rect(0.5, 0.0, 1.0, 1.0) + rect(-0.4, 0.0, -0.1, 1.0);
  const PiecewiseAffineMap f = fold();
  Rng rng(35);
  const auto chars = characteristic_set(t);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec p = pt(uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 1.0));
    int hits = 0;
    for (const auto& s : chars) {
      std::vector<Point> img;
      for (const auto& v : s.vertices) img.push_back(f(v));
      hits += inside_triangle(Simplex(img), p) ? 1 : 0;
    }
    const bool in_image = (p(0) > 0.1 && p(0) < 0.4) || p(0) > 0.5;
    CHECK(hits == (in_image ? 1 : 0));
  }
}

TEST_CASE("folding an overlapping current loses mass", "[current]") {
  // Mirror-image halves: the fold lands them cell by cell on each other with
  // opposite orientations.
  Mat flip = Mat::Identity(2, 2);
  flip(0, 0) = -1;
  const PolyhedralCurrent right = rect(0.0, 0.0, 1.0, 1.0);
  const PolyhedralCurrent t = right - push_forward(PiecewiseAffineMap::global(AffineMap(flip, Vec::Zero(2)), kE2), right);
  const PolyhedralCurrent ft = push_forward(fold(), t);
  CHECK(mass(t, JacobianKind::MassStar).total == Catch::Approx(2.0));
  CHECK(ft.empty());
}

TEST_CASE("straddling cells need refinement", "[current]") {
  CHECK(code_of([] { push_forward(fold(), rect(-0.5, 0.0, 0.5, 1.0)); }) == ErrorCode::RefinementRequired);
}

TEST_CASE("evaluation against affine forms", "[current]") {
  const PolyhedralCurrent sq = rect(0, 0, 1, 1);
  CHECK(evaluate_form(sq, {Vec::Zero(2), 1.0}, Mat::Identity(2, 2)) == Catch::Approx(1.0));
  // Integral of x over the unit square.
  CHECK(evaluate_form(sq, {pt(1, 0), 0.0}, Mat::Identity(2, 2)) == Catch::Approx(0.5));
  Mat swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(evaluate_form(sq, {Vec::Zero(2), 1.0}, swap) == Catch::Approx(-1.0));
  // A 1-current against dx: the x-displacement.
  const PolyhedralCurrent c = curve_current({pt(0, 0), pt(2, 1), pt(3, -1)}, false, kE2);
  CHECK(evaluate_form(c, {Vec::Zero(2), 1.0}, pt(1, 0).transpose()) == Catch::Approx(3.0));
}

TEST_CASE("charted mass agrees with the direct mass", "[current]") {
  Rng rng(36);
  for (int trial = 0; trial < 30; ++trial) {
    const PolyhedralCurrent t = random_planar_current(rng, uniform_int(rng, 1, 2));
    for (JacobianKind kind : {JacobianKind::Busemann, JacobianKind::MassStar, JacobianKind::InscribedRiemannian}) {
      CHECK(close(mass(charted(t), kind).total, mass(t, kind).total, 1e-12));
    }
  }
}
