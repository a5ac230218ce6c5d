#include "support.hpp"

#include "gmt/flatnorm.hpp"

using namespace gmt;
using namespace gmt::test;

namespace {

const AmbientNorm kE2 = AmbientNorm::euclidean(2);

// Integral flat norm by trying every v in {-2..2}^triangles; u = t - boundary v.
double brute_force_flat(const SimplicialComplex& k, const Chain& t) {
  const Mat d = k.boundary_matrix(2);
  const Vec w1 = k.weights(1, JacobianKind::MassStar), w2 = k.weights(2, JacobianKind::MassStar);
  const int n = k.count(2);
  std::vector<int> v(n, -2);
  double best = std::numeric_limits<double>::infinity();
  for (;;) {
    Vec vv(n);
    for (int i = 0; i < n; ++i) vv(i) = v[i];
    const Vec u = t.coefficients - d * vv;
    best = std::min(best, u.cwiseAbs().dot(w1) + vv.cwiseAbs().dot(w2));
    int j = 0;
    while (j < n && v[j] == 2) v[j++] = -2;
    if (j == n) break;
    ++v[j];
  }
  return best;
}

}  // namespace

TEST_CASE("boundary matrices compose to zero", "[flatnorm]") {
  BuildOptions o;
  o.augment_box = true;
  const ComplexBuild b = build_complex({staircase(3), subdivided_diagonal(3)}, o);
  const Mat d1 = b.complex.boundary_matrix(1), d2 = b.complex.boundary_matrix(2);
  CHECK((d1 * d2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("square boundary: flat norm is min(area, perimeter)", "[flatnorm]") {
  for (double s : {0.5, 1.0, 2.0, 3.0, 5.0}) {
    const ComplexBuild b = build_complex({square_current(s, kE2), square_boundary(s, kE2)});
    const FlatNormResult f = flat_norm(b.chains[1], b.complex);
    CHECK(f.value == Catch::Approx(std::min(s * s, 4 * s)).epsilon(1e-12));
    CHECK(f.certified);
    CHECK(f.value == Catch::Approx(brute_force_flat(b.complex, b.chains[1])).epsilon(1e-12));
  }
}

TEST_CASE("LP flat norm matches brute force on random chains", "[flatnorm]") {
  // 2 x 2 grid of the unit square, 8 triangles.
  std::vector<Cell> cells;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Vec p = pt(0.5 * i, 0.5 * j);
      cells.push_back({Simplex({p, p + pt(0.5, 0), p + pt(0.5, 0.5)}), 1});
      cells.push_back({Simplex({p, p + pt(0.5, 0.5), p + pt(0, 0.5)}), 1});
    }
  }
  const ComplexBuild cb = build_complex({PolyhedralCurrent(kE2, 2, cells)});
  REQUIRE(cb.complex.count(2) == 8);
  Rng rng(90);
  for (int trial = 0; trial < 15; ++trial) {
    Chain t{1, Vec::Zero(cb.complex.count(1))};
    for (Eigen::Index e = 0; e < t.coefficients.size(); ++e) {
      if (uniform(rng, 0, 1) < 0.4) t.coefficients(e) = uniform_int(rng, -1, 1);
    }
    const FlatNormResult f = flat_norm(t, cb.complex);
    const double oracle = brute_force_flat(cb.complex, t);
    CHECK(f.value <= oracle + 1e-9);
    CHECK(f.integer_upper >= oracle - 1e-9);
    if (f.certified) CHECK(f.value == Catch::Approx(oracle).epsilon(1e-9));
  }
}

TEST_CASE("flat norm is a norm and is bounded by mass", "[flatnorm]") {
  BuildOptions o;
  o.augment_box = true;
  const ComplexBuild b = build_complex({staircase(4), subdivided_diagonal(4), curve_current({pt(0, 0), pt(0, 1), pt(1, 1)}, false, kE2)}, o);
  const Chain s = b.chains[0], t = b.chains[1], q = b.chains[2];
  for (const Chain& x : {s, t, q, s - t, q - s}) {
    CHECK(flat_norm(x, b.complex).value <= chain_mass(x, b.complex, JacobianKind::MassStar) + 1e-9);
  }
  const double fs = flat_norm(s - t, b.complex).value, fq = flat_norm(q - s, b.complex).value;
  CHECK(flat_norm(q - t, b.complex).value <= fs + fq + 1e-9);
  Chain scaled = s - t;
  scaled.coefficients *= -2.5;
  CHECK(flat_norm(scaled, b.complex).value == Catch::Approx(2.5 * fs).epsilon(1e-9));
  Chain zero = s;
  zero.coefficients.setZero();
  CHECK(flat_norm(zero, b.complex).value == 0.0);
}

TEST_CASE("staircases converge to the diagonal in flat norm", "[flatnorm]") {
  BuildOptions o;
  o.augment_box = true;
  double previous = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 5; ++n) {
    const FlatNormResult f = flat_distance(staircase(n), subdivided_diagonal(n), o);
    CHECK(f.certified);
    // The area between staircase and diagonal is 1/(2n).
    CHECK(f.value <= 0.5 / n + 1e-9);
    CHECK(f.value < previous);
    previous = f.value;
  }
}

TEST_CASE("lower semicontinuity along kinked curves", "[flatnorm]") {
  // (0,0) -> (0.5, 0.5 + 1/i) -> (1,1) tends to the diagonal.
  std::vector<PolyhedralCurrent> seq;
  for (int i = 2; i <= 7; ++i) seq.push_back(curve_current({pt(0, 0), pt(0.5, 0.5 + 1.0 / i), pt(1, 1)}, false, kE2));
  BuildOptions o;
  o.augment_box = true;
  const SemicontinuityReport r = lower_semicontinuity_probe(seq, curve_current({pt(0, 0), pt(1, 1)}, false, kE2), o);
  CHECK(r.holds);
  CHECK(r.limit_mass == Catch::Approx(std::sqrt(2.0)));
  CHECK(r.liminf_mass >= r.limit_mass);
  CHECK(r.masses.back() < r.masses.front());
  for (std::size_t i = 1; i < r.flat_distances.size(); ++i) CHECK(r.flat_distances[i] < r.flat_distances[i - 1]);
  CHECK(r.weak_differences.back() < r.weak_differences.front());
}

TEST_CASE("crossing input cells are located", "[flatnorm]") {
  const PolyhedralCurrent a = curve_current({pt(0, 0), pt(1, 1)}, false, kE2);
  const PolyhedralCurrent b = curve_current({pt(0, 1), pt(1, 0)}, false, kE2);
  try {
    build_complex({a, b});
    FAIL("expected a PairError");
  } catch (const PairError& e) {
    CHECK(e.code() == ErrorCode::RefinementFailure);
  }
  CHECK(code_of([] { build_complex({curve_current({pt(0, 0), pt(1, 0)}, false, kE2),
                                    curve_current({pt(0, 0, 0), pt(1, 0, 0)}, false, AmbientNorm::euclidean(3))}); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("chains round-trip through currents", "[flatnorm]") {
  const ComplexBuild b = build_complex({square_current(1.0, kE2), square_boundary(1.0, kE2)});
  CHECK((current_of(b.chains[0], b.complex) - square_current(1.0, kE2)).empty());
  CHECK((current_of(b.chains[1], b.complex) - square_boundary(1.0, kE2)).empty());
  CHECK(code_of([&] { chain_of(curve_current({pt(0, 0), pt(0.5, 0.5)}, false, kE2), b.complex); }) ==
        ErrorCode::InvalidInput);
}
