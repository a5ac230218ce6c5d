#include "support.hpp"

#include "gmt/lp.hpp"

using namespace gmt;
using namespace gmt::test;

namespace {

// Brute force over all bases of a tiny standard-form LP.
double best_vertex(const Mat& a, const Vec& b, const Vec& c) {
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pick(m);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == m) {
      Mat basis(m, m);
      for (int i = 0; i < m; ++i) basis.col(i) = a.col(pick[i]);
      Eigen::FullPivLU<Mat> lu(basis);
      if (lu.rank() < m) return;
      const Vec xb = lu.solve(b);
      if (xb.minCoeff() < -1e-12) return;
      double cost = 0.0;
      for (int i = 0; i < m; ++i) cost += c(pick[i]) * xb(i);
      best = std::min(best, cost);
      return;
    }
    for (int j = start; j < n; ++j) {
      pick[pos] = j;
      rec(pos + 1, j + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace

TEST_CASE("small LP against vertex enumeration", "[lp]") {
  Mat a(2, 4);
  a << 1, 2, 1, 0, 3, 1, 0, 1;
  const Vec b = pt(4, 6), c = (Vec(4) << -1, -1, 0, 0).finished();
  const LpResult r = solve_lp(a, b, c, {2, 3});
  CHECK(r.value == Catch::Approx(-2.8).epsilon(1e-12));
  CHECK(r.x(0) == Catch::Approx(1.6));
  CHECK(r.x(1) == Catch::Approx(1.2));
  CHECK(r.value == Catch::Approx(best_vertex(a, b, c)));
}

TEST_CASE("random LPs agree with vertex enumeration, parallel and serial", "[lp]") {
  Rng rng(70);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = uniform_int(rng, 2, 4), n = uniform_int(rng, 2, 5);
    Mat a(m, n + m);
    a.leftCols(n) = random_mat(rng, m, n);
    a.rightCols(m) = Mat::Identity(m, m);
    const Vec b = random_vec(rng, m, 0.1, 2.0);
    Vec c(n + m);
    c.head(n) = random_vec(rng, n, -1.0, 0.5);
    c.tail(m).setZero();
    a.leftCols(n) = a.leftCols(n).cwiseAbs();  // bounded feasible region
    std::vector<int> basis;
    for (int i = 0; i < m; ++i) basis.push_back(n + i);
    const LpResult r = solve_lp(a, b, c, basis);
    CHECK(r.value == Catch::Approx(best_vertex(a, b, c)).epsilon(1e-10).margin(1e-12));
    LpOptions serial;
    serial.serial = true;
    const LpResult s = solve_lp(a, b, c, basis, serial);
    CHECK(s.value == r.value);
    CHECK(s.pivots == r.pivots);
    CHECK((a * r.x - b).norm() <= 1e-9);
    CHECK(r.x.minCoeff() >= -1e-12);
  }
}

TEST_CASE("unbounded LP and size cap", "[lp]") {
  Mat a(1, 2);
  a << 1, -1;
  const Vec b = Vec::Constant(1, 1.0), c = pt(0, -1);
  CHECK(code_of([&] { solve_lp(a, b, c, {0}); }) == ErrorCode::NonConvergence);
  LpOptions tiny;
  tiny.max_entries = 1;
  CHECK(code_of([&] { solve_lp(a, b, pt(1, 1), {0}, tiny); }) == ErrorCode::SizeCapExceeded);
}
