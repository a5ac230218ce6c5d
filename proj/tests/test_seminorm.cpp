#include "support.hpp"

#include "gmt/seminorm.hpp"

using namespace gmt;
using namespace gmt::test;

TEST_CASE("ambient norms", "[seminorm]") {
  const Vec x = pt(3, -4);
  CHECK(AmbientNorm::euclidean(2)(x) == 5.0);
  CHECK(AmbientNorm::max_norm(2)(x) == 4.0);
  CHECK(AmbientNorm::sum_norm(2)(x) == 7.0);
  Mat q(2, 2);
  q << 2, 1, 1, 3;
  CHECK(AmbientNorm::quadratic(q)(x) == Catch::Approx(std::sqrt(x.dot(q * x))));
  const AmbientNorm prod = AmbientNorm::product({AmbientNorm::max_norm(2), AmbientNorm::sum_norm(1)});
  CHECK(prod(pt(1, -2, 2)) == Catch::Approx(std::sqrt(8.0)));
  CHECK(prod.tag() == "prod");
  CHECK(code_of([] { AmbientNorm::quadratic(Mat::Identity(2, 2) * -1.0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("random seminorms satisfy the triangle inequality and homogeneity", "[seminorm]") {
  Rng rng(10);
  for (int trial = 0; trial < 10000; ++trial) {
    const Seminorm s = random_seminorm(rng, uniform_int(rng, 1, 3));
    const Vec u = random_vec(rng, s.domain_dim()), v = random_vec(rng, s.domain_dim());
    REQUIRE(s(u + v) <= s(u) + s(v) + 1e-12);
    const double lambda = uniform(rng, -3, 3);
    REQUIRE(std::abs(s(lambda * u) - std::abs(lambda) * s(u)) <= 1e-12 * std::max(1.0, s(u)));
  }
}

TEST_CASE("gauge blocks reproduce the seminorm", "[seminorm]") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Seminorm s = random_seminorm(rng, uniform_int(rng, 1, 3));
    const GaugeBlocks g = gauge_blocks(s);
    const Vec v = random_vec(rng, s.domain_dim());
    CHECK(close(g.evaluate(v), s(v), 1e-12));
  }
  CHECK(gauge_blocks(Seminorm::of(AmbientNorm::max_norm(3))).polytopal());
  CHECK_FALSE(gauge_blocks(Seminorm::of(AmbientNorm::euclidean(3))).polytopal());
}

TEST_CASE("facets of polytopal unit balls are dual-consistent", "[seminorm]") {
  Rng rng(12);
  int polytopes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Seminorm s = random_seminorm(rng, uniform_int(rng, 1, 3));
    const UnitBall ball = unit_ball(s);
    const auto* p = std::get_if<SymmetricPolytope>(&ball);
    if (p == nullptr) continue;
    ++polytopes;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      Vec v = random_vec(rng, s.domain_dim());
      v *= uniform(rng, 0.0, 1.0) / s(v);  // inside the unit ball
      for (const auto& xi : p->facets) worst = std::max(worst, std::abs(xi.dot(v)));
    }
    CHECK(worst <= 1 + 1e-9);
  }
  CHECK(polytopes > 20);
}

TEST_CASE("unit ball kinds", "[seminorm]") {
  CHECK(std::holds_alternative<Ellipsoid>(unit_ball(Seminorm::of(AmbientNorm::euclidean(2)))));
  CHECK(std::holds_alternative<SymmetricPolytope>(unit_ball(Seminorm::of(AmbientNorm::sum_norm(2)))));
  // l2 x linf(1) would be Euclidean again; linf(2) keeps the ball mixed.
  const AmbientNorm mixed = AmbientNorm::product({AmbientNorm::euclidean(1), AmbientNorm::max_norm(2)});
  CHECK(std::holds_alternative<GaugeBody>(unit_ball(Seminorm::of(mixed))));
  Mat a(2, 2);
  a << 1, 2, 2, 4;
  const Seminorm flat(a, AmbientNorm::euclidean(2));
  CHECK(flat.is_degenerate());
  CHECK(code_of([&] { unit_ball(flat); }) == ErrorCode::UnboundedBall);
}

TEST_CASE("dual norms against closed forms", "[seminorm]") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 4);
    const Vec xi = random_vec(rng, n);
    CHECK(close(dual_norm(AmbientNorm::euclidean(n), xi), xi.norm(), 1e-12));
    CHECK(close(dual_norm(AmbientNorm::max_norm(n), xi), xi.lpNorm<1>(), 1e-12));
    CHECK(close(dual_norm(AmbientNorm::sum_norm(n), xi), xi.lpNorm<Eigen::Infinity>(), 1e-12));
    const Mat b = random_mat(rng, n, n) + 2.0 * Mat::Identity(n, n);
    const Mat q = b.transpose() * b;
    CHECK(close(dual_norm(AmbientNorm::quadratic(q), xi), std::sqrt(xi.dot(q.ldlt().solve(xi))), 1e-10));
  }
}

TEST_CASE("product and composition", "[seminorm]") {
  Rng rng(14);
  const Seminorm s1 = random_seminorm(rng, 1), s2 = random_seminorm(rng, 2);
  const Seminorm p = product(s1, s2);
  REQUIRE(p.domain_dim() == 3);
  const Vec v = random_vec(rng, 3);
  CHECK(close(p(v), std::hypot(s1(v.head(1)), s2(v.tail(2))), 1e-12));
  const Mat t = random_mat(rng, 2, 2);
  const Vec w = random_vec(rng, 2);
  CHECK(close(s2.compose(t)(w), s2(t * w), 1e-12));
  CHECK(close(s2.scaled(2.5)(w), 2.5 * s2(w), 1e-12));
  const AffineMap f(random_mat(rng, 3, 2), random_vec(rng, 3));
  CHECK(close(metric_differential(f, AmbientNorm::max_norm(3))(w), (f.linear * w).lpNorm<Eigen::Infinity>(), 1e-12));
}
