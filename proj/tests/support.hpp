#pragma once

#include "catch_amalgamated.hpp"

#include "gmt/error.hpp"
#include "gmt/instances.hpp"

#include <cmath>

namespace gmt::test {

inline Vec pt(double x, double y) { return Eigen::Vector2d(x, y); }
inline Vec pt(double x, double y, double z) { return Eigen::Vector3d(x, y, z); }

inline Vec random_vec(Rng& rng, int n, double lo = -1.0, double hi = 1.0) {
  return Vec::NullaryExpr(n, [&](Eigen::Index) { return uniform(rng, lo, hi); });
}

inline Mat random_mat(Rng& rng, int r, int c) {
  return Mat::NullaryExpr(r, c, [&](Eigen::Index, Eigen::Index) { return uniform(rng, -1.0, 1.0); });
}

inline Mat random_rotation(Rng& rng, int n) {
  Eigen::HouseholderQR<Mat> qr(random_mat(rng, n, n));
  return qr.householderQ() * Mat::Identity(n, n);
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a gmt::Error");
  return ErrorCode::InvalidInput;
}

}  // namespace gmt::test
