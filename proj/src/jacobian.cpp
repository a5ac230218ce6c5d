#include "gmt/jacobian.hpp"

#include "gmt/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace gmt {

std::string_view to_string(JacobianKind kind) {
  switch (kind) {
    case JacobianKind::Busemann: return "b";
    case JacobianKind::MassStar: return "mstar";
    case JacobianKind::InscribedRiemannian: return "ir";
  }
  return "";
}

JacobianKind parse_jacobian_kind(std::string_view tag) {
  if (tag == "b" || tag == "busemann") return JacobianKind::Busemann;
  if (tag == "mstar" || tag == "m*" || tag == "mass-star" || tag == "mass_star")
    return JacobianKind::MassStar;
  if (tag == "ir" || tag == "inscribed-riemannian" || tag == "inscribed_riemannian")
    return JacobianKind::InscribedRiemannian;
  throw Error(ErrorCode::InvalidInput, "unknown Jacobian kind '" + std::string(tag) + "'");
}

namespace {

// Log-barrier path following for
//   maximize log det X  s.t.  G_i X G_i^T <= I,
// over symmetric X; the ellipsoid is {X^{1/2} u : |u| <= 1} = {v : v^T X^{-1} v <= 1}.
class JohnSolver {
 public:
  JohnSolver(const GaugeBlocks& body, const JohnOptions& opts)
      : g_(body.blocks), opts_(opts), k_(body.dim()) {
    for (int a = 0; a < k_; ++a)
      for (int b = a; b < k_; ++b) {
        Mat e = Mat::Zero(k_, k_);
        e(a, b) = 1.0;
        e(b, a) = 1.0;
        basis_.push_back(std::move(e));
      }
    for (const auto& gi : g_) degree_ += static_cast<double>(gi.rows());
  }

  JohnResult solve() {
    double scale = 0.0;
    for (const auto& gi : g_) scale = std::max(scale, gi.squaredNorm());
    Mat x = (0.5 / scale) * Mat::Identity(k_, k_);
    double t = 1.0;
    long steps = 0;
    while (true) {
      center(x, t, steps);
      const double gap = degree_ / t;
      if (gap <= opts_.gap_tolerance) {
        return {Ellipsoid{symmetric_inverse(x)}, gap, steps};
      }
      t *= 20.0;
    }
  }

 private:
  struct Eval {
    bool feasible = false;
    double value = 0.0;
  };

  static Mat symmetric_inverse(const Mat& x) {
    Mat inv = x.llt().solve(Mat::Identity(x.rows(), x.cols()));
    return 0.5 * (inv + inv.transpose());
  }

  Eval evaluate(const Mat& x, double t) const {
    Eigen::LLT<Mat> lx(x);
    if (lx.info() != Eigen::Success) return {};
    double v = -t * 2.0 * lx.matrixLLT().diagonal().array().log().sum();
    for (const auto& gi : g_) {
      const Mat s = Mat::Identity(gi.rows(), gi.rows()) - gi * x * gi.transpose();
      Eigen::LLT<Mat> ls(s);
      if (ls.info() != Eigen::Success) return {};
      const Vec diag = ls.matrixLLT().diagonal();
      if ((diag.array() <= 0.0).any()) return {};
      v -= 2.0 * diag.array().log().sum();
    }
    if (!std::isfinite(v)) return {};
    return {true, v};
  }

  Mat from_params(const Vec& p) const {
    Mat x = Mat::Zero(k_, k_);
    for (std::size_t q = 0; q < basis_.size(); ++q) x += p(static_cast<Eigen::Index>(q)) * basis_[q];
    return x;
  }

  void center(Mat& x, double t, long& steps) const {
    const auto d = static_cast<Eigen::Index>(basis_.size());
    for (int iter = 0; iter < 200; ++iter) {
      if (++steps > opts_.max_newton_steps) {
        std::ostringstream msg;
        msg << "John ellipsoid: Newton step cap reached; gap estimate " << degree_ / t
            << "; best log det " << std::log(x.determinant());
        throw Error(ErrorCode::NonConvergence, msg.str());
      }
      const Mat xinv = symmetric_inverse(x);
      Vec grad = Vec::Zero(d);
      Mat hess = Mat::Zero(d, d);
      std::vector<Mat> dx(basis_.size());
      for (Eigen::Index p = 0; p < d; ++p) dx[p] = xinv * basis_[p];
      for (Eigen::Index p = 0; p < d; ++p) {
        grad(p) -= t * dx[p].trace();
        for (Eigen::Index q = p; q < d; ++q) {
          const double h = t * (dx[p].cwiseProduct(dx[q].transpose())).sum();
          hess(p, q) += h;
          if (q != p) hess(q, p) += h;
        }
      }
      std::vector<Mat> c(basis_.size());
      for (const auto& gi : g_) {
        const auto r = gi.rows();
        const Mat s = Mat::Identity(r, r) - gi * x * gi.transpose();
        const Eigen::LLT<Mat> ls(s);
        for (Eigen::Index p = 0; p < d; ++p) {
          c[p] = ls.solve(gi * basis_[p] * gi.transpose());
          grad(p) += c[p].trace();
        }
        for (Eigen::Index p = 0; p < d; ++p)
          for (Eigen::Index q = p; q < d; ++q) {
            const double h = (c[p].cwiseProduct(c[q].transpose())).sum();
            hess(p, q) += h;
            if (q != p) hess(q, p) += h;
          }
      }
      const Vec step = -hess.ldlt().solve(grad);
      const double decrement = -grad.dot(step);
      if (!std::isfinite(decrement) || decrement < 0.0) return;
      if (0.5 * decrement <= 1e-10) return;

      const Mat dir = from_params(step);
      const Eval here = evaluate(x, t);
      double s = 1.0;
      bool moved = false;
      while (s > 1e-14) {
        const Mat trial = x + s * dir;
        const Eval e = evaluate(trial, t);
        if (e.feasible && e.value <= here.value - 0.25 * s * decrement) {
          x = trial;
          moved = here.value - e.value > 1e-15 * std::abs(here.value);
          break;
        }
        s *= 0.5;
      }
      if (!moved) return;  // no representable progress left
    }
  }

  const std::vector<Mat>& g_;
  JohnOptions opts_;
  int k_;
  double degree_ = 0.0;
  std::vector<Mat> basis_;
};

void require_norm(const GaugeBlocks& body) {
  const int k = body.dim();
  Eigen::Index rows = 0;
  for (const auto& b : body.blocks) rows += b.rows();
  Mat stacked(rows, k);
  Eigen::Index r = 0;
  for (const auto& b : body.blocks) {
    stacked.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  Eigen::ColPivHouseholderQR<Mat> qr(stacked);
  qr.setThreshold(1e-12);
  if (rows == 0 || qr.rank() < k) {
    throw Error(ErrorCode::UnboundedBall, "John ellipsoid: body is unbounded");
  }
}

GaugeBlocks polytope_blocks(const SymmetricPolytope& p) {
  GaugeBlocks g;
  for (const auto& xi : p.facets) g.blocks.push_back(xi.transpose());
  return g;
}

double det_of_columns(const std::vector<Vec>& cols) {
  const auto k = static_cast<Eigen::Index>(cols.size());
  Mat m(k, k);
  for (Eigen::Index j = 0; j < k; ++j) m.col(j) = cols[j];
  return m.determinant();
}

double mass_star_polytopal(const std::vector<Vec>& rows, int k) {
  // Dual ball = conv(+-rows); |det| is convex in each column, so the maximum
  // sits on k-subsets of the vertices.
  const int n = static_cast<int>(rows.size());
  double best = 0.0;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<Vec> cols(k);
  while (true) {
    for (int i = 0; i < k; ++i) cols[i] = rows[idx[i]];
    best = std::max(best, std::abs(det_of_columns(cols)));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return best;
}

double mass_star_mixed(const GaugeBlocks& g) {
  const int k = g.dim();
  std::mt19937_64 rng(0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, g.blocks.size() - 1);

  auto best_response = [&](const Vec& cof) {
    Vec xi = Vec::Zero(k);
    double val = -1.0;
    for (const auto& b : g.blocks) {
      const Vec u = b * cof;
      const double n = u.norm();
      if (n > val) {
        val = n;
        xi = n > 0.0 ? Vec(b.transpose() * (u / n)) : Vec(b.row(0).transpose());
      }
    }
    return xi;
  };

  double best = 0.0;
  constexpr int kStarts = 48;
  for (int start = 0; start < kStarts; ++start) {
    std::vector<Vec> cols(k);
    for (int j = 0; j < k; ++j) {
      const Mat& b = g.blocks[pick(rng)];
      Vec u(b.rows());
      for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = gauss(rng);
      cols[j] = b.transpose() * u.normalized();
    }
    double value = std::abs(det_of_columns(cols));
    for (int sweep = 0; sweep < 500; ++sweep) {
      const double before = value;
      for (int j = 0; j < k; ++j) {
        Vec cof(k);
        for (int l = 0; l < k; ++l) {
          std::vector<Vec> tmp = cols;
          tmp[j] = Vec::Unit(k, l);
          cof(l) = det_of_columns(tmp);
        }
        cols[j] = best_response(cof);
      }
      value = std::abs(det_of_columns(cols));
      if (value - before <= 1e-15 * std::max(1.0, value)) break;
    }
    best = std::max(best, value);
  }
  return best;
}

// The gauge as max_i sqrt(u^T Q_i u) with fixed-size forms, for the
// quadrature loops below.
template <int K>
struct FormGauge {
  using V = Eigen::Matrix<double, K, 1>;
  using M = Eigen::Matrix<double, K, K>;
  std::vector<M> forms;

  explicit FormGauge(const GaugeBlocks& g) {
    for (const auto& b : g.blocks) forms.push_back(b.transpose() * b);
  }
  double squared(const V& u) const {
    double best = 0.0;
    for (const auto& q : forms) best = std::max(best, u.dot(q * u));
    return best;
  }
};

// Angles in [0, 2 pi) on the circle u(phi) = c + p cos phi + q sin phi where
// two forms tie for the maximum. u^T (Q_i - Q_j) u is a trigonometric
// polynomial of degree 2, so its zeros are unit-modulus roots of a quartic.
template <int K>
std::vector<double> active_kinks(const FormGauge<K>& g, const typename FormGauge<K>::V& c,
                                 const typename FormGauge<K>::V& p, const typename FormGauge<K>::V& q) {
  using C = std::complex<double>;
  const C I(0.0, 1.0);
  std::vector<double> out;
  const std::size_t nb = g.forms.size();
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = i + 1; j < nb; ++j) {
      const typename FormGauge<K>::M d = g.forms[i] - g.forms[j];
      const double pdp = p.dot(d * p), qdq = q.dot(d * q);
      const double a0 = c.dot(d * c) + 0.5 * (pdp + qdq), a1 = 2.0 * c.dot(d * p), b1 = 2.0 * c.dot(d * q);
      const double a2 = 0.5 * (pdp - qdq), b2 = p.dot(d * q);
      // coefficients of z^0 .. z^4
      C coef[5] = {0.5 * (a2 + I * b2), 0.5 * (a1 + I * b1), C(a0), 0.5 * (a1 - I * b1), 0.5 * (a2 - I * b2)};
      double scale = 0.0;
      for (const auto& x : coef) scale = std::max(scale, std::abs(x));
      if (scale == 0.0) continue;
      int hi = 4, lo = 0;
      while (hi >= 0 && std::abs(coef[hi]) <= 1e-14 * scale) --hi;
      while (lo <= hi && std::abs(coef[lo]) <= 1e-14 * scale) ++lo;
      const int deg = hi - lo;
      if (deg < 1) continue;
      Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
      for (int r = 1; r < deg; ++r) comp(r, r - 1) = 1.0;
      for (int r = 0; r < deg; ++r) comp(r, deg - 1) = -coef[lo + r] / coef[hi];
      const Eigen::VectorXcd roots = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(comp, false).eigenvalues();
      for (Eigen::Index r = 0; r < roots.size(); ++r) {
        if (std::abs(std::log(std::abs(roots(r)))) > 1e-6) continue;
        double phi = std::arg(roots(r));
        if (phi < 0.0) phi += 2.0 * std::numbers::pi;
        const typename FormGauge<K>::V u = c + p * std::cos(phi) + q * std::sin(phi);
        const double vi = u.dot(g.forms[i] * u), vj = u.dot(g.forms[j] * u);
        if (std::max(vi, vj) >= g.squared(u) * (1.0 - 1e-9)) out.push_back(phi);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Integral of |u(phi)|^(-K) over one full circle, split at the kinks so
// every piece is smooth.
template <int K>
double circle_integral(const FormGauge<K>& g, const typename FormGauge<K>::V& c,
                       const typename FormGauge<K>::V& p, const typename FormGauge<K>::V& q) {
  using boost::math::quadrature::gauss_kronrod;
  std::vector<double> cuts = active_kinks(g, c, p, q);
  cuts.insert(cuts.begin(), 0.0);
  cuts.push_back(2.0 * std::numbers::pi);
  auto f = [&](double phi) {
    return std::pow(g.squared(c + p * std::cos(phi) + q * std::sin(phi)), -0.5 * K);
  };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] < 1e-15) continue;
    total += gauss_kronrod<double, 31>::integrate(f, cuts[i], cuts[i + 1], 8, 1e-11);
  }
  return total;
}

double radial_volume_rounded(const GaugeBlocks& g);

// vol(B) = |det T| vol(T^-1 B). With T = M^(-1/2), M the mean block form,
// the radial integrand is close to constant.
double radial_volume(const GaugeBlocks& g) {
  const int k = g.dim();
  if (k == 1) return 2.0 / g.evaluate(Vec::Ones(1));
  Mat m = Mat::Zero(k, k);
  for (const auto& b : g.blocks) m += b.transpose() * b;
  m /= static_cast<double>(g.blocks.size());
  const Eigen::SelfAdjointEigenSolver<Mat> eig(m);
  const Vec inv_sqrt = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().cwiseInverse();
  const Mat t = eig.eigenvectors() * inv_sqrt.asDiagonal() * eig.eigenvectors().transpose();
  GaugeBlocks rounded;
  for (const auto& b : g.blocks) rounded.blocks.push_back(b * t);
  return inv_sqrt.prod() * radial_volume_rounded(rounded);
}

double radial_volume_rounded(const GaugeBlocks& g) {
  using boost::math::quadrature::gauss_kronrod;
  const int k = g.dim();
  if (k == 2) {
    const FormGauge<2> fg(g);
    return 0.5 * circle_integral<2>(fg, Eigen::Vector2d::Zero(), Eigen::Vector2d::UnitX(), Eigen::Vector2d::UnitY());
  }
  if (k == 3) {
    // latitude circles; the unit ball is symmetric, so twice the upper hemisphere
    const FormGauge<3> fg(g);
    auto outer = [&](double th) {
      const double st = std::sin(th);
      return st * circle_integral<3>(fg, std::cos(th) * Eigen::Vector3d::UnitZ(), st * Eigen::Vector3d::UnitX(),
                                     st * Eigen::Vector3d::UnitY());
    };
    return (2.0 / 3.0) * gauss_kronrod<double, 31>::integrate(outer, 0.0, 0.5 * std::numbers::pi, 12, 1e-11);
  }
  std::mt19937_64 rng(0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  constexpr int kSamples = 400000;
  double mean = 0.0;
  Vec th(k);
  for (int i = 0; i < kSamples; ++i) {
    for (int d = 0; d < k; ++d) th(d) = gauss(rng);
    th.normalize();
    mean += (std::pow(g.evaluate(th), -k) - mean) / (i + 1);
  }
  return unit_ball_volume(k) * mean;
}

}  // namespace

JohnResult john_ellipsoid(const GaugeBlocks& body, const JohnOptions& opts) {
  const int k = body.dim();
  if (k == 0) return {Ellipsoid{Mat(0, 0)}, 0.0, 0};
  require_norm(body);
  if (body.blocks.size() == 1 && body.blocks.front().rows() >= k) {
    const Mat& b = body.blocks.front();
    return {Ellipsoid{b.transpose() * b}, 0.0, 0};
  }
  return JohnSolver(body, opts).solve();
}

JohnResult john_ellipsoid(const SymmetricPolytope& body, const JohnOptions& opts) {
  return john_ellipsoid(polytope_blocks(body), opts);
}

JohnResult john_ellipsoid(const Ellipsoid& body) { return {body, 0.0, 0}; }

JohnResult john_ellipsoid(const UnitBall& body, const JohnOptions& opts) {
  return std::visit(
      [&](const auto& b) -> JohnResult {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Ellipsoid>) {
          return john_ellipsoid(b);
        } else if constexpr (std::is_same_v<T, SymmetricPolytope>) {
          return john_ellipsoid(b, opts);
        } else {
          return john_ellipsoid(b.gauge, opts);
        }
      },
      body);
}

double jac_busemann(const Seminorm& s) {
  const int k = s.domain_dim();
  if (k == 0) return 1.0;
  if (s.is_degenerate()) return 0.0;
  const UnitBall ball = unit_ball(s);
  if (const auto* p = std::get_if<SymmetricPolytope>(&ball)) {
    return unit_ball_volume(k) / polytope_volume(*p).value;
  }
  if (const auto* e = std::get_if<Ellipsoid>(&ball)) {
    return std::sqrt(e->shape.determinant());
  }
  return unit_ball_volume(k) / radial_volume(std::get<GaugeBody>(ball).gauge);
}

double jac_mass_star(const Seminorm& s) {
  const int k = s.domain_dim();
  if (k == 0) return 1.0;
  if (s.is_degenerate()) return 0.0;
  const GaugeBlocks g = gauge_blocks(s);
  if (g.polytopal()) {
    std::vector<Vec> rows;
    for (const auto& b : g.blocks) rows.push_back(b.row(0).transpose());
    return mass_star_polytopal(rows, k);
  }
  if (g.blocks.size() == 1) {
    const Mat& b = g.blocks.front();
    return std::sqrt(std::max(0.0, (b.transpose() * b).determinant()));
  }
  if (k > 3) {
    throw Error(ErrorCode::Unsupported, "mass* Jacobian: mixed gauge in dimension > 3");
  }
  return mass_star_mixed(g);
}

double jac_inscribed_riemannian(const Seminorm& s, const JohnOptions& opts) {
  const int k = s.domain_dim();
  if (k == 0) return 1.0;
  if (s.is_degenerate()) return 0.0;
  const JohnResult j = john_ellipsoid(gauge_blocks(s), opts);
  return std::sqrt(std::max(0.0, j.ellipsoid.shape.determinant()));
}

double jacobian(const Seminorm& s, JacobianKind kind) {
  switch (kind) {
    case JacobianKind::Busemann: return jac_busemann(s);
    case JacobianKind::MassStar: return jac_mass_star(s);
    case JacobianKind::InscribedRiemannian: return jac_inscribed_riemannian(s);
  }
  return 0.0;
}

}  // namespace gmt
