#include "gmt/seminorm.hpp"

#include "gmt/error.hpp"

#include <cmath>

namespace gmt {

AmbientNorm AmbientNorm::euclidean(int dim) { return AmbientNorm(Kind::Euclidean, dim); }
AmbientNorm AmbientNorm::max_norm(int dim) { return AmbientNorm(Kind::MaxNorm, dim); }
AmbientNorm AmbientNorm::sum_norm(int dim) { return AmbientNorm(Kind::SumNorm, dim); }

AmbientNorm AmbientNorm::quadratic(Mat q) {
  if (q.rows() != q.cols()) {
    throw Error(ErrorCode::InvalidInput, "quadratic norm: matrix not square");
  }
  const double scale = std::max(q.cwiseAbs().maxCoeff(), 1e-300);
  if ((q - q.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorCode::InvalidInput, "quadratic norm: matrix not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat> eig(q);
  if (eig.eigenvalues().minCoeff() < -1e-12 * scale) {
    throw Error(ErrorCode::InvalidInput, "quadratic norm: matrix has a negative eigenvalue");
  }
  AmbientNorm n(Kind::Quadratic, static_cast<int>(q.rows()));
  n.q_ = 0.5 * (q + q.transpose());
  return n;
}

AmbientNorm AmbientNorm::product(std::vector<AmbientNorm> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidInput, "product norm: no parts");
  int dim = 0;
  for (const auto& p : parts) dim += p.dim();
  AmbientNorm n(Kind::Product, dim);
  n.parts_ = std::move(parts);
  return n;
}

double AmbientNorm::operator()(const Vec& x) const {
  if (x.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "ambient norm: dimension mismatch");
  }
  switch (kind_) {
    case Kind::Euclidean: return x.norm();
    case Kind::MaxNorm: return x.size() == 0 ? 0.0 : x.lpNorm<Eigen::Infinity>();
    case Kind::SumNorm: return x.lpNorm<1>();
    case Kind::Quadratic: return std::sqrt(std::max(0.0, x.dot(q_ * x)));
    case Kind::Product: {
      double sq = 0.0;
      int offset = 0;
      for (const auto& p : parts_) {
        const double v = p(x.segment(offset, p.dim()));
        sq += v * v;
        offset += p.dim();
      }
      return std::sqrt(sq);
    }
  }
  return 0.0;
}

bool AmbientNorm::operator==(const AmbientNorm& other) const {
  if (kind_ != other.kind_ || dim_ != other.dim_) return false;
  if (kind_ == Kind::Quadratic) return q_ == other.q_;
  if (kind_ == Kind::Product) return parts_ == other.parts_;
  return true;
}

std::string AmbientNorm::tag() const {
  switch (kind_) {
    case Kind::Euclidean: return "l2";
    case Kind::MaxNorm: return "linf";
    case Kind::SumNorm: return "l1";
    case Kind::Quadratic: return "quad";
    case Kind::Product: return "prod";
  }
  return "";
}

Seminorm::Seminorm(Mat a, AmbientNorm ambient) : a_(std::move(a)), ambient_(std::move(ambient)) {
  if (a_.rows() != ambient_.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "seminorm: matrix rows do not match ambient dimension");
  }
}

Seminorm Seminorm::of(const AmbientNorm& ambient) {
  return Seminorm(Mat::Identity(ambient.dim(), ambient.dim()), ambient);
}

double Seminorm::evaluate(const Vec& v) const {
  if (v.size() != a_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "seminorm: argument dimension mismatch");
  }
  return ambient_(a_ * v);
}

Seminorm Seminorm::compose(const Mat& t) const {
  if (t.rows() != a_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "seminorm compose: dimension mismatch");
  }
  return Seminorm(a_ * t, ambient_);
}

Seminorm Seminorm::scaled(double lambda) const { return Seminorm(std::abs(lambda) * a_, ambient_); }

bool Seminorm::is_degenerate() const {
  const int k = domain_dim();
  if (k == 0) return false;
  const GaugeBlocks g = gauge_blocks(*this);
  Eigen::Index rows = 0;
  for (const auto& b : g.blocks) rows += b.rows();
  Mat stacked(rows, k);
  Eigen::Index r = 0;
  for (const auto& b : g.blocks) {
    stacked.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  if (stacked.cwiseAbs().maxCoeff() == 0.0) return true;
  Eigen::ColPivHouseholderQR<Mat> qr(stacked);
  qr.setThreshold(1e-12);
  return qr.rank() < k;
}

Seminorm product(const Seminorm& s1, const Seminorm& s2) {
  const Mat& a1 = s1.matrix();
  const Mat& a2 = s2.matrix();
  Mat a = Mat::Zero(a1.rows() + a2.rows(), a1.cols() + a2.cols());
  a.topLeftCorner(a1.rows(), a1.cols()) = a1;
  a.bottomRightCorner(a2.rows(), a2.cols()) = a2;
  return Seminorm(std::move(a), AmbientNorm::product({s1.ambient(), s2.ambient()}));
}

Seminorm metric_differential(const AffineMap& f, const AmbientNorm& target) {
  if (f.out_dim() != target.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "metric_differential: target dimension mismatch");
  }
  return Seminorm(f.linear, target);
}

bool GaugeBlocks::polytopal() const {
  for (const auto& b : blocks)
    if (b.rows() != 1) return false;
  return true;
}

double GaugeBlocks::evaluate(const Vec& v) const {
  double m = 0.0;
  for (const auto& b : blocks) m = std::max(m, (b * v).norm());
  return m;
}

namespace {

// Blocks of the ambient norm itself, acting on R^N.
std::vector<Mat> ambient_blocks(const AmbientNorm& n) {
  const int dim = n.dim();
  switch (n.kind()) {
    case AmbientNorm::Kind::Euclidean:
      return {Mat::Identity(dim, dim)};
    case AmbientNorm::Kind::Quadratic: {
      Eigen::SelfAdjointEigenSolver<Mat> eig(n.quadratic_form());
      const Vec d = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
      return {d.asDiagonal() * eig.eigenvectors().transpose()};
    }
    case AmbientNorm::Kind::MaxNorm: {
      std::vector<Mat> rows;
      for (int i = 0; i < dim; ++i) rows.push_back(Mat::Identity(dim, dim).row(i));
      return rows;
    }
    case AmbientNorm::Kind::SumNorm: {
      if (dim > 20) {
        throw Error(ErrorCode::Unsupported, "sum norm lowering limited to dimension 20");
      }
      std::vector<Mat> rows;
      if (dim == 0) return rows;
      const long count = 1L << (dim - 1);
      for (long mask = 0; mask < count; ++mask) {
        Mat r(1, dim);
        r(0, 0) = 1.0;
        for (int i = 1; i < dim; ++i) r(0, i) = (mask >> (i - 1)) & 1 ? -1.0 : 1.0;
        rows.push_back(r);
      }
      return rows;
    }
    case AmbientNorm::Kind::Product: {
      std::vector<Mat> combos{Mat(0, dim)};
      int offset = 0;
      for (const auto& part : n.parts()) {
        const std::vector<Mat> pb = ambient_blocks(part);
        std::vector<Mat> next;
        next.reserve(combos.size() * pb.size());
        for (const auto& c : combos) {
          for (const auto& b : pb) {
            Mat m = Mat::Zero(c.rows() + b.rows(), dim);
            m.topRows(c.rows()) = c;
            m.bottomRows(b.rows()).middleCols(offset, part.dim()) = b;
            next.push_back(std::move(m));
          }
        }
        combos = std::move(next);
        offset += part.dim();
      }
      return combos;
    }
  }
  return {};
}

}  // namespace

GaugeBlocks gauge_blocks(const Seminorm& s) {
  GaugeBlocks g;
  for (const auto& b : ambient_blocks(s.ambient())) {
    Mat gb = b * s.matrix();
    if (gb.rows() == 1 && gb.cwiseAbs().maxCoeff() == 0.0) continue;
    g.blocks.push_back(std::move(gb));
  }
  if (g.blocks.empty()) g.blocks.push_back(Mat::Zero(1, s.domain_dim()));
  return g;
}

double Ellipsoid::volume() const {
  return unit_ball_volume(dim()) / std::sqrt(shape.determinant());
}

bool Ellipsoid::contains(const Vec& v, double tol) const { return v.dot(shape * v) <= 1.0 + tol; }

UnitBall unit_ball(const Seminorm& s) {
  if (s.is_degenerate()) {
    throw Error(ErrorCode::UnboundedBall, "seminorm has a nontrivial kernel; unit ball is unbounded");
  }
  GaugeBlocks g = gauge_blocks(s);
  if (g.polytopal()) {
    SymmetricPolytope p;
    for (const auto& b : g.blocks) p.facets.push_back(b.row(0).transpose());
    return p;
  }
  if (g.blocks.size() == 1) {
    const Mat& b = g.blocks.front();
    return Ellipsoid{b.transpose() * b};
  }
  return GaugeBody{std::move(g)};
}

double dual_norm(const AmbientNorm& n, const Vec& xi) {
  if (xi.size() != n.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "dual_norm: dimension mismatch");
  }
  switch (n.kind()) {
    case AmbientNorm::Kind::Euclidean: return xi.norm();
    case AmbientNorm::Kind::MaxNorm: return xi.lpNorm<1>();
    case AmbientNorm::Kind::SumNorm: return xi.size() == 0 ? 0.0 : xi.lpNorm<Eigen::Infinity>();
    case AmbientNorm::Kind::Quadratic: {
      Eigen::LLT<Mat> llt(n.quadratic_form());
      if (llt.info() != Eigen::Success) {
        throw Error(ErrorCode::UnboundedBall, "dual_norm: quadratic form is singular");
      }
      return std::sqrt(std::max(0.0, xi.dot(llt.solve(xi))));
    }
    case AmbientNorm::Kind::Product: {
      double sq = 0.0;
      int offset = 0;
      for (const auto& p : n.parts()) {
        const double v = dual_norm(p, xi.segment(offset, p.dim()));
        sq += v * v;
        offset += p.dim();
      }
      return std::sqrt(sq);
    }
  }
  return 0.0;
}

}  // namespace gmt
