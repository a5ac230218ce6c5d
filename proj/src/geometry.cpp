#include "gmt/geometry.hpp"

#include "gmt/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace gmt {

bool all_finite(const Vec& v) {
  return std::all_of(v.data(), v.data() + v.size(),
                     [](double x) { return std::isfinite(x); });
}

AffineMap::AffineMap(Mat linear_part, Vec offset_part)
    : linear(std::move(linear_part)), offset(std::move(offset_part)) {
  if (linear.rows() != offset.size()) {
    throw Error(ErrorCode::DimensionMismatch, "AffineMap: offset size does not match rows");
  }
}

AffineMap AffineMap::identity(int dim) {
  return AffineMap(Mat::Identity(dim, dim), Vec::Zero(dim));
}

AffineMap AffineMap::linear_only(Mat linear_part) {
  const auto rows = linear_part.rows();
  return AffineMap(std::move(linear_part), Vec::Zero(rows));
}

AffineMap AffineMap::after(const AffineMap& inner) const {
  if (in_dim() != inner.out_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "AffineMap::after: incompatible dimensions");
  }
  return AffineMap(linear * inner.linear, linear * inner.offset + offset);
}

Simplex::Simplex(std::vector<Point> verts, int orient)
    : vertices(std::move(verts)), orientation(orient >= 0 ? 1 : -1) {
  if (vertices.empty()) {
    throw Error(ErrorCode::InvalidInput, "Simplex: no vertices");
  }
  const auto n = vertices.front().size();
  for (const auto& v : vertices) {
    if (v.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "Simplex: vertices of mixed dimension");
    }
    if (!all_finite(v)) {
      throw Error(ErrorCode::InvalidInput, "Simplex: non-finite coordinate");
    }
  }
  if (dim() > static_cast<int>(n)) {
    throw Error(ErrorCode::InvalidInput, "Simplex: more than N+1 vertices");
  }
}

Mat Simplex::edge_matrix() const {
  const int k = dim();
  Mat e(ambient_dim(), k);
  for (int i = 0; i < k; ++i) e.col(i) = vertices[i + 1] - vertices[0];
  return e;
}

Point Simplex::barycenter() const {
  Point c = Point::Zero(ambient_dim());
  for (const auto& v : vertices) c += v;
  return c / static_cast<double>(vertices.size());
}

double Simplex::max_edge_length() const {
  double m = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      m = std::max(m, (vertices[i] - vertices[j]).norm());
  return m;
}

Simplex Simplex::reversed() const {
  Simplex r = *this;
  r.orientation = -orientation;
  return r;
}

namespace {

// sqrt(det(E^T E)) via Householder QR; better conditioned than the Gram matrix.
double edge_volume_factor(const Mat& e) {
  if (e.cols() == 0) return 1.0;
  Eigen::HouseholderQR<Mat> qr(e);
  const Mat& r = qr.matrixQR();
  double p = 1.0;
  for (Eigen::Index i = 0; i < e.cols(); ++i) p *= std::abs(r(i, i));
  return p;
}

}  // namespace

double gram_determinant(const Simplex& s) {
  const double f = edge_volume_factor(s.edge_matrix());
  return f * f;
}

bool is_degenerate(const Simplex& s) {
  const int k = s.dim();
  if (k == 0) return false;
  const double scale = std::pow(s.max_edge_length(), 2 * k);
  if (scale == 0.0) return true;
  return gram_determinant(s) < 1e-20 * scale;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double unit_ball_volume(int k) {
  return std::pow(std::numbers::pi, 0.5 * k) / std::tgamma(0.5 * k + 1.0);
}

VolumeResult simplex_volume(const Simplex& s) {
  if (s.dim() == 0) return {1.0, false};
  if (is_degenerate(s)) return {0.0, true};
  return {edge_volume_factor(s.edge_matrix()) / factorial(s.dim()), false};
}

int frame_sign_in(const Simplex& piece, const Simplex& reference) {
  const int k = reference.dim();
  if (piece.dim() != k) {
    throw Error(ErrorCode::DimensionMismatch, "frame_sign_in: dimension mismatch");
  }
  if (k == 0) return 1;
  const Mat e = reference.edge_matrix();
  const Mat p = piece.edge_matrix();
  const Mat coords = e.colPivHouseholderQr().solve(p);
  const double d = coords.determinant();
  if (d > 0) return 1;
  if (d < 0) return -1;
  return 0;
}

PointPool::PointPool(double tolerance) : tol_(tolerance) {
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidInput, "PointPool: tolerance must be positive");
}

std::vector<long long> PointPool::cell_of(const Point& p) const {
  std::vector<long long> c(static_cast<std::size_t>(p.size()));
  for (Eigen::Index i = 0; i < p.size(); ++i)
    c[static_cast<std::size_t>(i)] = static_cast<long long>(std::floor(p(i) / (2.0 * tol_)));
  return c;
}

std::uint64_t PointPool::key_of(const std::vector<long long>& cell) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (long long c : cell) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int PointPool::find(const Point& p) const {
  if (p.size() > 6) {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i].size() == p.size() && (points_[i] - p).lpNorm<Eigen::Infinity>() <= tol_)
        return static_cast<int>(i);
    return -1;
  }
  const std::vector<long long> base = cell_of(p);
  const std::size_t n = base.size();
  // visit the 3^n neighbouring grid cells
  std::vector<long long> cell(n);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) combos *= 3;
  int best = -1;
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rest = c;
    for (std::size_t i = 0; i < n; ++i) {
      cell[i] = base[i] + static_cast<long long>(rest % 3) - 1;
      rest /= 3;
    }
    const auto it = grid_.find(key_of(cell));
    if (it == grid_.end()) continue;
    for (int idx : it->second) {
      if (points_[idx].size() == p.size() &&
          (points_[idx] - p).lpNorm<Eigen::Infinity>() <= tol_ && (best < 0 || idx < best))
        best = idx;
    }
  }
  return best;
}

int PointPool::insert(const Point& p) {
  const int found = find(p);
  if (found >= 0) return found;
  const int idx = static_cast<int>(points_.size());
  points_.push_back(p);
  grid_[key_of(cell_of(p))].push_back(idx);
  return idx;
}

bool lex_less(const Point& a, const Point& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return a.size() < b.size();
}

bool SymmetricPolytope::contains(const Vec& v, double tol) const {
  return gauge(v) <= 1.0 + tol;
}

double SymmetricPolytope::gauge(const Vec& v) const {
  double g = 0.0;
  for (const auto& xi : facets) g = std::max(g, std::abs(xi.dot(v)));
  return g;
}

namespace {

void require_bounded(const SymmetricPolytope& p) {
  if (p.facets.empty()) {
    throw Error(ErrorCode::UnboundedBall, "polytope has no facets");
  }
  const int k = p.dim();
  Mat f(static_cast<Eigen::Index>(p.facets.size()), k);
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    if (p.facets[i].size() != k) {
      throw Error(ErrorCode::DimensionMismatch, "polytope facets of mixed dimension");
    }
    f.row(static_cast<Eigen::Index>(i)) = p.facets[i].transpose();
  }
  Eigen::ColPivHouseholderQR<Mat> qr(f);
  qr.setThreshold(1e-12);
  if (qr.rank() < k) {
    throw Error(ErrorCode::UnboundedBall, "facet functionals do not span; polytope is unbounded");
  }
}

double facet_scale(const SymmetricPolytope& p) {
  double m = 0.0;
  for (const auto& xi : p.facets) m = std::max(m, xi.norm());
  return m;
}

void push_unique(std::vector<Vec>& pts, const Vec& v, double tol) {
  for (const auto& q : pts)
    if ((q - v).lpNorm<Eigen::Infinity>() <= tol) return;
  pts.push_back(v);
}

std::vector<Vec> vertices_2d(const SymmetricPolytope& p) {
  const double tol = 1e-10 / facet_scale(p);
  std::vector<Vec> pts;
  const auto& f = p.facets;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      Eigen::Matrix2d a;
      a << f[i](0), f[i](1), f[j](0), f[j](1);
      if (std::abs(a.determinant()) < 1e-14 * f[i].norm() * f[j].norm()) continue;
      for (double si : {1.0, -1.0}) {
        for (double sj : {1.0, -1.0}) {
          const Eigen::Vector2d v = a.partialPivLu().solve(Eigen::Vector2d(si, sj));
          if (p.gauge(v) <= 1.0 + 1e-12) push_unique(pts, v, tol);
        }
      }
    }
  }
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return std::atan2(a(1), a(0)) < std::atan2(b(1), b(0));
  });
  return pts;
}

std::vector<Vec> vertices_3d(const SymmetricPolytope& p) {
  const double tol = 1e-10 / facet_scale(p);
  std::vector<Vec> pts;
  const auto& f = p.facets;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      for (std::size_t l = j + 1; l < f.size(); ++l) {
        Eigen::Matrix3d a;
        a.row(0) = f[i].transpose();
        a.row(1) = f[j].transpose();
        a.row(2) = f[l].transpose();
        if (std::abs(a.determinant()) < 1e-14 * f[i].norm() * f[j].norm() * f[l].norm())
          continue;
        const auto lu = a.partialPivLu();
        for (int signs = 0; signs < 8; ++signs) {
          const Eigen::Vector3d rhs((signs & 1) ? -1.0 : 1.0, (signs & 2) ? -1.0 : 1.0,
                                    (signs & 4) ? -1.0 : 1.0);
          const Eigen::Vector3d v = lu.solve(rhs);
          if (p.gauge(v) <= 1.0 + 1e-12) push_unique(pts, v, tol);
        }
      }
  return pts;
}

double polygon_area_ccw(const std::vector<Vec>& pts) {
  double a = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& u = pts[i];
    const auto& w = pts[(i + 1) % pts.size()];
    a += u(0) * w(1) - u(1) * w(0);
  }
  return 0.5 * a;
}

double volume_3d(const SymmetricPolytope& p) {
  const std::vector<Vec> verts = vertices_3d(p);
  // Distinct facet planes n.x = 1/|xi| with unit n, both signs.
  std::vector<Eigen::Vector3d> normals;
  std::vector<double> offsets;
  for (const auto& xi : p.facets) {
    const double len = xi.norm();
    for (double s : {1.0, -1.0}) {
      const Eigen::Vector3d n = s * xi / len;
      const double off = 1.0 / len;
      bool dup = false;
      for (std::size_t i = 0; i < normals.size(); ++i) {
        if ((normals[i] - n).norm() < 1e-12 && std::abs(offsets[i] - off) < 1e-12 * off) {
          dup = true;
          break;
        }
      }
      if (!dup) {
        normals.push_back(n);
        offsets.push_back(off);
      }
    }
  }
  double vol = 0.0;
  for (std::size_t f = 0; f < normals.size(); ++f) {
    const Eigen::Vector3d& n = normals[f];
    std::vector<Eigen::Vector3d> on;
    for (const auto& v : verts) {
      if (std::abs(n.dot(Eigen::Vector3d(v)) - offsets[f]) <= 1e-9 * offsets[f])
        on.push_back(v);
    }
    if (on.size() < 3) continue;
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (const auto& v : on) c += v;
    c /= static_cast<double>(on.size());
    Eigen::Vector3d u = (on[0] - c).normalized();
    const Eigen::Vector3d w = n.cross(u);
    std::sort(on.begin(), on.end(), [&](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
      return std::atan2((a - c).dot(w), (a - c).dot(u)) < std::atan2((b - c).dot(w), (b - c).dot(u));
    });
    double area = 0.0;
    for (std::size_t i = 0; i < on.size(); ++i) {
      area += 0.5 * n.dot((on[i] - c).cross(on[(i + 1) % on.size()] - c));
    }
    vol += std::abs(area) * offsets[f] / 3.0;
  }
  return vol;
}

PolytopeVolume monte_carlo_volume(const SymmetricPolytope& p, std::uint64_t seed,
                                  std::size_t samples) {
  // vol = omega_k * E[rho(theta)^k], rho = 1/gauge(theta), theta uniform on the sphere.
  const int k = p.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double mean = 0.0;
  double m2 = 0.0;
  Vec theta(k);
  for (std::size_t i = 0; i < samples; ++i) {
    for (int d = 0; d < k; ++d) theta(d) = gauss(rng);
    theta.normalize();
    const double x = std::pow(p.gauge(theta), -k);
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  const double var = m2 / static_cast<double>(samples - 1);
  const double omega = unit_ball_volume(k);
  return {omega * mean, omega * std::sqrt(var / static_cast<double>(samples)), false};
}

}  // namespace

std::vector<Vec> polytope_vertices(const SymmetricPolytope& p) {
  require_bounded(p);
  if (p.dim() == 2) return vertices_2d(p);
  if (p.dim() == 3) return vertices_3d(p);
  throw Error(ErrorCode::Unsupported, "polytope_vertices: only dimensions 2 and 3");
}

PolytopeVolume polytope_volume(const SymmetricPolytope& p, std::uint64_t seed,
                               std::size_t samples) {
  require_bounded(p);
  switch (p.dim()) {
    case 1: {
      double m = 0.0;
      for (const auto& xi : p.facets) m = std::max(m, std::abs(xi(0)));
      return {2.0 / m, 0.0, true};
    }
    case 2:
      return {polygon_area_ccw(vertices_2d(p)), 0.0, true};
    case 3:
      return {volume_3d(p), 0.0, true};
    default:
      return monte_carlo_volume(p, seed, samples);
  }
}

namespace {

// Vertex index sets for the pulling triangulation of a simplex truncated by a
// hyperplane. `inside` and `outside` index the simplex vertices; cut points
// x(i, j) lie on edge (inside[i], outside[j]).
struct CutGeometry {
  const std::vector<Point>* verts;
  std::vector<double> values;
  double level;

  Point cut_point(int a, int b) const {
    const double t = (level - values[a]) / (values[b] - values[a]);
    return (*verts)[a] + t * ((*verts)[b] - (*verts)[a]);
  }
};

using PointList = std::vector<Point>;

// Staircase (pulling) triangulation of the product-of-simplices cut facet.
void triangulate_cut_facet(const CutGeometry& g, std::vector<int> in, std::vector<int> out,
                           PointList& prefix, std::vector<PointList>& result) {
  const Point apex = g.cut_point(in.front(), out.front());
  prefix.push_back(apex);
  if (in.size() == 1 && out.size() == 1) {
    result.push_back(prefix);
  } else {
    if (in.size() > 1) {
      triangulate_cut_facet(g, std::vector<int>(in.begin() + 1, in.end()), out, prefix, result);
    }
    if (out.size() > 1) {
      triangulate_cut_facet(g, in, std::vector<int>(out.begin() + 1, out.end()), prefix, result);
    }
  }
  prefix.pop_back();
}

void triangulate_truncated(const CutGeometry& g, std::vector<int> in, const std::vector<int>& out,
                           PointList& prefix, std::vector<PointList>& result) {
  prefix.push_back((*g.verts)[in.front()]);
  triangulate_cut_facet(g, in, out, prefix, result);
  if (in.size() > 1) {
    triangulate_truncated(g, std::vector<int>(in.begin() + 1, in.end()), out, prefix, result);
  }
  prefix.pop_back();
}

}  // namespace

std::vector<Simplex> clip_simplex_halfspace(const Simplex& s, const HalfSpace& h) {
  if (h.normal.size() != s.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "clip_simplex_halfspace: dimension mismatch");
  }
  CutGeometry g{&s.vertices, {}, h.offset};
  std::vector<int> in;
  std::vector<int> out;
  for (int i = 0; i <= s.dim(); ++i) {
    const double v = h.normal.dot(s.vertices[i]);
    g.values.push_back(v);
    (v <= h.offset ? in : out).push_back(i);
  }
  if (out.empty()) return {s};
  if (in.empty()) return {};

  std::vector<PointList> raw;
  PointList prefix;
  triangulate_truncated(g, in, out, prefix, raw);

  std::vector<Simplex> pieces;
  for (auto& verts : raw) {
    Simplex piece(std::move(verts), s.orientation);
    if (is_degenerate(piece)) continue;
    const int sign = frame_sign_in(piece, s);
    if (sign < 0) std::swap(piece.vertices[0], piece.vertices[1]);
    if (sign == 0) continue;
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

std::vector<Simplex> clip_simplex_region(const Simplex& s, const std::vector<HalfSpace>& region) {
  std::vector<Simplex> current{s};
  for (const auto& h : region) {
    std::vector<Simplex> next;
    for (const auto& piece : current) {
      auto clipped = clip_simplex_halfspace(piece, h);
      next.insert(next.end(), std::make_move_iterator(clipped.begin()),
                  std::make_move_iterator(clipped.end()));
    }
    current = std::move(next);
    if (current.empty()) break;
  }
  return current;
}

std::vector<std::vector<Point>> triangulate_cut(const Simplex& s, const Vec& normal,
                                                double level) {
  if (normal.size() != s.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "triangulate_cut: dimension mismatch");
  }
  CutGeometry g{&s.vertices, {}, level};
  std::vector<int> below;
  std::vector<int> above;
  double scale = std::abs(level);
  for (const auto& v : s.vertices) scale = std::max(scale, std::abs(normal.dot(v)));
  scale = std::max(scale, normal.norm() * s.max_edge_length());
  for (int i = 0; i <= s.dim(); ++i) {
    const double v = normal.dot(s.vertices[i]);
    g.values.push_back(v);
    if (std::abs(v - level) <= 1e-12 * std::max(scale, 1e-300)) {
      throw Error(ErrorCode::DegenerateLevel, "level hits a vertex image; perturb the level");
    }
    (v < level ? below : above).push_back(i);
  }
  if (below.empty() || above.empty()) return {};
  std::vector<PointList> raw;
  PointList prefix;
  triangulate_cut_facet(g, below, above, prefix, raw);
  return raw;
}

}  // namespace gmt
