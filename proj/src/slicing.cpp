#include "gmt/slicing.hpp"

#include "gmt/error.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace gmt {

namespace {

template <int N>
std::vector<std::pair<double, double>> gl_fixed(double a, double b) {
  using Rule = boost::math::quadrature::gauss<double, N>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      out.push_back({mid, half * w[i]});
    } else {
      out.push_back({mid - half * x[i], half * w[i]});
      out.push_back({mid + half * x[i], half * w[i]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::pair<double, double>> gauss_legendre(int n, double a, double b) {
  switch (n) {
    case 1: return {{0.5 * (a + b), b - a}};
    case 2: return gl_fixed<2>(a, b);
    case 3: return gl_fixed<3>(a, b);
    case 4: return gl_fixed<4>(a, b);
    case 5: return gl_fixed<5>(a, b);
    case 6: return gl_fixed<6>(a, b);
    case 7: return gl_fixed<7>(a, b);
    case 8: return gl_fixed<8>(a, b);
    case 9: return gl_fixed<9>(a, b);
    case 10: return gl_fixed<10>(a, b);
    default: break;
  }
  if (n <= 20) return gl_fixed<20>(a, b);
  throw Error(ErrorCode::Unsupported, "Gauss-Legendre rule with more than 20 nodes");
}

Projection::Projection(Mat rows) : matrix(std::move(rows)) {
  const Mat g = matrix * matrix.transpose();
  if ((g - Mat::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error(ErrorCode::InvalidInput, "projection rows are not orthonormal");
  }
}

Projection Projection::axis(int ambient_dim, int axis) {
  if (axis < 0 || axis >= ambient_dim) throw Error(ErrorCode::InvalidInput, "axis out of range");
  return Projection(Mat(Vec::Unit(ambient_dim, axis).transpose()));
}

namespace {

// Coordinates of ambient vectors in the edge basis of s (least squares).
Mat tangent_coords(const Simplex& s, const Mat& vectors) {
  const Mat e = s.edge_matrix();
  return (e.transpose() * e).ldlt().solve(e.transpose() * vectors);
}

}  // namespace

PolyhedralCurrent slice(const PolyhedralCurrent& t, const PiecewiseAffineMap& g, double level) {
  if (g.target().dim() != 1) {
    throw Error(ErrorCode::DimensionMismatch, "slice: slicing map must be scalar");
  }
  const int k = t.dim();
  if (k == 0) throw Error(ErrorCode::InvalidInput, "slice: cannot slice a 0-current");
  std::vector<Cell> out;
  for (const auto& c : t.cells()) {
    const AffinePiece& piece = g.require_piece(c.simplex);
    const Vec grad = piece.map.linear.row(0).transpose();
    const double shifted = level - piece.map.offset(0);
    const auto pieces = triangulate_cut(c.simplex, grad, shifted);
    if (pieces.empty()) continue;
    const Vec a = tangent_coords(c.simplex, grad);
    for (const auto& verts : pieces) {
      Simplex sl(verts, 1);
      int sign = 1;
      if (k > 1) {
        Mat frame(k, k);
        frame.col(0) = a;
        frame.rightCols(k - 1) = tangent_coords(c.simplex, sl.edge_matrix());
        const double d = frame.determinant();
        if (d == 0.0) continue;
        sign = d > 0 ? 1 : -1;
      } else {
        sign = a(0) > 0 ? 1 : -1;
      }
      out.push_back({std::move(sl), sign * c.multiplicity * c.simplex.orientation});
    }
  }
  return PolyhedralCurrent::from_cells_dropping_degenerate(t.ambient(), k - 1, std::move(out));
}

PolyhedralCurrent slice(const PolyhedralCurrent& t, const Projection& rho, const Vec& p) {
  if (rho.matrix.cols() != t.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "slice: projection dimension mismatch");
  }
  if (p.size() != rho.m()) throw Error(ErrorCode::DimensionMismatch, "slice: parameter size");
  if (rho.m() > t.dim()) throw Error(ErrorCode::InvalidInput, "slice: m exceeds current dimension");
  PolyhedralCurrent cur = t;
  for (int i = 0; i < rho.m(); ++i) {
    const AffineMap row(Mat(rho.matrix.row(i)), Vec::Zero(1));
    cur = slice(cur, PiecewiseAffineMap::global(row, AmbientNorm::euclidean(1)), p(i));
  }
  return cur;
}

std::vector<double> breakpoints(const PolyhedralCurrent& t, const Vec& row) {
  std::vector<double> b;
  for (const auto& v : t.vertices()) b.push_back(row.dot(v));
  std::sort(b.begin(), b.end());
  if (b.empty()) return b;
  // Levels equal up to rounding would give slivers whose nodes sit on vertices.
  const double tol = 1e-9 * std::max({1.0, std::abs(b.front()), std::abs(b.back())});
  b.erase(std::unique(b.begin(), b.end(), [tol](double x, double y) { return y - x <= tol; }), b.end());
  return b;
}

FubiniReport verify_mass_fubini(const PolyhedralCurrent& t, const Projection& rho,
                                JacobianKind kind) {
  if (rho.m() != 1) throw Error(ErrorCode::InvalidInput, "verify_mass_fubini: m must be 1");
  const int k = t.dim();
  if (k == 0) throw Error(ErrorCode::InvalidInput, "verify_mass_fubini: k must be positive");
  const Vec r = rho.matrix.row(0).transpose();
  FubiniReport rep;
  const AffineMap rowmap(rho.matrix, Vec::Zero(1));
  const auto g = PiecewiseAffineMap::global(rowmap, AmbientNorm::euclidean(1));
  const std::vector<double> bp = breakpoints(t, r);
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    for (const auto& [p, w] : gauss_legendre(k, bp[i], bp[i + 1])) {
      const PolyhedralCurrent s = slice(t, g, p);
      const double sm = mass(s, kind).total;
      rep.samples.push_back({p, sm});
      rep.slice_integral += w * sm;
    }
  }
  for (const auto& c : t.cells()) {
    const Mat e = c.simplex.edge_matrix();
    Eigen::HouseholderQR<Mat> qr(e);
    const Mat q = qr.householderQ() * Mat::Identity(e.rows(), k);
    const Vec tang = q.transpose() * r;
    const double len = tang.norm();
    if (len == 0.0) continue;
    double jac = 1.0;
    if (k > 1) {
      const Mat tangm = tang;
      Eigen::HouseholderQR<Mat> qc(tangm);
      const Mat full = qc.householderQ() * Mat::Identity(k, k);
      const Mat w = q * full.rightCols(k - 1);
      jac = jacobian(Seminorm(w, t.ambient()), kind);
    }
    rep.restricted_mass +=
        std::abs(static_cast<double>(c.multiplicity)) * simplex_volume(c.simplex).value * len * jac;
  }
  rep.gap = std::abs(rep.slice_integral - rep.restricted_mass);
  rep.total_mass = mass(t, kind).total;
  rep.lipschitz = dual_norm(t.ambient(), r);
  rep.inequality_holds = rep.slice_integral <= rep.lipschitz * rep.total_mass + 1e-9;
  return rep;
}

double PiecewiseLinear::operator()(double x) const {
  if (knots.empty() || x <= knots.front() || x >= knots.back()) return 0.0;
  const auto it = std::upper_bound(knots.begin(), knots.end(), x);
  const std::size_t j = static_cast<std::size_t>(it - knots.begin());
  const double t = (x - knots[j - 1]) / (knots[j] - knots[j - 1]);
  return (1.0 - t) * values[j - 1] + t * values[j];
}

namespace {

// Integral over a k-simplex P of the product of two affine functions given by
// their vertex values, divided by vol(P).
double mean_of_product(const std::vector<double>& g, const std::vector<double>& h) {
  const std::size_t n = g.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += g[i] * h[j] * (i == j ? 2.0 : 1.0);
  const double k = static_cast<double>(n) - 1.0;
  return s / ((k + 1.0) * (k + 2.0));
}

}  // namespace

UniversalPropertyReport verify_universal_property(const PolyhedralCurrent& t, const Vec& row,
                                                  const PiecewiseLinear& psi,
                                                  const AffineFunction& h, const Mat& pi) {
  const int k = t.dim();
  if (k == 0) throw Error(ErrorCode::InvalidInput, "universal property: k must be positive");
  if (pi.rows() != k - 1 || pi.cols() != t.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "universal property: pi must be (k-1) x N");
  }
  if (psi.knots.size() < 2 || psi.knots.size() != psi.values.size()) {
    throw Error(ErrorCode::InvalidInput, "universal property: malformed psi");
  }
  UniversalPropertyReport rep;
  const auto g = PiecewiseAffineMap::global(AffineMap(Mat(row.transpose()), Vec::Zero(1)),
                                            AmbientNorm::euclidean(1));
  std::vector<double> bp = breakpoints(t, row);
  bp.insert(bp.end(), psi.knots.begin(), psi.knots.end());
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    if (bp[i + 1] <= psi.knots.front() || bp[i] >= psi.knots.back()) continue;
    for (const auto& [p, w] : gauss_legendre(k + 2, bp[i], bp[i + 1])) {
      const PolyhedralCurrent s = slice(t, g, p);
      rep.lhs += w * psi(p) * evaluate_form(s, h, pi);
    }
  }

  Mat full(k, t.ambient_dim());
  full.row(0) = row.transpose();
  if (k > 1) full.bottomRows(k - 1) = pi;
  for (const auto& c : t.cells()) {
    const double det = (full * c.simplex.edge_matrix()).determinant();
    const double cell_vol = simplex_volume(c.simplex).value;
    double integral = 0.0;  // of psi(rho) h over the parameter simplex
    for (std::size_t j = 0; j + 1 < psi.knots.size(); ++j) {
      const std::vector<HalfSpace> slab{{row, psi.knots[j + 1]}, {-row, -psi.knots[j]}};
      for (const auto& piece : clip_simplex_region(c.simplex, slab)) {
        std::vector<double> gv;
        std::vector<double> hv;
        for (const auto& v : piece.vertices) {
          const double x = row.dot(v);
          const double tt = (x - psi.knots[j]) / (psi.knots[j + 1] - psi.knots[j]);
          gv.push_back((1.0 - tt) * psi.values[j] + tt * psi.values[j + 1]);
          hv.push_back(h(v));
        }
        const double pv = simplex_volume(piece).value;
        integral += (pv / cell_vol) * mean_of_product(gv, hv) / factorial(k);
      }
    }
    rep.rhs += static_cast<double>(c.multiplicity) * c.simplex.orientation * det * integral;
  }
  return rep;
}

CommuteReport verify_slice_pushforward_commute(const PolyhedralCurrent& t,
                                               const PiecewiseAffineMap& f, const Vec& row,
                                               int levels, std::uint64_t seed) {
  if (row.size() != f.target().dim()) {
    throw Error(ErrorCode::DimensionMismatch, "commute check: row does not match map target");
  }
  std::vector<AffinePiece> composed;
  for (const auto& p : f.pieces()) {
    composed.push_back({p.region, AffineMap(Mat(row.transpose() * p.map.linear),
                                            Vec::Constant(1, row.dot(p.map.offset)))});
  }
  const PiecewiseAffineMap rho_f(std::move(composed), AmbientNorm::euclidean(1));
  const auto rho = PiecewiseAffineMap::global(AffineMap(Mat(row.transpose()), Vec::Zero(1)),
                                              AmbientNorm::euclidean(1));
  const PolyhedralCurrent ft = push_forward(f, t);

  double lo = 0.0;
  double hi = 0.0;
  bool first = true;
  for (const auto& c : t.cells())
    for (const auto& v : c.simplex.vertices) {
      const double x = rho_f(v)(0);
      lo = first ? x : std::min(lo, x);
      hi = first ? x : std::max(hi, x);
      first = false;
    }
  CommuteReport rep;
  if (first || hi <= lo) return rep;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(lo, hi);
  int attempts = 0;
  while (static_cast<int>(rep.levels.size()) < levels && attempts < 20 * levels) {
    ++attempts;
    const double p = unif(rng);
    try {
      const PolyhedralCurrent lhs = push_forward(f, slice(t, rho_f, p));
      const PolyhedralCurrent rhs = slice(ft, rho, p);
      const double d = mass(lhs - rhs, JacobianKind::MassStar).total;
      rep.levels.push_back(p);
      rep.difference_mass.push_back(d);
      rep.max_difference = std::max(rep.max_difference, d);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateLevel) throw;
    }
  }
  return rep;
}

CharacteristicSliceReport slice_characteristic_consistency(const PolyhedralCurrent& t,
                                                           const Vec& row, int levels,
                                                           std::uint64_t seed) {
  const auto g = PiecewiseAffineMap::global(AffineMap(Mat(row.transpose()), Vec::Zero(1)),
                                            AmbientNorm::euclidean(1));
  const std::vector<double> bp = breakpoints(t, row);
  CharacteristicSliceReport rep;
  if (bp.size() < 2) return rep;
  const std::vector<Simplex> charset = characteristic_set(t);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(bp.front(), bp.back());
  int attempts = 0;
  while (static_cast<int>(rep.levels.size()) < levels && attempts < 20 * levels) {
    ++attempts;
    const double p = unif(rng);
    try {
      const PolyhedralCurrent s = slice(t, g, p);
      double cut_measure = 0.0;
      std::vector<Simplex> cuts;
      for (const auto& cell : charset) {
        for (auto& verts : triangulate_cut(cell, row, p)) {
          Simplex piece(std::move(verts));
          cut_measure += simplex_volume(piece).value;
          cuts.push_back(std::move(piece));
        }
      }
      double slice_measure = 0.0;
      double outside = 0.0;
      for (const auto& c : s.cells()) {
        const double v = simplex_volume(c.simplex).value;
        slice_measure += v;
        const Point b = c.simplex.barycenter();
        bool inside = false;
        for (const auto& cut : cuts) {
          // barycentric coordinates of b in the cut piece
          const Mat e = cut.edge_matrix();
          if (e.cols() == 0) {
            if ((b - cut.vertices[0]).norm() <= 1e-9) {
              inside = true;
              break;
            }
            continue;
          }
          const Vec lam = e.colPivHouseholderQr().solve(b - cut.vertices[0]);
          const double resid = (e * lam - (b - cut.vertices[0])).norm();
          if (resid <= 1e-9 && (lam.array() >= -1e-9).all() && lam.sum() <= 1.0 + 1e-9) {
            inside = true;
            break;
          }
        }
        if (!inside) outside += v;
      }
      rep.levels.push_back(p);
      rep.max_discrepancy =
          std::max(rep.max_discrepancy, std::abs(cut_measure - slice_measure) + outside);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateLevel) throw;
    }
  }
  return rep;
}

}  // namespace gmt
