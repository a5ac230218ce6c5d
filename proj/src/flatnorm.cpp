#include "gmt/flatnorm.hpp"

#include "gmt/error.hpp"
#include "gmt/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace gmt {

SimplicialComplex::SimplicialComplex(AmbientNorm ambient, std::vector<Point> vertices,
                                     std::vector<std::vector<std::vector<int>>> cells)
    : ambient_(std::move(ambient)), vertices_(std::move(vertices)), cells_(std::move(cells)) {
  if (cells_.empty()) cells_.emplace_back();
  index_.resize(cells_.size());
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    std::sort(cells_[d].begin(), cells_[d].end());
    for (std::size_t i = 0; i < cells_[d].size(); ++i) {
      const auto& c = cells_[d][i];
      if (c.size() != d + 1) throw Error(ErrorCode::InvalidInput, "complex cell of wrong size");
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] < 0 || c[j] >= static_cast<int>(vertices_.size()) || (j > 0 && c[j - 1] >= c[j])) {
          throw Error(ErrorCode::InvalidInput, "complex cell ids must be increasing vertex indices");
        }
      }
      if (!index_[d].emplace(c, static_cast<int>(i)).second) {
        throw Error(ErrorCode::InvalidInput, "duplicate complex cell");
      }
    }
  }
  for (std::size_t d = 1; d < cells_.size(); ++d) {
    for (const auto& c : cells_[d]) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        std::vector<int> face = c;
        face.erase(face.begin() + static_cast<long>(j));
        if (index_of(static_cast<int>(d) - 1, face) < 0) {
          throw Error(ErrorCode::InvalidInput, "complex is not closed under faces");
        }
      }
    }
  }
}

int SimplicialComplex::count(int d) const {
  return d >= 0 && d <= dim() ? static_cast<int>(cells_[static_cast<std::size_t>(d)].size()) : 0;
}

const std::vector<std::vector<int>>& SimplicialComplex::cells(int d) const {
  if (d < 0 || d > dim()) throw Error(ErrorCode::InvalidInput, "no cells of that dimension");
  return cells_[static_cast<std::size_t>(d)];
}

int SimplicialComplex::index_of(int d, const std::vector<int>& sorted_ids) const {
  if (d < 0 || d > dim()) return -1;
  const auto& idx = index_[static_cast<std::size_t>(d)];
  auto it = idx.find(sorted_ids);
  return it == idx.end() ? -1 : it->second;
}

Simplex SimplicialComplex::simplex(int d, int i) const {
  std::vector<Point> pts;
  for (int id : cells(d)[static_cast<std::size_t>(i)]) pts.push_back(vertices_[static_cast<std::size_t>(id)]);
  return Simplex(std::move(pts));
}

Mat SimplicialComplex::boundary_matrix(int k) const {
  if (k < 1 || k > dim()) throw Error(ErrorCode::InvalidInput, "boundary matrix dimension");
  Mat b = Mat::Zero(count(k - 1), count(k));
  const auto& cs = cells(k);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    for (std::size_t i = 0; i < cs[j].size(); ++i) {
      std::vector<int> face = cs[j];
      face.erase(face.begin() + static_cast<long>(i));
      b(index_of(k - 1, face), static_cast<long>(j)) = i % 2 == 0 ? 1.0 : -1.0;
    }
  }
  return b;
}

Vec SimplicialComplex::weights(int d, JacobianKind kind) const {
  Vec w(count(d));
  for (int i = 0; i < count(d); ++i) {
    w(i) = d == 0 ? 1.0 : jacobian(cell_seminorm(simplex(d, i), ambient_), kind) / factorial(d);
  }
  return w;
}

Chain operator-(const Chain& a, const Chain& b) {
  if (a.k != b.k || a.coefficients.size() != b.coefficients.size()) {
    throw Error(ErrorCode::DimensionMismatch, "chain difference of incompatible chains");
  }
  return {a.k, a.coefficients - b.coefficients};
}

namespace {

// Sorts ids in place and returns the permutation sign, 0 on repeated ids.
int sort_with_sign(std::vector<int>& ids) {
  int sign = 1;
  for (std::size_t i = 1; i < ids.size(); ++i) {
    for (std::size_t j = i; j > 0 && ids[j - 1] > ids[j]; --j) {
      std::swap(ids[j - 1], ids[j]);
      sign = -sign;
    }
  }
  return std::adjacent_find(ids.begin(), ids.end()) == ids.end() ? sign : 0;
}

void add_closure(std::vector<std::set<std::vector<int>>>& cells, const std::vector<int>& c) {
  const std::size_t d = c.size() - 1;
  if (cells.size() <= d) cells.resize(d + 1);
  if (!cells[d].insert(c).second) return;
  if (d == 0) return;
  for (std::size_t j = 0; j < c.size(); ++j) {
    std::vector<int> face = c;
    face.erase(face.begin() + static_cast<long>(j));
    add_closure(cells, face);
  }
}

void check_planar(const std::vector<Point>& pts, const std::vector<std::set<std::vector<int>>>& cells) {
  if (cells.size() < 2) return;
  const std::vector<std::vector<int>> edges(cells[1].begin(), cells[1].end());
  auto p2 = [&](int id) { return Point2(pts[static_cast<std::size_t>(id)](0), pts[static_cast<std::size_t>(id)](1)); };
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto lo = [&](std::size_t e) { return std::min(p2(edges[e][0]).x(), p2(edges[e][1]).x()); };
  auto hi = [&](std::size_t e) { return std::max(p2(edges[e][0]).x(), p2(edges[e][1]).x()); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lo(a) < lo(b); });

  auto on_interior = [&](int w, int a, int b) {
    const Point2 pa = p2(a), pb = p2(b), pw = p2(w);
    const double len2 = (pb - pa).squaredNorm();
    const double s = (pw - pa).dot(pb - pa);
    return std::abs(orient2d(pa, pb, pw)) <= 1e-12 * len2 && s > 1e-12 * len2 && s < len2 * (1 - 1e-12);
  };
  for (std::size_t ii = 0; ii < order.size(); ++ii) {
    const std::size_t e = order[ii];
    for (std::size_t jj = ii + 1; jj < order.size() && lo(order[jj]) <= hi(e); ++jj) {
      const std::size_t f = order[jj];
      const int a = edges[e][0], b = edges[e][1], c = edges[f][0], d = edges[f][1];
      if (on_interior(c, a, b) || on_interior(d, a, b) || on_interior(a, c, d) || on_interior(b, c, d)) {
        throw PairError(ErrorCode::RefinementFailure, "vertex inside another edge", e, f);
      }
      if (a == c || a == d || b == c || b == d) continue;
      const double o1 = orient2d(p2(a), p2(b), p2(c));
      const double o2 = orient2d(p2(a), p2(b), p2(d));
      const double o3 = orient2d(p2(c), p2(d), p2(a));
      const double o4 = orient2d(p2(c), p2(d), p2(b));
      if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
        throw PairError(ErrorCode::RefinementFailure, "edges cross", e, f);
      }
    }
  }
  if (cells.size() < 3) return;
  std::size_t ti = 0;
  for (const auto& t : cells[2]) {
    Point2 a = p2(t[0]), b = p2(t[1]), c = p2(t[2]);
    if (orient2d(a, b, c) < 0) std::swap(b, c);
    const double scale = std::max({(b - a).squaredNorm(), (c - a).squaredNorm(), (c - b).squaredNorm()});
    for (std::size_t w = 0; w < pts.size(); ++w) {
      const int wi = static_cast<int>(w);
      if (wi == t[0] || wi == t[1] || wi == t[2]) continue;
      const Point2 q = p2(wi);
      if (orient2d(a, b, q) > 1e-12 * scale && orient2d(b, c, q) > 1e-12 * scale &&
          orient2d(c, a, q) > 1e-12 * scale) {
        throw PairError(ErrorCode::RefinementFailure, "vertex inside a triangle", ti, w);
      }
    }
    ++ti;
  }
}

}  // namespace

ComplexBuild build_complex(const std::vector<PolyhedralCurrent>& currents,
                           const BuildOptions& options) {
  if (currents.empty()) throw Error(ErrorCode::InvalidInput, "build_complex needs at least one current");
  const AmbientNorm& ambient = currents.front().ambient();
  std::vector<Point> all;
  for (const auto& t : currents) {
    if (!(t.ambient() == ambient)) throw Error(ErrorCode::DimensionMismatch, "currents have different ambients");
    for (const auto& v : t.vertices()) all.push_back(v);
  }
  if (all.empty() && !options.augment_box) {
    throw Error(ErrorCode::InvalidInput, "build_complex: all currents are empty");
  }
  PointPool pool(snap_tolerance(all));
  std::vector<std::set<std::vector<int>>> cells(1);
  for (const auto& t : currents) {
    for (const auto& c : t.cells()) {
      std::vector<int> ids;
      for (const auto& v : c.simplex.vertices) ids.push_back(pool.insert(v));
      if (sort_with_sign(ids) == 0) throw Error(ErrorCode::RefinementFailure, "cell collapses under snapping");
      add_closure(cells, ids);
    }
  }
  const int n = ambient.dim();
  if (n == 2) check_planar(pool.points(), cells);

  if (options.augment_box) {
    if (n != 2) throw Error(ErrorCode::Unsupported, "box augmentation is planar only");
    if (cells.size() > 3) throw Error(ErrorCode::InvalidInput, "planar complex of dimension above 2");
    Point lo = all.empty() ? Point(Vec::Zero(2)) : all.front();
    Point hi = lo;
    for (const auto& p : all) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    const double extent = std::max((hi - lo).maxCoeff(), 1.0e-3);
    const double pad = options.margin * extent;
    lo.array() -= pad;
    hi.array() += pad;
    const int m = std::max(1, options.box_subdivisions);
    std::vector<int> ring;
    auto corner = [&](double s, double t) { return Point(Eigen::Vector2d(lo(0) + s * (hi(0) - lo(0)), lo(1) + t * (hi(1) - lo(1)))); };
    for (int i = 0; i < m; ++i) ring.push_back(pool.insert(corner(static_cast<double>(i) / m, 0.0)));
    for (int i = 0; i < m; ++i) ring.push_back(pool.insert(corner(1.0, static_cast<double>(i) / m)));
    for (int i = 0; i < m; ++i) ring.push_back(pool.insert(corner(1.0 - static_cast<double>(i) / m, 1.0)));
    for (int i = 0; i < m; ++i) ring.push_back(pool.insert(corner(0.0, 1.0 - static_cast<double>(i) / m)));
    if (options.interior_spacing > 0.0) {
      const double h = options.interior_spacing;
      const double clearance = 0.25 * h;
      const std::vector<std::vector<int>> edges(cells.size() > 1 ? cells[1].begin() : cells[0].end(),
                                                cells.size() > 1 ? cells[1].end() : cells[0].end());
      const std::size_t existing = pool.size();
      for (double x = lo(0) + h; x < hi(0) - 0.5 * h; x += h) {
        for (double y = lo(1) + h; y < hi(1) - 0.5 * h; y += h) {
          const Point q = Eigen::Vector2d(x, y);
          bool clear = true;
          for (std::size_t v = 0; v < existing && clear; ++v) clear = (pool.points()[v] - q).norm() > clearance;
          for (const auto& e : edges) {
            if (!clear) break;
            const Point& a = pool.points()[static_cast<std::size_t>(e[0])];
            const Point& b = pool.points()[static_cast<std::size_t>(e[1])];
            const double s = std::clamp((q - a).dot(b - a) / (b - a).squaredNorm(), 0.0, 1.0);
            clear = (a + s * (b - a) - q).norm() > clearance;
          }
          if (clear) pool.insert(q);
        }
      }
    }
    std::vector<Point2> pts;
    for (const auto& p : pool.points()) pts.push_back({p(0), p(1)});
    std::vector<std::pair<int, int>> constraints;
    if (cells.size() > 1)
      for (const auto& e : cells[1]) constraints.push_back({e[0], e[1]});
    for (std::size_t i = 0; i < ring.size(); ++i) {
      constraints.push_back({ring[i], ring[(i + 1) % ring.size()]});
    }
    const Triangulation2D tri = constrained_triangulation(pts, constraints);
    std::set<std::vector<int>> triangles;
    for (const auto& t : tri.triangles) {
      std::vector<int> ids{t[0], t[1], t[2]};
      std::sort(ids.begin(), ids.end());
      triangles.insert(ids);
    }
    if (cells.size() > 2) {
      std::size_t i = 0;
      for (const auto& t : cells[2]) {
        if (!triangles.count(t)) {
          throw PairError(ErrorCode::RefinementFailure, "input triangle not reproduced by the box triangulation", i, i);
        }
        ++i;
      }
    }
    cells.resize(1);
    for (std::size_t v = 0; v < pool.size(); ++v) cells[0].insert({static_cast<int>(v)});
    for (const auto& t : triangles) add_closure(cells, t);
    for (const auto& [a, b] : constraints) add_closure(cells, {std::min(a, b), std::max(a, b)});
  }

  std::vector<std::vector<std::vector<int>>> lists;
  for (const auto& s : cells) lists.emplace_back(s.begin(), s.end());
  ComplexBuild out{SimplicialComplex(ambient, pool.points(), std::move(lists)), {}};
  for (const auto& t : currents) out.chains.push_back(chain_of(t, out.complex));
  return out;
}

Chain chain_of(const PolyhedralCurrent& t, const SimplicialComplex& k) {
  Chain c;
  c.k = t.dim();
  c.coefficients = Vec::Zero(k.count(t.dim()));
  const double tol = 1e-9 * std::max(1.0, [&] {
    double m = 0.0;
    for (const auto& v : k.vertices()) m = std::max(m, v.cwiseAbs().maxCoeff());
    return m;
  }());
  PointPool pool(tol);
  for (const auto& v : k.vertices()) pool.insert(v);
  if (pool.size() != k.vertices().size()) throw Error(ErrorCode::InvalidInput, "complex vertices closer than the snapping tolerance");
  for (const auto& cell : t.cells()) {
    std::vector<int> ids;
    for (const auto& v : cell.simplex.vertices) {
      const int id = pool.find(v);
      if (id < 0) throw Error(ErrorCode::InvalidInput, "current vertex is not a complex vertex");
      ids.push_back(id);
    }
    const int sign = sort_with_sign(ids);
    const int idx = k.index_of(t.dim(), ids);
    if (sign == 0 || idx < 0) throw Error(ErrorCode::InvalidInput, "current cell is not a complex cell");
    c.coefficients(idx) += static_cast<double>(sign * cell.multiplicity * cell.simplex.orientation);
  }
  return c;
}

PolyhedralCurrent current_of(const Chain& c, const SimplicialComplex& k) {
  if (c.coefficients.size() != k.count(c.k)) throw Error(ErrorCode::DimensionMismatch, "chain length does not match the complex");
  std::vector<Cell> cells;
  for (int i = 0; i < k.count(c.k); ++i) {
    const auto m = static_cast<long long>(std::llround(c.coefficients(i)));
    if (m != 0) cells.push_back({k.simplex(c.k, i), m});
  }
  return PolyhedralCurrent(k.ambient(), c.k, std::move(cells));
}

double chain_mass(const Chain& t, const SimplicialComplex& k, JacobianKind kind) {
  return k.weights(t.k, kind).dot(t.coefficients.cwiseAbs());
}

FlatNormResult flat_norm(const Chain& t, const SimplicialComplex& k, JacobianKind kind,
                         const LpOptions& lp) {
  const int d = t.k;
  if (d < 0 || d > k.dim()) throw Error(ErrorCode::InvalidInput, "chain dimension not in the complex");
  const int nk = k.count(d);
  if (t.coefficients.size() != nk) throw Error(ErrorCode::DimensionMismatch, "chain length does not match the complex");
  const int nk1 = d + 1 <= k.dim() ? k.count(d + 1) : 0;
  const Vec w = k.weights(d, kind);
  const Vec w1 = nk1 > 0 ? k.weights(d + 1, kind) : Vec();

  FlatNormResult res;
  res.u = {d, Vec::Zero(nk)};
  res.v = {d + 1, Vec::Zero(nk1)};
  if (t.coefficients.cwiseAbs().maxCoeff() == 0.0 || nk == 0) {
    res.integral = res.certified = true;
    return res;
  }

  const int n = 2 * nk + 2 * nk1;
  Mat a = Mat::Zero(nk, n);
  a.leftCols(nk).setIdentity();
  a.middleCols(nk, nk) = -Mat::Identity(nk, nk);
  if (nk1 > 0) {
    const Mat b = k.boundary_matrix(d + 1);
    a.middleCols(2 * nk, nk1) = b;
    a.rightCols(nk1) = -b;
  }
  Vec c(n);
  c << w, w, w1, w1;
  std::vector<int> basis(static_cast<std::size_t>(nk));
  for (int i = 0; i < nk; ++i) basis[static_cast<std::size_t>(i)] = t.coefficients(i) >= 0 ? i : nk + i;

  const LpResult lpres = solve_lp(a, t.coefficients, c, basis, lp);
  res.value = lpres.value;
  res.pivots = lpres.pivots;
  res.bland = lpres.bland;
  res.u.coefficients = lpres.x.head(nk) - lpres.x.segment(nk, nk);
  if (nk1 > 0) res.v.coefficients = lpres.x.segment(2 * nk, nk1) - lpres.x.tail(nk1);

  res.integral = ((lpres.x.array() - lpres.x.array().round()).abs() <= 1e-9).all();
  const Vec ur = res.u.coefficients.array().round();
  const Vec vr = res.v.coefficients.array().round();
  Vec recon = ur;
  if (nk1 > 0) recon += k.boundary_matrix(d + 1) * vr;
  const bool t_integral = ((t.coefficients.array() - t.coefficients.array().round()).abs() == 0.0).all();
  const bool feasible = t_integral && (recon - t.coefficients).cwiseAbs().maxCoeff() == 0.0;
  res.integer_upper = feasible ? w.dot(ur.cwiseAbs()) + (nk1 > 0 ? w1.dot(vr.cwiseAbs()) : 0.0)
                               : w.dot(t.coefficients.cwiseAbs());
  res.certified = res.integral && feasible &&
                  std::abs(res.integer_upper - res.value) <= 1e-9 * std::max(1.0, res.value);
  return res;
}

FlatNormResult flat_distance(const PolyhedralCurrent& a, const PolyhedralCurrent& b,
                             const BuildOptions& options, JacobianKind kind) {
  const ComplexBuild cb = build_complex({a, b}, options);
  return flat_norm(cb.chains[0] - cb.chains[1], cb.complex, kind);
}

SemicontinuityReport lower_semicontinuity_probe(const std::vector<PolyhedralCurrent>& sequence,
                                                const PolyhedralCurrent& limit,
                                                const BuildOptions& options, JacobianKind kind,
                                                int test_forms, std::uint64_t seed) {
  SemicontinuityReport rep;
  rep.limit_mass = mass(limit, kind).total;
  const int n = limit.ambient_dim();
  const int k = limit.dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<std::pair<AffineFunction, Mat>> forms;
  for (int f = 0; f < test_forms; ++f) {
    AffineFunction h{Vec(n), unif(rng)};
    for (int i = 0; i < n; ++i) h.a(i) = unif(rng);
    Mat pi(k, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) pi(i, j) = unif(rng);
    forms.push_back({h, pi});
  }
  for (const auto& t : sequence) {
    rep.masses.push_back(mass(t, kind).total);
    rep.flat_distances.push_back(flat_distance(t, limit, options, kind).value);
    double worst = 0.0;
    for (const auto& [h, pi] : forms) {
      worst = std::max(worst, std::abs(evaluate_form(t, h, pi) - evaluate_form(limit, h, pi)));
    }
    rep.weak_differences.push_back(worst);
  }
  if (!rep.masses.empty()) {
    rep.liminf_mass = *std::min_element(rep.masses.begin() + static_cast<long>(rep.masses.size() / 2),
                                        rep.masses.end());
  }
  rep.holds = rep.limit_mass <= rep.liminf_mass + 1e-9;
  return rep;
}

PolyhedralCurrent staircase(int n) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    pts.push_back(Eigen::Vector2d(static_cast<double>(i) / n, static_cast<double>(i) / n));
    pts.push_back(Eigen::Vector2d(static_cast<double>(i + 1) / n, static_cast<double>(i) / n));
  }
  pts.push_back(Eigen::Vector2d(1.0, 1.0));
  return curve_current(pts, false, AmbientNorm::euclidean(2));
}

PolyhedralCurrent subdivided_diagonal(int n) {
  std::vector<Point> pts;
  for (int i = 0; i <= n; ++i) pts.push_back(Eigen::Vector2d(static_cast<double>(i) / n, static_cast<double>(i) / n));
  return curve_current(pts, false, AmbientNorm::euclidean(2));
}

PolyhedralCurrent square_boundary(double side, const AmbientNorm& ambient) {
  const std::vector<Point> pts{Eigen::Vector2d(0, 0), Eigen::Vector2d(side, 0),
                               Eigen::Vector2d(side, side), Eigen::Vector2d(0, side)};
  return curve_current(pts, true, ambient);
}

PolyhedralCurrent square_current(double side, const AmbientNorm& ambient) {
  const Point a = Eigen::Vector2d(0, 0), b = Eigen::Vector2d(side, 0);
  const Point c = Eigen::Vector2d(side, side), d = Eigen::Vector2d(0, side);
  return PolyhedralCurrent(ambient, 2, {{Simplex({a, b, c}), 1}, {Simplex({a, c, d}), 1}});
}

}  // namespace gmt
