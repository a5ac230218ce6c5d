#include "gmt/football.hpp"

#include "gmt/error.hpp"
#include "gmt/onedim.hpp"
#include "gmt/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace gmt {

PiecewiseAffineMap football_collapse(double eps) {
  const Vec up = Eigen::Vector2d(0.0, 1.0);
  Mat squash = Mat::Zero(2, 2);
  squash(0, 0) = 1.0;
  std::vector<AffinePiece> pieces;
  pieces.push_back({{HalfSpace{up, 0.0}}, AffineMap::identity(2)});
  pieces.push_back({{HalfSpace{-up, 0.0}, HalfSpace{up, eps}}, AffineMap(squash, Vec::Zero(2))});
  pieces.push_back({{HalfSpace{-up, -eps}}, AffineMap(Mat::Identity(2, 2), Eigen::Vector2d(0.0, -eps))});
  return PiecewiseAffineMap(std::move(pieces), AmbientNorm::euclidean(2));
}

Football make_flat_football(const FootballParams& p) {
  const double eps = p.eps, half = 0.5 * p.slot, h = p.h, t = p.probe_t;
  if (!(p.slot > 0.0 && p.slot < 2.0)) throw Error(ErrorCode::InvalidInput, "football: L must lie in (0, 2)");
  if (!(eps > 0.0 && h > 0.0)) throw Error(ErrorCode::InvalidInput, "football: eps and h must be positive");
  if (!(t > 0.0 && t < 1.0 - h)) throw Error(ErrorCode::InvalidInput, "football: probe offset out of range");

  PointPool pool(1e-12);
  auto add = [&](double x, double y) { return pool.insert(Point(Eigen::Vector2d(x, y))); };
  std::vector<std::pair<int, int>> constraints;
  auto chain = [&](const std::vector<int>& ids) {
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) constraints.push_back({ids[i], ids[i + 1]});
  };

  // shared x sampling of the lines y = 0 and y = eps
  std::vector<double> xs{-1.0, 1.0, -half, half};
  const int nx = static_cast<int>(std::floor(1.0 / h));
  for (int i = -nx; i <= nx; ++i) {
    const double x = i * h;
    if (std::abs(std::abs(x) - 1.0) < 0.3 * h || std::abs(std::abs(x) - half) < 0.3 * h || std::abs(x) > 1.0) continue;
    xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  const int ns = std::max(1, static_cast<int>(std::ceil(eps / h)));
  std::vector<double> ys;
  for (int k = 1; k < ns; ++k) ys.push_back(k * eps / ns);

  std::vector<int> bottom, top;
  for (double x : xs) {
    bottom.push_back(add(x, 0.0));
    top.push_back(add(x, eps));
  }
  chain(bottom);
  chain(top);
  for (double xv : {-1.0, -half, half, 1.0}) {
    std::vector<int> side{add(xv, 0.0)};
    for (double y : ys) side.push_back(add(xv, y));
    side.push_back(add(xv, eps));
    chain(side);
  }
  for (double y : ys) {
    for (double x : xs) {
      const double ax = std::abs(x);
      if (ax > half + 0.3 * h && ax < 1.0 - 0.3 * h) add(x, y);
    }
  }
  const int nc = static_cast<int>(std::ceil(std::numbers::pi / h));
  std::vector<int> lower{add(-1.0, 0.0)}, upper{add(1.0, eps)};
  for (int j = 1; j < nc; ++j) {
    const double a = std::numbers::pi * j / nc;
    lower.push_back(add(std::cos(std::numbers::pi + a), std::sin(std::numbers::pi + a)));
    upper.push_back(add(std::cos(a), std::sin(a) + eps));
  }
  lower.push_back(add(1.0, 0.0));
  upper.push_back(add(-1.0, eps));
  chain(lower);
  chain(upper);

  const double r2 = (1.0 - 0.5 * h) * (1.0 - 0.5 * h);
  for (int i = -nx; i <= nx; ++i) {
    const double x = i * h;
    for (int j = 0;; ++j) {
      const double y = -t - j * h;
      if (y < -1.0) break;
      if (x * x + y * y < r2) add(x, y);
    }
    for (int j = 0;; ++j) {
      const double y = t + j * h;
      if (y > 1.0) break;
      if (x * x + y * y < r2) add(x, y + eps);
    }
  }

  std::vector<Point2> pts;
  for (const auto& q : pool.points()) pts.push_back({q(0), q(1)});
  const Triangulation2D tri = constrained_triangulation(pts, constraints);

  auto inside = [&](const Point2& b) {
    if (b.y() < 0.0) return b.squaredNorm() < 1.0;
    if (b.y() < eps) return std::abs(b.x()) < 1.0 && std::abs(b.x()) > half;
    return b.x() * b.x() + (b.y() - eps) * (b.y() - eps) < 1.0;
  };
  Football f{p, {}, PolyhedralCurrent::zero(AmbientNorm::euclidean(2), 2), football_collapse(eps), -1, -1};
  std::map<int, int> remap;
  auto use = [&](int v) {
    auto [it, fresh] = remap.emplace(v, static_cast<int>(f.mesh.vertices.size()));
    if (fresh) f.mesh.vertices.push_back(pool.points()[static_cast<std::size_t>(v)]);
    return it->second;
  };
  std::vector<Cell> cells;
  for (const auto& tr : tri.triangles) {
    const Point2 b = (pts[tr[0]] + pts[tr[1]] + pts[tr[2]]) / 3.0;
    if (!inside(b)) continue;
    f.mesh.triangles.push_back({use(tr[0]), use(tr[1]), use(tr[2])});
    const auto& tt = f.mesh.triangles.back();
    cells.push_back({Simplex({f.mesh.vertices[tt[0]], f.mesh.vertices[tt[1]], f.mesh.vertices[tt[2]]}), 1});
  }
  f.current = PolyhedralCurrent(AmbientNorm::euclidean(2), 2, std::move(cells));
  const int below = pool.find(Point(Eigen::Vector2d(0.0, -t)));
  const int above = pool.find(Point(Eigen::Vector2d(0.0, eps + t)));
  if (below < 0 || above < 0 || !remap.count(below) || !remap.count(above)) {
    throw Error(ErrorCode::RefinementFailure, "football: probe points missing from the mesh");
  }
  f.probe_below = remap[below];
  f.probe_above = remap[above];
  return f;
}

double winding_number(const PolyhedralCurrent& cycle, const Point& center) {
  if (cycle.dim() != 1 || cycle.ambient_dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "winding number of a planar 1-current");
  }
  double total = 0.0;
  for (const auto& c : cycle.cells()) {
    const Vec a = c.simplex.vertices[0] - center;
    const Vec b = c.simplex.vertices[1] - center;
    const double ang = std::atan2(a(0) * b(1) - a(1) * b(0), a.dot(b));
    total += static_cast<double>(c.multiplicity * c.simplex.orientation) * ang;
  }
  return total / (2.0 * std::numbers::pi);
}

FootballReport football_report(const Football& f) {
  FootballReport r;
  const FootballParams& p = f.params;
  r.vertices = static_cast<int>(f.mesh.vertices.size());
  r.triangles = static_cast<int>(f.mesh.triangles.size());
  r.area = mass(f.current, JacobianKind::MassStar).total;
  const MeshMetricSpace space(f.mesh.vertices, f.mesh.triangles);
  for (const auto& e : space.edges()) {
    const Point fa = f.collapse(f.mesh.vertices[static_cast<std::size_t>(e.a)]);
    const Point fb = f.collapse(f.mesh.vertices[static_cast<std::size_t>(e.b)]);
    r.max_edge_stretch = std::max(r.max_edge_stretch, (fa - fb).norm() / e.length);
  }
  r.across_distance = space.distances_from(f.probe_below)[static_cast<std::size_t>(f.probe_above)];
  r.slit_distance = 2.0 * std::sqrt(0.25 * p.slot * p.slot + p.probe_t * p.probe_t);
  r.straight_distance = p.eps + 2.0 * p.probe_t;
  r.boundary_image = push_forward(f.collapse, boundary(f.current));
  const Decomposition d = decompose_1current(r.boundary_image);
  r.boundary_loops = static_cast<int>(d.loops.size());
  r.boundary_paths = static_cast<int>(d.paths.size());
  r.winding_number = winding_number(r.boundary_image, Point(Vec::Zero(2)));
  r.boundary_image_mass = mass(r.boundary_image, JacobianKind::MassStar).total;
  return r;
}

PolyhedralCurrent football_domain_boundary(double eps, double slot, int segments) {
  const AmbientNorm e2 = AmbientNorm::euclidean(2);
  std::vector<Point> outer;
  for (int j = 0; j <= segments; ++j) {
    const double a = std::numbers::pi + std::numbers::pi * j / segments;
    outer.push_back(j == 0 ? Point(Eigen::Vector2d(-1.0, 0.0)) : j == segments ? Point(Eigen::Vector2d(1.0, 0.0))
                                                                              : Point(Eigen::Vector2d(std::cos(a), std::sin(a))));
  }
  for (int j = 0; j <= segments; ++j) {
    const double a = std::numbers::pi * j / segments;
    outer.push_back(j == 0 ? Point(Eigen::Vector2d(1.0, eps)) : j == segments ? Point(Eigen::Vector2d(-1.0, eps))
                                                                             : Point(Eigen::Vector2d(std::cos(a), std::sin(a) + eps)));
  }
  const double half = 0.5 * slot;
  const std::vector<Point> hole{Eigen::Vector2d(-half, 0.0), Eigen::Vector2d(-half, eps),
                                Eigen::Vector2d(half, eps), Eigen::Vector2d(half, 0.0)};
  return curve_current(outer, true, e2) + curve_current(hole, true, e2);
}

PolyhedralCurrent polygonal_circle(int segments) {
  std::vector<Point> pts;
  for (int j = 0; j < 2 * segments; ++j) {
    const double a = std::numbers::pi + std::numbers::pi * j / segments;
    if (j == 0) {
      pts.push_back(Eigen::Vector2d(-1.0, 0.0));
    } else if (j == segments) {
      pts.push_back(Eigen::Vector2d(1.0, 0.0));
    } else {
      pts.push_back(Eigen::Vector2d(std::cos(a), std::sin(a)));
    }
  }
  return curve_current(pts, true, AmbientNorm::euclidean(2));
}

FootballFlatReport football_flat_distance(double eps, double slot, int segments) {
  FootballFlatReport r;
  r.eps = eps;
  r.filling_bound = (2.0 + slot) * eps;
  BuildOptions opts;
  opts.augment_box = true;
  const FlatNormResult res =
      flat_distance(football_domain_boundary(eps, slot, segments), polygonal_circle(segments), opts);
  r.flat_distance = res.value;
  r.certified = res.certified;
  return r;
}

}  // namespace gmt
