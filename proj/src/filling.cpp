#include "gmt/filling.hpp"

#include "gmt/error.hpp"
#include "gmt/flatnorm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

namespace gmt {

Vec mcshane_extend(const Mat& d_aa, const Vec& f, double lipschitz, const Mat& d_qa) {
  const Eigen::Index na = f.size();
  if (d_aa.rows() != na || d_aa.cols() != na || d_qa.cols() != na) {
    throw Error(ErrorCode::DimensionMismatch, "mcshane_extend: distance matrix sizes");
  }
  if (na == 0) throw Error(ErrorCode::InvalidInput, "mcshane_extend: empty domain");
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = i + 1; j < na; ++j) {
      const double bound = lipschitz * d_aa(i, j);
      if (std::abs(f(i) - f(j)) > bound + 1e-12 * std::max(1.0, bound)) {
        throw PairError(ErrorCode::NotLipschitz, "mcshane_extend: data is not Lipschitz",
                        static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  }
  Vec out(d_qa.rows());
  for (Eigen::Index q = 0; q < d_qa.rows(); ++q) {
    out(q) = (f + lipschitz * d_qa.row(q).transpose()).minCoeff();
  }
  return out;
}

ConvexBody::ConvexBody(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error(ErrorCode::InvalidInput, "convex body needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i].size() != 2) throw Error(ErrorCode::DimensionMismatch, "convex body must be planar");
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    const Point& c = vertices_[(i + 2) % n];
    const double turn = (b - a)(0) * (c - b)(1) - (b - a)(1) * (c - b)(0);
    if (!(turn > 0.0)) throw Error(ErrorCode::InvalidInput, "vertices are not strictly convex and counter-clockwise");
  }
}

ConvexBody ConvexBody::unit_square() {
  return ConvexBody({Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0), Eigen::Vector2d(1, 1),
                     Eigen::Vector2d(0, 1)});
}

ConvexBody ConvexBody::hexagon() {
  std::vector<Point> v;
  for (int k = 0; k < 6; ++k) {
    const double a = k * std::numbers::pi / 3.0;
    v.push_back(Eigen::Vector2d(std::cos(a), std::sin(a)));
  }
  return ConvexBody(v);
}

ConvexBody ConvexBody::named(const std::string& name) {
  if (name == "square") return unit_square();
  if (name == "hexagon") return hexagon();
  throw Error(ErrorCode::InvalidInput, "unknown convex body '" + name + "'");
}

double ConvexBody::volume() const {
  double a = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point& p = vertices_[i];
    const Point& q = vertices_[(i + 1) % vertices_.size()];
    a += p(0) * q(1) - p(1) * q(0);
  }
  return 0.5 * a;
}

double ConvexBody::perimeter() const {
  double l = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) l += (vertices_[(i + 1) % vertices_.size()] - vertices_[i]).norm();
  return l;
}

PolyhedralCurrent ConvexBody::current() const {
  std::vector<Cell> cells;
  for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) {
    cells.push_back({Simplex({vertices_[0], vertices_[i], vertices_[i + 1]}), 1});
  }
  return PolyhedralCurrent(AmbientNorm::euclidean(2), 2, std::move(cells));
}

PolyhedralCurrent ConvexBody::boundary_current() const {
  return curve_current(vertices_, true, AmbientNorm::euclidean(2));
}

double ConvexBody::boundary_parameter(const Point& p, double tol) const {
  double s = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % vertices_.size()];
    const double len = (b - a).norm();
    const double t = std::clamp((p - a).dot(b - a) / (len * len), 0.0, 1.0);
    if ((a + t * (b - a) - p).norm() <= tol) return s + t * len;
    s += len;
  }
  return -1.0;
}

PolyhedralCurrent ConvexBody::refined_boundary(const std::vector<Point>& points) const {
  std::vector<std::pair<double, Point>> marks;
  double s = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    marks.push_back({s, vertices_[i]});
    s += (vertices_[(i + 1) % vertices_.size()] - vertices_[i]).norm();
  }
  for (const auto& p : points) {
    const double t = boundary_parameter(p);
    if (t < 0) throw Error(ErrorCode::InvalidInput, "refinement point is not on the boundary");
    marks.push_back({t >= s - 1e-12 * s ? 0.0 : t, p});
  }
  std::stable_sort(marks.begin(), marks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Point> loop;
  for (const auto& [t, p] : marks) {
    if (!loop.empty() && (loop.back() - p).norm() <= 1e-9) continue;
    loop.push_back(p);
  }
  if (loop.size() > 1 && (loop.back() - loop.front()).norm() <= 1e-9) loop.pop_back();
  return curve_current(loop, true, AmbientNorm::euclidean(2));
}

bool ConvexBody::contains(const Point& p, double tol) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % vertices_.size()];
    const double o = (b - a)(0) * (p - a)(1) - (b - a)(1) * (p - a)(0);
    if (o < -tol * (b - a).norm()) return false;
  }
  return true;
}

std::vector<int> boundary_loop(const TriangleMesh& mesh) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& t : mesh.triangles) {
    for (int i = 0; i < 3; ++i) {
      const int a = t[i], b = t[(i + 1) % 3];
      ++count[{std::min(a, b), std::max(a, b)}];
    }
  }
  std::map<int, int> next;
  for (const auto& t : mesh.triangles) {
    for (int i = 0; i < 3; ++i) {
      const int a = t[i], b = t[(i + 1) % 3];
      if (count[{std::min(a, b), std::max(a, b)}] == 1) {
        if (!next.emplace(a, b).second) throw Error(ErrorCode::InvalidInput, "boundary is not a simple loop");
      }
    }
  }
  if (next.empty()) throw Error(ErrorCode::InvalidInput, "mesh has no boundary");
  std::vector<int> loop{next.begin()->first};
  while (true) {
    auto it = next.find(loop.back());
    if (it == next.end()) throw Error(ErrorCode::InvalidInput, "boundary is not closed");
    if (it->second == loop.front()) break;
    loop.push_back(it->second);
    if (loop.size() > next.size()) throw Error(ErrorCode::InvalidInput, "boundary is not a simple loop");
  }
  if (loop.size() != next.size()) throw Error(ErrorCode::InvalidInput, "boundary has several components");
  return loop;
}

FillingReport ell_infty_filling_bound(const ConvexBody& c, const FillingCandidate& x,
                                      int degree_samples, std::uint64_t seed) {
  const TriangleMesh& mesh = x.mesh;
  if (mesh.vertices.empty() || mesh.vertices.front().size() < 2) {
    throw Error(ErrorCode::InvalidInput, "candidate mesh needs at least planar coordinates");
  }
  const int dim = static_cast<int>(mesh.vertices.front().size());
  FillingReport rep;
  rep.name = x.name;
  rep.volume = c.volume();

  std::vector<Cell> cells;
  for (const auto& t : mesh.triangles) {
    cells.push_back({Simplex({mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]}), 1});
  }
  const PolyhedralCurrent tx(AmbientNorm::euclidean(dim), 2, std::move(cells));
  rep.mass_ir = mass(tx, JacobianKind::InscribedRiemannian).total;
  rep.mass_star = mass(tx, JacobianKind::MassStar).total;
  rep.gap_ir = rep.mass_ir - rep.volume;
  rep.gap_star = rep.mass_star - rep.volume;

  const MeshMetricSpace space(mesh.vertices, mesh.triangles);
  const std::vector<int> loop = boundary_loop(mesh);
  const int nb = static_cast<int>(loop.size());
  rep.boundary_vertices = nb;
  const int nv = space.size();
  Mat d_vb(nv, nb);
  for (int j = 0; j < nb; ++j) {
    const std::vector<double> d = space.distances_from(loop[static_cast<std::size_t>(j)]);
    for (int v = 0; v < nv; ++v) d_vb(v, j) = d[static_cast<std::size_t>(v)];
  }
  Mat d_bb(nb, nb);
  for (int i = 0; i < nb; ++i) d_bb.row(i) = d_vb.row(loop[static_cast<std::size_t>(i)]);
  auto iota = [&](int b) { return Vec(mesh.vertices[static_cast<std::size_t>(loop[static_cast<std::size_t>(b)])].head(2)); };

  rep.isometric_boundary = true;
  for (int i = 0; i < nb; ++i) {
    for (int j = i + 1; j < nb; ++j) {
      const double e = (iota(i) - iota(j)).norm();
      if (e > d_bb(i, j) + 1e-9) {
        throw PairError(ErrorCode::NotIsometric, "boundary identification stretches distances",
                        static_cast<std::size_t>(loop[static_cast<std::size_t>(i)]),
                        static_cast<std::size_t>(loop[static_cast<std::size_t>(j)]));
      }
      if (std::abs(e - d_bb(i, j)) > 1e-9) rep.isometric_boundary = false;
    }
  }

  std::vector<Point> f(static_cast<std::size_t>(nv), Vec::Zero(2));
  for (int coord = 0; coord < 2; ++coord) {
    Vec vals(nb);
    for (int b = 0; b < nb; ++b) vals(b) = iota(b)(coord);
    const Vec ext = mcshane_extend(d_bb, vals, 1.0, d_vb);
    for (int v = 0; v < nv; ++v) f[static_cast<std::size_t>(v)](coord) = ext(v);
  }

  for (const auto& e : space.edges()) {
    const double s = (f[static_cast<std::size_t>(e.a)] - f[static_cast<std::size_t>(e.b)]).cwiseAbs().maxCoeff() / e.length;
    rep.max_edge_stretch = std::max(rep.max_edge_stretch, s);
  }
  rep.lipschitz = rep.max_edge_stretch <= 1.0 + 1e-12;

  std::vector<Point> image_loop;
  std::vector<Point> iota_points;
  for (int b = 0; b < nb; ++b) {
    image_loop.push_back(f[static_cast<std::size_t>(loop[static_cast<std::size_t>(b)])]);
    iota_points.push_back(iota(b));
  }
  try {
    const PolyhedralCurrent pushed = curve_current(image_loop, true, AmbientNorm::euclidean(2));
    rep.boundary_matches = (pushed - c.refined_boundary(iota_points)).empty();
  } catch (const Error&) {
    rep.boundary_matches = false;
  }

  const AmbientNorm linf = AmbientNorm::max_norm(2);
  std::vector<std::array<Point, 3>> images;
  for (const auto& t : mesh.triangles) {
    const std::array<Point, 3> im{f[static_cast<std::size_t>(t[0])], f[static_cast<std::size_t>(t[1])],
                                  f[static_cast<std::size_t>(t[2])]};
    images.push_back(im);
    const Simplex s({im[0], im[1], im[2]});
    if (!is_degenerate(s)) rep.pushforward_mass += jacobian(cell_seminorm(s, linf), JacobianKind::MassStar) / 2.0;
  }

  std::mt19937_64 rng(seed);
  Point lo = c.vertices().front(), hi = lo;
  for (const auto& v : c.vertices()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  std::uniform_real_distribution<double> ux(lo(0), hi(0)), uy(lo(1), hi(1));
  rep.degree_one = true;
  int taken = 0;
  for (int attempt = 0; taken < degree_samples && attempt < 1000 * degree_samples; ++attempt) {
    const Point y = Eigen::Vector2d(ux(rng), uy(rng));
    if (!c.contains(y, -1e-3)) continue;
    int degree = 0;
    bool ambiguous = false;
    for (const auto& im : images) {
      double o[3];
      for (int i = 0; i < 3; ++i) {
        const Point& a = im[static_cast<std::size_t>(i)];
        const Point& b = im[static_cast<std::size_t>((i + 1) % 3)];
        o[i] = (b - a)(0) * (y - a)(1) - (b - a)(1) * (y - a)(0);
      }
      const double scale = 1e-12 * std::max(1.0, (im[1] - im[0]).squaredNorm() + (im[2] - im[0]).squaredNorm());
      if ((o[0] > scale && o[1] > scale && o[2] > scale)) {
        ++degree;
      } else if (o[0] < -scale && o[1] < -scale && o[2] < -scale) {
        --degree;
      } else if (!((o[0] < -scale || o[1] < -scale || o[2] < -scale) && (o[0] > scale || o[1] > scale || o[2] > scale))) {
        ambiguous = true;
      }
    }
    if (ambiguous) continue;
    ++taken;
    if (degree != 1) rep.degree_one = false;
  }
  if (taken < degree_samples) rep.degree_one = false;
  return rep;
}

namespace {

FillingCandidate square_candidate(const std::string& name, int n,
                                  const std::function<double(double, double)>& height) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorCode::InvalidInput, "square resolution must be even and >= 2");
  FillingCandidate c;
  c.name = name;
  auto id = [n](int i, int j) { return j * (n + 1) + i; };
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const double x = static_cast<double>(i) / n;
      const double y = static_cast<double>(j) / n;
      const bool edge = i == 0 || j == 0 || i == n || j == n;
      c.mesh.vertices.push_back(Eigen::Vector3d(x, y, edge ? 0.0 : height(x, y)));
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int a = id(i, j), b = id(i + 1, j), cc = id(i + 1, j + 1), d = id(i, j + 1);
      if ((i < n / 2) == (j < n / 2)) {
        c.mesh.triangles.push_back({a, b, cc});
        c.mesh.triangles.push_back({a, cc, d});
      } else {
        c.mesh.triangles.push_back({a, b, d});
        c.mesh.triangles.push_back({b, cc, d});
      }
    }
  }
  return c;
}

FillingCandidate hexagon_candidate(const std::string& name, int n,
                                   const std::function<double(double)>& height_of_gauge) {
  FillingCandidate c;
  c.name = name;
  PointPool pool(1e-12);
  std::vector<double> gauge;
  for (int k = 0; k < 6; ++k) {
    const double a0 = k * std::numbers::pi / 3.0;
    const double a1 = (k + 1) * std::numbers::pi / 3.0;
    const Eigen::Vector2d v0(std::cos(a0), std::sin(a0));
    const Eigen::Vector2d v1(std::cos(a1), std::sin(a1));
    auto pt = [&](int i, int j) {
      const Point p = Eigen::Vector2d((static_cast<double>(i) * v0 + static_cast<double>(j) * v1) / n);
      const std::size_t before = pool.size();
      const int idx = pool.insert(p);
      if (pool.size() > before) gauge.push_back(static_cast<double>(i + j) / n);
      return idx;
    };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) {
        c.mesh.triangles.push_back({pt(i, j), pt(i + 1, j), pt(i, j + 1)});
        if (i + j + 2 <= n) c.mesh.triangles.push_back({pt(i + 1, j), pt(i + 1, j + 1), pt(i, j + 1)});
      }
    }
  }
  for (std::size_t v = 0; v < pool.size(); ++v) {
    const Point& p = pool.points()[v];
    const double z = gauge[v] >= 1.0 ? 0.0 : height_of_gauge(gauge[v]);
    c.mesh.vertices.push_back(Eigen::Vector3d(p(0), p(1), z));
  }
  return c;
}

}  // namespace

std::vector<std::pair<std::string, FillingCandidate>> filling_corpus(int resolution) {
  const int hex = std::max(1, resolution / 2);
  std::vector<std::pair<std::string, FillingCandidate>> out;
  out.push_back({"square", square_candidate("square-identity", resolution, [](double, double) { return 0.0; })});
  out.push_back({"square", square_candidate("square-tent-0.5", resolution, [](double x, double y) {
                   return 0.5 * (1.0 - std::max(std::abs(2 * x - 1), std::abs(2 * y - 1)));
                 })});
  out.push_back({"square", square_candidate("square-tent-0.2", resolution, [](double x, double y) {
                   return 0.2 * (1.0 - std::max(std::abs(2 * x - 1), std::abs(2 * y - 1)));
                 })});
  out.push_back({"square", square_candidate("square-bump-0.3", resolution, [](double x, double y) {
                   return 0.3 * std::sin(std::numbers::pi * x) * std::sin(std::numbers::pi * y);
                 })});
  out.push_back({"hexagon", hexagon_candidate("hexagon-tent-0.4", hex, [](double g) { return 0.4 * (1.0 - g); })});
  out.push_back({"hexagon", hexagon_candidate("hexagon-bump-0.25", hex, [](double g) { return 0.25 * (1.0 - g * g); })});
  return out;
}

FillingCandidate corpus_candidate(const std::string& name, int resolution) {
  for (auto& [body, cand] : filling_corpus(resolution))
    if (cand.name == name) return cand;
  throw Error(ErrorCode::InvalidInput, "unknown corpus candidate '" + name + "'");
}

std::string corpus_body(const std::string& name) {
  for (const auto& [body, cand] : filling_corpus(2))
    if (cand.name == name) return body;
  throw Error(ErrorCode::InvalidInput, "unknown corpus candidate '" + name + "'");
}

SphereDiscretization SphereDiscretization::uniform(int n, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "sphere discretization needs m >= 1");
  SphereDiscretization d;
  d.n = n;
  if (n == 2) {
    for (int j = 0; j < m; ++j) {
      const double a = 2.0 * std::numbers::pi * j / m;
      d.directions.push_back(Eigen::Vector2d(std::cos(a), std::sin(a)));
    }
  } else if (n == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int j = 0; j < m; ++j) {
      const double z = 1.0 - (2.0 * j + 1.0) / m;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      d.directions.push_back(Eigen::Vector3d(r * std::cos(golden * j), r * std::sin(golden * j), z));
    }
  } else {
    throw Error(ErrorCode::Unsupported, "sphere discretization for n = 2 or 3 only");
  }
  d.weights.assign(static_cast<std::size_t>(m), static_cast<double>(n) / m);
  return d;
}

AmbientNorm SphereDiscretization::weighted_l2() const {
  return AmbientNorm::quadratic(Eigen::Map<const Vec>(weights.data(), m()).asDiagonal().toDenseMatrix());
}

Vec phi_embedding(const Vec& x, const SphereDiscretization& d) {
  if (x.size() != d.n) throw Error(ErrorCode::DimensionMismatch, "phi_embedding: dimension mismatch");
  Vec out(d.m());
  for (int j = 0; j < d.m(); ++j) out(j) = x.dot(d.directions[static_cast<std::size_t>(j)]);
  return out;
}

DetProbeReport det_nonincrease_probe(int trials, int n, int m_min, int m_max, int ir_trials,
                                     std::uint64_t seed) {
  if (m_min < n || m_max < m_min) throw Error(ErrorCode::InvalidInput, "det probe needs n <= m_min <= m_max");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> um(m_min, m_max);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DetProbeReport rep;
  for (int t = 0; t < trials; ++t) {
    const int m = um(rng);
    Mat a(m, n);
    for (int i = 0; i < m; ++i) {
      Vec row(n);
      do {
        for (int j = 0; j < n; ++j) row(j) = u(rng);
      } while (row.norm() > 1.0);
      a.row(i) = row.transpose();
    }
    const double w = static_cast<double>(n) / m;
    const double det = std::sqrt(std::max(0.0, (w * a.transpose() * a).determinant()));
    ++rep.trials;
    rep.max_det = std::max(rep.max_det, det);
    if (det > 1.0 + 1e-9) ++rep.det_violations;
    if (t < ir_trials) {
      const double ir_w = jacobian(Seminorm(a, AmbientNorm::quadratic(w * Mat::Identity(m, m))),
                                   JacobianKind::InscribedRiemannian);
      const double ir_max = jacobian(Seminorm(a, AmbientNorm::max_norm(m)), JacobianKind::InscribedRiemannian);
      ++rep.ir_trials;
      rep.max_ir_excess = std::max(rep.max_ir_excess, ir_w - ir_max);
      if (ir_w > ir_max + 1e-9) ++rep.ir_violations;
    }
  }
  return rep;
}

WitnessReport make_linfty_square() {
  const AmbientNorm e2 = AmbientNorm::euclidean(2);
  const AmbientNorm linf = AmbientNorm::max_norm(2);
  WitnessReport r;
  r.mass_euclidean = mass(square_current(1.0, e2), JacobianKind::MassStar).total;
  r.mass_max = mass(square_current(1.0, linf), JacobianKind::MassStar).total;
  r.boundary_euclidean = mass(square_boundary(1.0, e2), JacobianKind::MassStar).total;
  r.boundary_max = mass(square_boundary(1.0, linf), JacobianKind::MassStar).total;
  const Vec diag = Eigen::Vector2d(1.0, 1.0);
  r.distance_euclidean = e2(diag);
  r.distance_max = linf(diag);
  // |v|_inf <= |v|_2 on every direction sampled from the edges and diagonals
  r.identity_one_lipschitz = true;
  for (const Vec& v : {Vec(Eigen::Vector2d(1, 0)), Vec(Eigen::Vector2d(0, 1)), diag, Vec(Eigen::Vector2d(1, -1))}) {
    if (linf(v) > e2(v)) r.identity_one_lipschitz = false;
  }
  return r;
}

}  // namespace gmt
