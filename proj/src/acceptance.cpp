#include "gmt/acceptance.hpp"

#include "gmt/cone.hpp"
#include "gmt/error.hpp"
#include "gmt/filling.hpp"
#include "gmt/flatnorm.hpp"
#include "gmt/football.hpp"
#include "gmt/instances.hpp"
#include "gmt/jacobian.hpp"
#include "gmt/onedim.hpp"
#include "gmt/slicing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <ostream>

namespace gmt {

namespace {

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

Rng rng_for(std::uint64_t seed, int id) { return Rng(seed * 1000003ULL + static_cast<std::uint64_t>(id)); }

// sigma2 >= sigma pointwise, same domain: extra rows (or a larger form) in
// an ambient of the same kind.
Seminorm dominating(Rng& rng, const Seminorm& s) {
  const Mat& a = s.matrix();
  const AmbientNorm& amb = s.ambient();
  const int k = s.domain_dim();
  const int r = uniform_int(rng, 1, 2);
  Mat extra(r, k);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) extra(i, j) = uniform(rng, -1, 1);
  Mat stacked(a.rows() + r, k);
  stacked << a, extra;
  const int n = static_cast<int>(stacked.rows());
  switch (amb.kind()) {
    case AmbientNorm::Kind::Euclidean: return Seminorm(stacked, AmbientNorm::euclidean(n));
    case AmbientNorm::Kind::MaxNorm: return Seminorm(stacked, AmbientNorm::max_norm(n));
    case AmbientNorm::Kind::SumNorm: return Seminorm(stacked, AmbientNorm::sum_norm(n));
    case AmbientNorm::Kind::Quadratic: {
      Mat b(amb.dim(), amb.dim());
      for (int i = 0; i < amb.dim(); ++i)
        for (int j = 0; j < amb.dim(); ++j) b(i, j) = uniform(rng, -1, 1);
      return Seminorm(a, AmbientNorm::quadratic(amb.quadratic_form() + b.transpose() * b));
    }
    case AmbientNorm::Kind::Product: {
      std::vector<AmbientNorm> parts = amb.parts();
      parts.push_back(AmbientNorm::euclidean(r));
      return Seminorm(stacked, AmbientNorm::product(std::move(parts)));
    }
  }
  return s;
}

CriterionResult jacobian_axioms(std::uint64_t seed) {
  CriterionResult r{1, "jacobian-axioms", false, "", {}};
  Rng rng = rng_for(seed, 1);
  const JacobianKind kinds[] = {JacobianKind::Busemann, JacobianKind::MassStar, JacobianKind::InscribedRiemannian};
  double norm_err = 0.0, mono_excess = -1.0, law_err = 0.0;
  int mono_fail = 0, law_fail = 0;
  for (int k = 1; k <= 3; ++k) {
    for (JacobianKind kind : kinds) norm_err = std::max(norm_err, std::abs(jacobian(Seminorm::of(AmbientNorm::euclidean(k)), kind) - 1.0));
    // |A v|_2 has Jacobian sqrt(det A^T A) for every kind
    for (int rep = 0; rep < 5; ++rep) {
      Mat a(k + 1, k);
      for (int i = 0; i < a.size(); ++i) a.data()[i] = uniform(rng, -1, 1);
      const double want = std::sqrt((a.transpose() * a).determinant());
      for (JacobianKind kind : kinds)
        norm_err = std::max(norm_err, rel_err(jacobian(Seminorm(a, AmbientNorm::euclidean(k + 1)), kind), want));
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const int k = 1 + i % 3;
    const Seminorm s = random_seminorm(rng, k);
    const Seminorm big = dominating(rng, s);
    const Mat t = random_invertible(rng, k);
    const Seminorm st = s.compose(t);
    const double det = std::abs(t.determinant());
    for (JacobianKind kind : kinds) {
      const double js = jacobian(s, kind);
      const double jb = jacobian(big, kind);
      const double excess = (js - jb) / std::max(1.0, jb);
      mono_excess = std::max(mono_excess, excess);
      if (excess > 1e-8) ++mono_fail;
      const double e = rel_err(jacobian(st, kind), det * js);
      law_err = std::max(law_err, e);
      if (e > 1e-8) ++law_fail;
    }
  }
  r.pass = norm_err <= 1e-9 && mono_fail == 0 && law_fail == 0;
  r.detail = fmt("normalization err %.2e, monotonicity failures %d (max excess %.2e), transformation failures %d (max rel err %.2e) over 1000 seminorms x 3 kinds",
                 norm_err, mono_fail, mono_excess, law_fail, law_err);
  r.digest = {norm_err, mono_excess, law_err};
  return r;
}

// Maximal centred ellipse {x^T S^-1 x <= 1} in {|xi_j . x| <= 1} by active-set
// enumeration. The constraints xi^T S xi <= 1 are linear in S, so at the
// optimum either two facet pairs are tight (the ellipse inscribed in their
// parallelogram) or three are, which fixes S. Every feasible candidate is a
// lower bound and the optimum is among them.
double john_area_by_enumeration(const std::vector<Vec>& facets) {
  const std::size_t m = facets.size();
  double best = 0.0;
  auto consider = [&](const Eigen::Matrix2d& sm) {
    if (sm(0, 0) <= 0.0 || sm.determinant() <= 0.0) return;
    for (const auto& xi : facets)
      if (xi.dot(sm * xi) > 1.0 + 1e-12) return;
    best = std::max(best, std::numbers::pi * std::sqrt(sm.determinant()));
  };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      Eigen::Matrix2d x;
      x.row(0) = facets[a].transpose();
      x.row(1) = facets[b].transpose();
      if (std::abs(x.determinant()) < 1e-12) continue;
      const Eigen::Matrix2d xi = x.inverse();
      consider(xi * xi.transpose());
      for (std::size_t c = b + 1; c < m; ++c) {
        Eigen::Matrix3d eq;
        for (int r = 0; r < 3; ++r) {
          const Vec& f = facets[r == 0 ? a : r == 1 ? b : c];
          eq.row(r) << f(0) * f(0), 2.0 * f(0) * f(1), f(1) * f(1);
        }
        if (std::abs(eq.determinant()) < 1e-12) continue;
        const Eigen::Vector3d sv = eq.fullPivLu().solve(Eigen::Vector3d::Ones());
        Eigen::Matrix2d sm;
        sm << sv(0), sv(1), sv(1), sv(2);
        consider(sm);
      }
    }
  }
  return best;
}

CriterionResult mass_star_and_ir(std::uint64_t seed) {
  CriterionResult r{2, "maxnorm-and-ir-product", false, "", {}};
  Rng rng = rng_for(seed, 2);
  double linf_err = 0.0;
  for (int n = 1; n <= 3; ++n) linf_err = std::max(linf_err, std::abs(jac_mass_star(Seminorm::of(AmbientNorm::max_norm(n))) - 1.0));
  double prod_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Seminorm s1 = random_seminorm(rng, uniform_int(rng, 1, 2));
    const Seminorm s2 = random_seminorm(rng, uniform_int(rng, 1, 2));
    const double want = jac_inscribed_riemannian(s1) * jac_inscribed_riemannian(s2);
    prod_err = std::max(prod_err, std::abs(jac_inscribed_riemannian(product(s1, s2)) - want) / want);
  }
  double john_err = 0.0;
  for (int i = 0; i < 20; ++i) {
    SymmetricPolytope p;
    const int m = uniform_int(rng, 2, 6);
    for (;;) {
      p.facets.clear();
      for (int j = 0; j < m; ++j) {
        const double ang = uniform(rng, 0, std::numbers::pi), len = uniform(rng, 0.5, 2.0);
        p.facets.push_back(Eigen::Vector2d(len * std::cos(ang), len * std::sin(ang)));
      }
      Mat f(m, 2);
      for (int j = 0; j < m; ++j) f.row(j) = p.facets[static_cast<std::size_t>(j)].transpose();
      Eigen::JacobiSVD<Mat> svd(f);
      if (svd.singularValues()(1) > 0.2) break;
    }
    const double got = john_ellipsoid(p).ellipsoid.volume();
    john_err = std::max(john_err, std::abs(got - john_area_by_enumeration(p.facets)));
  }
  r.pass = linf_err == 0.0 && prod_err <= 1e-6 && john_err <= 1e-4;
  r.detail = fmt("|Jac_m*(linf) - 1| = %.2e, ir product max rel err %.2e (100 pairs), John vs active-set enumeration max area err %.2e (20 polygons)",
                 linf_err, prod_err, john_err);
  r.digest = {linf_err, prod_err, john_err};
  return r;
}

CriterionResult coning(std::uint64_t seed) {
  CriterionResult r{3, "coning", false, "", {}};
  Rng rng = rng_for(seed, 3);
  double worst[3] = {0.0, 0.0, 0.0};
  auto record = [&](int k, const ConeMassReport& rep) {
    worst[k] = std::max(worst[k], std::abs(rep.ratio - 1.0 / (k + 1)));
    r.digest.push_back(rep.ratio);
  };
  for (int i = 0; i < 10; ++i) {
    std::vector<Cell> pts;
    const int n = uniform_int(rng, 1, 4);
    for (int j = 0; j < n; ++j) pts.push_back({Simplex({Eigen::Vector2d(uniform(rng, -1, 1), uniform(rng, -1, 1))}), uniform_int(rng, 1, 3)});
    record(0, cone_mass_ir(PolyhedralCurrent(AmbientNorm::euclidean(2), 0, std::move(pts))));
    record(1, cone_mass_ir(random_planar_current(rng, 1)));
    record(2, cone_mass_ir(random_planar_current(rng, 2)));
    std::vector<Cell> tris;
    for (int j = 0; j < 3; ++j) {
      std::vector<Point> v;
      for (int c = 0; c < 3; ++c) v.push_back(Eigen::Vector3d(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)));
      tris.push_back({Simplex(std::move(v)), 1});
    }
    record(2, cone_mass_ir(PolyhedralCurrent::from_cells_dropping_degenerate(AmbientNorm::euclidean(3), 2, std::move(tris))));
  }
  const ConeMassReport circle = cone_mass_ir(circle_base(64));
  record(1, circle);
  const double disk_err = std::abs(circle.cone_mass - std::numbers::pi);
  r.pass = worst[0] <= 1e-9 && worst[1] <= 1e-9 && worst[2] <= 1e-9 && disk_err <= 1e-9;
  r.detail = fmt("max |ratio - 1/(k+1)|: k=0 %.2e, k=1 %.2e, k=2 %.2e; 64-gon circle: base %.12f, cone %.12f (|cone - pi| %.2e)",
                 worst[0], worst[1], worst[2], circle.base_mass, circle.cone_mass, disk_err);
  r.digest.push_back(circle.cone_mass);
  return r;
}

CriterionResult fubini(std::uint64_t seed) {
  CriterionResult r{4, "fubini-slicing", false, "", {}};
  Rng rng = rng_for(seed, 4);
  double worst_gap = 0.0, worst_commute = 0.0;
  int violations = 0;
  for (int i = 0; i < 50; ++i) {
    const PolyhedralCurrent t = random_planar_current(rng, 1 + i % 2);
    const double ang = uniform(rng, 0, 2 * std::numbers::pi);
    const Vec row = Eigen::Vector2d(std::cos(ang), std::sin(ang));
    const FubiniReport f = verify_mass_fubini(t, Projection(row.transpose()));
    worst_gap = std::max(worst_gap, std::abs(f.gap) / std::max(1.0, f.total_mass));
    if (!f.inequality_holds) ++violations;
    const AffineMap a(random_invertible(rng, 2), Eigen::Vector2d(uniform(rng, -1, 1), uniform(rng, -1, 1)));
    const CommuteReport c =
        verify_slice_pushforward_commute(t, PiecewiseAffineMap::global(a, t.ambient()), row, 10, seed + static_cast<std::uint64_t>(i));
    worst_commute = std::max(worst_commute, c.max_difference);
    r.digest.push_back(f.slice_integral);
    r.digest.push_back(c.max_difference);
  }
  r.pass = worst_gap <= 1e-9 && violations == 0 && worst_commute <= 1e-9;
  r.detail = fmt("max |slice integral - restricted mass| %.2e, inequality violations %d, max commutation difference mass %.2e (50 currents)",
                 worst_gap, violations, worst_commute);
  r.digest.insert(r.digest.begin(), {worst_gap, worst_commute});
  return r;
}

struct RigidCase {
  PolyhedralCurrent t;
  PiecewiseAffineMap f;
  double a, b;
};

// Geodesic polyline from x1 with f(x1) = 0 and f(x2) = d(x1, x2).
RigidCase geodesic_case(Rng& rng, bool max_norm, std::vector<Point>& path) {
  const int dim = uniform_int(rng, 2, 3);
  const AmbientNorm amb = max_norm ? AmbientNorm::max_norm(dim) : AmbientNorm::euclidean(dim);
  Vec x1(dim);
  for (int c = 0; c < dim; ++c) x1(c) = uniform(rng, -1, 1);
  path = {x1};
  const int segs = uniform_int(rng, 2, 5);
  Vec u(dim);
  if (max_norm) {
    u = Vec::Unit(dim, 0);
    for (int s = 0; s < segs; ++s) {
      const double dt = uniform(rng, 0.1, 0.5);
      Vec step(dim);
      step(0) = dt;
      for (int c = 1; c < dim; ++c) step(c) = dt * uniform(rng, -0.9, 0.9);
      path.push_back(path.back() + step);
    }
  } else {
    for (int c = 0; c < dim; ++c) u(c) = uniform(rng, -1, 1);
    u.normalize();
    for (int s = 0; s < segs; ++s) path.push_back(path.back() + uniform(rng, 0.1, 0.5) * u);
  }
  const double len = amb(path.back() - x1);
  Mat row = u.transpose();
  const AffineMap f(row, Vec::Constant(1, -u.dot(x1)));
  return {curve_current(path, false, amb), PiecewiseAffineMap::global(f, AmbientNorm::euclidean(1)), 0.0, len};
}

CriterionResult decomposition(std::uint64_t seed) {
  CriterionResult r{5, "decomposition-and-rigidity", false, "", {}};
  Rng rng = rng_for(seed, 5);
  int edge_fail = 0, length_fail = 0, boundary_fail = 0;
  double worst_len = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const PolyhedralCurrent t = random_graph_current(rng, 2 + i % 2);
    const CurrentGraph g = CurrentGraph::from_current(t);
    const Decomposition d = decompose_1current(g);
    if (expanded_edges(d) != expanded_edges(g)) ++edge_fail;
    const double m = mass(t, JacobianKind::MassStar).total;
    const double e = std::abs(d.total_length(g) - m) / std::max(1.0, m);
    worst_len = std::max(worst_len, e);
    if (e > 1e-12) ++length_fail;
    const double mb = mass(boundary(t), JacobianKind::MassStar).total;
    if (mb != 2.0 * static_cast<double>(d.paths.size())) ++boundary_fail;
    r.digest.push_back(m);
  }
  int rigid_ok = 0, witness_ok = 0, rigid_total = 0, witness_total = 0;
  for (int i = 0; i < 100; ++i) {
    const bool linf = i % 2 == 1;
    std::vector<Point> path;
    RigidCase base = geodesic_case(rng, linf, path);
    ++rigid_total;
    const RigidityVerdict v0 = check_n1_rigidity(base.t, base.f, base.a, base.b);
    if (v0.verdict == Rigidity::Rigid && v0.witness.empty()) ++rigid_ok;

    Rigidity expect = Rigidity::EndpointGap;
    RigidityVerdict v;
    switch (i % 3) {
      case 0: {
        const AffinePiece& p = base.f.pieces().front();
        const AffineMap shrunk(0.9 * p.map.linear, 0.9 * p.map.offset);
        v = check_n1_rigidity(base.t, PiecewiseAffineMap::global(shrunk, AmbientNorm::euclidean(1)), 0.0, 0.9 * base.b);
        break;
      }
      case 1: {
        expect = Rigidity::Detour;
        const Vec d = path[1] - path[0];
        Vec w = Vec::Zero(d.size());
        if (linf) {
          w(1) = 1.5 * std::abs(d(0));
        } else {
          w(0) = -d(1), w(1) = d(0);
          w *= 1.5;
        }
        path.insert(path.begin() + 1, 0.5 * (path[0] + path[1]) + w);
        v = check_n1_rigidity(curve_current(path, false, base.t.ambient()), base.f, base.a, base.b);
        break;
      }
      default: {
        expect = Rigidity::ExcessMass;
        const int dim = base.t.ambient_dim();
        Vec c = path.front() - 3.0 * Vec::Ones(dim);
        std::vector<Point> loop{c, c + 0.2 * Vec::Unit(dim, 0), c + 0.2 * Vec::Unit(dim, 1)};
        v = check_n1_rigidity(base.t + curve_current(loop, true, base.t.ambient()), base.f, base.a, base.b);
        break;
      }
    }
    ++witness_total;
    const bool chain = v.endpoint_gap <= v.distance + 1e-12 && v.distance <= v.path_length + 1e-12 &&
                       v.path_length <= v.mass + 1e-12;
    if (v.verdict == expect && !v.witness.empty() && chain) ++witness_ok;
    r.digest.push_back(v.mass);
  }
  r.pass = edge_fail == 0 && length_fail == 0 && boundary_fail == 0 && rigid_ok == rigid_total &&
           witness_ok == witness_total;
  r.detail = fmt("1000 graph currents: edge failures %d, length failures %d (max rel err %.2e), boundary failures %d; rigid %d/%d, witnesses %d/%d",
                 edge_fail, length_fail, worst_len, boundary_fail, rigid_ok, rigid_total, witness_ok, witness_total);
  return r;
}

// min over v in {-1,0,1}^n2 of M(t - boundary v) + M(v), Euclidean weights.
double flat_norm_by_enumeration(const SimplicialComplex& k, const Chain& t) {
  const int n1 = k.count(1), n2 = k.count(2);
  std::vector<double> w1(static_cast<std::size_t>(n1)), w2(static_cast<std::size_t>(n2));
  for (int i = 0; i < n1; ++i) w1[static_cast<std::size_t>(i)] = simplex_volume(k.simplex(1, i)).value;
  for (int i = 0; i < n2; ++i) w2[static_cast<std::size_t>(i)] = simplex_volume(k.simplex(2, i)).value;
  std::vector<std::array<std::pair<int, int>, 3>> faces;
  for (const auto& c : k.cells(2)) {
    faces.push_back({{{k.index_of(1, {c[1], c[2]}), 1}, {k.index_of(1, {c[0], c[2]}), -1}, {k.index_of(1, {c[0], c[1]}), 1}}});
  }
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> v(static_cast<std::size_t>(n2), -1);
  for (;;) {
    Vec u = t.coefficients;
    double cost = 0.0;
    for (int j = 0; j < n2; ++j) {
      const int vj = v[static_cast<std::size_t>(j)];
      if (vj == 0) continue;
      cost += w2[static_cast<std::size_t>(j)];
      for (const auto& [e, sg] : faces[static_cast<std::size_t>(j)]) u(e) -= sg * vj;
    }
    for (int e = 0; e < n1; ++e) cost += std::abs(u(e)) * w1[static_cast<std::size_t>(e)];
    best = std::min(best, cost);
    int j = 0;
    while (j < n2 && v[static_cast<std::size_t>(j)] == 1) v[static_cast<std::size_t>(j++)] = -1;
    if (j == n2) break;
    ++v[static_cast<std::size_t>(j)];
  }
  return best;
}

PolyhedralCurrent grid_square(double s, int n) {
  std::vector<Cell> cells;
  const double h = s / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Eigen::Vector2d p(i * h, j * h);
      const Eigen::Vector2d a = p + Eigen::Vector2d(h, 0), b = p + Eigen::Vector2d(h, h), c = p + Eigen::Vector2d(0, h);
      cells.push_back({Simplex({p, a, b}), 1});
      cells.push_back({Simplex({p, b, c}), 1});
    }
  }
  return PolyhedralCurrent(AmbientNorm::euclidean(2), 2, std::move(cells));
}

CriterionResult flat_norms(std::uint64_t seed) {
  (void)seed;  // the instances are fixed
  CriterionResult r{6, "flat-norm", false, "", {}};
  const AmbientNorm e2 = AmbientNorm::euclidean(2);
  int instances = 0, uncertified = 0, above_mass = 0, oracle_mismatch = 0;
  double worst_oracle = 0.0, worst_closed = 0.0, unit_square = -1.0;
  auto check = [&](const FlatNormResult& f, const Chain& t, const SimplicialComplex& k) {
    ++instances;
    if (!f.certified) ++uncertified;
    if (f.value > chain_mass(t, k, JacobianKind::MassStar) + 1e-12) ++above_mass;
    r.digest.push_back(f.value);
  };
  for (double s : {0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 8.0}) {
    for (int n : {1, 2}) {
      const PolyhedralCurrent sq = n == 1 ? square_current(s, e2) : grid_square(s, n);
      const ComplexBuild b = build_complex({sq, boundary(sq)});
      const Chain& t = b.chains[1];
      const FlatNormResult f = flat_norm(t, b.complex);
      check(f, t, b.complex);
      const double oracle = flat_norm_by_enumeration(b.complex, t);
      const double e = std::abs(f.value - oracle) / std::max(1.0, oracle);
      worst_oracle = std::max(worst_oracle, e);
      if (e > 1e-12) ++oracle_mismatch;
      worst_closed = std::max(worst_closed, std::abs(oracle - std::min(s * s, 4 * s)) / std::max(1.0, oracle));
      if (s == 1.0 && n == 1) unit_square = f.value;
    }
  }
  BuildOptions box;
  box.augment_box = true;
  for (int n = 1; n <= 6; ++n) {
    const ComplexBuild b = build_complex({staircase(n), subdivided_diagonal(n)}, box);
    const Chain t = b.chains[0] - b.chains[1];
    check(flat_norm(t, b.complex), t, b.complex);
  }
  for (int n = 3; n <= 6; ++n) {
    const ComplexBuild b = build_complex({square_boundary(1.0, e2), curve_current(
        [&] {
          std::vector<Point> p;
          for (int j = 0; j < 4 * n; ++j) {
            const double a = 2 * std::numbers::pi * j / (4 * n);
            p.push_back(Eigen::Vector2d(0.5 + 0.3 * std::cos(a), 0.5 + 0.3 * std::sin(a)));
          }
          return p;
        }(), true, e2)}, box);
    const Chain t = b.chains[0] - b.chains[1];
    check(flat_norm(t, b.complex), t, b.complex);
  }
  r.pass = std::abs(unit_square - 1.0) <= 1e-12 && oracle_mismatch == 0 && worst_closed <= 1e-12 &&
           uncertified == 0 && above_mass == 0;
  r.detail = fmt("F(boundary of unit square) = %.12f, enumeration mismatches %d (max %.2e), max |oracle - min(s^2,4s)| %.2e, uncertified %d/%d, F > M on %d",
                 unit_square, oracle_mismatch, worst_oracle, worst_closed, uncertified, instances, above_mass);
  return r;
}

CriterionResult filling(std::uint64_t seed) {
  CriterionResult r{7, "filling-lower-bound", false, "", {}};
  bool ok = true;
  double min_gap = std::numeric_limits<double>::infinity(), min_nonflat = min_gap;
  int n = 0;
  for (const auto& [body, cand] : filling_corpus()) {
    const std::string& name = cand.name;
    const FillingReport f = ell_infty_filling_bound(ConvexBody::named(body), cand, 20, seed);
    const double gap = std::min(f.gap_ir, f.gap_star);
    min_gap = std::min(min_gap, gap);
    const bool flat = name == "square-identity";
    if (!flat) min_nonflat = std::min(min_nonflat, gap);
    ok = ok && gap >= -1e-9 && (flat || gap >= 0.01) && f.lipschitz && f.boundary_matches && f.degree_one;
    r.digest.push_back(f.gap_ir);
    r.digest.push_back(f.gap_star);
    ++n;
  }
  r.pass = ok;
  r.detail = fmt("%d candidates: min gap %.3e, min gap on non-flat candidates %.4f", n, min_gap, min_nonflat);
  return r;
}

CriterionResult embedding(std::uint64_t seed) {
  CriterionResult r{8, "embedding", false, "", {}};
  Rng rng = rng_for(seed, 8);
  double worst = 0.0;
  for (int m = 3; m <= 256; ++m) {
    const SphereDiscretization d = SphereDiscretization::uniform(2, m);
    const AmbientNorm w = d.weighted_l2();
    for (int rep = 0; rep < 10; ++rep) {
      const Vec x = Eigen::Vector2d(uniform(rng, -1, 1), uniform(rng, -1, 1));
      worst = std::max(worst, std::abs(w(phi_embedding(x, d)) - x.norm()));
    }
  }
  const DetProbeReport p = det_nonincrease_probe(10000, 2, 3, 64, 200, seed);
  r.pass = worst <= 1e-12 && p.det_violations == 0;
  r.detail = fmt("max weighted-l2 error %.2e (m = 3..256); det violations %d / %d (max det %.6f); ir violations %d / %d",
                 worst, p.det_violations, p.trials, p.max_det, p.ir_violations, p.ir_trials);
  r.digest = {worst, p.max_det, p.max_ir_excess};
  return r;
}

CriterionResult football(std::uint64_t seed) {
  (void)seed;
  CriterionResult r{9, "football", false, "", {}};
  FootballParams p;
  p.eps = 0.05, p.slot = 1.0, p.h = 0.01, p.probe_t = 0.01;
  const FootballReport f = football_report(make_flat_football(p));
  const double target = 2.0 * std::sqrt(0.25 + p.probe_t * p.probe_t);
  const double rel = std::abs(f.across_distance - target) / target;
  r.pass = f.area >= std::numbers::pi && f.area <= std::numbers::pi + 2 * p.eps + 0.05 && f.max_edge_stretch <= 1.02 && rel <= 0.10;
  r.detail = fmt("area %.6f in [pi, pi + 0.15], f_eps stretch %.6f, across distance %.6f vs %.6f (%.1f%%), straight %.3f, boundary image: %d loop(s), winding %.3f",
                 f.area, f.max_edge_stretch, f.across_distance, target, 100 * rel, f.straight_distance, f.boundary_loops, f.winding_number);
  r.digest = {f.area, f.max_edge_stretch, f.across_distance, f.winding_number};
  return r;
}

CriterionResult witness(std::uint64_t seed) {
  (void)seed;
  CriterionResult r{10, "linfty-witness", false, "", {}};
  const WitnessReport w = make_linfty_square();
  const double got[] = {w.mass_euclidean, w.mass_max, w.boundary_euclidean, w.boundary_max, w.distance_euclidean, w.distance_max};
  const double want[] = {1.0, 1.0, 4.0, 4.0, std::sqrt(2.0), 1.0};
  double err = 0.0;
  for (int i = 0; i < 6; ++i) err = std::max(err, std::abs(got[i] - want[i]));
  r.pass = err <= 1e-12 && w.identity_one_lipschitz;
  r.detail = fmt("(%.15g, %.15g, %.15g, %.15g, %.15g, %.15g), max err %.2e", got[0], got[1], got[2], got[3], got[4], got[5], err);
  r.digest.assign(got, got + 6);
  return r;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return jacobian_axioms(seed);
    case 2: return mass_star_and_ir(seed);
    case 3: return coning(seed);
    case 4: return fubini(seed);
    case 5: return decomposition(seed);
    case 6: return flat_norms(seed);
    case 7: return filling(seed);
    case 8: return embedding(seed);
    case 9: return football(seed);
    case 10: return witness(seed);
    default: throw Error(ErrorCode::InvalidInput, "no criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& only) {
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= 11; ++i) ids.push_back(i);
  std::vector<CriterionResult> out;
  auto safe_run = [&](int id) {
    try {
      return run_criterion(id, seed);
    } catch (const std::exception& e) {
      return CriterionResult{id, "criterion-" + std::to_string(id), false, std::string("threw: ") + e.what(), {}};
    }
  };
  for (int id : ids) {
    if (id != 11) out.push_back(safe_run(id));
  }
  if (std::find(ids.begin(), ids.end(), 11) != ids.end()) {
    CriterionResult d{11, "determinism", true, "", {}};
    int compared = 0;
    for (const auto& first : out) {
      const CriterionResult again = safe_run(first.id);
      ++compared;
      if (format_line(again) != format_line(first) || !same_bits(again.digest, first.digest)) {
        d.pass = false;
        d.detail += (d.detail.empty() ? "differs: " : ", ") + std::to_string(first.id);
      }
    }
    if (d.pass) d.detail = fmt("%d criteria rerun with the same seed, lines and digests bit-identical", compared);
    out.push_back(d);
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  return fmt("%s %2d %s: ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str()) + r.detail;
}

void print_report(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) out << format_line(r) << '\n';
}

}  // namespace gmt
