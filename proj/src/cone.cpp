#include "gmt/cone.hpp"

#include "gmt/error.hpp"
#include "gmt/slicing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gmt {

double cone_distance(double d_base, double r, double s) {
  if (d_base < 0.0 || r < 0.0 || s < 0.0 || r > 1.0 || s > 1.0) {
    throw Error(ErrorCode::InvalidInput, "cone_distance: arguments out of range");
  }
  if (d_base >= std::numbers::pi) return r + s;
  const double q = r * r + s * s - 2.0 * r * s * std::cos(d_base);
  return std::sqrt(std::max(0.0, q));
}

Seminorm cone_chart_seminorm(const Seminorm& base, double r) {
  return product(base.scaled(r), Seminorm::of(AmbientNorm::euclidean(1)));
}

ChartCell chart_from_edge_lengths(const Mat& lengths, long long multiplicity) {
  const int k = static_cast<int>(lengths.rows()) - 1;
  if (k < 0 || lengths.cols() != lengths.rows()) {
    throw Error(ErrorCode::InvalidInput, "edge length matrix must be square");
  }
  Mat g(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const double li = lengths(0, i + 1);
      const double lj = lengths(0, j + 1);
      g(i, j) = i == j ? li * li : 0.5 * (li * li + lj * lj - lengths(i + 1, j + 1) * lengths(i + 1, j + 1));
    }
  }
  if (k == 0) return {Seminorm(Mat(0, 0), AmbientNorm::euclidean(0)), 1.0, multiplicity};
  return {Seminorm(Mat::Identity(k, k), AmbientNorm::quadratic(g)), 1.0 / factorial(k),
          multiplicity};
}

ChartedCurrent circle_base(int m) {
  if (m < 3) throw Error(ErrorCode::InvalidInput, "circle_base needs at least 3 edges");
  ChartedCurrent c;
  c.k = 1;
  Mat len(2, 2);
  const double a = 2.0 * std::numbers::pi / m;
  len << 0.0, a, a, 0.0;
  for (int i = 0; i < m; ++i) c.cells.push_back(chart_from_edge_lengths(len));
  return c;
}

ConeMassReport cone_mass_ir(const ChartedCurrent& base, int order) {
  ConeMassReport rep;
  rep.k = base.k;
  const int q = order > 0 ? order : base.k + 1;
  const auto nodes = gauss_legendre(q, 0.0, 1.0);
  for (const auto& c : base.cells) {
    const double w = std::abs(static_cast<double>(c.multiplicity)) * c.param_volume;
    rep.base_mass += w * jacobian(c.md, JacobianKind::InscribedRiemannian);
    rep.base_mass_star += w * jacobian(c.md, JacobianKind::MassStar);
    for (const auto& [r, wr] : nodes) {
      const Seminorm lifted = cone_chart_seminorm(c.md, r);
      rep.cone_mass += w * wr * jacobian(lifted, JacobianKind::InscribedRiemannian);
      rep.cone_mass_star += w * wr * jacobian(lifted, JacobianKind::MassStar);
    }
  }
  rep.closed_form = rep.base_mass / (base.k + 1);
  rep.ratio = rep.base_mass > 0.0 ? rep.cone_mass / rep.base_mass : 0.0;
  rep.mass_star_ratio = rep.base_mass_star > 0.0 ? rep.cone_mass_star / rep.base_mass_star : 0.0;
  return rep;
}

ConeMassReport cone_mass_ir(const PolyhedralCurrent& base, int order) {
  return cone_mass_ir(charted(base), order);
}

void AbstractChain::add(std::vector<int> ids, long long coefficient) {
  if (coefficient == 0) return;
  // insertion sort, tracking the permutation parity
  int sign = 1;
  for (std::size_t i = 1; i < ids.size(); ++i) {
    for (std::size_t j = i; j > 0 && ids[j - 1] > ids[j]; --j) {
      std::swap(ids[j - 1], ids[j]);
      sign = -sign;
    }
  }
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return;
  auto& c = cells[ids];
  c += sign * coefficient;
  if (c == 0) cells.erase(ids);
}

AbstractChain AbstractChain::operator+(const AbstractChain& other) const {
  if (other.k != k && !other.empty() && !empty()) {
    throw Error(ErrorCode::DimensionMismatch, "adding chains of different dimension");
  }
  AbstractChain out = empty() ? other : *this;
  if (!empty()) {
    for (const auto& [ids, c] : other.cells) out.add(ids, c);
  }
  return out;
}

AbstractChain AbstractChain::operator-(const AbstractChain& other) const {
  AbstractChain neg = other;
  for (auto& [ids, c] : neg.cells) c = -c;
  return *this + neg;
}

AbstractChain chain_boundary(const AbstractChain& c) {
  if (c.k == 0) throw Error(ErrorCode::InvalidInput, "boundary of a 0-chain");
  AbstractChain out;
  out.k = c.k - 1;
  for (const auto& [ids, coef] : c.cells) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      std::vector<int> face = ids;
      face.erase(face.begin() + static_cast<long>(i));
      out.add(std::move(face), i % 2 == 0 ? coef : -coef);
    }
  }
  return out;
}

AbstractChain abstract_chain(const PolyhedralCurrent& t) {
  const std::vector<Point> verts = t.vertices();
  PointPool pool(snap_tolerance(verts));
  for (const auto& v : verts) pool.insert(v);
  AbstractChain out;
  out.k = t.dim();
  for (const auto& c : t.cells()) {
    std::vector<int> ids;
    for (const auto& v : c.simplex.vertices) ids.push_back(pool.find(v));
    out.add(std::move(ids), c.multiplicity * c.simplex.orientation);
  }
  return out;
}

AbstractChain cone_chain(const AbstractChain& c, int apex) {
  AbstractChain out;
  out.k = c.k + 1;
  for (const auto& [ids, coef] : c.cells) {
    std::vector<int> cone{apex};
    cone.insert(cone.end(), ids.begin(), ids.end());
    out.add(std::move(cone), coef);
  }
  return out;
}

namespace {

double cone_cell_mass(const std::vector<int>& ids, int apex, const std::vector<Point>& verts,
                      const AmbientNorm& ambient) {
  std::vector<Point> base;
  for (int id : ids)
    if (id != apex) base.push_back(verts[static_cast<std::size_t>(id)]);
  if (base.empty()) return 1.0;  // the apex as a point
  const bool coned = base.size() < ids.size();
  const int j = static_cast<int>(base.size()) - 1;
  double m = 1.0;
  if (j > 0) {
    const Simplex s(base);
    m = jacobian(cell_seminorm(s, ambient), JacobianKind::InscribedRiemannian) / factorial(j);
  }
  return coned ? m / (j + 1) : m;
}

double chain_mass(const AbstractChain& c, int apex, const std::vector<Point>& verts,
                  const AmbientNorm& ambient) {
  double m = 0.0;
  for (const auto& [ids, coef] : c.cells) {
    m += std::abs(static_cast<double>(coef)) * cone_cell_mass(ids, apex, verts, ambient);
  }
  return m;
}

}  // namespace

ConeBoundary cone_boundary_decomposition(const PolyhedralCurrent& t) {
  const std::vector<Point> verts = t.vertices();
  const int apex = static_cast<int>(verts.size());
  const AbstractChain base = abstract_chain(t);
  ConeBoundary out;
  out.end_part = base;
  out.boundary = chain_boundary(cone_chain(base, apex));
  if (t.dim() > 0) {
    AbstractChain cb = cone_chain(chain_boundary(base), apex);
    for (auto& [ids, c] : cb.cells) c = -c;
    out.cone_part = cb;
  } else {
    // the boundary of a cone over points is the points minus the apex copies
    out.cone_part.k = 0;
    long long total = 0;
    for (const auto& [ids, c] : base.cells) total += c;
    out.cone_part.add({apex}, -total);
  }
  out.cone_part_mass = chain_mass(out.cone_part, apex, verts, t.ambient());
  out.end_part_mass = chain_mass(out.end_part, apex, verts, t.ambient());
  out.boundary_mass = chain_mass(out.boundary, apex, verts, t.ambient());
  return out;
}

}  // namespace gmt
