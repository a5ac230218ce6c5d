#include "gmt/current.hpp"

#include "gmt/error.hpp"
#include "gmt/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace gmt {

double snap_tolerance(const std::vector<Point>& points) {
  double scale = 1.0;
  for (const auto& p : points)
    if (p.size() > 0) scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
  return 1e-9 * scale;
}

PolyhedralCurrent::PolyhedralCurrent(AmbientNorm ambient, int k, std::vector<Cell> cells)
    : ambient_(std::move(ambient)), k_(k) {
  if (k < 0 || k > ambient_.dim()) {
    throw Error(ErrorCode::InvalidInput, "current dimension out of range");
  }
  for (const auto& c : cells) {
    if (c.simplex.dim() != k) {
      throw Error(ErrorCode::InvalidInput, "cell dimension differs from current dimension");
    }
    if (c.simplex.ambient_dim() != ambient_.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "cell lives in a different ambient dimension");
    }
    if (is_degenerate(c.simplex)) {
      throw Error(ErrorCode::InvalidInput, "degenerate cell");
    }
  }
  canonicalize(std::move(cells));
}

PolyhedralCurrent PolyhedralCurrent::zero(AmbientNorm ambient, int k) {
  return PolyhedralCurrent(std::move(ambient), k, {});
}

PolyhedralCurrent PolyhedralCurrent::from_cells_dropping_degenerate(AmbientNorm ambient, int k,
                                                                     std::vector<Cell> cells) {
  std::vector<Cell> kept;
  kept.reserve(cells.size());
  for (auto& c : cells)
    if (c.multiplicity != 0 && !is_degenerate(c.simplex)) kept.push_back(std::move(c));
  return PolyhedralCurrent(std::move(ambient), k, std::move(kept));
}

void PolyhedralCurrent::canonicalize(std::vector<Cell> raw) {
  std::vector<Point> all;
  for (const auto& c : raw)
    for (const auto& v : c.simplex.vertices) all.push_back(v);
  PointPool pool(snap_tolerance(all));
  std::vector<std::vector<int>> ids(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (const auto& v : raw[i].simplex.vertices) ids[i].push_back(pool.insert(v));

  const auto& pts = pool.points();
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(pts[a], pts[b]); });
  std::vector<int> rank(pts.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);

  std::map<std::vector<int>, long long> merged;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::vector<int> key(ids[i].size());
    for (std::size_t j = 0; j < key.size(); ++j) key[j] = rank[ids[i][j]];
    // insertion sort, counting transpositions
    int parity = 1;
    for (std::size_t a = 1; a < key.size(); ++a)
      for (std::size_t b = a; b > 0 && key[b - 1] > key[b]; --b) {
        std::swap(key[b - 1], key[b]);
        parity = -parity;
      }
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) continue;  // collapsed by snapping
    merged[key] += raw[i].multiplicity * raw[i].simplex.orientation * parity;
  }
  cells_.clear();
  for (const auto& [key, m] : merged) {
    if (m == 0) continue;
    std::vector<Point> verts;
    verts.reserve(key.size());
    for (int r : key) verts.push_back(pts[order[r]]);
    cells_.push_back({Simplex(std::move(verts), 1), m});
  }
}

std::vector<Point> PolyhedralCurrent::vertices() const {
  std::vector<Point> all;
  for (const auto& c : cells_)
    for (const auto& v : c.simplex.vertices) all.push_back(v);
  std::sort(all.begin(), all.end(), lex_less);
  all.erase(std::unique(all.begin(), all.end(),
                        [](const Point& a, const Point& b) { return a == b; }),
            all.end());
  return all;
}

PolyhedralCurrent PolyhedralCurrent::operator+(const PolyhedralCurrent& other) const {
  if (!(ambient_ == other.ambient_) || k_ != other.k_) {
    throw Error(ErrorCode::DimensionMismatch, "adding currents of different ambient or dimension");
  }
  std::vector<Cell> cells = cells_;
  cells.insert(cells.end(), other.cells_.begin(), other.cells_.end());
  PolyhedralCurrent out(ambient_, k_);
  out.canonicalize(std::move(cells));
  return out;
}

PolyhedralCurrent PolyhedralCurrent::operator-() const { return scaled(-1); }

PolyhedralCurrent PolyhedralCurrent::operator-(const PolyhedralCurrent& other) const {
  return *this + (-other);
}

PolyhedralCurrent PolyhedralCurrent::scaled(long long factor) const {
  PolyhedralCurrent out(ambient_, k_);
  if (factor == 0) return out;
  out.cells_ = cells_;
  for (auto& c : out.cells_) c.multiplicity *= factor;
  return out;
}

PolyhedralCurrent boundary(const PolyhedralCurrent& t) {
  if (t.dim() == 0) {
    throw Error(ErrorCode::InvalidInput, "boundary of a 0-current is not defined");
  }
  std::vector<Cell> faces;
  for (const auto& c : t.cells()) {
    const auto& v = c.simplex.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::vector<Point> face;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (j != i) face.push_back(v[j]);
      const long long sign = (i % 2 == 0) ? 1 : -1;
      faces.push_back({Simplex(std::move(face), c.simplex.orientation), sign * c.multiplicity});
    }
  }
  return PolyhedralCurrent::from_cells_dropping_degenerate(t.ambient(), t.dim() - 1,
                                                           std::move(faces));
}

PiecewiseAffineMap::PiecewiseAffineMap(std::vector<AffinePiece> pieces, AmbientNorm target)
    : pieces_(std::move(pieces)), target_(std::move(target)) {
  if (pieces_.empty()) throw Error(ErrorCode::InvalidInput, "piecewise map without pieces");
  for (const auto& p : pieces_) {
    if (p.map.out_dim() != target_.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "piece maps into the wrong dimension");
    }
  }
}

PiecewiseAffineMap PiecewiseAffineMap::global(AffineMap map, AmbientNorm target) {
  return PiecewiseAffineMap({AffinePiece{{}, std::move(map)}}, std::move(target));
}

namespace {

bool region_contains(const std::vector<HalfSpace>& region, const Point& x) {
  for (const auto& h : region) {
    const double tol = 1e-9 * std::max({1.0, std::abs(h.offset), h.normal.norm() * x.norm()});
    if (!h.contains(x, tol)) return false;
  }
  return true;
}

}  // namespace

const AffinePiece* PiecewiseAffineMap::piece_for(const Simplex& s) const {
  for (const auto& p : pieces_) {
    bool all = true;
    for (const auto& v : s.vertices) {
      if (v.size() != p.map.in_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "map domain dimension mismatch");
      }
      if (!region_contains(p.region, v)) {
        all = false;
        break;
      }
    }
    if (all) return &p;
  }
  return nullptr;
}

const AffinePiece& PiecewiseAffineMap::require_piece(const Simplex& s) const {
  const AffinePiece* p = piece_for(s);
  if (p == nullptr) {
    throw Error(ErrorCode::RefinementRequired,
                "map is not affine on a cell; supply a common refinement");
  }
  return *p;
}

Point PiecewiseAffineMap::operator()(const Point& x) const {
  for (const auto& p : pieces_)
    if (region_contains(p.region, x)) return p.map(x);
  throw Error(ErrorCode::RefinementRequired, "point outside every piece of the map");
}

PolyhedralCurrent push_forward(const PiecewiseAffineMap& f, const PolyhedralCurrent& t) {
  std::vector<Cell> out;
  out.reserve(t.cells().size());
  for (const auto& c : t.cells()) {
    const AffinePiece& piece = f.require_piece(c.simplex);
    std::vector<Point> img;
    for (const auto& v : c.simplex.vertices) img.push_back(piece.map(v));
    out.push_back({Simplex(std::move(img), c.simplex.orientation), c.multiplicity});
  }
  return PolyhedralCurrent::from_cells_dropping_degenerate(f.target(), t.dim(), std::move(out));
}

PolyhedralCurrent restrict(const PolyhedralCurrent& t, const std::vector<HalfSpace>& region) {
  if (region.size() > 32) {
    throw Error(ErrorCode::InvalidInput, "restrict: at most 32 half-spaces");
  }
  std::vector<Cell> out;
  for (const auto& c : t.cells()) {
    for (auto& piece : clip_simplex_region(c.simplex, region)) {
      out.push_back({std::move(piece), c.multiplicity});
    }
  }
  return PolyhedralCurrent::from_cells_dropping_degenerate(t.ambient(), t.dim(), std::move(out));
}

PolyhedralCurrent restrict_preimage(const PolyhedralCurrent& t, const PiecewiseAffineMap& f,
                                    const std::vector<HalfSpace>& region) {
  std::vector<Cell> out;
  for (const auto& c : t.cells()) {
    const AffinePiece& piece = f.require_piece(c.simplex);
    std::vector<HalfSpace> pulled;
    bool empty = false;
    for (const auto& h : region) {
      const Vec n = piece.map.linear.transpose() * h.normal;
      const double off = h.offset - h.normal.dot(piece.map.offset);
      if (n.lpNorm<Eigen::Infinity>() == 0.0) {
        if (off < 0.0) empty = true;
        continue;
      }
      pulled.push_back({n, off});
    }
    if (empty) continue;
    for (auto& p : clip_simplex_region(c.simplex, pulled)) out.push_back({std::move(p), c.multiplicity});
  }
  return PolyhedralCurrent::from_cells_dropping_degenerate(t.ambient(), t.dim(), std::move(out));
}

Seminorm cell_seminorm(const Simplex& s, const AmbientNorm& ambient) {
  return Seminorm(s.edge_matrix(), ambient);
}

namespace {

MassMeasureReport mass_impl(const PolyhedralCurrent& t, JacobianKind kind, bool parallel) {
  const auto& cells = t.cells();
  const double inv_fact = 1.0 / factorial(t.dim());
  auto f = [&](std::size_t i) {
    const Cell& c = cells[i];
    return std::abs(static_cast<double>(c.multiplicity)) *
           jacobian(cell_seminorm(c.simplex, t.ambient()), kind) * inv_fact;
  };
  MassMeasureReport r;
  r.kind = kind;
  r.per_cell = parallel ? parallel_map(cells.size(), f) : serial_map(cells.size(), f);
  for (double v : r.per_cell) r.total += v;
  return r;
}

}  // namespace

MassMeasureReport mass(const PolyhedralCurrent& t, JacobianKind kind) {
  return mass_impl(t, kind, true);
}

MassMeasureReport mass_serial(const PolyhedralCurrent& t, JacobianKind kind) {
  return mass_impl(t, kind, false);
}

MassMeasureReport mass_ambrosio_kirchheim(const PolyhedralCurrent& t) {
  MassMeasureReport r = mass(t, JacobianKind::MassStar);
  r.kind.reset();
  return r;
}

std::vector<Simplex> characteristic_set(const PolyhedralCurrent& t) {
  std::vector<Simplex> out;
  for (const auto& c : t.cells())
    if (c.multiplicity != 0) out.push_back(c.simplex);
  return out;
}

PolyhedralCurrent curve_current(const std::vector<Point>& polyline, bool closed,
                                const AmbientNorm& ambient) {
  const double tol = snap_tolerance(polyline);
  std::vector<Point> pts;
  for (const auto& p : polyline) {
    if (!pts.empty() && (pts.back() - p).lpNorm<Eigen::Infinity>() <= tol) continue;
    pts.push_back(p);
  }
  if (closed && pts.size() > 1 && (pts.back() - pts.front()).lpNorm<Eigen::Infinity>() <= tol)
    pts.pop_back();
  if (pts.size() < 2) throw Error(ErrorCode::InvalidInput, "curve needs at least two distinct points");
  std::vector<Cell> cells;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) cells.push_back({Simplex({pts[i], pts[i + 1]}), 1});
  if (closed) cells.push_back({Simplex({pts.back(), pts.front()}), 1});
  return PolyhedralCurrent(ambient, 1, std::move(cells));
}

double evaluate_form(const PolyhedralCurrent& t, const AffineFunction& h, const Mat& pi) {
  const int k = t.dim();
  if (pi.rows() != k || pi.cols() != t.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "evaluate_form: pi must be k x N");
  }
  double total = 0.0;
  const double inv_fact = 1.0 / factorial(k);
  for (const auto& c : t.cells()) {
    const double det = k == 0 ? 1.0 : (pi * c.simplex.edge_matrix()).determinant();
    total += static_cast<double>(c.multiplicity) * c.simplex.orientation * det *
             h(c.simplex.barycenter()) * inv_fact;
  }
  return total;
}

ChartedCurrent charted(const PolyhedralCurrent& t) {
  ChartedCurrent out;
  out.k = t.dim();
  const double vol = 1.0 / factorial(t.dim());
  for (const auto& c : t.cells()) {
    out.cells.push_back({cell_seminorm(c.simplex, t.ambient()), vol, c.multiplicity});
  }
  return out;
}

MassMeasureReport mass(const ChartedCurrent& t, JacobianKind kind) {
  auto f = [&](std::size_t i) {
    const ChartCell& c = t.cells[i];
    return std::abs(static_cast<double>(c.multiplicity)) * jacobian(c.md, kind) * c.param_volume;
  };
  MassMeasureReport r;
  r.kind = kind;
  r.per_cell = parallel_map(t.cells.size(), f);
  for (double v : r.per_cell) r.total += v;
  return r;
}

}  // namespace gmt
