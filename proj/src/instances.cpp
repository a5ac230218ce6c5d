#include "gmt/instances.hpp"

#include <cmath>

namespace gmt {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

Mat gaussian(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> g;
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = g(rng);
  return m;
}

AmbientNorm simple_ambient(Rng& rng, int n) {
  switch (uniform_int(rng, 0, 3)) {
    case 0: return AmbientNorm::euclidean(n);
    case 1: return AmbientNorm::max_norm(n);
    case 2: return AmbientNorm::sum_norm(n);
    default: {
      const Mat b = gaussian(rng, n, n);
      return AmbientNorm::quadratic(b.transpose() * b + 0.1 * Mat::Identity(n, n));
    }
  }
}

}  // namespace

Mat random_invertible(Rng& rng, int k) {
  for (;;) {
    const Mat t = gaussian(rng, k, k);
    if (std::abs(t.determinant()) > 0.05) return t;
  }
}

Seminorm random_seminorm(Rng& rng, int k) {
  const int n = uniform_int(rng, k, k + 2);
  AmbientNorm amb = AmbientNorm::euclidean(n);
  if (n >= 2 && uniform_int(rng, 0, 4) == 0) {
    const int first = uniform_int(rng, 1, n - 1);
    amb = AmbientNorm::product({simple_ambient(rng, first), simple_ambient(rng, n - first)});
  } else {
    amb = simple_ambient(rng, n);
  }
  for (;;) {
    const Mat a = gaussian(rng, n, k);
    Eigen::JacobiSVD<Mat> svd(a);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 0.1 * sv(0)) return Seminorm(a, amb);
  }
}

AmbientNorm random_planar_ambient(Rng& rng) {
  switch (uniform_int(rng, 0, 2)) {
    case 0: return AmbientNorm::euclidean(2);
    case 1: return AmbientNorm::max_norm(2);
    default: return AmbientNorm::sum_norm(2);
  }
}

PolyhedralCurrent random_planar_current(Rng& rng, int k) {
  const AmbientNorm amb = random_planar_ambient(rng);
  const int cells = uniform_int(rng, 3, 8);
  std::vector<Cell> out;
  while (static_cast<int>(out.size()) < cells) {
    std::vector<Point> pts;
    for (int i = 0; i <= k; ++i) pts.push_back(Eigen::Vector2d(uniform(rng, -1, 1), uniform(rng, -1, 1)));
    Simplex s(std::move(pts));
    if (s.max_edge_length() < 0.05) continue;
    if (k == 2 && std::sqrt(gram_determinant(s)) < 0.02) continue;
    int m = uniform_int(rng, 1, 2);
    if (uniform_int(rng, 0, 1)) m = -m;
    out.push_back({std::move(s), m});
  }
  return PolyhedralCurrent(amb, k, std::move(out));
}

PolyhedralCurrent random_graph_current(Rng& rng, int dim) {
  AmbientNorm amb = AmbientNorm::euclidean(dim);
  switch (uniform_int(rng, 0, 2)) {
    case 1: amb = AmbientNorm::max_norm(dim); break;
    case 2: amb = AmbientNorm::sum_norm(dim); break;
    default: break;
  }
  const int nv = uniform_int(rng, 4, 12);
  std::vector<Point> verts;
  for (int i = 0; i < nv; ++i) {
    Vec p(dim);
    for (int c = 0; c < dim; ++c) p(c) = uniform(rng, 0, 1);
    verts.push_back(p);
  }
  const int ne = uniform_int(rng, 1, 20);
  std::vector<Cell> cells;
  for (int e = 0; e < ne; ++e) {
    const int a = uniform_int(rng, 0, nv - 1);
    int b = uniform_int(rng, 0, nv - 2);
    if (b >= a) ++b;
    const int m = uniform_int(rng, -3, 3);
    if (m == 0) continue;
    cells.push_back({Simplex({verts[static_cast<std::size_t>(a)], verts[static_cast<std::size_t>(b)]}), m});
  }
  return PolyhedralCurrent(amb, 1, std::move(cells));
}

}  // namespace gmt
