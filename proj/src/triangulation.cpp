#include "gmt/triangulation.hpp"

#include "gmt/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace gmt {

double orient2d(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

namespace {

class Mesher {
 public:
  explicit Mesher(const std::vector<Point2>& input) : pts_(input) {
    Point2 lo = input.front();
    Point2 hi = input.front();
    for (const auto& p : input) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    const Point2 c = 0.5 * (lo + hi);
    const double d = 20.0 * std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-12});
    super_ = static_cast<int>(pts_.size());
    pts_.push_back({c.x() - d, c.y() - d});
    pts_.push_back({c.x() + d, c.y() - d});
    pts_.push_back({c.x(), c.y() + d});
    add_tri(super_, super_ + 1, super_ + 2);
  }

  void insert_all() {
    std::vector<int> order(static_cast<std::size_t>(super_));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return pts_[a].x() < pts_[b].x() || (pts_[a].x() == pts_[b].x() && pts_[a].y() < pts_[b].y());
    });
    for (int i : order) insert(i);
  }

  void recover(const std::vector<std::pair<int, int>>& constraints) {
    for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
      const auto [u, v] = constraints[ci];
      if (u == v || u < 0 || v < 0 || u >= super_ || v >= super_) {
        throw Error(ErrorCode::InvalidInput, "constraint with invalid endpoints");
      }
      if (!has_edge(u, v)) recover_one(u, v, ci);
      owner_of_.emplace(key_undirected(u, v), ci);
    }
  }

  Triangulation2D result() const {
    Triangulation2D out;
    out.points.assign(pts_.begin(), pts_.begin() + super_);
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      if (dead_[t]) continue;
      const auto& tri = tris_[t];
      if (tri[0] >= super_ || tri[1] >= super_ || tri[2] >= super_) continue;
      out.triangles.push_back(tri);
    }
    return out;
  }

 private:
  static std::uint64_t key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }
  static std::uint64_t key_undirected(int u, int v) { return u < v ? key(u, v) : key(v, u); }

  int add_tri(int a, int b, int c) {
    const int t = static_cast<int>(tris_.size());
    tris_.push_back({a, b, c});
    dead_.push_back(false);
    edges_[key(a, b)] = t;
    edges_[key(b, c)] = t;
    edges_[key(c, a)] = t;
    last_ = t;
    return t;
  }

  void kill(int t) {
    const auto& tri = tris_[t];
    for (int i = 0; i < 3; ++i) {
      auto it = edges_.find(key(tri[i], tri[(i + 1) % 3]));
      if (it != edges_.end() && it->second == t) edges_.erase(it);
    }
    dead_[t] = true;
  }

  int owner(int u, int v) const {
    auto it = edges_.find(key(u, v));
    return it == edges_.end() ? -1 : it->second;
  }

  bool has_edge(int u, int v) const { return owner(u, v) >= 0 || owner(v, u) >= 0; }

  int third(int t, int u, int v) const {
    for (int x : tris_[t])
      if (x != u && x != v) return x;
    return -1;
  }

  // q strictly inside the circumcircle of the counter-clockwise (a, b, c)
  bool in_circle(int a, int b, int c, int q) const {
    const long double ax = pts_[a].x() - pts_[q].x(), ay = pts_[a].y() - pts_[q].y();
    const long double bx = pts_[b].x() - pts_[q].x(), by = pts_[b].y() - pts_[q].y();
    const long double cx = pts_[c].x() - pts_[q].x(), cy = pts_[c].y() - pts_[q].y();
    const long double det = (ax * ax + ay * ay) * (bx * cy - cx * by) -
                            (bx * bx + by * by) * (ax * cy - cx * ay) +
                            (cx * cx + cy * cy) * (ax * by - bx * ay);
    const long double mag = (ax * ax + ay * ay) * (std::abs(bx * cy) + std::abs(cx * by)) +
                            (bx * bx + by * by) * (std::abs(ax * cy) + std::abs(cx * ay)) +
                            (cx * cx + cy * cy) * (std::abs(ax * by) + std::abs(bx * ay));
    return det > 1e-12L * mag;
  }

  // Flips the edge shared by (a, b, c) and (b, a, d) into (c, a, d), (c, d, b).
  void flip(int a, int b) {
    const int t1 = owner(a, b);
    const int t2 = owner(b, a);
    const int c = third(t1, a, b);
    const int d = third(t2, a, b);
    kill(t1);
    kill(t2);
    add_tri(c, a, d);
    add_tri(c, d, b);
  }

  void legalize(int p, int u, int v) {
    // triangle (u, v, p) exists
    const int t2 = owner(v, u);
    if (t2 < 0) return;
    const int q = third(t2, u, v);
    if (!in_circle(u, v, p, q)) return;
    flip(u, v);
    legalize(p, u, q);
    legalize(p, q, v);
  }

  int locate(const Point2& p, int* on_a, int* on_b) {
    int t = last_;
    if (t < 0 || dead_[t]) t = first_alive();
    const std::size_t cap = 4 * tris_.size() + 16;
    for (std::size_t step = 0; step < cap; ++step) {
      const auto& tri = tris_[t];
      bool moved = false;
      int zeros = 0;
      int za = -1, zb = -1;
      for (int i = 0; i < 3; ++i) {
        const int a = tri[i];
        const int b = tri[(i + 1) % 3];
        const double o = orient2d(pts_[a], pts_[b], p);
        if (o < 0) {
          const int n = owner(b, a);
          if (n < 0) throw Error(ErrorCode::RefinementFailure, "point outside the enclosing triangle");
          t = n;
          moved = true;
          break;
        }
        if (o == 0) {
          ++zeros;
          za = a;
          zb = b;
        }
      }
      if (moved) continue;
      if (zeros >= 2) throw Error(ErrorCode::InvalidInput, "duplicate point in triangulation input");
      *on_a = zeros == 1 ? za : -1;
      *on_b = zeros == 1 ? zb : -1;
      return t;
    }
    throw Error(ErrorCode::NonConvergence, "point location walk did not terminate");
  }

  int first_alive() const {
    for (std::size_t t = tris_.size(); t-- > 0;)
      if (!dead_[t]) return static_cast<int>(t);
    return -1;
  }

  void insert(int ip) {
    int ea = -1;
    int eb = -1;
    const int t = locate(pts_[ip], &ea, &eb);
    if (ea < 0) {
      const auto [a, b, c] = tris_[t];
      kill(t);
      add_tri(a, b, ip);
      add_tri(b, c, ip);
      add_tri(c, a, ip);
      legalize(ip, a, b);
      legalize(ip, b, c);
      legalize(ip, c, a);
      return;
    }
    const int c = third(t, ea, eb);
    const int t2 = owner(eb, ea);
    const int d = third(t2, ea, eb);
    kill(t);
    kill(t2);
    add_tri(ea, ip, c);
    add_tri(ip, eb, c);
    add_tri(eb, ip, d);
    add_tri(ip, ea, d);
    legalize(ip, eb, c);
    legalize(ip, c, ea);
    legalize(ip, ea, d);
    legalize(ip, d, eb);
  }

  bool crosses(int a, int b, int u, int v) const {
    if (a == u || a == v || b == u || b == v) return false;
    const double o1 = orient2d(pts_[u], pts_[v], pts_[a]);
    const double o2 = orient2d(pts_[u], pts_[v], pts_[b]);
    const double o3 = orient2d(pts_[a], pts_[b], pts_[u]);
    const double o4 = orient2d(pts_[a], pts_[b], pts_[v]);
    return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
  }

  void recover_one(int u, int v, std::size_t ci) {
    const Point2 pu = pts_[u];
    const Point2 pv = pts_[v];
    const double len2 = (pv - pu).squaredNorm();
    for (int w = 0; w < super_; ++w) {
      if (w == u || w == v) continue;
      const double o = orient2d(pu, pv, pts_[w]);
      const double s = (pts_[w] - pu).dot(pv - pu);
      if (std::abs(o) <= 1e-12 * len2 && s > 0 && s < len2) {
        throw PairError(ErrorCode::RefinementFailure, "constraint passes through a point", ci,
                        static_cast<std::size_t>(w));
      }
    }
    std::deque<std::pair<int, int>> queue;
    for (const auto& [k, t] : edges_) {
      const int a = static_cast<int>(k >> 32);
      const int b = static_cast<int>(k & 0xffffffffu);
      if (a < b && crosses(a, b, u, v)) {
        auto it = owner_of_.find(key_undirected(a, b));
        if (it != owner_of_.end()) {
          throw PairError(ErrorCode::RefinementFailure, "constraints cross", ci, it->second);
        }
        queue.push_back({a, b});
      }
    }
    std::sort(queue.begin(), queue.end());
    std::size_t stall = 0;
    while (!queue.empty()) {
      const auto [a, b] = queue.front();
      queue.pop_front();
      const int t1 = owner(a, b);
      const int t2 = owner(b, a);
      if (t1 < 0 || t2 < 0) continue;
      const int c = third(t1, a, b);
      const int d = third(t2, a, b);
      const double oa = orient2d(pts_[c], pts_[d], pts_[a]);
      const double ob = orient2d(pts_[c], pts_[d], pts_[b]);
      const bool convex = (oa > 0 && ob < 0) || (oa < 0 && ob > 0);
      if (!convex) {
        queue.push_back({a, b});
        if (++stall > 4 * queue.size() + 64) {
          throw Error(ErrorCode::RefinementFailure, "constraint recovery stalled");
        }
        continue;
      }
      stall = 0;
      flip(a, b);
      if (crosses(c, d, u, v)) queue.push_back({std::min(c, d), std::max(c, d)});
    }
    if (!has_edge(u, v)) throw Error(ErrorCode::RefinementFailure, "constraint edge not recovered");
  }

  std::vector<Point2> pts_;
  std::vector<std::array<int, 3>> tris_;
  std::vector<bool> dead_;
  std::unordered_map<std::uint64_t, int> edges_;
  std::unordered_map<std::uint64_t, std::size_t> owner_of_;
  int super_ = 0;
  int last_ = -1;
};

}  // namespace

Triangulation2D constrained_triangulation(const std::vector<Point2>& points,
                                          const std::vector<std::pair<int, int>>& constraints) {
  if (points.size() < 3) throw Error(ErrorCode::InvalidInput, "triangulation needs 3 points");
  Mesher m(points);
  m.insert_all();
  m.recover(constraints);
  return m.result();
}

}  // namespace gmt
