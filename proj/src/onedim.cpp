#include "gmt/onedim.hpp"

#include "gmt/error.hpp"
#include "gmt/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace gmt {

CurrentGraph CurrentGraph::from_current(const PolyhedralCurrent& t) {
  if (t.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "current graph needs a 1-current");
  CurrentGraph g;
  g.ambient = t.ambient();
  g.vertices = t.vertices();
  PointPool pool(snap_tolerance(g.vertices));
  for (const auto& v : g.vertices) pool.insert(v);
  for (const auto& c : t.cells()) {
    Edge e;
    e.from = pool.find(c.simplex.vertices[0]);
    e.to = pool.find(c.simplex.vertices[1]);
    if (e.from < 0 || e.to < 0) throw Error(ErrorCode::InvalidInput, "edge vertex not found");
    e.multiplicity = c.multiplicity * c.simplex.orientation;
    e.length = g.ambient(g.vertices[e.to] - g.vertices[e.from]);
    g.edges.push_back(e);
  }
  return g;
}

double CurrentGraph::mass() const {
  double m = 0.0;
  for (const auto& e : edges) m += static_cast<double>(std::llabs(e.multiplicity)) * e.length;
  return m;
}

double path_length(const CurrentGraph& g, const std::vector<int>& path, bool closed) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    len += g.ambient(g.vertices[path[i + 1]] - g.vertices[path[i]]);
  }
  if (closed && path.size() > 1) len += g.ambient(g.vertices[path.front()] - g.vertices[path.back()]);
  return len;
}

double Decomposition::total_length(const CurrentGraph& g) const {
  double len = 0.0;
  for (const auto& p : paths) len += path_length(g, p, false);
  for (const auto& l : loops) len += path_length(g, l, true);
  return len;
}

namespace {

using Arcs = std::map<std::pair<int, int>, long long>;

void take_arc(Arcs& arcs, int u, int v) {
  auto it = arcs.find({u, v});
  if (it == arcs.end()) throw Error(ErrorCode::InconsistentBoundary, "decomposition lost an edge");
  if (--it->second == 0) arcs.erase(it);
}

}  // namespace

Decomposition decompose_1current(const CurrentGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  Arcs arcs;
  std::map<std::pair<int, int>, double> length;
  for (const auto& e : g.edges) {
    if (e.multiplicity == 0) continue;
    const auto key = e.multiplicity > 0 ? std::make_pair(e.from, e.to) : std::make_pair(e.to, e.from);
    arcs[key] += std::llabs(e.multiplicity);
    length[key] = e.length;
  }

  Decomposition d;
  while (true) {
    WeightedGraph graph;
    graph.adjacency.resize(static_cast<std::size_t>(n));
    for (const auto& [key, count] : arcs) graph.add_arc(key.first, key.second, length[key]);
    std::map<int, std::pair<std::vector<double>, std::vector<int>>> from;
    double best = std::numeric_limits<double>::infinity();
    std::pair<int, int> best_arc{-1, -1};
    for (const auto& [key, count] : arcs) {
      const int v = key.second;
      auto it = from.find(v);
      if (it == from.end()) {
        std::vector<int> pred;
        std::vector<double> dist = dijkstra(graph, v, &pred);
        it = from.emplace(v, std::make_pair(std::move(dist), std::move(pred))).first;
      }
      const double cyc = length[key] + it->second.first[key.first];
      if (cyc < best) {
        best = cyc;
        best_arc = key;
      }
    }
    if (best_arc.first < 0) break;
    const auto& pred = from[best_arc.second].second;
    std::vector<int> loop;
    for (int x = best_arc.first; x != best_arc.second; x = pred[x]) loop.push_back(x);
    loop.push_back(best_arc.second);
    std::reverse(loop.begin(), loop.end());  // v ... u, closed by u -> v
    for (std::size_t i = 0; i + 1 < loop.size(); ++i) take_arc(arcs, loop[i], loop[i + 1]);
    take_arc(arcs, loop.back(), loop.front());
    d.loops.push_back(std::move(loop));
  }

  std::vector<long long> excess(static_cast<std::size_t>(n), 0);
  for (const auto& [key, count] : arcs) {
    excess[key.first] += count;
    excess[key.second] -= count;
  }
  for (int s = 0; s < n; ++s) {
    while (excess[s] > 0) {
      std::vector<int> path{s};
      int x = s;
      while (true) {
        auto it = arcs.lower_bound({x, std::numeric_limits<int>::min()});
        if (it == arcs.end() || it->first.first != x) break;
        const int y = it->first.second;
        take_arc(arcs, x, y);
        path.push_back(y);
        x = y;
      }
      if (path.size() < 2) throw Error(ErrorCode::InconsistentBoundary, "surplus vertex without edges");
      --excess[s];
      ++excess[x];
      d.paths.push_back(std::move(path));
    }
  }
  if (!arcs.empty()) throw Error(ErrorCode::InconsistentBoundary, "edges left after decomposition");
  return d;
}

Decomposition decompose_1current(const PolyhedralCurrent& t) {
  return decompose_1current(CurrentGraph::from_current(t));
}

std::vector<std::pair<int, int>> expanded_edges(const Decomposition& d) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : d.paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back({p[i], p[i + 1]});
  for (const auto& l : d.loops) {
    for (std::size_t i = 0; i + 1 < l.size(); ++i) out.push_back({l[i], l[i + 1]});
    out.push_back({l.back(), l.front()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> expanded_edges(const CurrentGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges) {
    const auto arc = e.multiplicity > 0 ? std::make_pair(e.from, e.to) : std::make_pair(e.to, e.from);
    for (long long i = 0; i < std::llabs(e.multiplicity); ++i) out.push_back(arc);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Rigidity r) {
  switch (r) {
    case Rigidity::Rigid: return "RIGID";
    case Rigidity::EndpointGap: return "ENDPOINT_GAP";
    case Rigidity::Detour: return "DETOUR";
    case Rigidity::ExcessMass: return "EXCESS_MASS";
  }
  return "?";
}

RigidityVerdict check_n1_rigidity(const PolyhedralCurrent& t, const PiecewiseAffineMap& f,
                                  double a, double b) {
  if (t.dim() != 1) throw Error(ErrorCode::DimensionMismatch, "rigidity check needs a 1-current");
  if (f.target().dim() != 1) throw Error(ErrorCode::DimensionMismatch, "rigidity check needs f: X -> R");
  const CurrentGraph g = CurrentGraph::from_current(t);
  for (const auto& e : g.edges) {
    const Vec& p = g.vertices[e.from];
    const Vec& q = g.vertices[e.to];
    const auto& piece = f.require_piece(Simplex({p, q}));
    const double stretch = std::abs(piece.map(q)(0) - piece.map(p)(0));
    if (stretch > e.length + 1e-12 * std::max(1.0, e.length)) {
      throw PairError(ErrorCode::NotLipschitz, "f stretches an edge",
                      static_cast<std::size_t>(e.from), static_cast<std::size_t>(e.to));
    }
  }
  const PolyhedralCurrent bd = boundary(t);
  const auto target = AmbientNorm::euclidean(1);
  const PolyhedralCurrent image = push_forward(f, bd);
  std::vector<Cell> expect;
  expect.push_back({Simplex({Vec::Constant(1, b)}), 1});
  expect.push_back({Simplex({Vec::Constant(1, a)}), -1});
  const PolyhedralCurrent wanted(target, 0, std::move(expect));
  if (!(image - wanted).empty()) {
    throw Error(ErrorCode::BoundaryConditionViolated, "f#(boundary T) is not [b] - [a]");
  }

  const Decomposition d = decompose_1current(g);
  if (d.paths.size() != 1) {
    throw Error(ErrorCode::BoundaryConditionViolated, "boundary of T is not a single point pair");
  }
  RigidityVerdict v;
  v.start = g.vertices[d.paths[0].front()];
  v.end = g.vertices[d.paths[0].back()];
  v.endpoint_gap = std::abs(b - a);
  v.distance = g.ambient(v.end - v.start);
  v.path_length = path_length(g, d.paths[0], false);
  v.mass = g.mass();
  const double tol = 1e-12 * std::max(1.0, v.mass);
  std::ostringstream w;
  w.precision(17);
  if (v.distance > v.endpoint_gap + tol) {
    v.verdict = Rigidity::EndpointGap;
    w << "d(x1,x2) = " << v.distance << " > |b-a| = " << v.endpoint_gap;
  } else if (v.path_length > v.distance + tol) {
    v.verdict = Rigidity::Detour;
    w << "l(gamma) = " << v.path_length << " > d(x1,x2) = " << v.distance;
  } else if (v.mass > v.path_length + tol) {
    v.verdict = Rigidity::ExcessMass;
    w << "M(T) = " << v.mass << " > l(gamma) = " << v.path_length;
  }
  v.witness = w.str();
  return v;
}

}  // namespace gmt
