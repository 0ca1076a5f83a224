#pragma once

// Shared fixtures and brute-force oracles for the unit tests. The oracles
// work on small integer coordinates with int64 arithmetic and share no code
// with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "yao/geometry.hpp"
#include "yao/yao_graph.hpp"

namespace yao::test {

using Coords = std::vector<std::pair<double, double>>;

inline PointSet random_points(std::mt19937_64& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> coord(0, range);
  std::set<std::pair<int, int>> seen;
  Coords out;
  while (out.size() < n) {
    const int x = coord(rng), y = coord(rng);
    if (seen.insert({x, y}).second) out.emplace_back(x, y);
  }
  return PointSet(out);
}

inline int brute_quadrant(std::int64_t dx, std::int64_t dy) {
  if (dx > 0 && dy >= 0) return 1;
  if (dx <= 0 && dy > 0) return 2;
  if (dx < 0 && dy <= 0) return 3;
  return 4;
}

inline std::int64_t ix(const Point& p) { return static_cast<std::int64_t>(p.x); }
inline std::int64_t iy(const Point& p) { return static_cast<std::int64_t>(p.y); }

inline std::int64_t brute_cross(const Point& o, const Point& p, const Point& q) {
  return (ix(p) - ix(o)) * (iy(q) - iy(o)) - (iy(p) - iy(o)) * (ix(q) - ix(o));
}

// Y_4 or Y_4^inf by exhaustive search on integer points.
inline std::set<std::pair<NodeId, NodeId>> brute_y4(const PointSet& pts, Metric m,
                                                    TiePolicy tie) {
  std::set<std::pair<NodeId, NodeId>> edges;
  for (const Point& u : pts) {
    for (int q = 1; q <= 4; ++q) {
      std::optional<NodeId> best;
      std::int64_t best_d = 0;
      for (const Point& v : pts) {
        if (v.id == u.id) continue;
        const std::int64_t dx = ix(v) - ix(u), dy = iy(v) - iy(u);
        if (brute_quadrant(dx, dy) != q) continue;
        const std::int64_t d =
            m == Metric::L2 ? dx * dx + dy * dy : std::max(std::abs(dx), std::abs(dy));
        bool take = !best || d < best_d;
        if (best && d == best_d) {
          // Within one quadrant, v is more counterclockwise iff cross(best, v) > 0.
          take = tie == TiePolicy::LowestIndex ? v.id < *best
                                               : brute_cross(u, pts[*best], v) > 0;
        }
        if (take) {
          best = v.id;
          best_d = d;
        }
      }
      if (best) edges.insert({u.id, *best});
    }
  }
  return edges;
}

inline std::set<std::pair<NodeId, NodeId>> edge_set(const YaoGraph& g) {
  std::set<std::pair<NodeId, NodeId>> out;
  for (const DirectedEdge& e : g.edges()) out.insert({e.source, e.target});
  return out;
}

// All-pairs shortest path lengths on the undirected view.
inline std::vector<std::vector<double>> floyd_warshall(const YaoGraph& g, Metric m) {
  const std::size_t n = g.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const DirectedEdge& e : g.edges()) {
    const double w = dist(g.point(e.source), g.point(e.target), m);
    d[e.source][e.target] = std::min(d[e.source][e.target], w);
    d[e.target][e.source] = std::min(d[e.target][e.source], w);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Proper crossing of integer segments, including collinear overlap.
inline bool brute_cross_segments(const Point& a, const Point& b, const Point& c, const Point& d) {
  const auto o1 = brute_cross(a, b, c), o2 = brute_cross(a, b, d);
  const auto o3 = brute_cross(c, d, a), o4 = brute_cross(c, d, b);
  if (o1 == 0 && o2 == 0) {
    // Collinear: project on the dominant axis and test for positive overlap.
    const bool use_x = ix(a) != ix(b);
    auto key = [&](const Point& p) { return use_x ? ix(p) : iy(p); };
    const auto lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    const auto lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
    return std::min(hi1, hi2) > std::max(lo1, lo2);
  }
  return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

}  // namespace yao::test
