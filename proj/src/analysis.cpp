#include "yao/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "exact.hpp"
#include "yao/bounds.hpp"
#include "yao/crossing.hpp"
#include "yao/error.hpp"

namespace yao {

namespace {

struct Search {
  std::vector<double> distance;
  std::vector<NodeId> parent;
};

Search dijkstra(const YaoGraph& g, NodeId source, Metric m, std::optional<NodeId> target) {
  const std::size_t n = g.size();
  Search s{std::vector<double>(n, kUnreachable), std::vector<NodeId>(n, n)};
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  s.distance[source] = 0.0;
  queue.push({0.0, source});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > s.distance[u]) continue;
    if (target && u == *target) break;
    for (NodeId v : g.neighbours(u)) {
      double nd = d + dist(g.point(u), g.point(v), m);
      if (nd < s.distance[v]) {
        s.distance[v] = nd;
        s.parent[v] = u;
        queue.push({nd, v});
      }
    }
  }
  return s;
}

}  // namespace

ShortestPath shortest_path(const YaoGraph& g, NodeId u, NodeId v, Metric m) {
  if (u >= g.size() || v >= g.size()) throw PreconditionError("shortest_path: node out of range");
  Search s = dijkstra(g, u, m, v);
  ShortestPath out;
  out.length = s.distance[v];
  if (out.length == kUnreachable) return out;
  std::vector<NodeId> nodes{v};
  while (nodes.back() != u) nodes.push_back(s.parent[nodes.back()]);
  std::reverse(nodes.begin(), nodes.end());
  out.walk = Walk::from_nodes(g, nodes);
  return out;
}

std::vector<double> shortest_distances(const YaoGraph& g, NodeId source, Metric m) {
  if (source >= g.size()) throw PreconditionError("shortest_distances: node out of range");
  return dijkstra(g, source, m, std::nullopt).distance;
}

StretchReport stretch_factor(const YaoGraph& g, Metric m) {
  StretchReport report;
  report.metric = m;
  const std::size_t n = g.size();
  report.per_pair.reserve(n > 1 ? n * (n - 1) / 2 : 0);
  for (NodeId u = 0; u < n; ++u) {
    const std::vector<double> d = dijkstra(g, u, m, std::nullopt).distance;
    for (NodeId v = u + 1; v < n; ++v) {
      double ratio = kUnreachable;
      if (d[v] != kUnreachable) {
        ratio = std::max(1.0, d[v] / dist(g.point(u), g.point(v), m));
      } else {
        ++report.unreachable_pairs;
      }
      report.per_pair.push_back({u, v, ratio});
      if (!report.witness || ratio > report.max_stretch) {
        report.max_stretch = ratio;
        report.witness = {{u, v}};
      }
    }
  }
  return report;
}

std::vector<EdgeCrossing> check_planarity(const YaoGraph& g) {
  const std::vector<UndirectedEdge> edges = undirected_view(g);
  std::vector<EdgeCrossing> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Segment s1{g.point(edges[i].u), g.point(edges[i].v)};
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (properly_cross(s1, {g.point(edges[j].u), g.point(edges[j].v)})) {
        out.push_back({edges[i], edges[j]});
      }
    }
  }
  return out;
}

std::vector<std::pair<DirectedEdge, DirectedEdge>> crossing_edge_pairs(const YaoGraph& g) {
  auto orient = [&g](UndirectedEdge e) {
    return g.has_edge(e.u, e.v) ? DirectedEdge{e.u, e.v} : DirectedEdge{e.v, e.u};
  };
  std::vector<std::pair<DirectedEdge, DirectedEdge>> out;
  for (const EdgeCrossing& c : check_planarity(g)) {
    out.emplace_back(orient(c.first), orient(c.second));
  }
  return out;
}

bool check_shrink_lemma(const Point& a, const Point& b, const Point& c, double theta) {
  const double t = theta_bound(theta);
  const long double ab = std::hypot(static_cast<long double>(b.x) - a.x,
                                    static_cast<long double>(b.y) - a.y);
  const long double ac = std::hypot(static_cast<long double>(c.x) - a.x,
                                    static_cast<long double>(c.y) - a.y);
  const long double bc = std::hypot(static_cast<long double>(c.x) - b.x,
                                    static_cast<long double>(c.y) - b.y);
  if (ab == 0.0L || ac == 0.0L) throw PreconditionError("shrink lemma needs a distinct from b and c");
  if (compare_dist(a, c, a, b, Metric::L2) > 0) throw PreconditionError("shrink lemma needs |ac| <= |ab|");
  const long double ux = static_cast<long double>(b.x) - a.x;
  const long double uy = static_cast<long double>(b.y) - a.y;
  const long double vx = static_cast<long double>(c.x) - a.x;
  const long double vy = static_cast<long double>(c.y) - a.y;
  const long double alpha = std::atan2(std::abs(ux * vy - uy * vx), ux * vx + uy * vy);
  if (alpha > static_cast<long double>(theta)) {
    throw PreconditionError("shrink lemma needs angle bac <= theta");
  }
  const long double rhs = ab - ac / t;
  return bc <= rhs + 1e-12L * ab;
}

bool check_quad_proposition(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(b, c, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(d, a, b);
  if (o1 == 0 || o1 != o2 || o2 != o3 || o3 != o4) {
    throw PreconditionError("quadrilateral is degenerate or not convex");
  }
  auto len = [](const Point& p, const Point& q) {
    return std::hypot(static_cast<long double>(p.x) - q.x, static_cast<long double>(p.y) - q.y);
  };
  const long double diagonals = len(a, c) + len(b, d);
  return diagonals > len(a, b) + len(c, d) && diagonals > len(b, c) + len(d, a);
}

bool check_quad_lemma(const PointSet& points, DirectedEdge ab, DirectedEdge cd) {
  const Point& a = points[ab.source];
  const Point& b = points[ab.target];
  const Point& c = points[cd.source];
  const Point& d = points[cd.target];
  if (!properly_cross({a, b}, {c, d})) throw PreconditionError("edges do not cross");
  auto [x, y] = shortest_side(points, ab, cd);
  const Point& px = points[x];
  const Point& py = points[y];
  const bool ab_longer = compare_dist(a, b, c, d, Metric::L2) >= 0;
  const Point& l1 = ab_longer ? a : c;
  const Point& l2 = ab_longer ? b : d;
  const bool ratio_ok = compare_sq_dist_scaled(px, py, 2, l1, l2, 1) <= 0;
  const bool strict_ok = compare_dist(px, py, a, b, Metric::L2) < 0 &&
                         compare_dist(px, py, c, d, Metric::L2) < 0;
  return ratio_ok && strict_ok;
}

bool check_law_of_cosines(const Point& a, const Point& b, const Point& c) {
  if (orientation(a, b, c) == 0) throw PreconditionError("triangle is degenerate");
  const int sides = detail::exact_eval(
      [&]<typename T>(std::type_identity<T>) {
        using detail::lift;
        auto sq = [](const Point& p, const Point& q) {
          T dx = lift<T>(p.x) - lift<T>(q.x);
          T dy = lift<T>(p.y) - lift<T>(q.y);
          return T(dx * dx + dy * dy);
        };
        return detail::sign<T>(sq(a, c) - sq(a, b) - sq(b, c));
      },
      a, b, c);
  const long double ux = static_cast<long double>(a.x) - b.x;
  const long double uy = static_cast<long double>(a.y) - b.y;
  const long double vx = static_cast<long double>(c.x) - b.x;
  const long double vy = static_cast<long double>(c.y) - b.y;
  const long double angle = std::atan2(std::abs(ux * vy - uy * vx), ux * vx + uy * vy);
  const long double right = std::numbers::pi_v<long double> / 2.0L;
  const int by_angle = (angle > right) - (angle < right);
  return sides == by_angle;
}

bool same_quadrant_pair(const PointSet& points, DirectedEdge ab, DirectedEdge cd) {
  return quadrant_of(points[ab.source], points[ab.target]) ==
         quadrant_of(points[cd.source], points[cd.target]);
}

}  // namespace yao
