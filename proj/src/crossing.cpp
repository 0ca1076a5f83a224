#include "yao/crossing.hpp"

#include <array>
#include <numbers>
#include <unordered_map>

#include <fmt/format.h>

#include "yao/error.hpp"
#include "yao/paths.hpp"

namespace yao {

namespace {

constexpr int kMaxDepth = 256;
constexpr double kPathCrossFactor = 3.0 * std::numbers::sqrt2;
constexpr double kRecrossFactor = 6.0 / (std::numbers::sqrt2 - 1.0);

struct Meeting {
  std::optional<std::pair<std::size_t, std::size_t>> shared;    // node indices
  std::optional<std::pair<std::size_t, std::size_t>> crossing;  // hop indices
  bool found() const { return shared || crossing; }
};

std::vector<double> prefix_lengths(const Walk& w) {
  std::vector<double> out(w.size(), 0.0);
  for (std::size_t i = 0; i < w.hops(); ++i) out[i + 1] = out[i] + w.hop_length(i, Metric::L2);
  return out;
}

Meeting find_meeting(const Walk& first, const Walk& second) {
  Meeting m;
  std::unordered_map<NodeId, std::size_t> first_seen;
  for (std::size_t j = 0; j < second.size(); ++j) first_seen.try_emplace(second.node(j), j);
  const auto lf = prefix_lengths(first);
  const auto ls = prefix_lengths(second);
  double best = 0.0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    auto it = first_seen.find(first.node(i));
    if (it == first_seen.end()) continue;
    double cost = lf[i] + ls[it->second];
    if (!m.shared || cost < best) {
      m.shared = {{i, it->second}};
      best = cost;
    }
  }
  if (m.shared) return m;
  for (std::size_t i = 0; i < first.hops(); ++i) {
    const Segment s1 = first.segment(i);
    for (std::size_t j = 0; j < second.hops(); ++j) {
      if (properly_cross(s1, second.segment(j))) {
        m.crossing = {{i, j}};
        return m;
      }
    }
  }
  return m;
}

std::optional<std::size_t> first_hop_crossing(const Walk& w, const Segment& s) {
  for (std::size_t i = 0; i < w.hops(); ++i) {
    if (properly_cross(w.segment(i), s)) return i;
  }
  return std::nullopt;
}

Segment segment_of(const YaoGraph& g, DirectedEdge e) {
  return {g.point(e.source), g.point(e.target)};
}

bool hops_within(const Walk& w, const Point& x, const Point& y) {
  const YaoGraph& g = w.graph();
  for (std::size_t i = 0; i < w.hops(); ++i) {
    if (compare_dist(g.point(w.node(i)), g.point(w.node(i + 1)), x, y, Metric::L2) > 0) {
      return false;
    }
  }
  return true;
}

bool on_edge(NodeId v, DirectedEdge e) { return v == e.source || v == e.target; }

Walk side_short_path_impl(const YaoGraph& g, DirectedEdge ab, DirectedEdge cd, NodeId x,
                          NodeId y, int depth, int& max_depth) {
  max_depth = std::max(max_depth, depth);
  if (x == y) return Walk(g, x);
  if (depth > kMaxDepth) throw InvariantViolation("recursion bound violated");

  const Point& px = g.point(x);
  const Point& py = g.point(y);
  SidePaths sides = side_paths(g, ab, cd, x, y);
  const Meeting meet = find_meeting(sides.from_x, sides.from_y);

  Walk result(g, x);
  if (meet.shared) {
    auto [i, j] = *meet.shared;
    result = concat(sides.from_x.prefix(i), sides.from_y.prefix(j).reversed());
  } else if (meet.crossing) {
    auto [i, j] = *meet.crossing;
    const DirectedEdge e1 = sides.from_x.edge(i);
    const DirectedEdge e2 = sides.from_y.edge(j);
    auto [x2, y2] = shortest_side(g.points(), e1, e2);
    if (compare_sq_dist_scaled(g.point(x2), g.point(y2), 2, px, py, 1) > 0) {
      throw InvariantViolation("recursion bound violated: shortest side did not shrink");
    }
    Walk inner = side_short_path_impl(g, e1, e2, x2, y2, depth + 1, max_depth);
    std::size_t ix = sides.from_x.node(i) == x2 ? i : i + 1;
    std::size_t iy = sides.from_y.node(j) == y2 ? j : j + 1;
    result = concat(concat(sides.from_x.prefix(ix), inner), sides.from_y.prefix(iy).reversed());
  } else {
    throw InvariantViolation("side paths do not meet");
  }

  if (result.front() != x || result.back() != y) {
    throw InvariantViolation("crossing path has wrong endpoints");
  }
  if (!hops_within(result, px, py)) {
    throw InvariantViolation("crossing path has a hop longer than its shortest side");
  }
  if (!within_bound(result.length(Metric::L2), kRecrossFactor * dist(px, py, Metric::L2))) {
    throw InvariantViolation("crossing path exceeds 6/(sqrt(2)-1) times its shortest side");
  }
  return result;
}

void require_crossing_pair(const YaoGraph& g, DirectedEdge ab, DirectedEdge cd) {
  if (g.k() != 4 || g.metric() != Metric::L2) {
    throw PreconditionError("crossing paths need the L2 Yao graph with k = 4");
  }
  if (!g.has_edge(ab.source, ab.target) || !g.has_edge(cd.source, cd.target)) {
    throw PreconditionError("crossing path arguments must be directed graph edges");
  }
  const std::array<NodeId, 4> ids{ab.source, ab.target, cd.source, cd.target};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (ids[i] == ids[j]) throw PreconditionError("crossing edges must have distinct endpoints");
    }
  }
  if (!properly_cross(segment_of(g, ab), segment_of(g, cd))) {
    throw PreconditionError("edges do not cross");
  }
}

}  // namespace

std::pair<NodeId, NodeId> shortest_side(const PointSet& points, DirectedEdge ab,
                                        DirectedEdge cd) {
  const std::array<std::pair<NodeId, NodeId>, 4> sides{{
      {ab.source, cd.source},  // ac
      {ab.target, cd.source},  // cb
      {ab.target, cd.target},  // bd
      {ab.source, cd.target},  // da
  }};
  std::size_t best = 0;
  for (std::size_t i = 1; i < sides.size(); ++i) {
    if (compare_dist(points[sides[i].first], points[sides[i].second], points[sides[best].first],
                     points[sides[best].second], Metric::L2) < 0) {
      best = i;
    }
  }
  return sides[best];
}

int crossing_configuration(const PointSet& points, DirectedEdge ab, DirectedEdge cd) {
  const Point& a = points[ab.source];
  const Point& b = points[ab.target];
  const Point& c = points[cd.source];
  const Point& d = points[cd.target];
  // Rotating by a quarter turn shifts half-open quadrant labels by one.
  const int turn = quadrant_of(a, b) - 1;
  auto rotated = [turn](int q) { return ((q - 1 - turn) % 4 + 4) % 4 + 1; };
  const int qc = rotated(quadrant_of(a, c));
  if (qc != 1) return qc + 3;
  return rotated(quadrant_of(c, d));
}

SidePaths side_paths(const YaoGraph& g, DirectedEdge ab, DirectedEdge cd, NodeId x,
                     NodeId y) {
  if (!on_edge(x, ab) || !on_edge(y, cd)) {
    throw PreconditionError("side endpoints must come from the two crossing edges");
  }
  const Point& px = g.point(x);
  const Point& py = g.point(y);
  const double side = dist(px, py, Metric::L2);
  const Segment seg_x = segment_of(g, ab);
  const Segment seg_y = segment_of(g, cd);

  auto acceptable = [&](const Walk& wx, const Walk& wy) {
    return hops_within(wx, px, py) && hops_within(wy, px, py) &&
           within_bound(wx.length(Metric::L2) + wy.length(Metric::L2), kPathCrossFactor * side) &&
           walks_intersect(wx, wy);
  };

  Walk to_y = truncated_path(g, x, y);
  Walk to_x = truncated_path(g, y, x);
  if (acceptable(to_y, to_x)) return {to_y, to_x, false};

  // A truncated path that crosses the opposite edge is cut after the
  // crossing hop and re-aimed from that hop's head w.
  if (auto h = first_hop_crossing(to_y, seg_y)) {
    NodeId w = to_y.node(*h + 1);
    Walk wx = concat(to_y.prefix(*h + 1), truncated_path(g, w, y));
    Walk wy = truncated_path(g, y, w);
    if (acceptable(wx, wy)) return {wx, wy, true};
  }
  if (auto h = first_hop_crossing(to_x, seg_x)) {
    NodeId w = to_x.node(*h + 1);
    Walk wy = concat(to_x.prefix(*h + 1), truncated_path(g, w, x));
    Walk wx = truncated_path(g, x, w);
    if (acceptable(wx, wy)) return {wx, wy, true};
  }
  throw InvariantViolation(fmt::format(
      "no admissible side paths for crossing edges {}->{} and {}->{} (side {}-{})", ab.source,
      ab.target, cd.source, cd.target, x, y));
}

Walk side_short_path(const YaoGraph& g, DirectedEdge ab, DirectedEdge cd, NodeId x, NodeId y) {
  int depth = 0;
  if (x == y) return Walk(g, x);
  require_crossing_pair(g, ab, cd);
  return side_short_path_impl(g, ab, cd, x, y, 0, depth);
}

CrossingPath crossing_short_path(const YaoGraph& g, DirectedEdge ab, DirectedEdge cd) {
  require_crossing_pair(g, ab, cd);
  auto [x, y] = shortest_side(g.points(), ab, cd);
  int depth = 0;
  Walk walk = side_short_path_impl(g, ab, cd, x, y, 0, depth);
  return CrossingPath{x, y, std::move(walk), depth, crossing_configuration(g.points(), ab, cd)};
}

bool walks_intersect(const Walk& first, const Walk& second) {
  return find_meeting(first, second).found();
}

std::optional<Walk> join_walks(const Walk& first, const Walk& second) {
  if (&first.graph() != &second.graph()) throw PreconditionError("walks live in different graphs");
  const Meeting meet = find_meeting(first, second);
  if (meet.shared) {
    auto [i, j] = *meet.shared;
    return concat(first.prefix(i), second.prefix(j).reversed());
  }
  if (!meet.crossing) return std::nullopt;
  auto [i, j] = *meet.crossing;
  CrossingPath inner = crossing_short_path(first.graph(), first.edge(i), second.edge(j));
  std::size_t ix = first.node(i) == inner.x ? i : i + 1;
  std::size_t iy = second.node(j) == inner.y ? j : j + 1;
  return concat(concat(first.prefix(ix), inner.walk), second.prefix(iy).reversed());
}

}  // namespace yao
