#include "yao/paths.hpp"

#include <numbers>

#include <fmt/format.h>

#include "yao/error.hpp"

namespace yao {

namespace {

void require_quadrant_graph(const YaoGraph& g) {
  if (g.k() != 4) throw PreconditionError("quadrant paths need a k = 4 Yao graph");
}

void require_node(const YaoGraph& g, NodeId id) {
  if (id >= g.size()) throw PreconditionError(fmt::format("node {} is not in the graph", id));
}

}  // namespace

Walk quadrant_walk(const YaoGraph& g, NodeId a, int quadrant,
                   const std::function<bool(NodeId)>& stop) {
  require_quadrant_graph(g);
  require_node(g, a);
  if (quadrant < 1 || quadrant > 4) throw PreconditionError("quadrant must be in 1..4");
  Walk w(g, a);
  NodeId current = a;
  while (auto next = g.out_quadrant(current, quadrant)) {
    // quadrant_of throws on coincidence; membership is what makes each hop
    // strictly progress in the quadrant's direction.
    if (quadrant_of(g.point(current), g.point(*next)) != quadrant) {
      throw InvariantViolation("quadrant walk left its quadrant");
    }
    if (w.hops() >= g.size()) throw InvariantViolation("cycle detected");
    w.push(*next);
    current = *next;
    if (stop && stop(current)) break;
  }
  return w;
}

Walk quadrant_walk(const YaoGraph& g, NodeId a, int quadrant, std::optional<NodeId> stop) {
  if (!stop) return quadrant_walk(g, a, quadrant, std::function<bool(NodeId)>{});
  NodeId target = *stop;
  return quadrant_walk(g, a, quadrant, [target](NodeId id) { return id == target; });
}

Walk directed_path(const YaoGraph& g, NodeId a, NodeId b) {
  require_quadrant_graph(g);
  require_node(g, a);
  require_node(g, b);
  Walk w(g, a);
  const Point& pa = g.point(a);
  const Point& pb = g.point(b);
  const std::size_t guard = g.size() * g.size() + 1;
  NodeId current = a;
  while (current != b) {
    const Point& pc = g.point(current);
    auto next = g.out_quadrant(current, quadrant_of(pc, pb));
    if (!next) throw InvariantViolation("quadrant containing the target has no edge");
    const Point& pn = g.point(*next);
    if (compare_dist(pn, pb, pc, pb, Metric::Linf) > 0) {
      throw InvariantViolation("directed path moved away from its target");
    }
    if (compare_dist(pn, pb, pa, pb, Metric::Linf) > 0) {
      throw InvariantViolation("directed path left the square around its target");
    }
    if (w.hops() >= guard) throw InvariantViolation("directed path exceeded its hop guard");
    w.push(*next);
    current = *next;
  }
  return w;
}

Walk truncated_path(const YaoGraph& g, NodeId a, NodeId b) {
  require_quadrant_graph(g);
  require_node(g, a);
  require_node(g, b);
  Walk w(g, a);
  if (a == b) return w;
  const Point& pa = g.point(a);
  const Point& pb = g.point(b);
  const std::size_t guard = g.size() * g.size() + 1;
  NodeId current = a;
  while (true) {
    auto next = g.out_quadrant(current, quadrant_of(g.point(current), pb));
    if (!next) throw InvariantViolation("quadrant containing the target has no edge");
    if (w.hops() >= guard) throw InvariantViolation("truncated path exceeded its hop guard");
    w.push(*next);
    current = *next;
    if (!strictly_interior_tilted(pa, pb, g.point(current))) break;
  }
  if (g.metric() == Metric::L2) {
    for (std::size_t i = 0; i < w.hops(); ++i) {
      if (compare_dist(g.point(w.node(i)), g.point(w.node(i + 1)), pa, pb, Metric::L2) > 0) {
        throw InvariantViolation(
            fmt::format("truncated path {}->{} has a hop longer than its chord", a, b));
      }
    }
    if (!within_bound(w.length(Metric::L2), std::numbers::sqrt2 * dist(pa, pb, Metric::L2))) {
      throw InvariantViolation(
          fmt::format("truncated path {}->{} is longer than sqrt(2) times its chord", a, b));
    }
  }
  return w;
}

}  // namespace yao
