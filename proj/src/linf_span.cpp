#include "yao/linf_span.hpp"

#include <numbers>

#include <fmt/format.h>

#include "yao/crossing.hpp"
#include "yao/error.hpp"
#include "yao/paths.hpp"

namespace yao {

const char* to_string(LinfSpanCase c) {
  switch (c) {
    case LinfSpanCase::DirectEdge: return "direct_edge";
    case LinfSpanCase::MeetsAc: return "meets_ac";
    case LinfSpanCase::ViaBPrime: return "via_b_prime";
    case LinfSpanCase::ViaCToBPrime: return "via_c_to_b_prime";
    case LinfSpanCase::ReachesA: return "reaches_a";
    case LinfSpanCase::CrossesAb: return "crosses_ab";
  }
  return "unknown";
}

double case_bound_factor(LinfSpanCase c) {
  constexpr double s = std::numbers::sqrt2;
  switch (c) {
    case LinfSpanCase::DirectEdge: return 1.0;
    case LinfSpanCase::MeetsAc: return 3.0 * (3.0 + 2.0 * s);
    case LinfSpanCase::ViaBPrime: return 21.0 + 12.0 * s;
    case LinfSpanCase::ViaCToBPrime: return 21.0 + 14.0 * s;
    case LinfSpanCase::ReachesA:
    case LinfSpanCase::CrossesAb: return 29.0 + 23.0 * s;
  }
  return 29.0 + 23.0 * s;
}

namespace {

Walk edge_walk(const YaoGraph& g, NodeId from, NodeId to) {
  Walk w(g, from);
  w.push(to);
  return w;
}

Walk require_join(const Walk& first, const Walk& second, const char* what) {
  auto joined = join_walks(first, second);
  if (!joined) throw InvariantViolation(fmt::format("expected intersection missing: {}", what));
  return *joined;
}

LinfSpan construct(const YaoGraph& g, NodeId a, NodeId b) {
  if (g.adjacent(a, b)) return {edge_walk(g, a, b), LinfSpanCase::DirectEdge};

  const Point& pa = g.point(a);
  const Point& pb = g.point(b);
  auto c_opt = g.out_quadrant(a, quadrant_of(pa, pb));
  if (!c_opt) throw InvariantViolation("nonempty quadrant without a Y_4 edge");
  const NodeId c = *c_opt;

  const Walk ac = edge_walk(g, a, c);
  const Walk from_b = truncated_path(g, b, c);  // b ... b'
  if (walks_intersect(ac, from_b)) {
    return {require_join(ac, from_b, "P_R(b->c) and ac"), LinfSpanCase::MeetsAc};
  }

  const NodeId b_prime = from_b.back();
  const Walk to_a = truncated_path(g, b_prime, a);  // b' ... toward a
  const Segment ab{pa, pb};

  std::optional<std::size_t> crossing_hop;
  for (std::size_t i = 0; i < to_a.hops(); ++i) {
    if (properly_cross(to_a.segment(i), ab)) {
      crossing_hop = i;
      break;
    }
  }

  if (to_a.back() == a) {
    return {concat(from_b, to_a).reversed(), LinfSpanCase::ReachesA};
  }

  if (!crossing_hop) {
    if (walks_intersect(to_a, ac)) {
      Walk head = require_join(ac, to_a, "P_R(b'->a) and ac");  // a ... b'
      return {concat(head, from_b.reversed()), LinfSpanCase::ViaBPrime};
    }
    const Walk from_c = truncated_path(g, c, b_prime);
    const Walk loop = concat(from_b, to_a);  // b ... b' ... toward a
    Walk tail = require_join(from_c, loop, "P_R(c->b') and P_R(b->c) + P_R(b'->a)");  // c ... b
    return {concat(ac, tail), LinfSpanCase::ViaCToBPrime};
  }

  // Hop d -> e of P_R(b' -> a) crosses ab; reach e from a, then retrace.
  const std::size_t e_index = *crossing_hop + 1;
  const NodeId d = to_a.node(*crossing_hop);
  const NodeId e = to_a.node(e_index);
  const Walk from_a = truncated_path(g, a, e);
  const Walk from_e = truncated_path(g, e, a);
  auto head = join_walks(from_a, from_e);
  if (!head) head = join_walks(from_a, edge_walk(g, e, d));
  if (!head) throw InvariantViolation("expected intersection missing: P_R(a->e) and P_R(e->a) + de");
  Walk walk = concat(concat(*head, to_a.prefix(e_index).reversed()), from_b.reversed());
  return {std::move(walk), LinfSpanCase::CrossesAb};
}

}  // namespace

LinfSpan linf_edge_short_path(const YaoGraph& y4, const YaoGraph& y4_inf, NodeId a, NodeId b) {
  if (y4.k() != 4 || y4.metric() != Metric::L2) {
    throw PreconditionError("first graph must be the L2 Yao graph with k = 4");
  }
  if (y4_inf.k() != 4 || y4_inf.metric() != Metric::Linf) {
    throw PreconditionError("second graph must be the L-infinity Yao graph");
  }
  if (!(y4.points() == y4_inf.points())) {
    throw PreconditionError("graphs are built on different point sets");
  }
  if (a >= y4.size() || b >= y4.size() || !y4_inf.has_edge(a, b)) {
    throw PreconditionError(fmt::format("{}->{} is not an L-infinity Yao edge", a, b));
  }

  LinfSpan span = construct(y4, a, b);
  if (span.walk.front() != a || span.walk.back() != b) {
    throw InvariantViolation("spanning walk has wrong endpoints");
  }
  const double chord = dist(y4.point(a), y4.point(b), Metric::L2);
  if (!within_bound(span.walk.length(Metric::L2), (29.0 + 23.0 * std::numbers::sqrt2) * chord)) {
    throw InvariantViolation(
        fmt::format("spanning walk for {}->{} exceeds (29 + 23 sqrt(2))|ab|", a, b));
  }
  return span;
}

}  // namespace yao
