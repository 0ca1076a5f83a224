#pragma once

#include <optional>
#include <utility>

#include "yao/walk.hpp"

namespace yao {

/// Endpoints (x, y) of a shortest side of the quadrilateral a c b d formed by
/// crossing edges ab and cd, with x in {a, b} and y in {c, d}. Ties go to the
/// first side in the order ac, cb, bd, da.
std::pair<NodeId, NodeId> shortest_side(const PointSet& points, DirectedEdge ab,
                                        DirectedEdge cd);

/// Configuration label 1..7 of a crossing pair after rotating so that b lies
/// in the first quadrant of a: 1-4 when c is in Q1(a) (value = quadrant of d
/// around c), 5, 6, 7 when c is in Q2, Q3, Q4 of a.
int crossing_configuration(const PointSet& points, DirectedEdge ab, DirectedEdge cd);

/// Two walks leaving x and y that meet, with total length <= 3 sqrt(2)|xy| and
/// no hop longer than |xy|.
struct SidePaths {
  Walk from_x;
  Walk from_y;
  bool spliced = false;
};

SidePaths side_paths(const YaoGraph& g, DirectedEdge ab, DirectedEdge cd, NodeId x,
                     NodeId y);

struct CrossingPath {
  NodeId x;
  NodeId y;
  Walk walk;       // x to y
  int depth = 0;   // recursion levels below the top call
  int configuration = 0;
};

/// Recursive short path between the endpoints of a shortest side of two
/// crossing Y_4 edges: length <= 6/(sqrt(2)-1)|xy|, no hop longer than |xy|.
CrossingPath crossing_short_path(const YaoGraph& g, DirectedEdge ab, DirectedEdge cd);

/// p(x, y) for a given shortest side xy of crossing edges ab, cd; the single
/// node walk when x == y.
Walk side_short_path(const YaoGraph& g, DirectedEdge ab, DirectedEdge cd, NodeId x,
                     NodeId y);

/// Merges two intersecting walks into one walk from first.front() to
/// second.front(): through a shared node if any, otherwise around the first
/// crossing hop pair via crossing_short_path. nullopt if the walks are
/// disjoint.
std::optional<Walk> join_walks(const Walk& first, const Walk& second);

/// True iff the walks share a node or have properly crossing hops.
bool walks_intersect(const Walk& first, const Walk& second);

}  // namespace yao
