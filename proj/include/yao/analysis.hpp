#pragma once

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "yao/walk.hpp"

namespace yao {

/// Length reported for pairs with no connecting path.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

struct ShortestPath {
  double length = kUnreachable;
  std::optional<Walk> walk;
  bool reachable() const { return walk.has_value(); }
};

/// Dijkstra on the undirected view, edge weight dist(., ., m).
ShortestPath shortest_path(const YaoGraph& g, NodeId u, NodeId v, Metric m);

/// Distances from `source` to every node; kUnreachable where disconnected.
std::vector<double> shortest_distances(const YaoGraph& g, NodeId source, Metric m);

struct PairStretch {
  NodeId u;  // u < v
  NodeId v;
  double ratio;  // kUnreachable when disconnected
};

struct StretchReport {
  Metric metric = Metric::L2;
  std::vector<PairStretch> per_pair;
  double max_stretch = 1.0;
  std::optional<std::pair<NodeId, NodeId>> witness;
  std::size_t unreachable_pairs = 0;
};

/// All-pairs dilation. Fewer than two nodes gives max_stretch 1 and no witness.
StretchReport stretch_factor(const YaoGraph& g, Metric m);

struct EdgeCrossing {
  UndirectedEdge first;
  UndirectedEdge second;
};

/// Every pair of properly crossing undirected edges.
std::vector<EdgeCrossing> check_planarity(const YaoGraph& g);

/// Crossing pairs as directed graph edges (one orientation per edge).
std::vector<std::pair<DirectedEdge, DirectedEdge>> crossing_edge_pairs(const YaoGraph& g);

/// |bc| <= |ab| - |ac|/t(theta) for |ac| <= |ab| and angle bac <= theta.
/// Throws PreconditionError when the triple is inadmissible.
bool check_shrink_lemma(const Point& a, const Point& b, const Point& c, double theta);

/// For a nondegenerate convex quadrilateral abcd (vertices in order): the
/// diagonal sum strictly exceeds both opposite-side sums.
bool check_quad_proposition(const Point& a, const Point& b, const Point& c, const Point& d);

/// For crossing edges ab, cd: the shortest side of acbd is at most the longer
/// diagonal over sqrt(2), and strictly shorter than both diagonals.
bool check_quad_lemma(const PointSet& points, DirectedEdge ab, DirectedEdge cd);

/// Law-of-cosines trichotomy at b: the sign of |ac|^2 - |ab|^2 - |bc|^2
/// matches the sign of angle abc - pi/2 computed from the angle itself.
bool check_law_of_cosines(const Point& a, const Point& b, const Point& c);

/// Both edges point into the same quadrant index of their sources.
bool same_quadrant_pair(const PointSet& points, DirectedEdge ab, DirectedEdge cd);

}  // namespace yao
