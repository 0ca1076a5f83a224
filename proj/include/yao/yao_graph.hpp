#pragma once

#include <optional>
#include <span>
#include <vector>

#include "yao/geometry.hpp"

namespace yao {

enum class TiePolicy { LowestIndex, MostCounterclockwise };

const char* to_string(TiePolicy t);

struct DirectedEdge {
  NodeId source = 0;
  NodeId target = 0;

  auto operator<=>(const DirectedEdge&) const = default;
};

struct UndirectedEdge {
  NodeId u = 0;  // u < v
  NodeId v = 0;

  auto operator<=>(const UndirectedEdge&) const = default;
};

/// Directed Yao graph: per node, at most one outgoing edge per cone.
class YaoGraph {
 public:
  /// Wraps an explicit edge list. Validates ids and the one-edge-per-cone
  /// rule; does not check that targets are cone minimizers.
  YaoGraph(PointSet points, int k, Metric metric, TiePolicy tie,
           std::vector<DirectedEdge> edges);

  const PointSet& points() const { return points_; }
  const Point& point(NodeId id) const { return points_[id]; }
  std::size_t size() const { return points_.size(); }
  int k() const { return k_; }
  Metric metric() const { return metric_; }
  TiePolicy tie() const { return tie_; }

  /// Sorted by (source, target).
  std::span<const DirectedEdge> edges() const { return edges_; }

  /// Target of the edge leaving `u` in cone `cone` (0-based).
  std::optional<NodeId> out(NodeId u, int cone) const;
  /// Target of the edge leaving `u` in quadrant 1..4 (k = 4 only).
  std::optional<NodeId> out_quadrant(NodeId u, int quadrant) const;

  bool has_edge(NodeId source, NodeId target) const;
  bool adjacent(NodeId u, NodeId v) const {
    return has_edge(u, v) || has_edge(v, u);
  }
  /// Undirected neighbours, sorted and unique.
  std::span<const NodeId> neighbours(NodeId u) const { return adjacency_[u]; }

  bool operator==(const YaoGraph& other) const;

 private:
  PointSet points_;
  int k_;
  Metric metric_;
  TiePolicy tie_;
  std::vector<DirectedEdge> edges_;
  std::vector<std::optional<NodeId>> out_;  // size() * k
  std::vector<std::vector<NodeId>> adjacency_;
};

/// Naive O(n^2) construction: in each cone of each node keep a nearest
/// neighbour under `metric`, breaking ties per `tie`. L-infinity graphs are
/// only defined for k = 4 with counterclockwise tie breaking.
YaoGraph build_yao(const PointSet& points, int k, Metric metric, TiePolicy tie);

/// The candidate with the largest polar angle around `origin`. All
/// candidates must share `quadrant` and their L-infinity distance to origin.
Point most_ccw_among(const Point& origin, std::span<const Point> candidates,
                     int quadrant);

/// Edge directions dropped, duplicates merged; sorted.
std::vector<UndirectedEdge> undirected_view(const YaoGraph& g);

}  // namespace yao
