#pragma once

#include <optional>
#include <span>
#include <vector>

#include "yao/yao_graph.hpp"

namespace yao {

/// Relative slack used when comparing sums of square roots against closed-form
/// bounds. Everything that can be decided on squared integers is exact.
inline constexpr double kLengthSlack = 1e-12;

inline bool within_bound(double value, double bound) {
  return value <= bound * (1.0 + kLengthSlack);
}

/// A node sequence whose consecutive pairs are edges of `graph`, traversed
/// forwards or against their direction.
class Walk {
 public:
  Walk(const YaoGraph& graph, NodeId start);

  /// Throws PreconditionError if some consecutive pair is not an edge.
  static Walk from_nodes(const YaoGraph& graph, std::span<const NodeId> nodes);

  const YaoGraph& graph() const { return *graph_; }
  std::span<const NodeId> nodes() const { return nodes_; }
  NodeId node(std::size_t i) const { return nodes_[i]; }
  NodeId front() const { return nodes_.front(); }
  NodeId back() const { return nodes_.back(); }
  std::size_t size() const { return nodes_.size(); }
  std::size_t hops() const { return nodes_.size() - 1; }

  /// True iff hop i follows the graph edge nodes[i] -> nodes[i+1].
  bool forward(std::size_t hop) const { return forward_[hop]; }
  /// Hop i as the directed graph edge it traverses.
  DirectedEdge edge(std::size_t hop) const;
  Segment segment(std::size_t hop) const;

  void push(NodeId next);
  /// Appends `tail`, which must start where this walk ends.
  Walk& append(const Walk& tail);

  /// nodes[0..last], inclusive.
  Walk prefix(std::size_t last) const;
  Walk reversed() const;

  std::optional<std::size_t> find(NodeId id) const;
  bool contains(NodeId id) const { return find(id).has_value(); }

  double length(Metric m) const;
  double length() const { return length(graph_->metric()); }
  double hop_length(std::size_t hop, Metric m) const;
  /// Index of a longest hop; nullopt for single-node walks.
  std::optional<std::size_t> longest_hop(Metric m = Metric::L2) const;

  bool operator==(const Walk& other) const {
    return graph_ == other.graph_ && nodes_ == other.nodes_;
  }

 private:
  const YaoGraph* graph_;
  std::vector<NodeId> nodes_;
  std::vector<bool> forward_;
};

Walk concat(Walk head, const Walk& tail);

}  // namespace yao
