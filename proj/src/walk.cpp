#include "yao/walk.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "yao/error.hpp"

namespace yao {

Walk::Walk(const YaoGraph& graph, NodeId start) : graph_(&graph), nodes_{start} {
  if (start >= graph.size()) {
    throw PreconditionError(fmt::format("node {} is not in the graph", start));
  }
}

Walk Walk::from_nodes(const YaoGraph& graph, std::span<const NodeId> nodes) {
  if (nodes.empty()) throw PreconditionError("a walk needs at least one node");
  Walk w(graph, nodes.front());
  for (std::size_t i = 1; i < nodes.size(); ++i) w.push(nodes[i]);
  return w;
}

DirectedEdge Walk::edge(std::size_t hop) const {
  NodeId u = nodes_[hop];
  NodeId v = nodes_[hop + 1];
  return forward_[hop] ? DirectedEdge{u, v} : DirectedEdge{v, u};
}

Segment Walk::segment(std::size_t hop) const {
  return {graph_->point(nodes_[hop]), graph_->point(nodes_[hop + 1])};
}

void Walk::push(NodeId next) {
  NodeId last = nodes_.back();
  if (graph_->has_edge(last, next)) {
    forward_.push_back(true);
  } else if (graph_->has_edge(next, last)) {
    forward_.push_back(false);
  } else {
    throw PreconditionError(fmt::format("no edge between {} and {}", last, next));
  }
  nodes_.push_back(next);
}

Walk& Walk::append(const Walk& tail) {
  if (tail.graph_ != graph_ || tail.front() != back()) {
    throw PreconditionError("walks do not meet");
  }
  nodes_.insert(nodes_.end(), tail.nodes_.begin() + 1, tail.nodes_.end());
  forward_.insert(forward_.end(), tail.forward_.begin(), tail.forward_.end());
  return *this;
}

Walk Walk::prefix(std::size_t last) const {
  Walk w = *this;
  w.nodes_.resize(last + 1);
  w.forward_.resize(last);
  return w;
}

Walk Walk::reversed() const {
  Walk w = *this;
  std::reverse(w.nodes_.begin(), w.nodes_.end());
  std::reverse(w.forward_.begin(), w.forward_.end());
  w.forward_.flip();
  return w;
}

std::optional<std::size_t> Walk::find(NodeId id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == id) return i;
  }
  return std::nullopt;
}

double Walk::hop_length(std::size_t hop, Metric m) const {
  return dist(graph_->point(nodes_[hop]), graph_->point(nodes_[hop + 1]), m);
}

double Walk::length(Metric m) const {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) total += hop_length(i, m);
  return total;
}

std::optional<std::size_t> Walk::longest_hop(Metric m) const {
  if (hops() == 0) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < hops(); ++i) {
    const auto& p = graph_->points();
    if (compare_dist(p[nodes_[i]], p[nodes_[i + 1]], p[nodes_[best]], p[nodes_[best + 1]],
                     m) > 0) {
      best = i;
    }
  }
  return best;
}

Walk concat(Walk head, const Walk& tail) {
  head.append(tail);
  return head;
}

}  // namespace yao
