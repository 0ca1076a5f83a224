#include "yao/yao_graph.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "yao/error.hpp"

namespace yao {

const char* to_string(TiePolicy t) {
  return t == TiePolicy::LowestIndex ? "lowest_index" : "most_ccw";
}

YaoGraph::YaoGraph(PointSet points, int k, Metric metric, TiePolicy tie,
                   std::vector<DirectedEdge> edges)
    : points_(std::move(points)),
      k_(k),
      metric_(metric),
      tie_(tie),
      edges_(std::move(edges)),
      out_(points_.size() * static_cast<std::size_t>(std::max(k, 0))),
      adjacency_(points_.size()) {
  if (k_ < 1) throw ConfigError("cone count k must be at least 1");
  if (metric_ == Metric::Linf && (k_ != 4 || tie_ != TiePolicy::MostCounterclockwise)) {
    throw ConfigError(
        "unsupported configuration: the L-infinity Yao graph requires k = 4 "
        "and most_ccw tie breaking");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const DirectedEdge& e : edges_) {
    if (e.source >= size() || e.target >= size()) {
      throw InputError(fmt::format("edge ({}, {}) references a missing node", e.source, e.target));
    }
    if (e.source == e.target) {
      throw InputError(fmt::format("self loop at node {}", e.source));
    }
    int cone = cone_of(point(e.source), point(e.target), k_);
    auto& slot = out_[e.source * k_ + cone];
    if (slot) {
      throw InputError(fmt::format("node {} has two edges in cone {}", e.source, cone));
    }
    slot = e.target;
    adjacency_[e.source].push_back(e.target);
    adjacency_[e.target].push_back(e.source);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::optional<NodeId> YaoGraph::out(NodeId u, int cone) const {
  return out_[u * k_ + cone];
}

std::optional<NodeId> YaoGraph::out_quadrant(NodeId u, int quadrant) const {
  if (k_ != 4) throw PreconditionError("quadrant queries need a k = 4 graph");
  return out_[u * 4 + (quadrant - 1)];
}

bool YaoGraph::has_edge(NodeId source, NodeId target) const {
  return std::binary_search(edges_.begin(), edges_.end(), DirectedEdge{source, target});
}

bool YaoGraph::operator==(const YaoGraph& other) const {
  return k_ == other.k_ && metric_ == other.metric_ && tie_ == other.tie_ &&
         points_ == other.points_ && edges_ == other.edges_;
}

namespace {

// True iff candidate w should replace the current best v for source u.
bool prefer(const Point& u, const Point& w, const Point& v, Metric metric, TiePolicy tie) {
  int c = compare_dist(u, w, u, v, metric);
  if (c != 0) return c < 0;
  if (tie == TiePolicy::LowestIndex) return w.id < v.id;
  return polar_angle_less(u, v, w);
}

}  // namespace

YaoGraph build_yao(const PointSet& points, int k, Metric metric, TiePolicy tie) {
  if (points.empty()) throw PreconditionError("cannot build a Yao graph on an empty point set");
  if (k < 1) throw ConfigError("cone count k must be at least 1");
  if (metric == Metric::Linf && (k != 4 || tie != TiePolicy::MostCounterclockwise)) {
    throw ConfigError(
        "unsupported configuration: the L-infinity Yao graph requires k = 4 "
        "and most_ccw tie breaking");
  }
  std::vector<DirectedEdge> edges;
  std::vector<std::optional<NodeId>> best(k);
  for (const Point& u : points) {
    std::fill(best.begin(), best.end(), std::nullopt);
    for (const Point& w : points) {
      if (w.id == u.id) continue;
      int cone = cone_of(u, w, k);
      auto& slot = best[cone];
      if (!slot || prefer(u, w, points[*slot], metric, tie)) slot = w.id;
    }
    for (const auto& target : best) {
      if (target) edges.push_back({u.id, *target});
    }
  }
  return YaoGraph(points, k, metric, tie, std::move(edges));
}

Point most_ccw_among(const Point& origin, std::span<const Point> candidates, int quadrant) {
  if (candidates.empty()) throw PreconditionError("most_ccw_among: no candidates");
  const Point* best = &candidates.front();
  for (const Point& c : candidates) {
    if (quadrant_of(origin, c) != quadrant) {
      throw PreconditionError("most_ccw_among: candidate outside the quadrant");
    }
    if (compare_dist(origin, c, origin, candidates.front(), Metric::Linf) != 0) {
      throw PreconditionError("most_ccw_among: candidates are not equidistant");
    }
    if (polar_angle_less(origin, *best, c)) best = &c;
  }
  return *best;
}

std::vector<UndirectedEdge> undirected_view(const YaoGraph& g) {
  std::vector<UndirectedEdge> out;
  out.reserve(g.edges().size());
  for (const DirectedEdge& e : g.edges()) {
    out.push_back({std::min(e.source, e.target), std::max(e.source, e.target)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace yao
