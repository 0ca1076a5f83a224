#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "yao/analysis.hpp"
#include "yao/error.hpp"
#include "yao/yao_graph.hpp"

namespace yao {
namespace {

using test::Coords;
using test::edge_set;

std::vector<DirectedEdge> edges_of(const YaoGraph& g) {
  return {g.edges().begin(), g.edges().end()};
}

TEST(BuildYao, TwoPoints) {
  const YaoGraph g = build_yao(PointSet({{0, 0}, {5, 1}}), 4, Metric::L2, TiePolicy::LowestIndex);
  EXPECT_EQ(edges_of(g), (std::vector<DirectedEdge>{{0, 1}, {1, 0}}));
}

TEST(BuildYao, UnitSquareHasOnlySides) {
  const YaoGraph g = build_yao(PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 4, Metric::L2,
                               TiePolicy::LowestIndex);
  EXPECT_EQ(g.edges().size(), 8u);
  for (const DirectedEdge& e : g.edges()) {
    EXPECT_EQ(dist(g.point(e.source), g.point(e.target), Metric::L2), 1.0);
  }
  EXPECT_EQ(undirected_view(g).size(), 4u);
}

TEST(BuildYao, NearerCandidateWinsTheQuadrant) {
  const YaoGraph g = build_yao(PointSet({{0, 0}, {4, 0}, {4, 1}}), 4, Metric::L2,
                               TiePolicy::LowestIndex);
  EXPECT_EQ(g.out_quadrant(0, 1), 1u);
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(BuildYao, RejectsUnsupportedConfigurations) {
  const PointSet p({{0, 0}, {1, 1}});
  EXPECT_THROW(build_yao(p, 6, Metric::Linf, TiePolicy::MostCounterclockwise), ConfigError);
  EXPECT_THROW(build_yao(p, 4, Metric::Linf, TiePolicy::LowestIndex), ConfigError);
  EXPECT_THROW(build_yao(p, 0, Metric::L2, TiePolicy::LowestIndex), ConfigError);
  try {
    build_yao(p, 6, Metric::Linf, TiePolicy::MostCounterclockwise);
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported configuration"), std::string::npos);
  }
}

TEST(BuildYao, SinglePointHasNoEdges) {
  const YaoGraph g = build_yao(PointSet({{3, 3}}), 4, Metric::L2, TiePolicy::LowestIndex);
  EXPECT_TRUE(g.edges().empty());
}

TEST(BuildYao, MatchesBruteForceY4) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    // Small coordinate ranges produce plenty of exact ties.
    const PointSet p = test::random_points(rng, 5 + trial % 30, trial % 2 ? 8 : 1000);
    EXPECT_EQ(edge_set(build_yao(p, 4, Metric::L2, TiePolicy::LowestIndex)),
              test::brute_y4(p, Metric::L2, TiePolicy::LowestIndex));
    EXPECT_EQ(edge_set(build_yao(p, 4, Metric::Linf, TiePolicy::MostCounterclockwise)),
              test::brute_y4(p, Metric::Linf, TiePolicy::MostCounterclockwise));
    EXPECT_EQ(edge_set(build_yao(p, 4, Metric::L2, TiePolicy::MostCounterclockwise)),
              test::brute_y4(p, Metric::L2, TiePolicy::MostCounterclockwise));
  }
}

TEST(BuildYao, ConeMinimalityForGeneralK) {
  std::mt19937_64 rng(22);
  for (int k : {1, 3, 5, 6, 7, 8, 9, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      const PointSet p = test::random_points(rng, 30, 200);
      const YaoGraph g = build_yao(p, k, Metric::L2, TiePolicy::LowestIndex);
      for (const Point& u : p) {
        std::vector<int> nonempty(k, 0);
        for (const Point& w : p) {
          if (w.id != u.id) nonempty[cone_of(u, w, k)] = 1;
        }
        for (int c = 0; c < k; ++c) {
          const auto v = g.out(u.id, c);
          ASSERT_EQ(v.has_value(), nonempty[c] == 1);
          if (!v) continue;
          EXPECT_EQ(cone_of(u, p[*v], k), c);
          for (const Point& w : p) {
            if (w.id == u.id || cone_of(u, w, k) != c) continue;
            const int cmp = compare_dist(u, p[*v], u, w, Metric::L2);
            EXPECT_TRUE(cmp < 0 || (cmp == 0 && *v <= w.id));
          }
        }
      }
    }
  }
}

TEST(BuildYao, OutdegreeCountsNonemptyQuadrants) {
  std::mt19937_64 rng(23);
  const PointSet p = test::random_points(rng, 60, 30);
  const YaoGraph g = build_yao(p, 4, Metric::L2, TiePolicy::LowestIndex);
  for (const Point& u : p) {
    std::set<int> quads;
    for (const Point& w : p) {
      if (w.id != u.id) quads.insert(quadrant_of(u, w));
    }
    int out = 0;
    for (int q = 1; q <= 4; ++q) out += g.out_quadrant(u.id, q).has_value();
    EXPECT_EQ(out, static_cast<int>(quads.size()));
  }
}

TEST(BuildYao, Deterministic) {
  std::mt19937_64 rng(24);
  const PointSet p = test::random_points(rng, 80, 50);
  EXPECT_EQ(build_yao(p, 4, Metric::Linf, TiePolicy::MostCounterclockwise),
            build_yao(p, 4, Metric::Linf, TiePolicy::MostCounterclockwise));
  EXPECT_EQ(build_yao(p, 7, Metric::L2, TiePolicy::LowestIndex),
            build_yao(p, 7, Metric::L2, TiePolicy::LowestIndex));
}

TEST(BuildYao, TiePolicyIrrelevantWithoutLinfTies) {
  std::mt19937_64 rng(25);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const PointSet p = test::random_points(rng, 40, 1000000);
    bool tie = false;
    for (const Point& u : p) {
      std::set<std::pair<int, double>> seen;
      for (const Point& w : p) {
        if (w.id != u.id && !seen.insert({quadrant_of(u, w), dist(u, w, Metric::Linf)}).second) {
          tie = true;
        }
      }
    }
    if (tie) continue;
    ++checked;
    EXPECT_EQ(edge_set(build_yao(p, 4, Metric::Linf, TiePolicy::MostCounterclockwise)),
              test::brute_y4(p, Metric::Linf, TiePolicy::LowestIndex));
  }
  EXPECT_GT(checked, 40);
}

TEST(MostCcwAmong, Examples) {
  const Point o{0, 0, 0};
  const std::vector<Point> q1{{2, 1, 1}, {2, 2, 2}, {1, 2, 3}};
  EXPECT_EQ(most_ccw_among(o, q1, 1).id, 3u);
  const std::vector<Point> one{{2, 1, 1}};
  EXPECT_EQ(most_ccw_among(o, one, 1).id, 1u);
  const std::vector<Point> q2{{-1, 2, 1}, {-2, 2, 2}};
  EXPECT_EQ(most_ccw_among(o, q2, 2).id, 2u);
  EXPECT_THROW(most_ccw_among(o, std::vector<Point>{}, 1), PreconditionError);
  const std::vector<Point> mixed{{2, 1, 1}, {3, 0, 2}};
  EXPECT_THROW(most_ccw_among(o, mixed, 1), PreconditionError);
}

TEST(UndirectedView, MergesBothDirections) {
  const PointSet p({{0, 0}, {1, 0}});
  const YaoGraph both(p, 4, Metric::L2, TiePolicy::LowestIndex, {{0, 1}, {1, 0}});
  EXPECT_EQ(undirected_view(both), (std::vector<UndirectedEdge>{{0, 1}}));
  const YaoGraph one(p, 4, Metric::L2, TiePolicy::LowestIndex, {{1, 0}});
  EXPECT_EQ(undirected_view(one), (std::vector<UndirectedEdge>{{0, 1}}));
}

TEST(YaoGraph, ValidatesExplicitEdges) {
  const PointSet p({{0, 0}, {1, 0}, {2, 0}});
  EXPECT_THROW(YaoGraph(p, 4, Metric::L2, TiePolicy::LowestIndex, {{0, 3}}), InputError);
  EXPECT_THROW(YaoGraph(p, 4, Metric::L2, TiePolicy::LowestIndex, {{1, 1}}), InputError);
  // Both targets sit in Q1 of node 0.
  EXPECT_THROW(YaoGraph(p, 4, Metric::L2, TiePolicy::LowestIndex, {{0, 1}, {0, 2}}),
               InputError);
}

TEST(Y4Inf, OpenSquaresOfEdgesAreEmpty) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const PointSet p = test::random_points(rng, 40, trial % 2 ? 15 : 100000);
    const YaoGraph g = build_yao(p, 4, Metric::Linf, TiePolicy::MostCounterclockwise);
    for (const DirectedEdge& e : g.edges()) {
      for (const Point& w : p) EXPECT_FALSE(in_open_square(p[e.source], p[e.target], w));
    }
  }
}

TEST(Y4Inf, PlanarWithoutLatticeTies) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 100; ++trial) {
    const PointSet p = test::random_points(rng, 60, 1000000);
    EXPECT_TRUE(check_planarity(build_yao(p, 4, Metric::Linf, TiePolicy::MostCounterclockwise)).empty());
  }
}

TEST(Y4Inf, UnitSquareDiagonalsCrossUnderHalfOpenQuadrants) {
  // (1,0) is in Q1 of (0,0) and loses the tie to (1,1); (0,1) sits on the
  // ray owned by Q2, so the tie rule never compares it with (1,1).
  const YaoGraph g = build_yao(PointSet({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 4, Metric::Linf,
                               TiePolicy::MostCounterclockwise);
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(check_planarity(g).size(), 1u);
}

}  // namespace
}  // namespace yao
