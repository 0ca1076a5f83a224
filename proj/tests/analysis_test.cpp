#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "yao/analysis.hpp"
#include "yao/bounds.hpp"
#include "yao/error.hpp"

namespace yao {
namespace {

Point pt(double x, double y, NodeId id = 0) { return Point{x, y, id}; }

YaoGraph y4(const PointSet& p) { return build_yao(p, 4, Metric::L2, TiePolicy::LowestIndex); }

TEST(ShortestPath, UnitSquareOppositeCorners) {
  const YaoGraph g = y4(PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const ShortestPath sp = shortest_path(g, 0, 2, Metric::L2);
  EXPECT_DOUBLE_EQ(sp.length, 2.0);
  ASSERT_TRUE(sp.reachable());
  EXPECT_EQ(sp.walk->front(), 0u);
  EXPECT_EQ(sp.walk->back(), 2u);
  EXPECT_EQ(sp.walk->hops(), 2u);
  EXPECT_EQ(shortest_path(g, 1, 1, Metric::L2).length, 0.0);
}

TEST(ShortestPath, DisconnectedPairIsUnreachable) {
  const PointSet p({{0, 0}, {1, 0}, {5, 5}});
  const YaoGraph g(p, 4, Metric::L2, TiePolicy::LowestIndex, {{0, 1}});
  const ShortestPath sp = shortest_path(g, 0, 2, Metric::L2);
  EXPECT_FALSE(sp.reachable());
  EXPECT_EQ(sp.length, kUnreachable);
  const StretchReport r = stretch_factor(g, Metric::L2);
  EXPECT_EQ(r.unreachable_pairs, 2u);
}

TEST(ShortestPath, MatchesFloydWarshall) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const PointSet p = test::random_points(rng, 5 + trial, trial % 2 ? 20 : 10000);
    for (const YaoGraph& g : {y4(p), build_yao(p, 4, Metric::Linf, TiePolicy::MostCounterclockwise),
                              build_yao(p, 7, Metric::L2, TiePolicy::LowestIndex)}) {
      for (Metric m : {Metric::L2, Metric::Linf}) {
        const auto fw = test::floyd_warshall(g, m);
        for (NodeId s = 0; s < p.size(); ++s) {
          const auto d = shortest_distances(g, s, m);
          for (NodeId t = 0; t < p.size(); ++t) {
            EXPECT_NEAR(d[t], fw[s][t], 1e-9 * (1 + fw[s][t]));
          }
          const NodeId t = (s * 7 + 3) % p.size();
          const ShortestPath sp = shortest_path(g, s, t, m);
          EXPECT_NEAR(sp.length, fw[s][t], 1e-9 * (1 + fw[s][t]));
          EXPECT_NEAR(sp.walk->length(m), sp.length, 1e-9 * (1 + sp.length));
        }
      }
    }
  }
}

TEST(StretchFactor, CollinearChainIsOne) {
  const YaoGraph g = y4(PointSet({{0, 0}, {1, 1}, {2, 2}, {3, 3}}));
  const StretchReport r = stretch_factor(g, Metric::L2);
  EXPECT_DOUBLE_EQ(r.max_stretch, 1.0);
  EXPECT_EQ(r.per_pair.size(), 6u);
}

TEST(StretchFactor, TinyInputs) {
  const StretchReport r = stretch_factor(y4(PointSet({{0, 0}})), Metric::L2);
  EXPECT_EQ(r.max_stretch, 1.0);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(StretchFactor, WitnessAttainsTheMaximum) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const PointSet p = test::random_points(rng, 30, 1000);
    const YaoGraph g = y4(p);
    const StretchReport r = stretch_factor(g, Metric::L2);
    const auto fw = test::floyd_warshall(g, Metric::L2);
    double worst = 1.0;
    for (NodeId u = 0; u < p.size(); ++u) {
      for (NodeId v = u + 1; v < p.size(); ++v) worst = std::max(worst, fw[u][v] / dist(p[u], p[v], Metric::L2));
    }
    EXPECT_NEAR(r.max_stretch, worst, 1e-12 * worst);
    ASSERT_TRUE(r.witness);
    const auto [u, v] = *r.witness;
    EXPECT_NEAR(fw[u][v] / dist(p[u], p[v], Metric::L2), r.max_stretch, 1e-12 * worst);
    for (const PairStretch& s : r.per_pair) {
      EXPECT_LT(s.u, s.v);
      EXPECT_GE(s.ratio, 1.0);
    }
  }
}

TEST(StretchFactor, NormBridgeBetweenMetrics) {
  // |sp|_2 <= sqrt(2)|sp|_inf <= 8 sqrt(2)|uv|_inf <= 8 sqrt(2)|uv|_2 on Y_4^inf.
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const YaoGraph g = build_yao(test::random_points(rng, 40, 100000), 4, Metric::Linf,
                                 TiePolicy::MostCounterclockwise);
    const double inf = stretch_factor(g, Metric::Linf).max_stretch;
    const double l2 = stretch_factor(g, Metric::L2).max_stretch;
    EXPECT_LE(inf, bounds::kY4Inf);
    EXPECT_LE(l2, std::numbers::sqrt2 * inf * (1 + 1e-12));
  }
}

TEST(Planarity, MatchesBruteForce) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 40; ++trial) {
    const PointSet p = test::random_points(rng, 10 + trial, trial % 2 ? 12 : 100000);
    const YaoGraph g = y4(p);
    const auto und = undirected_view(g);
    std::size_t brute = 0;
    for (std::size_t i = 0; i < und.size(); ++i) {
      for (std::size_t j = i + 1; j < und.size(); ++j) {
        brute += test::brute_cross_segments(p[und[i].u], p[und[i].v], p[und[j].u], p[und[j].v]);
      }
    }
    EXPECT_EQ(check_planarity(g).size(), brute);
    EXPECT_EQ(crossing_edge_pairs(g).size(), brute);
  }
}

TEST(Planarity, SquareWithDiagonals) {
  const PointSet p({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  const YaoGraph g(p, 4, Metric::L2, TiePolicy::LowestIndex, {{0, 2}, {1, 3}, {0, 3}});
  const auto c = check_planarity(g);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].first, (UndirectedEdge{0, 2}));
  EXPECT_EQ(c[0].second, (UndirectedEdge{1, 3}));
}

TEST(ShrinkLemma, HoldsOnRejectionSampledTriples) {
  std::mt19937_64 rng(65);
  std::uniform_real_distribution<double> u(-1, 1);
  for (double theta : {2 * std::numbers::pi / 7, std::numbers::pi / 4, 0.3}) {
    int accepted = 0;
    while (accepted < 20000) {
      const Point a = pt(0, 0), b = pt(u(rng), u(rng)), c = pt(u(rng), u(rng));
      const double ab = std::hypot(b.x, b.y), ac = std::hypot(c.x, c.y);
      if (ab == 0 || ac == 0 || ac > ab) continue;
      const double alpha = std::acos(std::clamp((b.x * c.x + b.y * c.y) / (ab * ac), -1.0, 1.0));
      if (alpha > theta - 1e-9) continue;
      ++accepted;
      EXPECT_TRUE(check_shrink_lemma(a, b, c, theta));
    }
  }
}

TEST(ShrinkLemma, TightAtTheCorner) {
  // |ac| = |ab| and angle theta: equality in the bound.
  const double theta = std::numbers::pi / 4;
  const double r = 1000.0;
  const Point a = pt(0, 0), b = pt(r, 0);
  const Point c = pt(r * std::cos(theta), r * std::sin(theta));
  const double bc = std::hypot(c.x - b.x, c.y - b.y);
  const double rhs = r - std::hypot(c.x, c.y) / theta_bound(theta);
  EXPECT_NEAR(bc, rhs, 1e-9 * r);
}

TEST(ShrinkLemma, RejectsInadmissibleTriples) {
  EXPECT_THROW(check_shrink_lemma(pt(0, 0), pt(1, 0), pt(2, 0), 0.5), PreconditionError);
  EXPECT_THROW(check_shrink_lemma(pt(0, 0), pt(2, 0), pt(0, 1), 0.5), PreconditionError);
  EXPECT_THROW(check_shrink_lemma(pt(0, 0), pt(2, 0), pt(1, 0), 2.0), DomainError);
}

TEST(QuadProposition, RandomConvexQuadrilaterals) {
  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> rad(0.5, 2.0);
  for (int i = 0; i < 10000; ++i) {
    std::array<double, 4> t{ang(rng), ang(rng), ang(rng), ang(rng)};
    std::sort(t.begin(), t.end());
    const double r = rad(rng);
    std::array<Point, 4> q;
    for (int j = 0; j < 4; ++j) q[j] = pt(r * std::cos(t[j]), r * std::sin(t[j]));
    EXPECT_TRUE(check_quad_proposition(q[0], q[1], q[2], q[3]));
  }
  EXPECT_THROW(check_quad_proposition(pt(0, 0), pt(2, 0), pt(1, 1), pt(2, 2)), PreconditionError);
  EXPECT_THROW(check_quad_proposition(pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1)), PreconditionError);
}

TEST(LawOfCosines, Trichotomy) {
  EXPECT_TRUE(check_law_of_cosines(pt(1, 0), pt(0, 0), pt(0, 1)));   // right angle
  EXPECT_TRUE(check_law_of_cosines(pt(1, 0), pt(0, 0), pt(1, 1)));   // acute
  EXPECT_TRUE(check_law_of_cosines(pt(1, 0), pt(0, 0), pt(-1, 1)));  // obtuse
  EXPECT_THROW(check_law_of_cosines(pt(0, 0), pt(1, 1), pt(2, 2)), PreconditionError);
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> c(-1000, 1000);
  for (int i = 0; i < 10000; ++i) {
    const Point a = pt(c(rng), c(rng)), b = pt(c(rng), c(rng)), d = pt(c(rng), c(rng));
    if (orientation(a, b, d) == 0) continue;
    EXPECT_TRUE(check_law_of_cosines(a, b, d));
  }
}

TEST(QuadLemma, ShortestSideIsShortOnY4Crossings) {
  std::mt19937_64 rng(68);
  std::size_t pairs = 0;
  for (int trial = 0; trial < 300 && pairs < 200; ++trial) {
    const PointSet p = test::random_points(rng, 60, trial % 2 ? 40 : 1000000);
    const YaoGraph g = y4(p);
    for (const auto& [ab, cd] : crossing_edge_pairs(g)) {
      ++pairs;
      EXPECT_TRUE(check_quad_lemma(p, ab, cd));
      EXPECT_FALSE(same_quadrant_pair(p, ab, cd));
    }
  }
  EXPECT_GE(pairs, 200u);
}

TEST(QuadLemma, DetectsAViolation) {
  // Both sides incident to the long diagonal's ends are far from short.
  const PointSet p({{0, 0}, {10, 0}, {5, -1}, {5, 1}});
  EXPECT_FALSE(check_quad_lemma(p, {0, 1}, {2, 3}));
  EXPECT_THROW(check_quad_lemma(PointSet({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), {0, 1}, {2, 3}),
               PreconditionError);
}

TEST(Bounds, ThetaBoundValues) {
  // Oracles from mpmath at 30 digits.
  EXPECT_NEAR(theta_bound(2 * std::numbers::pi / 7), 7.562436128822012, 1e-9);
  EXPECT_NEAR(theta_bound(2 * std::numbers::pi / 7), 7.5625, 1e-4);
  EXPECT_NEAR(theta_bound(std::numbers::pi / 4), 4.261972627395668, 1e-9);
  EXPECT_NEAR(theta_bound(std::numbers::pi / 4), 4.2620, 1e-4);
  EXPECT_NEAR(theta_bound(2 * std::numbers::pi / 9), 3.164960460944895, 1e-9);
  EXPECT_NEAR(theta_bound(2 * std::numbers::pi / 12), 2.073132184970986, 1e-9);
  EXPECT_NEAR(bose_bound(9), 8.113140441403066, 1e-9);
  EXPECT_NEAR(bose_bound(12), 2.732050807568877, 1e-9);
  EXPECT_NEAR(bounds::kY4, 492.2152954766495, 1e-9);
  EXPECT_NEAR(bounds::kRecross, 14.485281374238571, 1e-12);
}

TEST(Bounds, ThetaBoundIsIncreasingAndBeatsBose) {
  double prev = 1.0;
  for (double th = 0.01; th < std::numbers::pi / 3 - 0.01; th += 0.01) {
    const double t = theta_bound(th);
    EXPECT_GT(t, prev);
    prev = t;
  }
  for (int k = 9; k <= 64; ++k) {
    EXPECT_LT(theta_bound(2 * std::numbers::pi / k), bose_bound(k));
    EXPECT_EQ(yao_l2_bound(k), theta_bound(2 * std::numbers::pi / k));
  }
  EXPECT_EQ(yao_l2_bound(4), bounds::kY4);
  EXPECT_FALSE(yao_l2_bound(5).has_value());
  EXPECT_FALSE(yao_l2_bound(6).has_value());
}

TEST(Bounds, DomainErrors) {
  EXPECT_THROW(theta_bound(0.0), DomainError);
  EXPECT_THROW(theta_bound(-0.1), DomainError);
  EXPECT_THROW(theta_bound(1.05), DomainError);
  EXPECT_THROW(bose_bound(8), DomainError);
}

}  // namespace
}  // namespace yao
