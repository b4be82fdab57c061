#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sunfactor/corpus.hpp"
#include "sunfactor/generators.hpp"
#include "sunfactor/path_factor.hpp"

using namespace sunfactor;

TEST(KanekoViolation, NamedExamples) {
  auto star = kaneko_violation(gen::complete_bipartite(1, 3));
  ASSERT_TRUE(star);
  EXPECT_EQ(star->x, VertexSet(4, {0}));
  EXPECT_EQ(star->sun_count, 3);

  EXPECT_FALSE(kaneko_violation(gen::cycle(6)));

  // (K2 ∨ 3K2) - {0}, probed with X = {the other join vertex}.
  Subgraph reduced = delete_vertices(gen::remark1(1), VertexSet(8, {0}));
  Obstruction probe{VertexSet(7, {0}), 3};
  EXPECT_TRUE(probe.validates(reduced.graph));
  auto found = kaneko_violation(reduced.graph);
  ASSERT_TRUE(found);
  EXPECT_EQ(*found, probe);
}

TEST(HasP3Factor, NamedExamples) {
  EXPECT_TRUE(has_p3_factor(gen::path(3)));
  EXPECT_FALSE(has_p3_factor(gen::complete_bipartite(1, 3)));
  EXPECT_TRUE(has_p3_factor(Graph(0)));
  EXPECT_FALSE(has_p3_factor(Graph(1)));
  EXPECT_FALSE(has_p3_factor(Graph(2)));
  EXPECT_FALSE(has_p3_factor(gen::complete(2)));
  EXPECT_THROW(has_p3_factor(gen::cycle(21)), BudgetExceeded);
}

TEST(FindP3Factor, NamedExamples) {
  auto c6 = find_p3_factor(gen::cycle(6));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->paths, (std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}}));
  EXPECT_FALSE(find_p3_factor(gen::complete_bipartite(1, 3)));
  auto p5 = find_p3_factor(gen::path(5));
  ASSERT_TRUE(p5);
  EXPECT_EQ(p5->paths, (std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}}));
  auto empty = find_p3_factor(Graph(0));
  ASSERT_TRUE(empty);
  EXPECT_TRUE(empty->paths.empty());
  EXPECT_THROW(find_p3_factor(gen::cycle(41)), BudgetExceeded);
}

TEST(FindP3Factor, LongPathsNeedInteriorStart) {
  // Vertex 0 sits in the middle of the only factor path.
  Graph g = Graph::from_edge_list(5, {{1, 2}, {2, 0}, {0, 3}, {3, 4}});
  auto f = find_p3_factor(g);
  ASSERT_TRUE(f);
  EXPECT_TRUE(f->validates(g));
}

TEST(Certify, NamedExamples) {
  auto c3 = certify(gen::complete(3));
  ASSERT_TRUE(std::holds_alternative<PathFactor>(c3));
  EXPECT_EQ(std::get<PathFactor>(c3).paths, (std::vector<std::vector<Vertex>>{{0, 1, 2}}));

  auto two_k2 = certify(gen::disjoint_copies(gen::complete(2), 2));
  ASSERT_TRUE(std::holds_alternative<Obstruction>(two_k2));
  EXPECT_TRUE(std::get<Obstruction>(two_k2).x.empty());
  EXPECT_EQ(std::get<Obstruction>(two_k2).sun_count, 2);

  Graph r2 = gen::remark2(1);
  Edge k2_edge{3, 4};
  Graph reduced = delete_edges(r2, std::span<const Edge>(&k2_edge, 1));
  auto cert = certify(reduced);
  ASSERT_TRUE(std::holds_alternative<Obstruction>(cert));
  EXPECT_EQ(std::get<Obstruction>(cert).x, VertexSet(15, {0, 1, 2}));
  EXPECT_EQ(std::get<Obstruction>(cert).sun_count, 7);
  EXPECT_TRUE(validates(cert, reduced));
}

TEST(Certificates, RejectTamperedData) {
  Graph c6 = gen::cycle(6);
  EXPECT_FALSE((PathFactor{{{0, 1, 2}, {3, 4}}}).validates(c6));
  EXPECT_FALSE((PathFactor{{{0, 1, 2}, {3, 5, 4}}}).validates(c6));
  EXPECT_FALSE((PathFactor{{{0, 1, 2}, {2, 3, 4}}}).validates(c6));
  EXPECT_FALSE((PathFactor{{{0, 1, 2}}}).validates(c6));
  EXPECT_TRUE((PathFactor{{{5, 0, 1}, {2, 3, 4}}}).validates(c6));
  EXPECT_FALSE((Obstruction{VertexSet(6), 0}).validates(c6));
  EXPECT_FALSE((Obstruction{VertexSet(4, {0}), 2}).validates(gen::complete_bipartite(1, 3)));
}

// The two decision procedures share no search code: one sweeps vertex subsets, the other
// builds a factor. They must agree everywhere.
TEST(Agreement, ExhaustiveUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    Corpus corpus(Exhaustive{n});
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      Graph g = corpus.at(i);
      auto factor = find_p3_factor(g);
      auto obstruction = kaneko_violation(g);
      ASSERT_NE(factor.has_value(), obstruction.has_value()) << to_graph6(g);
      if (factor) {
        ASSERT_TRUE(factor->validates(g));
      }
      if (obstruction) {
        ASSERT_TRUE(obstruction->validates(g));
      }
    }
  }
}

TEST(Agreement, RandomSevenToTen) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 7 + static_cast<int>(rng() % 4);
    Graph g = oracle::random_graph(rng, n, 0.15 + 0.35 * static_cast<double>(rng() % 100) / 100.0);
    auto factor = find_p3_factor(g);
    auto obstruction = kaneko_violation(g);
    ASSERT_NE(factor.has_value(), obstruction.has_value()) << to_graph6(g);
    if (factor) {
      ASSERT_TRUE(factor->validates(g));
    }
    if (obstruction) {
      ASSERT_TRUE(obstruction->validates(g));
    }
  }
}

TEST(Agreement, LiteralCriterionOracleOnSmallGraphs) {
  Corpus corpus(Exhaustive{5});
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Graph g = corpus.at(i);
    ASSERT_EQ(has_p3_factor(g), oracle::kaneko_holds(g)) << to_graph6(g);
  }
}

TEST(HasP3Factor, SpanningPathsSuffice) {
  for (int n = 3; n <= 12; ++n) {
    EXPECT_TRUE(has_p3_factor(gen::cycle(n))) << n;
    EXPECT_TRUE(has_p3_factor(gen::complete(n))) << n;
    EXPECT_TRUE(find_p3_factor(gen::path(n))) << n;
  }
}

TEST(FindP3Factor, HandlesFortyVertexNegativeInstance) {
  // 13 disjoint stars K_{1,3} plus a triangle: search must refute without blowing up.
  Graph g = gen::disjoint_union(gen::disjoint_copies(gen::complete_bipartite(1, 3), 9), gen::cycle(4));
  ASSERT_EQ(g.order(), 40);
  EXPECT_FALSE(find_p3_factor(g));
}
