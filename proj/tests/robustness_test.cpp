#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <span>

#include "oracles.hpp"
#include "sunfactor/corpus.hpp"
#include "sunfactor/generators.hpp"
#include "sunfactor/graph6.hpp"
#include "sunfactor/hunt.hpp"
#include "sunfactor/robustness.hpp"

using namespace sunfactor;

TEST(Sigma, NamedExamples) {
  auto star = sigma_k(gen::complete_bipartite(1, 3), 3);
  ASSERT_FALSE(star.is_infinite());
  EXPECT_EQ(*star.value, 3);
  EXPECT_EQ(*star.witness, VertexSet(4, {1, 2, 3}));
  EXPECT_TRUE(sigma_k(gen::complete(5), 3).is_infinite());
  auto c6 = sigma_k(gen::cycle(6), 3);
  EXPECT_EQ(*c6.value, 6);
  EXPECT_EQ(*c6.witness, VertexSet(6, {0, 2, 4}));
  EXPECT_EQ(*sigma_k(gen::cycle(6), 1).value, 2);
  EXPECT_THROW(sigma_k(gen::cycle(6), 0), InputError);
}

TEST(Sigma, AgreesWithSubsetOracleAndWitnessIsIndependent) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.5);
    for (int k = 1; k <= 4; ++k) {
      auto got = sigma_k(g, k);
      auto want = oracle::sigma(g, k);
      ASSERT_EQ(got.is_infinite(), !want.has_value());
      if (!want) continue;
      ASSERT_EQ(*got.value, *want);
      auto members = got.witness->members();
      ASSERT_EQ(static_cast<int>(members.size()), k);
      long long sum = 0;
      for (Vertex a : members) {
        sum += g.degree(a);
        for (Vertex b : members) ASSERT_FALSE(g.has_edge(a, b));
      }
      ASSERT_EQ(sum, *got.value);
    }
  }
}

TEST(Sigma, VertexDeletionLowersSigmaThreeByAtMostThreeL) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(rng, 7 + static_cast<int>(rng() % 4), 0.45);
    int l = 1 + static_cast<int>(rng() % 3);
    VertexSet drop(g.order());
    while (drop.size() < l) drop.insert(static_cast<Vertex>(rng() % static_cast<unsigned>(g.order())));
    auto before = sigma_k(g, 3);
    auto after = sigma_k(delete_vertices(g, drop).graph, 3);
    if (before.is_infinite() || after.is_infinite()) continue;
    ASSERT_GE(*after.value, *before.value - 3LL * l);
  }
}

TEST(IsCritical, NamedExamples) {
  EXPECT_TRUE(is_critical(gen::complete(5), 1).holds);
  EXPECT_TRUE(is_critical(gen::cycle(6), 0).holds);

  auto r1 = is_critical(gen::remark1(1), 1);
  ASSERT_FALSE(r1.holds);
  ASSERT_EQ(r1.failures.size(), 1u);
  EXPECT_EQ(r1.failures[0].removed_vertices, VertexSet(8, {0}));
  EXPECT_EQ(r1.failures[0].obstruction.x, VertexSet(8, {1}));
  EXPECT_EQ(r1.failures[0].obstruction.sun_count, 3);

  EXPECT_TRUE(is_critical(gen::complete(3), 4).holds);  // no 4-subsets
  EXPECT_THROW(is_critical(gen::cycle(6), -1), InputError);
}

TEST(IsDeleted, NamedExamples) {
  auto c6 = is_deleted(gen::cycle(6), 1);
  EXPECT_TRUE(c6.holds);
  EXPECT_EQ(c6.checked, 6u);

  auto r2 = is_deleted(gen::remark2(1), 1);
  ASSERT_FALSE(r2.holds);
  ASSERT_EQ(r2.failures.size(), 1u);
  EXPECT_EQ(r2.failures[0].removed_edges, (EdgeSet{{3, 4}}));
  EXPECT_EQ(r2.failures[0].obstruction.x, VertexSet(15, {0, 1, 2}));
  EXPECT_EQ(r2.failures[0].obstruction.sun_count, 7);

  EXPECT_FALSE(is_deleted(gen::complete(2), 1).holds);
}

TEST(Robustness, ListAllAndBudget) {
  RobustnessOptions all;
  all.list_all = true;
  auto v = is_critical(gen::remark1(1), 1, all);
  EXPECT_EQ(v.failures.size(), 2u);  // either join vertex
  EXPECT_EQ(v.checked, 8u);

  RobustnessOptions tight;
  tight.budget = 10;
  EXPECT_THROW(is_deleted(gen::complete(6), 2, tight), BudgetExceeded);
}

TEST(Robustness, FailuresReverifyThroughIndependentCertify) {
  Corpus corpus(Exhaustive{5});
  RobustnessOptions all;
  all.list_all = true;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Graph g = corpus.at(i);
    for (int k = 0; k <= 2; ++k) {
      for (auto verdict : {is_critical(g, k, all), is_deleted(g, k, all)}) {
        for (const auto& f : verdict.failures) {
          auto [reduced, local] = reduce(g, verdict.property, f);
          ASSERT_TRUE(local.validates(reduced)) << to_graph6(g);
          ASSERT_TRUE(std::holds_alternative<Obstruction>(certify(reduced)));
        }
      }
    }
  }
}

namespace {

// Literal reference: build each reduced graph and take the first violating set by
// brute force over all subsets ordered by size, then lexicographically.
std::optional<std::pair<std::uint32_t, int>> first_violation(const Graph& g) {
  const int n = g.order();
  for (int k = 0; k <= n; ++k) {
    std::optional<std::pair<std::uint32_t, int>> found;
    detail::for_each_combination(n, k, [&](std::uint64_t x, std::span<const int>) {
      const int suns = oracle::sun_count(g, static_cast<std::uint32_t>(x));
      if (suns > 2 * k) {
        found = {static_cast<std::uint32_t>(x), suns};
        return false;
      }
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

TEST(Robustness, FilteredSweepsMatchPerDeletionReference) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    Graph g = oracle::random_graph(rng, n, 0.55);
    const int param = 1 + static_cast<int>(rng() % 2);
    RobustnessOptions all;
    all.list_all = true;

    RobustnessVerdict crit = is_critical(g, param, all);
    std::size_t next = 0;
    detail::for_each_combination(n, param, [&](std::uint64_t removed, std::span<const int>) {
      Subgraph sub = delete_vertices(g, VertexSet::from_mask(n, removed));
      auto expected = first_violation(sub.graph);
      if (expected) {
        EXPECT_LT(next, crit.failures.size());
        if (next >= crit.failures.size()) return false;
        const auto& f = crit.failures[next++];
        EXPECT_EQ(f.removed_vertices.mask(), removed);
        EXPECT_EQ(f.obstruction.x, sub.lift(VertexSet::from_mask(sub.graph.order(), expected->first)));
        EXPECT_EQ(f.obstruction.sun_count, expected->second);
      }
      return true;
    });
    EXPECT_EQ(next, crit.failures.size()) << to_graph6(g);

    RobustnessVerdict del = is_deleted(g, param, all);
    const auto edges = g.edges();
    next = 0;
    detail::for_each_combination(static_cast<int>(edges.size()), param, [&](std::uint64_t, std::span<const int> idx) {
      EdgeSet removed;
      for (int i : idx) removed.push_back(edges[static_cast<std::size_t>(i)]);
      auto expected = first_violation(delete_edges(g, removed));
      if (expected) {
        EXPECT_LT(next, del.failures.size());
        if (next >= del.failures.size()) return false;
        const auto& f = del.failures[next++];
        EXPECT_EQ(f.removed_edges, removed);
        EXPECT_EQ(f.obstruction.x.mask(), expected->first);
        EXPECT_EQ(f.obstruction.sun_count, expected->second);
      }
      return true;
    });
    EXPECT_EQ(next, del.failures.size()) << to_graph6(g);
  }
}

TEST(Sharpness, BoundaryJoinFamiliesFail) {
  for (int l = 1; l <= 3; ++l) EXPECT_FALSE(is_critical(gen::remark1(l), l).holds) << l;
  for (int m = 1; m <= 2; ++m) {
    RobustnessOptions opts;
    opts.path.criterion_max_order = 23;
    EXPECT_FALSE(is_deleted(gen::remark2(m), m, opts).holds) << m;
  }
}

TEST(CheckTheorem, NamedExamples) {
  auto k6 = check_theorem(gen::complete(6), Theorem::T2, 1);
  EXPECT_TRUE(k6.hypotheses_hold);
  EXPECT_TRUE(k6.conclusion_holds);
  EXPECT_FALSE(k6.is_counterexample);

  auto r1 = check_theorem(gen::remark1(1), Theorem::T2, 1);
  EXPECT_EQ(*r1.toughness->value, Rational(2, 3));
  EXPECT_FALSE(r1.toughness_holds);
  EXPECT_FALSE(r1.kappa_holds);  // κ = 2 < 3
  EXPECT_FALSE(r1.hypotheses_hold);
  EXPECT_FALSE(r1.conclusion_holds);
  EXPECT_FALSE(r1.is_counterexample);

  auto r2 = check_theorem(gen::remark2(1), Theorem::T4, 1);
  EXPECT_EQ(*r2.toughness->value, Rational(1, 2));
  EXPECT_EQ(*r2.toughness_threshold, Rational(2, 3));
  EXPECT_FALSE(r2.toughness_holds);
  EXPECT_TRUE(r2.kappa_holds);
  EXPECT_FALSE(r2.hypotheses_hold);
  EXPECT_FALSE(r2.conclusion_holds);
  EXPECT_FALSE(r2.is_counterexample);

  EXPECT_THROW(check_theorem(gen::complete(4), Theorem::T3, 0), InputError);
}

TEST(CheckTheorem, StrictVersusNonStrictBoundaries) {
  // s(remark1(l)) sits exactly on T2's strict threshold.
  for (int l = 1; l <= 2; ++l) {
    auto v = check_theorem(gen::remark1(l), Theorem::T2, l);
    EXPECT_EQ(*v.toughness->value, *v.toughness_threshold);
    EXPECT_FALSE(v.toughness_holds);
  }
  // The same graph meets T4's non-strict bound (m+1)/(m+2) = 2/3 at m = 1.
  auto t4 = check_theorem(gen::remark1(1), Theorem::T4, 1);
  EXPECT_EQ(*t4.toughness->value, Rational(2, 3));
  EXPECT_TRUE(t4.toughness_holds);
  EXPECT_FALSE(t4.kappa_holds);  // κ = 2 < 3
}

TEST(CheckTheorem, SigmaHypothesisNeedsAnIndependentTriple) {
  auto v = check_theorem(gen::complete(3), Theorem::T3, 1);
  EXPECT_TRUE(v.kappa_holds);
  EXPECT_TRUE(v.sigma3->is_infinite());
  EXPECT_FALSE(v.sigma_holds);
  EXPECT_FALSE(v.conclusion_holds);  // K2 is left
  EXPECT_FALSE(v.is_counterexample);
}

TEST(Hunt, SmallCorporaHaveNoCounterexamples) {
  for (Theorem t : {Theorem::T2, Theorem::T3, Theorem::T4, Theorem::T5}) {
    Corpus corpus(Exhaustive{5});
    HuntReport report = hunt(corpus, t, 1);
    EXPECT_EQ(report.graphs, 1024u);
    EXPECT_EQ(report.evaluated + report.skipped, report.graphs);
    EXPECT_TRUE(report.counterexamples.empty()) << to_string(t);
  }
}

TEST(Hunt, ResultIsIndependentOfWorkerCount) {
  Corpus corpus(Gnp{8, 0.6, 11, 120});
  HuntOptions one;
  HuntOptions many;
  many.jobs = 5;
  for (Theorem t : {Theorem::T2, Theorem::T5}) {
    HuntReport a = hunt(corpus, t, 1, one);
    HuntReport b = hunt(corpus, t, 1, many);
    EXPECT_EQ(a.hypotheses_held, b.hypotheses_held);
    EXPECT_EQ(a.conclusion_held, b.conclusion_held);
    EXPECT_EQ(a.counterexamples, b.counterexamples);
    EXPECT_EQ(a.evaluated, b.evaluated);
  }
}

TEST(Hunt, BudgetOverrunsAreCountedAsSkips) {
  const std::string path = testing::TempDir() + "hunt_skip.g6";
  {
    std::ofstream out(path);
    out << to_graph6(gen::cycle(22)) << '\n' << to_graph6(gen::complete(5)) << '\n';
  }
  HuntReport report = hunt(Corpus(Graph6File{path}), Theorem::T2, 1);
  EXPECT_EQ(report.graphs, 2u);
  EXPECT_EQ(report.skipped, 1u);
  EXPECT_EQ(report.evaluated, 1u);
  std::remove(path.c_str());
}
