#include <gtest/gtest.h>

#include "folkman/arrowing.hpp"
#include "folkman/brute_force.hpp"
#include "folkman/experiments.hpp"
#include "folkman/graph.hpp"

namespace {

using namespace folkman;

bool pentagon_pair(const Graph& k5, const EdgeColoring& c) {
  for (unsigned col = 1; col <= 2; ++col) {
    const auto cls = color_class(k5, c, col);
    if (cls.edge_count() != 5) return false;
    for (std::size_t v = 0; v < 5; ++v) {
      if (cls.degree(v) != 2) return false;
    }
    if (has_clique(cls, 3)) return false;
  }
  return true;
}

TEST(Arrowing, CompleteGraphGroundTruth) {
  const auto k6 = arrows(complete_graph(6), 3, 2);
  EXPECT_EQ(k6.verdict, ArrowVerdict::Arrows);
  EXPECT_FALSE(k6.witness);
  EXPECT_TRUE(k6.stats.exhausted);

  const auto g5 = complete_graph(5);
  const auto k5 = arrows(g5, 3, 2);
  ASSERT_EQ(k5.verdict, ArrowVerdict::NonArrowing);
  ASSERT_TRUE(k5.witness);
  EXPECT_FALSE(verify_coloring(g5, *k5.witness, 3));
  EXPECT_TRUE(pentagon_pair(g5, *k5.witness));
  EXPECT_EQ(k5.witness->colors.front(), 1);
}

TEST(Arrowing, CrossCheckedByFullEnumeration) {
  EXPECT_EQ(brute_force::two_color_census(complete_graph(6), 3).proper, 0u);
  const auto c5 = brute_force::two_color_census(complete_graph(5), 3);
  EXPECT_EQ(c5.total, 1024u);
  EXPECT_EQ(c5.proper, 12u);  // 12 pentagon pairs, colours ordered
}

TEST(Arrowing, RamseyThresholds) {
  EXPECT_EQ(arrows(complete_graph(5), 3, 3).verdict, ArrowVerdict::NonArrowing);
  EXPECT_EQ(arrows(complete_graph(17), 3, 1).verdict, ArrowVerdict::Arrows);
  EXPECT_EQ(arrows(complete_graph(2), 3, 2).verdict, ArrowVerdict::NonArrowing);
  EXPECT_EQ(arrows(complete_graph(3), 2, 5).verdict, ArrowVerdict::Arrows);
  EXPECT_EQ(arrows(Graph(4), 2, 2).verdict, ArrowVerdict::NonArrowing);
}

TEST(Arrowing, GrahamGraph) {
  const auto g = graham_graph();
  EXPECT_EQ(g.edge_count(), 23u);
  EXPECT_FALSE(has_clique(g, 6));
  EXPECT_TRUE(has_clique(g, 5));
  EXPECT_EQ(arrows(g, 3, 2).verdict, ArrowVerdict::Arrows);
  const auto b = is_folkman(g, 3, 2, 6);
  EXPECT_EQ(b.verdict, FolkmanVerdict::Folkman);
  EXPECT_FALSE(b.forbidden_clique.present());
}

TEST(Arrowing, FolkmanBundleNegativeCases) {
  const auto k6 = is_folkman(complete_graph(6), 3, 2, 6);
  EXPECT_EQ(k6.verdict, FolkmanVerdict::NotFolkman);
  ASSERT_TRUE(k6.forbidden_clique.present());
  EXPECT_EQ(k6.forbidden_clique.witness->size(), 6u);
  const auto k5 = is_folkman(complete_graph(5), 3, 2, 6);
  EXPECT_EQ(k5.verdict, FolkmanVerdict::NotFolkman);
  EXPECT_EQ(k5.arrowing.verdict, ArrowVerdict::NonArrowing);
  EXPECT_THROW(is_folkman(complete_graph(5), 3, 2, 3), std::invalid_argument);
}

TEST(Arrowing, BudgetYieldsIndeterminate) {
  ArrowOptions opts;
  opts.node_budget = 5;
  const auto c = arrows(complete_graph(6), 3, 2, opts);
  EXPECT_EQ(c.verdict, ArrowVerdict::Indeterminate);
  EXPECT_FALSE(c.witness);
  EXPECT_FALSE(c.stats.exhausted);
  // Indeterminate arrowing with a clique present is still NotFolkman.
  const auto b = is_folkman(complete_graph(7), 3, 2, 6, opts);
  EXPECT_EQ(b.verdict, FolkmanVerdict::NotFolkman);
  const auto u = is_folkman(graham_graph(), 3, 2, 6, opts);
  EXPECT_EQ(u.verdict, FolkmanVerdict::Indeterminate);
}

TEST(Arrowing, ParallelAgreesWithDeterministic) {
  ArrowOptions par;
  par.mode = SearchMode::Parallel;
  par.threads = 3;
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto g = sample_gnp(7 + s % 3, 0.75, s);
    const auto a = arrows(g, 3, 2);
    const auto b = arrows(g, 3, 2, par);
    EXPECT_EQ(a.verdict, b.verdict) << to_graph6(g);
    if (b.witness) {
      EXPECT_FALSE(verify_coloring(g, *b.witness, 3));
    }
  }
  EXPECT_EQ(arrows(graham_graph(), 3, 2, par).verdict, ArrowVerdict::Arrows);
}

TEST(Arrowing, DeterministicModeIsReproducible) {
  const auto g = sample_gnp(9, 0.6, 17);
  const auto a = arrows(g, 3, 2);
  const auto b = arrows(g, 3, 2);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.stats.nodes, b.stats.nodes);
}

TEST(Arrowing, OracleEquivalenceSmallGraphs) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const std::size_t n = 4 + s % 4;
    Graph g = sample_gnp(n, 0.7, s);
    auto edges = g.edges();
    while (edges.size() > 14) {
      g.remove_edge(edges.back().u, edges.back().v);
      edges.pop_back();
    }
    const std::size_t k = 2 + s % 2;
    const unsigned r = 2;
    const auto cert = arrows(g, k, r);
    EXPECT_EQ(cert.verdict == ArrowVerdict::Arrows, brute_force::arrows(g, k, r)) << to_graph6(g);
  }
}

TEST(Arrowing, MonotoneUnderEdgeAddition) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto lo = sample_gnp(8, 0.55, s);
    const auto hi = sample_gnp(8, 0.8, s);  // contains lo by coupling
    if (arrows(lo, 3, 2).verdict == ArrowVerdict::Arrows) {
      EXPECT_EQ(arrows(hi, 3, 2).verdict, ArrowVerdict::Arrows);
    }
  }
}

TEST(Coloring, ValidationAndNormalisation) {
  const auto g = complete_graph(4);
  EXPECT_THROW(validate_coloring(g, EdgeColoring{{1, 2}, 2}), std::invalid_argument);
  EXPECT_THROW(validate_coloring(g, EdgeColoring{{1, 2, 3, 1, 1, 1}, 2}), std::invalid_argument);
  const auto n = normalize_colors(EdgeColoring{{2, 2, 1, 3, 1, 3}, 3});
  EXPECT_EQ(n.colors, (std::vector<std::uint8_t>{1, 1, 2, 3, 2, 3}));
}

TEST(Coloring, VerifyFindsMonochromaticClique) {
  const auto g = complete_graph(4);
  const auto m = verify_coloring(g, EdgeColoring{{2, 2, 1, 2, 1, 1}, 2}, 3);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->color, 2u);
  EXPECT_EQ(m->vertices.members(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_FALSE(verify_coloring(g, EdgeColoring{{1, 2, 1, 1, 2, 2}, 2}, 4));
}

TEST(Arrowing, RejectsBadParameters) {
  EXPECT_THROW(arrows(complete_graph(4), 1, 2), std::invalid_argument);
  EXPECT_THROW(arrows(complete_graph(4), 3, 0), std::invalid_argument);
  EXPECT_THROW(arrows(complete_graph(4), 3, 33), std::invalid_argument);
}

}  // namespace
