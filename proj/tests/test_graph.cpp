#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "folkman/brute_force.hpp"
#include "folkman/graph.hpp"
#include "folkman/graph_io.hpp"

namespace {

using namespace folkman;

TEST(VertexSetOps, BasicMembership) {
  VertexSet s(130, {0, 63, 64, 129});
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(65));
  EXPECT_EQ(s.first(), 0u);
  EXPECT_EQ(s.next(1), 63u);
  EXPECT_EQ(s.members(), (std::vector<std::size_t>{0, 63, 64, 129}));
  s.erase(63);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_THROW(s.insert(130), std::out_of_range);
  const VertexSet t(130, {0, 1, 129});
  EXPECT_EQ((s & t).members(), (std::vector<std::size_t>{0, 129}));
  EXPECT_EQ(s.intersection_size(t), 2u);
  EXPECT_EQ(VertexSet::full(70).size(), 70u);
}

TEST(GraphBasics, CompleteAndCycle) {
  const auto k6 = complete_graph(6);
  EXPECT_EQ(k6.edge_count(), 15u);
  EXPECT_EQ(degree(k6, 3), 5u);
  const auto c5 = cycle_graph(5);
  EXPECT_EQ(c5.edge_count(), 5u);
  EXPECT_TRUE(c5.adjacent(0, 4));
  EXPECT_FALSE(c5.adjacent(0, 2));
}

TEST(GraphBasics, RejectsLoopsAndRange) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(GraphBasics, CanonicalEdgeOrder) {
  Graph g(4);
  g.add_edge(2, 3);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(0, 1);
  const auto e = g.edges();
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0], (Edge{0, 1}));
  EXPECT_EQ(e[1], (Edge{0, 3}));
  EXPECT_EQ(e[2], (Edge{1, 2}));
  EXPECT_EQ(e[3], (Edge{2, 3}));
  const EdgeIndex idx(g);
  EXPECT_EQ(idx(3, 0), 1);
  EXPECT_EQ(idx(0, 2), -1);
}

TEST(Cliques, KnownCounts) {
  EXPECT_EQ(count_cliques(complete_graph(6), 3), 20u);
  EXPECT_EQ(count_cliques(complete_graph(8), 4), 70u);
  EXPECT_EQ(count_cliques(cycle_graph(5), 3), 0u);
  EXPECT_EQ(count_cliques(cycle_graph(3), 3), 1u);
  EXPECT_FALSE(has_clique(cycle_graph(7), 3));
  const auto c = find_clique(complete_graph(5), 3);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->members(), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Cliques, LexicographicEnumeration) {
  const auto cl = enumerate_cliques(complete_graph(4), 2);
  ASSERT_EQ(cl.size(), 6u);
  EXPECT_EQ(cl[0].members(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(cl[5].members(), (std::vector<std::size_t>{2, 3}));
  EXPECT_TRUE(std::is_sorted(cl.begin(), cl.end()));
}

TEST(Cliques, MatchSubsetOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const auto g = sample_gnp(n, 0.2 + 0.01 * static_cast<double>(seed), seed);
    for (std::size_t t = 1; t <= n; ++t) {
      std::vector<std::vector<std::size_t>> fast;
      for (const auto& c : enumerate_cliques(g, t)) fast.push_back(c.members());
      ASSERT_EQ(fast, brute_force::cliques(g, t)) << "seed " << seed << " t " << t;
    }
  }
}

TEST(Cliques, IsCliqueAndInducedSubgraph) {
  const auto g = complete_graph(5);
  EXPECT_TRUE(is_clique(g, VertexSet(5, {0, 2, 4})));
  const auto c5 = cycle_graph(5);
  EXPECT_FALSE(is_clique(c5, VertexSet(5, {0, 1, 2})));
  const auto h = induced_subgraph(c5, VertexSet(5, {0, 1, 2}));
  EXPECT_EQ(h.order(), 3u);
  EXPECT_EQ(h.edge_count(), 2u);
}

TEST(Sampling, DeterministicAndExtremes) {
  EXPECT_EQ(sample_gnp(30, 0.3, 5), sample_gnp(30, 0.3, 5));
  EXPECT_NE(sample_gnp(30, 0.3, 5), sample_gnp(30, 0.3, 6));
  EXPECT_EQ(sample_gnp(12, 0.0, 1).edge_count(), 0u);
  EXPECT_EQ(sample_gnp(12, 1.0, 1).edge_count(), 66u);
  EXPECT_THROW(sample_gnp(5, 1.5, 0), std::invalid_argument);
  EXPECT_THROW(sample_gnp(5, -0.1, 0), std::invalid_argument);
}

TEST(Sampling, EdgeFrequencyIsNearP) {
  std::size_t edges = 0;
  for (std::uint64_t s = 0; s < 200; ++s) edges += sample_gnp(40, 0.1, s).edge_count();
  const double freq = static_cast<double>(edges) / (200.0 * 780.0);
  EXPECT_NEAR(freq, 0.1, 0.005);
}

TEST(Sampling, MonotoneCoupling) {
  // The same uniforms drive every p, so G(n,p) grows with p under one seed.
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto lo = sample_gnp(25, 0.2, s);
    const auto hi = sample_gnp(25, 0.5, s);
    for (const auto& e : lo.edges()) EXPECT_TRUE(hi.adjacent(e.u, e.v));
  }
}

TEST(Degeneracy, OrderIsAPermutation) {
  const auto g = sample_gnp(20, 0.4, 3);
  auto order = degeneracy_order(g);
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < 20; ++i) EXPECT_EQ(order[i], i);
}

TEST(Graph6, SpecExamples) {
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(complete_graph(5)), "D~{");
  EXPECT_EQ(from_graph6("Bw"), complete_graph(3));
}

TEST(Graph6, ReferenceVectors) {
  std::ifstream in(std::string(FOLKMAN_TEST_DATA) + "/graph6_vectors.txt");
  ASSERT_TRUE(in);
  std::string line;
  std::size_t checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string g6;
    std::size_t n = 0;
    std::string edges;
    ls >> g6 >> n >> edges;
    Graph expected(n);
    if (edges != "-") {
      std::istringstream es(edges);
      std::string pair;
      while (std::getline(es, pair, ',')) {
        const auto dash = pair.find('-');
        expected.add_edge(std::stoul(pair.substr(0, dash)), std::stoul(pair.substr(dash + 1)));
      }
    }
    EXPECT_EQ(to_graph6(expected), g6) << "n=" << n;
    EXPECT_EQ(from_graph6(g6), expected) << "n=" << n;
    ++checked;
  }
  EXPECT_GE(checked, 10u);
}

TEST(Graph6, RoundTripRandom) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto g = sample_gnp(s * 3, 0.3, s);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(from_graph6(""), FormatError);
  EXPECT_THROW(from_graph6("B"), FormatError);           // truncated payload
  EXPECT_THROW(from_graph6("Bww"), FormatError);         // trailing bytes
  EXPECT_THROW(from_graph6("Bx"), FormatError);          // nonzero padding
  EXPECT_THROW(from_graph6("B\x20"), FormatError);       // byte below 63
  EXPECT_THROW(from_graph6("~??@"), FormatError);        // non-canonical size header
  EXPECT_THROW(from_graph6("~~??????"), FormatError);    // 8-byte header
  EXPECT_EQ(from_graph6(">>graph6<<Bw\n"), complete_graph(3));
}

TEST(EdgeList, RoundTripAndHeader) {
  const auto g = sample_gnp(9, 0.4, 2);
  EXPECT_EQ(from_edge_list(to_edge_list(g)), g);
  const auto h = from_edge_list("# a comment\n0 1\n1 2\n");
  EXPECT_EQ(h.order(), 3u);
  EXPECT_EQ(from_edge_list("# vertices 6\n0 1\n").order(), 6u);
  EXPECT_THROW(from_edge_list("0 0\n"), FormatError);
  EXPECT_THROW(from_edge_list("0 x\n"), FormatError);
  EXPECT_THROW(from_edge_list("# vertices 2\n0 5\n"), FormatError);
}

}  // namespace
