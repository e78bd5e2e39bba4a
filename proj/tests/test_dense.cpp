#include <gtest/gtest.h>

#include "folkman/dense.hpp"
#include "folkman/experiments.hpp"
#include "folkman/montecarlo.hpp"

namespace {

using namespace folkman;

DensityParams params(const char* rho, const char* d) { return {Fraction::parse(rho), Fraction::parse(d)}; }

TEST(FractionParse, Forms) {
  EXPECT_EQ(Fraction::parse("2/4"), Fraction(1, 2));
  EXPECT_EQ(Fraction::parse("0.9"), Fraction(9, 10));
  EXPECT_EQ(Fraction::parse("1"), Fraction(1, 1));
  EXPECT_EQ(Fraction::parse(".25"), Fraction(1, 4));
  EXPECT_EQ(Fraction(6, 8).str(), "3/4");
  EXPECT_TRUE(Fraction(1, 3) < Fraction(1, 2));
  EXPECT_THROW(Fraction::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Fraction::parse("x"), std::invalid_argument);
  EXPECT_THROW(params("0", "1/2"), std::invalid_argument);
  EXPECT_THROW(params("1/2", "3/2"), std::invalid_argument);
}

TEST(Density, SmallExamples) {
  EXPECT_TRUE(is_rho_d_dense(complete_graph(6), params("1/2", "2/3")));
  const auto empty = check_rho_d_dense(Graph(6), params("1/2", "2/3"));
  EXPECT_FALSE(empty.dense);
  ASSERT_TRUE(empty.violation);
  EXPECT_EQ(empty.violation->size(), 3u);
  // Every 3-set of C5 spans one or two edges, so the bound is d <= 2/9.
  EXPECT_TRUE(is_rho_d_dense(cycle_graph(5), params("3/5", "2/9")));
  const auto c5 = check_rho_d_dense(cycle_graph(5), params("3/5", "1/4"));
  EXPECT_FALSE(c5.dense);
  EXPECT_EQ(c5.violation_edges, 1u);
  EXPECT_EQ(c5.m, 3u);
}

TEST(Density, CeilingOfRhoN) {
  const auto dp = params("1/3", "1/2");
  EXPECT_EQ(dp.m(9), 3u);
  EXPECT_EQ(dp.m(10), 4u);
  EXPECT_TRUE(dp.enough_edges(4, 4));
  EXPECT_FALSE(dp.enough_edges(3, 4));
}

TEST(Density, MonotoneUnderEdgeAddition) {
  const auto dp = params("1/2", "1/3");
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto lo = sample_gnp(10, 0.4, s);
    const auto hi = sample_gnp(10, 0.7, s);
    if (is_rho_d_dense(lo, dp)) {
      EXPECT_TRUE(is_rho_d_dense(hi, dp));
    }
  }
}

TEST(Density, SampledModeNeverContradictsExhaustive) {
  const auto dp = params("1/2", "2/5");
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = sample_gnp(12, 0.5, s);
    const auto ex = check_rho_d_dense(g, dp);
    const auto sm = check_rho_d_dense(g, dp, DensityMode::sampled(s, 200));
    EXPECT_TRUE(ex.definitive);
    if (ex.dense) {
      EXPECT_TRUE(sm.dense);
    }
    if (!sm.dense) {
      ASSERT_TRUE(sm.violation);
      EXPECT_FALSE(dp.enough_edges(sm.violation_edges, sm.m));
      EXPECT_EQ(induced_subgraph(g, *sm.violation).edge_count(), sm.violation_edges);
    }
  }
}

TEST(Canonical, HandBuiltSequence) {
  // K4 with all edges at 0 in colour 1, edges 1-2, 1-3 in colour 2, 2-3 in colour 1.
  const auto g = complete_graph(4);
  const EdgeColoring c{{1, 1, 1, 2, 2, 1}, 2};
  const CanonicalSequence seq{{0, 1, 2, 3}, {1, 2, 1}};
  EXPECT_TRUE(is_canonical(g, c, seq));
  const auto mono = mono_clique_from_canonical(g, c, seq, 3);
  EXPECT_EQ(mono.color, 1u);
  EXPECT_EQ(mono.vertices.members(), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_THROW(mono_clique_from_canonical(g, c, CanonicalSequence{{0, 1, 2, 3}, {2, 2, 1}}, 3),
               std::invalid_argument);
  EXPECT_THROW(mono_clique_from_canonical(g, c, CanonicalSequence{{0, 1, 2}, {1, 2}}, 3), std::invalid_argument);
}

TEST(Canonical, GreedyConstructionOnCompleteHosts) {
  const auto g = complete_graph(complete_host_order(3, Fraction(9, 10)));
  for (std::uint64_t s = 0; s < 50; ++s) {
    EdgeColoring c{std::vector<std::uint8_t>(g.edge_count()), 2};
    for (std::size_t e = 0; e < c.colors.size(); ++e) c.colors[e] = static_cast<std::uint8_t>(1 + splitmix64_at(s, e) % 2);
    const auto out = canonical_sequence(g, c, 4, Fraction(9, 10));
    ASSERT_TRUE(out.sequence) << out.failure;
    EXPECT_TRUE(is_canonical(g, c, *out.sequence));
    const auto mono = mono_clique_from_canonical(g, c, *out.sequence, 3);
    EXPECT_TRUE(is_clique(color_class(g, c, mono.color), mono.vertices));
  }
}

TEST(Canonical, ReportsFailingLevel) {
  const auto g = cycle_graph(6);
  const EdgeColoring c{std::vector<std::uint8_t>(6, 1), 2};
  const auto out = canonical_sequence(g, c, 4, Fraction(1, 2));
  EXPECT_FALSE(out.sequence);
  ASSERT_TRUE(out.failed_level);
  EXPECT_EQ(*out.failed_level, 1u);
  EXPECT_FALSE(out.failure.empty());
  EXPECT_THROW(canonical_sequence(g, EdgeColoring{std::vector<std::uint8_t>(6, 1), 3}, 4, Fraction(1, 2)),
               std::invalid_argument);
}

TEST(Dichotomy, ExtremeColourings) {
  const auto kn = complete_graph(6);
  const EdgeColoring last{std::vector<std::uint8_t>(kn.edge_count(), 3), 3};
  EXPECT_EQ(dichotomy_check(6, 3, 2, 6, last).side, DichotomySide::Second);
  const EdgeColoring first{std::vector<std::uint8_t>(kn.edge_count(), 1), 3};
  const auto r = dichotomy_check(6, 3, 2, 6, first);
  EXPECT_EQ(r.mono_count, 20u);
  EXPECT_EQ(r.side, DichotomySide::First);
  EXPECT_THROW(dichotomy_check(6, 3, 2, 6, EdgeColoring{first.colors, 2}), std::invalid_argument);
  EXPECT_THROW(dichotomy_check(5, 3, 2, 6, EdgeColoring{std::vector<std::uint8_t>(10, 1), 3}), std::invalid_argument);
}

TEST(Dichotomy, ExhaustiveBelowRamseyNumber) {
  // With R = 5 < R(3;2) the only failures are the 12 proper 2-colourings of K5.
  const auto s = dichotomy_exhaustive(5, 3, 2, 5, 2);
  EXPECT_TRUE(s.exhaustive);
  EXPECT_EQ(s.colorings, 59049u);
  EXPECT_EQ(s.neither, 12u);
  ASSERT_TRUE(s.counterexample);
  EXPECT_EQ(dichotomy_check(5, 3, 2, 5, *s.counterexample).side, DichotomySide::Neither);
  EXPECT_EQ(s.first_only + s.second_only + s.both + s.neither, s.colorings);
  const auto single = dichotomy_exhaustive(5, 3, 2, 5, 1);
  EXPECT_EQ(single.neither, s.neither);
  EXPECT_EQ(single.both, s.both);
}

TEST(Dichotomy, SampledIsReproducible) {
  const auto a = dichotomy_sampled(7, 3, 2, 6, 300, 9);
  const auto b = dichotomy_sampled(7, 3, 2, 6, 300, 9);
  EXPECT_EQ(a.colorings, 300u);
  EXPECT_EQ(a.neither, 0u);
  EXPECT_EQ(a.both, b.both);
  EXPECT_FALSE(a.exhaustive);
}

TEST(KLParams, ClosedFormAgreesWithSubstitution) {
  for (real alpha : {1e-12L, 0.05L, 0.1L, 0.2L, 0.24L}) {
    for (std::uint64_t k : {3, 10, 30}) {
      const auto kl = kl_construction_params(k, alpha);
      const auto& a = kl.log2_p();
      const auto& b = kl.log2_p_closed_form();
      EXPECT_LE(a.lo(), b.hi() + 1e-12L);
      EXPECT_GE(a.hi(), b.lo() - 1e-12L);
    }
  }
  EXPECT_NEAR(static_cast<double>(kl_construction_params(5, 1e-12L).log2_p().mid()), -0.75, 1e-9);
  EXPECT_THROW(kl_construction_params(5, 0.25L), std::invalid_argument);
  EXPECT_THROW(kl_construction_params(2, 0.1L), std::invalid_argument);
}

TEST(KLParams, CliqueCountAndConditions) {
  const auto kl = kl_construction_params(30, 0.2L);
  EXPECT_NEAR(static_cast<double>(kl.log2_n().mid()), 600.0, 1e-9);
  EXPECT_EQ(kl.clique_size_suffices(139), Verdict::CertifiedTrue);
  EXPECT_EQ(kl.clique_size_suffices(138), Verdict::CertifiedFalse);
  EXPECT_EQ(certify_lt(kl.expected_cliques(139), LogInterval::one()), Verdict::CertifiedTrue);
  EXPECT_EQ(kl.k_condition(), Verdict::CertifiedTrue);
  EXPECT_EQ(certify_lt(kl.eps(), LogInterval::one()), Verdict::CertifiedTrue);
  EXPECT_EQ(certify_lt(kl.d(), kl.p()), Verdict::CertifiedTrue);
  // ln n = 600 ln 2.
  EXPECT_TRUE(kl.ln_n().contains_value(600.0L * std::numbers::ln2_v<real>));
}

TEST(MonteCarlo, DegenerateEvents) {
  const auto none = mc_estimate(KFreeness{10, 0.0, 2}, 50, 1);
  EXPECT_EQ(none.successes, 50u);
  EXPECT_EQ(none.estimate, 1.0);
  const auto full = mc_estimate(ArrowingEvent{6, 1.0, 3, 2, 0}, 20, 1);
  EXPECT_EQ(full.successes, 20u);
  EXPECT_FALSE(full.partial);
  const auto budget = mc_estimate(ArrowingEvent{6, 1.0, 3, 2, 2}, 5, 1);
  EXPECT_EQ(budget.undecided, 5u);
  EXPECT_TRUE(budget.partial);
}

TEST(MonteCarlo, ThreadCountDoesNotChangeOutcome) {
  const KFreeness ev{20, 0.3, 3};
  const auto a = mc_estimate(ev, 400, 77, 1);
  const auto b = mc_estimate(ev, 400, 77, 4);
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_GT(a.successes, 0u);
  EXPECT_LT(a.successes, 400u);
}

TEST(MonteCarlo, WilsonReferenceValues) {
  struct Row {
    std::uint64_t s, t;
    double lo, hi;
  };
  for (const auto& r : std::vector<Row>{{9193, 10000, 0.9137991573368357, 0.9244788216295149},
                                        {0, 10, 0.0, 0.27753279986288926},
                                        {10, 10, 0.7224672001371106, 1.0},
                                        {37, 100, 0.2818236053432453, 0.46779470419057095}}) {
    const auto w = wilson95(r.s, r.t);
    EXPECT_NEAR(w.lo, r.lo, 1e-12);
    EXPECT_NEAR(w.hi, r.hi, 1e-12);
  }
}

}  // namespace
