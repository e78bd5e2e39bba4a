#include <gtest/gtest.h>

#include "folkman/experiments.hpp"
#include "folkman/report.hpp"

namespace {

using namespace folkman;

TEST(ReportJson, ArrowingCertificateShape) {
  const auto g = complete_graph(5);
  const auto j = to_json(g, arrows(g, 3, 2));
  EXPECT_EQ(j.at("type"), "arrowing");
  EXPECT_EQ(j.at("host"), "D~{");
  EXPECT_EQ(j.at("k"), 3);
  EXPECT_EQ(j.at("r"), 2);
  EXPECT_EQ(j.at("verdict"), "NonArrowing");
  EXPECT_EQ(j.at("witness").size(), 10u);
  EXPECT_TRUE(j.at("stats").contains("nodes"));
  const auto v = verify_certificate(j);
  EXPECT_TRUE(v.ok) << v.message;
  EXPECT_FALSE(v.search_claim_unchecked);
}

TEST(ReportJson, TamperedWitnessIsRejected) {
  const auto g = complete_graph(5);
  auto j = to_json(g, arrows(g, 3, 2));
  j["witness"] = std::vector<int>(10, 1);
  EXPECT_FALSE(verify_certificate(j).ok);
  j["witness"] = std::vector<int>(9, 1);
  EXPECT_FALSE(verify_certificate(j).ok);
  j["witness"] = nullptr;
  EXPECT_FALSE(verify_certificate(j).ok);
  j["verdict"] = "Maybe";
  EXPECT_FALSE(verify_certificate(j).ok);
}

TEST(ReportJson, ArrowsClaimIsFlaggedUnchecked) {
  const auto g = complete_graph(6);
  auto j = to_json(g, arrows(g, 3, 2));
  EXPECT_TRUE(j.at("witness").is_null());
  const auto v = verify_certificate(j);
  EXPECT_TRUE(v.ok);
  EXPECT_TRUE(v.search_claim_unchecked);
  j["witness"] = std::vector<int>(15, 1);
  EXPECT_FALSE(verify_certificate(j).ok);
}

TEST(ReportJson, FolkmanBundleRoundTrip) {
  const auto g = graham_graph();
  auto j = to_json(g, is_folkman(g, 3, 2, 6));
  EXPECT_EQ(j.at("type"), "folkman");
  EXPECT_EQ(j.at("verdict"), "Folkman");
  EXPECT_EQ(j.at("l"), 6);
  EXPECT_FALSE(j.at("forbidden_clique").at("present").get<bool>());
  EXPECT_TRUE(verify_certificate(j).ok);
  j["verdict"] = "NotFolkman";
  EXPECT_FALSE(verify_certificate(j).ok);

  const auto k6 = complete_graph(6);
  auto n = to_json(k6, is_folkman(k6, 3, 2, 6));
  EXPECT_EQ(n.at("forbidden_clique").at("witness").size(), 6u);
  EXPECT_TRUE(verify_certificate(n).ok);
  n["forbidden_clique"]["present"] = false;
  EXPECT_FALSE(verify_certificate(n).ok);
}

TEST(ReportJson, ChainReportShape) {
  const auto rep = check_chain(derive_params(3, 2, LogInterval::from_integer(6)));
  const auto j = to_json(rep);
  EXPECT_EQ(j.at("type"), "chain");
  EXPECT_EQ(j.at("overall"), "CertifiedTrue");
  EXPECT_EQ(j.at("items").size(), rep.items.size());
  const auto& first = j.at("items").at(0);
  EXPECT_EQ(first.at("id"), "i");
  EXPECT_EQ(first.at("relation"), ">=");
  EXPECT_EQ(first.at("lhs_log2").size(), 2u);
  EXPECT_LE(first.at("lhs_log2").at(0).get<double>(), 52283.37152362508 + 1e-8);
  EXPECT_GE(first.at("lhs_log2").at(1).get<double>(), 52283.37152362508 - 1e-8);
}

TEST(ReportJson, IntervalsRoundOutward) {
  const auto j = to_json(Interval::quotient(1, 3));
  EXPECT_LE(j.at(0).get<double>(), 1.0 / 3);
  EXPECT_GE(j.at(1).get<double>(), 1.0 / 3);
  EXPECT_EQ(to_json(LogInterval::zero()).at(0), "-inf");
}

TEST(ReportJson, ColoringInputForms) {
  const auto a = coloring_from_json(Json::parse(R"({"r": 3, "colors": [1, 2, 1]})"));
  EXPECT_EQ(a.r, 3u);
  EXPECT_EQ(a.colors.size(), 3u);
  const auto b = coloring_from_json(Json::parse("[1, 2, 1]"));
  EXPECT_EQ(b.r, 2u);
  EXPECT_EQ(to_json(a).at("colors").size(), 3u);
}

}  // namespace
