#include <gtest/gtest.h>

#include "epigraph/error.h"
#include "epigraph/generators.h"
#include "epigraph/verify.h"
#include "support/graphs.h"

namespace epigraph {
namespace {

using testing::make;

const PropertyResult* find(const VerifyReport& report, std::string_view name) {
  for (const PropertyResult& r : report.results()) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

TEST(VerifyTest, CleanGraphsPass) {
  for (const char* spec : {"complete:4", "path:5", "star:5", "grid:2x3", "cycle:6"}) {
    VerifyReport report;
    const LemmaContext ctx = make_lemma_context(make(spec));
    check_cut_properties(ctx, report);
    check_resilience_lemmas(ctx, report);
    check_against_oracle(ctx.graph, report);
    EXPECT_TRUE(report.ok()) << spec << "\n" << report.to_text();
  }
}

TEST(VerifyTest, CorruptedCutTripsImprovementLemma) {
  // K_4: {0,1} is an improvement bag with gamma 3 and Delta 3, so any cut
  // below 0 is impossible; force a cut that breaks cut >= gamma - Delta on
  // a size-3 bag instead (gamma 4, Delta 3, needs cut >= 1).
  LemmaContext ctx = make_lemma_context(make("complete:4"));
  const NodeSet bag = NodeSet::Of({0, 1, 2});
  ctx.cut[bag.mask()] = 0;
  VerifyReport report;
  check_resilience_lemmas(ctx, report);
  const PropertyResult* improvement = find(report, "improvement_bag_cut");
  ASSERT_NE(improvement, nullptr);
  EXPECT_EQ(improvement->violations, 1);
  EXPECT_NE(improvement->counterexample.find("[0,1,2]"), std::string::npos) << improvement->counterexample;
  EXPECT_FALSE(report.ok());
  EXPECT_NE(report.to_text().find("improvement_bag_cut FAIL"), std::string::npos);
}

TEST(VerifyTest, CorruptedCutTripsCutProperties) {
  LemmaContext ctx = make_lemma_context(make("path:4"));
  ctx.cut[NodeSet::Of({1}).mask()] = 5;
  VerifyReport report;
  check_cut_properties(ctx, report);
  EXPECT_GT(find(report, "cut_matches_recount")->violations, 0);
  EXPECT_GT(find(report, "cut_size_cap")->violations, 0);
}

TEST(VerifyTest, AdmissibleRegionPremiseUnmetIsVacuous) {
  // Star: W = 2 < Delta = 4, so the admissible-region checks never apply.
  VerifyReport report;
  check_resilience_lemmas(make_lemma_context(make("star:5")), report);
  const PropertyResult* region = find(report, "cutwidth_complement_cap");
  ASSERT_NE(region, nullptr);
  EXPECT_EQ(region->checked, 0);
  EXPECT_GT(region->vacuous, 0);
  EXPECT_TRUE(report.ok());
}

TEST(VerifyTest, ScopedRunAndJson) {
  VerifyOptions options;
  options.scope = VerifyScope::kLemmas;
  options.max_n = 4;
  options.random_graphs = 3;
  const VerifyReport report = run_verify(options);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(find(report, "resilience_matches_oracle"), nullptr);
  const std::string json = report.to_json();
  EXPECT_NE(json.find("\"resilience_cut_floor\""), std::string::npos);
  EXPECT_EQ(parse_verify_scope("walk"), VerifyScope::kWalk);
  EXPECT_THROW(parse_verify_scope("everything"), Error);
}

TEST(VerifyTest, Describe) {
  EXPECT_EQ(describe(make("path:3")), "n=3 edges=0-1,1-2");
}

}  // namespace
}  // namespace epigraph
