#include <gtest/gtest.h>

#include "epigraph/birth_death.h"
#include "epigraph/bounds.h"
#include "epigraph/error.h"
#include "epigraph/estimate.h"
#include "epigraph/rational.h"
#include "support/oracles.h"

namespace epigraph {
namespace {

Rational q(const char* text) { return parse_rational(text); }

TEST(RationalTest, Parse) {
  EXPECT_EQ(q("3"), Rational(3));
  EXPECT_EQ(q("-7/2"), Rational(-7) / 2);
  EXPECT_EQ(q("0.25"), Rational(1) / 4);
  EXPECT_EQ(q("1e-3"), Rational(1) / 1000);
  EXPECT_THROW(q("1/0"), Error);
  EXPECT_THROW(q("abc"), Error);
  EXPECT_EQ(to_string(Rational(10) / 3), "10/3");
}

TEST(SlackTest, Examples) {
  EXPECT_EQ(slack_E(4, 3, 4), Rational(10) / 3);
  EXPECT_EQ(slack_E(4, 2, 1), Rational(5));
  EXPECT_EQ(slack_E(6, 3, 9), Rational(2));
  EXPECT_THROW(slack_E(4, 3, 7), InvalidArgument);
  EXPECT_THROW(slack_E(4, 0, 0), InvalidArgument);
}

TEST(ExtinctionBoundTest, WorkedExample) {
  const Theorem4Result res = theorem4_bound({.gamma0 = 60, .max_degree = 1, .slack = 2, .budget = 2});
  ASSERT_TRUE(res.condition_met);
  const std::optional<Rational> exact = res.bound->exact();
  ASSERT_TRUE(exact);
  EXPECT_EQ(*exact, Rational(4768371582031LL));
  EXPECT_NEAR(res.bound->log10(), std::log10(4768371582031.0), 1e-12);
}

TEST(ExtinctionBoundTest, ConditionUnmet) {
  EXPECT_FALSE(theorem4_bound({.gamma0 = 4, .max_degree = 3, .slack = Rational(10) / 3, .budget = 1})
                   .condition_met);
  EXPECT_FALSE(theorem4_bound({.gamma0 = 1, .max_degree = 2, .slack = 5, .budget = 1}).condition_met);
  // Exactly on the boundary gamma0 = Delta(9E+12) + 3r.
  EXPECT_TRUE(theorem4_bound({.gamma0 = 36, .max_degree = 1, .slack = 2, .budget = 2}).condition_met);
  EXPECT_FALSE(theorem4_bound({.gamma0 = 35, .max_degree = 1, .slack = 2, .budget = 2}).condition_met);
}

TEST(ExtinctionBoundTest, HugeBoundStaysFiniteInLogSpace) {
  const Theorem4Result res =
      theorem4_bound({.gamma0 = 30000, .max_degree = 1, .slack = 2, .budget = 1});
  ASSERT_TRUE(res.condition_met);
  EXPECT_TRUE(std::isinf(res.bound->value()));
  EXPECT_GT(res.bound->log10(), 30000.0);
  EXPECT_TRUE(std::isfinite(res.bound->log10()));
}

TEST(ExtinctionBoundTest, CompositionIdentity) {
  const BoundInputs in{.gamma0 = 90, .max_degree = 2, .slack = Rational(5) / 2, .budget = 3};
  const Theorem4Result res = theorem4_bound(in);
  ASSERT_TRUE(res.condition_met);
  const Rational mu = Rational(in.gamma0) / 3 - (3 * in.slack + 4) * in.max_degree;
  const Rational level = Rational(in.gamma0) / (3 * in.max_degree);
  EXPECT_EQ(*res.bound, random_walk_lower_bound_exact(in.budget, mu, level));
}

TEST(WalkTest, UpProbabilityExamples) {
  EXPECT_DOUBLE_EQ(gambler_up_probability({.lambda = 1, .mu = 1, .level = 6, .start = 3}), 0.5);
  EXPECT_NEAR(gambler_up_probability({.lambda = 1, .mu = 2, .level = 2, .start = 1}), 2.0 / 3, 1e-15);
  EXPECT_EQ(gambler_up_probability({.lambda = 3, .mu = 2, .level = 5, .start = 5}), 1.0);
  EXPECT_EQ(gambler_up_probability({.lambda = 3, .mu = 2, .level = 5, .start = 0}), 0.0);
  // Nearly symmetric: the stable form must approach M/L.
  EXPECT_NEAR(gambler_up_probability({.lambda = 1, .mu = 1 + 1e-12, .level = 6, .start = 3}), 0.5,
              1e-9);
}

TEST(WalkTest, LowerBoundExamples) {
  EXPECT_DOUBLE_EQ(random_walk_lower_bound({.lambda = 1, .mu = 2, .level = 3}), 1.5);
  EXPECT_THROW(random_walk_lower_bound({.lambda = 2, .mu = 2, .level = 3}), DomainError);
  EXPECT_LT(random_walk_lower_bound({.lambda = 1, .mu = 1.0000001, .level = 3}), 1e-6);
  const Rational exact = exact_hitting_time(reflecting_walk_chain(1, 2, 3), 2);
  EXPECT_EQ(exact, Rational(10));
  EXPECT_GE(to_double(exact), 1.5);
}

TEST(WalkTest, MonteCarloUpProbabilityIsSeeded) {
  const WalkParams w{.lambda = 1, .mu = 2, .level = 4, .start = 2};
  const ProbabilityEstimate a = monte_carlo_up_probability(w, 20000, 9);
  const ProbabilityEstimate b = monte_carlo_up_probability(w, 20000, 9);
  EXPECT_EQ(a.p, b.p);
  EXPECT_NEAR(a.p, gambler_up_probability(w), 4 * a.se);
}

TEST(BirthDeathTest, HandSolvedChains) {
  EXPECT_EQ(exact_hitting_time(complete_graph_chain(2, 1), 2), Rational(3));
  const BirthDeathChain k3 = complete_graph_chain(3, 1);
  EXPECT_EQ(exact_hitting_time(k3, 1), Rational(7));
  EXPECT_EQ(exact_hitting_time(k3, 2), Rational(10));
  EXPECT_EQ(exact_hitting_time(k3, 3), Rational(11));
  BirthDeathChain single{.up = {0, 0}, .down = {0, Rational(1) / 4}};
  EXPECT_EQ(exact_hitting_time(single, 1), Rational(4));
  EXPECT_EQ(exact_hitting_time(single, 0), Rational(0));
  BirthDeathChain stuck{.up = {0, 1, 0}, .down = {0, 1, 0}};
  EXPECT_THROW(exact_hitting_time(stuck, 2), DomainError);
}

TEST(BirthDeathTest, MatchesGaussianElimination) {
  for (int n = 2; n <= 12; ++n) {
    for (const char* r : {"1", "2", "5", "1/3"}) {
      const BirthDeathChain c = complete_graph_chain(n, q(r));
      const std::vector<Rational> h = testing::dense_hitting_times(c.up, c.down);
      for (int k = 0; k <= n; ++k) ASSERT_EQ(exact_hitting_time(c, k), h[k]) << n << " " << r << " " << k;
      ASSERT_EQ(exact_extinction_complete_exact(n, q(r)), h[n]);
    }
  }
}

TEST(BirthDeathTest, CompleteGraphGrowth) {
  EXPECT_EQ(exact_extinction_complete(2, 1.0), 3.0);
  EXPECT_EQ(exact_extinction_complete(3, 1.0), 11.0);
  for (int n = 2; n < 14; ++n) {
    EXPECT_GT(exact_extinction_complete(n + 1, 1.0), exact_extinction_complete(n, 1.0));
  }
  EXPECT_THROW(exact_extinction_complete(1, 1.0), InvalidArgument);
  EXPECT_THROW(exact_extinction_complete(3, 0.0), InvalidArgument);
}

TEST(DensityPremiseTest, Premise) {
  const CorollaryCheck half = corollary_premise(10, 4, 20, q("1.01"));
  EXPECT_TRUE(half.premise);
  EXPECT_EQ(half.base_term, BigInt(19 * 20 - 9 * 10 * 4 - 30 * 4));
  EXPECT_FALSE(corollary_premise(5, 2, 1, q("1.01")).premise);
  // 9C/19 = 9/19 * 19/9 * 1/2 = 1/2: W = n Delta / 2 sits on the boundary.
  EXPECT_TRUE(corollary_premise(10, 4, 20, Rational(19, 18)).premise);
  EXPECT_THROW(corollary_premise(10, 4, 20, Rational(1)), InvalidArgument);
}

TEST(BoundReportTest, Rows) {
  EXPECT_EQ(bound_report_header(), "n,delta,W,E,gamma0,r,condition,bound_log10\n");
  EXPECT_EQ(bound_report_row(4, 4, {.gamma0 = 4, .max_degree = 3, .slack = Rational(10) / 3, .budget = 1}),
            "4,3,4,3.3333333333333335,4,1,unmet,NA\n");
}

}  // namespace
}  // namespace epigraph
