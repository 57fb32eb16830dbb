#include <critlab/gdc.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace critlab::gdc {
namespace {

using testing::binomial_se;

GdcConfig addition_config(double accuracy, int n, int instances = 10000, std::uint64_t seed = 17) {
  GdcConfig c;
  c.family = FamilyId::addition;
  c.n_instances = instances;
  c.best_of_n = n;
  c.generator = NoisyGenerator{1.0 - accuracy, 1};
  c.master_seed = seed;
  return c;
}

double closed_form(double a, int n) { return 1.0 - std::pow(1.0 - a, n); }

TEST(SelectMin, TieBreaks) {
  EXPECT_EQ(select_min({0.3, 0.1, 0.2}, TieBreak::first, 0), 1u);
  EXPECT_EQ(select_min({0.1, 0.5, 0.1}, TieBreak::first, 0), 0u);
  std::array<int, 3> hits{};
  for (std::uint64_t s = 0; s < 3000; ++s) ++hits[select_min({0.1, 0.5, 0.1}, TieBreak::random_seeded, s)];
  EXPECT_EQ(hits[1], 0);
  EXPECT_NEAR(hits[0], 1500, 150);
  EXPECT_THROW(select_min({}, TieBreak::first, 0), InvalidArgument);
}

TEST(ParallelFor, LowestFailingIndexWins) {
  try {
    parallel_for(100, 8, [](std::size_t i) {
      if (i % 10 == 7) throw InvalidArgument("boom " + std::to_string(i));
    });
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_STREQ(e.what(), "boom 7");
  }
  EXPECT_THROW(parallel_for(1, 0, [](std::size_t) {}), InvalidArgument);
}

TEST(WinRate, Formula) {
  EXPECT_EQ(win_rate(0.5, 0.5), 0.5);
  EXPECT_EQ(win_rate(0.75, 0.5), 0.625);
  EXPECT_THROW(win_rate(1.2, 0.5), InvalidArgument);
  EXPECT_EQ(paired_win(1, 0), 1.0);
  EXPECT_EQ(paired_win(1, 1), 0.5);
  EXPECT_EQ(paired_win(0, 1), 0.0);
}

TEST(MeasureG, Extremes) {
  GdcConfig c = addition_config(1.0, 2, 200);
  c.generator = OracleGenerator{};
  EXPECT_EQ(measure_g(c).estimate.value, 1.0);
  c.generator = NoisyGenerator{1.0, 1};
  EXPECT_EQ(measure_g(c).estimate.value, 0.0);
}

TEST(MeasureG, NoisyAccuracy) {
  const auto g = measure_g(addition_config(0.6, 1)).estimate.value;
  EXPECT_NEAR(g, 0.6, 3 * binomial_se(0.6, 10000));
}

TEST(Degenerate, SingleSampleMakesDAndCEqualG) {
  for (FamilyId f : kAllFamilies) {
    GdcConfig c;
    c.family = f;
    c.n_instances = 300;
    c.best_of_n = 1;
    c.generator = NoisyGenerator{0.5, 1};
    c.discriminator = NoisyDiscriminator{0.3, 0.9};
    c.critiquer = NoisyCritiquer{0.5};
    c.judge = NoisyJudge{0.2};
    const auto rs = evaluate_all(c, 1);
    for (const auto& r : rs) {
      ASSERT_EQ(r.d, r.g);
      ASSERT_EQ(r.c, r.g);
    }
  }
}

TEST(ClosedForm, OracleSelectorsAtNEquals2) {
  const GapReport r = run_gdc(addition_config(0.5, 2), 4);
  const double want = closed_form(0.5, 2);
  const double tol = 3 * binomial_se(want, 10000);
  EXPECT_NEAR(r.d.value, want, tol);
  EXPECT_NEAR(r.c.value, want, tol);
  EXPECT_NEAR(r.win_rate_d.value, win_rate(r.d.value, r.g.value), 1e-12);
  EXPECT_NEAR(r.empirical_win_rate_d.value, win_rate(want, 0.5), 3 * r.empirical_win_rate_d.se);
  EXPECT_LE(r.win_rate_d.value, 0.75);
  EXPECT_GT(r.gd_gap.value, 3 * r.gd_gap.se);
  EXPECT_NEAR(r.cd_gap.value, r.c.value - r.d.value, 1e-12);
  EXPECT_EQ(r.generator_parse_failures, 0u);
}

TEST(ClosedForm, UninformativeSelectorsMatchG) {
  GdcConfig c = addition_config(0.5, 4);
  c.discriminator = ConstantDiscriminator{0.5};
  c.critiquer = NoisyCritiquer{0.0};
  const GapReport r = run_gdc(c, 4);
  EXPECT_NEAR(r.d.value, r.g.value, 3 * r.gd_gap.se);
  EXPECT_NEAR(r.c.value, r.g.value, 3 * r.gc_gap.se);
  EXPECT_NEAR(r.d.value, 0.5, 3 * binomial_se(0.5, 10000));
}

TEST(Determinism, IdenticalAcrossRunsAndJobs) {
  GdcConfig c = addition_config(0.5, 3, 2000);
  c.family = FamilyId::three_sat;
  c.discriminator = NoisyDiscriminator{0.2, 0.8};
  c.critiquer = NoisyCritiquer{0.4};
  c.judge = NoisyJudge{0.1};
  const GapReport a = run_gdc(c, 1);
  EXPECT_EQ(a, run_gdc(c, 1));
  EXPECT_EQ(a, run_gdc(c, 8));
  c.master_seed += 1;
  EXPECT_NE(a, run_gdc(c, 1));
}

TEST(Monotone, DInFlipDeltaAndCInHitRate) {
  double prev_d = 2.0;
  for (double flip : {0.0, 0.2, 0.4, 0.5}) {
    GdcConfig c = addition_config(0.5, 2, 5000);
    c.discriminator = NoisyDiscriminator{flip, 0.9};
    const GapReport r = run_gdc(c, 4);
    EXPECT_LE(r.d.value, prev_d + 3 * r.d.se) << "flip_delta " << flip;
    prev_d = r.d.value;
  }
  double prev_c = -1.0;
  for (double q : {0.0, 0.3, 0.6, 1.0}) {
    GdcConfig c = addition_config(0.5, 2, 5000);
    c.critiquer = NoisyCritiquer{q};
    const GapReport r = run_gdc(c, 4);
    EXPECT_GE(r.c.value, prev_c - 3 * r.c.se) << "hit_q " << q;
    prev_c = r.c.value;
  }
}

TEST(Variants, SingleCritiqueCoincidesWithC) {
  GdcConfig c = addition_config(0.5, 2, 3000);
  c.critiquer = NoisyCritiquer{0.4};
  c.judge = NoisyJudge{0.2};
  const CVariants v = measure_c_variants(c, 1, 4);
  EXPECT_EQ(v.c_best.value, v.c.value);
  EXPECT_EQ(v.c_any.value, v.c.value);
  EXPECT_EQ(v.c.value, run_gdc(c, 4).c.value);
}

TEST(Variants, MoreCritiquesFindMoreFlaws) {
  GdcConfig c = addition_config(0.5, 2);
  c.critiquer = NoisyCritiquer{0.3};
  const CVariants v = measure_c_variants(c, 8, 4);
  EXPECT_GE(v.c_any.value, v.c_best.value - 3 * v.c_best.se);
  EXPECT_GT(v.c_best.value, v.c.value + 3 * v.c.se);
  EXPECT_NEAR(v.c_score.value, v.c.value, 1e-12);  // oracle verdicts are already 0/1
}

TEST(Variants, PerfectCritiquerMakesAllEqual) {
  GdcConfig c = addition_config(0.5, 2, 2000);
  c.critiquer = NoisyCritiquer{1.0};
  const CVariants v = measure_c_variants(c, 8, 4);
  EXPECT_EQ(v.c_best.value, v.c.value);
  EXPECT_EQ(v.c_any.value, v.c.value);
  EXPECT_EQ(v.c_score.value, v.c.value);
}

TEST(Scaling, ClosedFormAndFlatBaseline) {
  const auto pts = gd_gc_scaling(addition_config(0.5, 1), {1, 2, 4}, 4);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0].d_win.value, 0.5);
  EXPECT_EQ(pts[0].c_win.value, 0.5);
  for (const auto& p : pts) {
    const double want = (1 + closed_form(0.5, p.n) - 0.5) / 2;
    EXPECT_NEAR(p.d_win.value, want, 3 * p.d_win.se + 1e-12) << p.n;
    EXPECT_NEAR(p.c_win.value, want, 3 * p.c_win.se + 1e-12) << p.n;
  }
  EXPECT_LT(pts[0].d_win.value, pts[1].d_win.value);
  EXPECT_LT(pts[1].d_win.value, pts[2].d_win.value);

  GdcConfig flat = addition_config(0.5, 1);
  flat.discriminator = ConstantDiscriminator{0.2};
  for (const auto& p : gd_gc_scaling(flat, {1, 2, 4, 8}, 4))
    EXPECT_NEAR(p.d_win.value, 0.5, 3 * binomial_se(0.5, 10000) / 2 + 1e-12) << p.n;
  EXPECT_THROW(gd_gc_scaling(flat, {}, 1), InvalidArgument);
  EXPECT_THROW(gd_gc_scaling(flat, {0}, 1), InvalidArgument);
}

TEST(Report, RowsAndMetadata) {
  const GapReport g = run_gdc(addition_config(0.8, 2, 500));
  const Report r = to_report(g, FamilyId::addition, "xl");
  EXPECT_EQ(r.metrics.size(), 10u);
  EXPECT_EQ(r.metrics[0].metric, "g_value");
  EXPECT_EQ(r.metadata["note"], std::string(kCSearchNote));
  EXPECT_EQ(r.config["best_of_n"], 2);
  for (const auto& m : r.metrics)
    if (m.metric.starts_with("win") || m.metric.starts_with("empirical")) {
      EXPECT_GE(m.value, 0.0);
      EXPECT_LE(m.value, 1.0);
    }
}

TEST(Config, Validation) {
  GdcConfig c;
  c.best_of_n = 0;
  EXPECT_THROW(run_gdc(c), ConfigError);
  c.best_of_n = 1;
  c.n_instances = 0;
  EXPECT_THROW(run_gdc(c), ConfigError);
}

}  // namespace
}  // namespace critlab::gdc
