#include <critlab/experiments.hpp>

#include <gtest/gtest.h>

#include <filesystem>

#include "test_support.hpp"

namespace critlab::experiments {
namespace {

using testing::binomial_se;

// Independent oracle for the debate closed form: simulate the two sides
// directly from hit/miss coins, with no family or policy code involved.
double simulate_debate(double q, int n, int trials, std::uint64_t seed) {
  Rng rng(seed);
  int honest_picked = 0;
  for (int t = 0; t < trials; ++t) {
    bool exposed = false;
    for (int k = 0; k < n; ++k) exposed = rng.bernoulli(q) || exposed;
    honest_picked += exposed ? 1 : rng.bernoulli(0.5);
  }
  return static_cast<double>(honest_picked) / trials;
}

TEST(Debate, ClosedFormMatchesIndependentSimulation) {
  // Frozen from the closed form; the simulation guards the formula itself.
  const std::array<std::pair<int, double>, 4> frozen{{{1, 0.75}, {2, 0.875}, {4, 0.96875}, {8, 0.998046875}}};
  for (const auto& [n, want] : frozen) {
    EXPECT_DOUBLE_EQ(debate_closed_form(0.5, n), want);
    EXPECT_NEAR(simulate_debate(0.5, n, 200000, 3 + n), want, 4 * binomial_se(want, 200000) + 1e-9);
  }
}

TEST(Debate, OracleEverythingIsPerfect) {
  DebateConfig c;
  c.n_pairs = 300;
  c.critiquer = OracleCritiquer{};
  for (FamilyId f : kAllFamilies) {
    c.family = f;
    const DebateResult r = run_debate(c);
    EXPECT_EQ(r.discriminator.value, 1.0) << to_string(f);
    for (const auto& [n, e] : r.by_n) EXPECT_EQ(e.value, 1.0) << to_string(f) << " N=" << n;
  }
}

TEST(Debate, NoisyCritiquerFollowsClosedFormAndIsMonotone) {
  DebateConfig c;
  c.n_pairs = 10000;
  c.master_seed = 5;
  const DebateResult r = run_debate(c, 4);
  double prev = 0.0;
  for (const auto& [n, e] : r.by_n) {
    const double want = debate_closed_form(0.5, n);
    EXPECT_NEAR(e.value, want, 3 * binomial_se(want, c.n_pairs) + 1e-12) << "N=" << n;
    EXPECT_GE(e.value, prev - 3 * e.se) << "N=" << n;
    prev = e.value;
  }
}

TEST(Debate, DeterministicAcrossJobs) {
  DebateConfig c;
  c.family = FamilyId::three_sat;
  c.n_pairs = 500;
  c.discriminator = NoisyDiscriminator{0.2, 0.8};
  c.judge = NoisyJudge{0.1};
  const DebateResult a = run_debate(c, 1);
  EXPECT_EQ(a, run_debate(c, 8));
  EXPECT_EQ(to_report(a, c.family).metrics.size(), 1 + c.n_values.size());
}

TEST(Debate, HonestSideIsSoundAndMisleadingIsNot) {
  const Family& fam = family_lookup(FamilyId::alphabetize);
  for (std::size_t i = 0; i < 200; ++i) {
    const auto p = make_pair(fam, 9, i);
    ASSERT_FALSE(fam.critiqueability_oracle(p.instance, p.honest).critiqueable);
    ASSERT_TRUE(fam.critiqueability_oracle(p.instance, p.misleading).critiqueable);
  }
}

TEST(Debate, Validation) {
  DebateConfig c;
  c.n_values = {};
  EXPECT_THROW(run_debate(c), ConfigError);
  c.n_values = {2, 0};
  try {
    run_debate(c);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "n_values");
  }
}

RefinementConfig refine_config(FamilyId f, double hit_q, int n) {
  RefinementConfig c;
  c.family = f;
  c.n_instances = n;
  c.critiquer = NoisyCritiquer{hit_q};
  c.master_seed = 21;
  return c;
}

TEST(Refinement, OracleFixesSingleEditFlaws) {
  for (FamilyId f : {FamilyId::addition, FamilyId::paired_mcq}) {
    RefinementConfig c = refine_config(f, 1.0, 500);
    c.critiquer = OracleCritiquer{};
    const RefinementResult r = run_refinement(c);
    EXPECT_EQ(r.n_flawed, 500u) << to_string(f);
    for (std::size_t mode : {0u, 1u}) {
      EXPECT_EQ(r.modes[mode].reached_sound.value, 1.0) << to_string(f);
      EXPECT_EQ(r.modes[mode].improved.value, 1.0) << to_string(f);
    }
  }
}

// An alphabetize replace edit (delete one word, insert another) leaves two
// defects, so one critique cannot finish the job; single-defect answers
// (adjacent swaps) are always repaired.
TEST(Refinement, OracleFixesSingleDefectAlphabetizeAnswers) {
  RefinementConfig c = refine_config(FamilyId::alphabetize, 1.0, 500);
  c.critiquer = OracleCritiquer{};
  c.keep_records = true;
  const RefinementResult r = run_refinement(c);
  const auto fam = make_family(c.family);
  std::size_t single = 0;
  for (const auto& rec : r.records) {
    if (rec.mode == RefinementMode::direct) continue;
    const auto before = fam->valid_critiques(rec.instance, rec.original).size();
    const bool sound = !fam->critiqueability_oracle(rec.instance, rec.refined).critiqueable;
    if (before == 1) {
      ++single;
      EXPECT_TRUE(sound);
    }
    EXPECT_LE(fam->flaw_count(rec.instance, rec.refined), fam->flaw_count(rec.instance, rec.original));
  }
  EXPECT_GT(single, 300u);
}

TEST(Refinement, BestOfEightBeatsRandomCritique) {
  const RefinementResult r = run_refinement(refine_config(FamilyId::addition, 0.3, 10000), 4);
  const auto& rnd = r.modes[0].improved;
  const auto& best = r.modes[1].improved;
  EXPECT_NEAR(rnd.value, 0.3, 3 * binomial_se(0.3, 10000));
  const double want_best = 1 - std::pow(0.7, 8);
  EXPECT_NEAR(best.value, want_best, 3 * binomial_se(want_best, 10000));
  EXPECT_GT(best.value - rnd.value, 3 * std::hypot(best.se, rnd.se));
}

TEST(Refinement, NoHitsNoImprovement) {
  const RefinementResult r = run_refinement(refine_config(FamilyId::paired_mcq, 0.0, 1000));
  EXPECT_EQ(r.modes[0].improved.value, 0.0);
  EXPECT_EQ(r.modes[1].improved.value, 0.0);
}

TEST(Refinement, NeverIncreasesFlawsAndRecordsMatchMode) {
  for (FamilyId f : {FamilyId::addition, FamilyId::alphabetize, FamilyId::paired_mcq}) {
    RefinementConfig c = refine_config(f, 0.5, 1000);
    c.generator = NoisyGenerator{0.7, 1};
    c.judge = NoisyJudge{0.3};
    c.keep_records = true;
    const RefinementResult r = run_refinement(c, 2);
    for (const auto& m : r.modes) EXPECT_EQ(m.increased, 0u) << to_string(f);
    ASSERT_EQ(r.records.size(), 3 * r.n_flawed);
    const auto fam = make_family(f);
    for (const auto& rec : r.records) {
      ASSERT_EQ(rec.critique.has_value(), rec.mode != RefinementMode::direct);
      ASSERT_LE(fam->flaw_count(rec.instance, rec.refined), fam->flaw_count(rec.instance, rec.original));
    }
  }
}

TEST(Refinement, DirectRateIsTheImprovementRate) {
  RefinementConfig c = refine_config(FamilyId::addition, 0.0, 300);
  c.direct_rate = 0.0;
  EXPECT_EQ(run_refinement(c).modes[2].improved.value, 0.0);
  c.direct_rate = 1.0;
  EXPECT_EQ(run_refinement(c).modes[2].improved.value, 1.0);
  c.direct_rate = 1.5;
  EXPECT_THROW(run_refinement(c), ConfigError);
}

TEST(Refinement, OnlyFlawedAnswersCount) {
  RefinementConfig c = refine_config(FamilyId::addition, 1.0, 200);
  c.generator = OracleGenerator{};
  const RefinementResult r = run_refinement(c);
  EXPECT_EQ(r.n_flawed, 0u);
  EXPECT_EQ(to_report(r, c.family).metrics.size(), 6u);
}

TEST(Assist, NoAcceptanceMeansNoLift) {
  AssistRun run;
  run.n_instances = 2000;
  run.assist.p_accept_valid = 0.0;
  const AssistResult r = run_assist_sim(run);
  EXPECT_EQ(r.assisted.mean_found.value, r.unassisted.mean_found.value);
  EXPECT_EQ(r.assisted.intended_found.value, r.unassisted.intended_found.value);
}

TEST(Assist, DefaultsReproduceTheLift) {
  AssistRun run;
  run.master_seed = 77;
  const AssistResult r = run_assist_sim(run, 4);
  EXPECT_NEAR(r.unassisted.intended_found.value, 0.27, 0.05);
  EXPECT_NEAR(r.assisted.intended_found.value, 0.45, 0.05);
  EXPECT_GT(r.assisted.mean_found.value, r.unassisted.mean_found.value + 3 * r.assisted.mean_found.se);
  EXPECT_GT(r.false_discoveries.value, 0.0);
}

TEST(Assist, AssistedNeverBelowUnassistedOnGrid) {
  for (double q : {0.0, 0.3, 1.0})
    for (double pv : {0.0, 0.5, 1.0})
      for (double pf : {0.0, 0.5, 1.0}) {
        AssistRun run;
        run.family = FamilyId::alphabetize;
        run.n_instances = 300;
        run.assist.critiquer = NoisyCritiquer{q};
        run.assist.p_accept_valid = pv;
        run.assist.p_find = pf;
        const AssistResult r = run_assist_sim(run);
        EXPECT_GE(r.assisted.mean_found.value, r.unassisted.mean_found.value);
        EXPECT_GE(r.assisted.intended_found.value, r.unassisted.intended_found.value);
        if (q * pv > 0 && pf < 1) {
          EXPECT_GT(r.assisted.mean_found.value, r.unassisted.mean_found.value);
        }
      }
}

TEST(Assist, DeterministicAndValidated) {
  AssistRun run;
  run.family = FamilyId::three_sat;
  run.n_instances = 500;
  EXPECT_EQ(run_assist_sim(run, 1), run_assist_sim(run, 8));
  run.assist.p_find = -0.1;
  try {
    run_assist_sim(run);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "p_find");
  }
}

std::size_t count_critiqueable(const Dataset& d) {
  std::size_t n = 0;
  for (const auto& a : d.answers) n += a.critiqueable;
  return n;
}

TEST(Dataset, ExactlyHalfAndRevalidates) {
  for (FamilyId f : kAllFamilies) {
    DatasetConfig c;
    c.family = f;
    c.master_seed = 4;
    const Dataset d = build_dataset(c);
    EXPECT_EQ(d.base.size(), 100u);
    EXPECT_EQ(d.answers.size(), 1000u);
    EXPECT_EQ(count_critiqueable(d), 500u) << to_string(f);
    EXPECT_EQ(d.critiques.size(), 500u);
    const auto fam = make_family(f);
    const DatasetCheck chk = validate_dataset(*fam, d.tasks, d.answers, d.critiques, d.helpfulness);
    EXPECT_EQ(chk.mismatches, 0u) << (chk.problems.empty() ? "" : chk.problems[0]);
    for (const auto& cr : d.critiques) EXPECT_TRUE(cr.valid);
    EXPECT_EQ(d, build_dataset(c));
  }
}

TEST(Dataset, SurvivesJsonlRoundTrip) {
  DatasetConfig c;
  c.family = FamilyId::three_sat;
  c.n_critiqueability = 200;
  const Dataset d = build_dataset(c);
  const auto dir = std::filesystem::temp_directory_path() / "critlab_dataset_test";
  std::filesystem::create_directories(dir);
  write_jsonl((dir / "tasks.jsonl.gz").string(), d.tasks);
  write_jsonl((dir / "answers.jsonl").string(), d.answers);
  write_jsonl((dir / "critiques.jsonl").string(), d.critiques);
  const auto tasks = read_jsonl<TaskRecord>((dir / "tasks.jsonl.gz").string());
  const auto answers = read_jsonl<AnswerRecord>((dir / "answers.jsonl").string());
  EXPECT_EQ(tasks, d.tasks);
  EXPECT_EQ(answers, d.answers);
  const auto fam = make_family(c.family);
  EXPECT_EQ(validate_dataset(*fam, tasks, answers, read_jsonl<CritiqueRecord>((dir / "critiques.jsonl").string()), {}).mismatches,
            0u);
  std::filesystem::remove_all(dir);
}

TEST(Dataset, RepeatsAndFillsWhenTheGeneratorIsLopsided) {
  DatasetConfig c;
  c.n_critiqueability = 400;
  c.generator = NoisyGenerator{0.02, 1};
  c.deterministic_answers = false;
  Dataset d = build_dataset(c);
  EXPECT_EQ(count_critiqueable(d), 200u);
  EXPECT_GT(d.stats.repeated_answers, 0u);

  c.generator = OracleGenerator{};
  d = build_dataset(c);
  EXPECT_EQ(count_critiqueable(d), 200u);
  EXPECT_EQ(d.stats.corruption_fill, 200u);

  c.generator = NoisyGenerator{1.0, 1};
  d = build_dataset(c);
  EXPECT_EQ(count_critiqueable(d), 200u);
  EXPECT_EQ(d.stats.oracle_fill, 200u);
}

TEST(Dataset, ImpossibleBalanceAndValidation) {
  DatasetConfig c;
  c.n_critiqueability = 100;
  c.generator = OracleGenerator{};
  c.allow_corruption = false;
  EXPECT_THROW(build_dataset(c), ImpossibleBalance);
  c.generator = NoisyGenerator{0.5, 1};
  EXPECT_NO_THROW(build_dataset(c));
  c.n_critiqueability = 7;
  EXPECT_THROW(build_dataset(c), ConfigError);
}

}  // namespace
}  // namespace critlab::experiments
