#include <critlab/families.hpp>
#include <critlab/policies.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace critlab {
namespace {

using testing::binomial_se;

/// Replays canned completions and records every request.
class FakeClient : public provider::CompletionClient {
 public:
  explicit FakeClient(std::vector<provider::Completion> replies) : replies_(std::move(replies)) {}
  provider::Completion complete(const provider::CompletionRequest& r) override {
    requests.push_back(r);
    return replies_.at((requests.size() - 1) % replies_.size());
  }
  std::vector<provider::CompletionRequest> requests;

 private:
  std::vector<provider::Completion> replies_;
};

ProviderPolicy fake_policy(std::shared_ptr<FakeClient> client) {
  ProviderProfile p;
  p.endpoint = "http://127.0.0.1:1/v1/completions";
  p.model_name = "fake";
  p.temperature = 1.0;
  return ProviderPolicy{p, std::move(client)};
}

class PerFamily : public ::testing::TestWithParam<FamilyId> {};

TEST_P(PerFamily, ZeroNoiseEqualsOracle) {
  const Family& f = family_lookup(GetParam());
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const TaskInstance inst = f.generate(derive_stream(3, "inst", s));
    const std::uint64_t seed = derive_stream(3, "policy", s);
    const auto noisy_a = sample_answer(f, NoisyGenerator{0.0, 2}, inst, seed).value;
    ASSERT_EQ(noisy_a, sample_answer(f, OracleGenerator{}, inst, seed).value);

    const StructuredAnswer flawed = f.corrupt(inst, inst.oracle_answer, 1, seed);
    for (const StructuredAnswer& a : {inst.oracle_answer, flawed}) {
      ASSERT_EQ(score_critiqueability(f, NoisyDiscriminator{0.0, 1.0}, inst, a, seed),
                score_critiqueability(f, OracleDiscriminator{}, inst, a, seed));
      const StructuredCritique c = sample_critique(f, OracleCritiquer{}, inst, a, seed).value;
      ASSERT_EQ(judge_helpfulness(f, NoisyJudge{0.0}, inst, a, c, seed),
                judge_helpfulness(f, OracleJudge{}, inst, a, c, seed));
      // The oracle critiquer on a sound answer and a never-hitting noisy
      // critiquer both fall back to the same invalid critique.
      if (!f.critiqueability_oracle(inst, a).critiqueable) {
        ASSERT_EQ(c, sample_critique(f, NoisyCritiquer{0.0}, inst, a, seed).value);
      }
    }
  }
}

TEST_P(PerFamily, OracleDiscriminatorThresholdEqualsOracle) {
  const Family& f = family_lookup(GetParam());
  for (std::uint64_t s = 0; s < 500; ++s) {
    const TaskInstance inst = f.generate(derive_stream(4, "inst", s));
    const StructuredAnswer a = sample_answer(f, NoisyGenerator{0.5, 1 + static_cast<int>(s % 3)}, inst, s).value;
    const bool judged = score_critiqueability(f, OracleDiscriminator{}, inst, a, s).value() >= 0.5;
    ASSERT_EQ(judged, f.critiqueability_oracle(inst, a).critiqueable);
  }
}

TEST_P(PerFamily, OracleCritiquerValidExactlyWhenFlawed) {
  const Family& f = family_lookup(GetParam());
  for (std::uint64_t s = 0; s < 500; ++s) {
    const TaskInstance inst = f.generate(derive_stream(5, "inst", s));
    const StructuredAnswer flawed = f.corrupt(inst, inst.oracle_answer, 1 + s % 3, s);
    for (const StructuredAnswer& a : {inst.oracle_answer, flawed}) {
      const StructuredCritique c = sample_critique(f, OracleCritiquer{}, inst, a, s).value;
      ASSERT_EQ(f.helpfulness_oracle(inst, a, c), f.critiqueability_oracle(inst, a).critiqueable);
      ASSERT_EQ(judge_helpfulness(f, OracleJudge{}, inst, a, c, s).value(), f.helpfulness_oracle(inst, a, c) ? 1.0 : 0.0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllFamilies, PerFamily, ::testing::ValuesIn(kAllFamilies),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(NoisyGenerator, FullNoiseAlwaysFlawsAddition) {
  const Family& f = family_lookup(FamilyId::addition);
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const TaskInstance inst = f.generate(s);
    ASSERT_TRUE(f.critiqueability_oracle(inst, sample_answer(f, NoisyGenerator{1.0, 1}, inst, s).value).critiqueable);
  }
}

TEST(NoisyGenerator, EpsilonSetsFlawRate) {
  const Family& f = family_lookup(FamilyId::addition);
  const int n = 10000;
  int flawed = 0;
  for (int s = 0; s < n; ++s) {
    const TaskInstance inst = f.generate(derive_stream(6, "inst", s));
    flawed += f.critiqueability_oracle(inst, sample_answer(f, NoisyGenerator{0.3, 1}, inst, derive_stream(6, "g", s)).value)
                  .critiqueable;
  }
  EXPECT_NEAR(flawed / double(n), 0.3, 3 * binomial_se(0.3, n));
}

TEST(NoisyDiscriminator, CoinFlipHasChanceAccuracy) {
  const Family& f = family_lookup(FamilyId::addition);
  const int n = 10000;
  int correct = 0;
  for (int s = 0; s < n; ++s) {
    const TaskInstance inst = f.generate(derive_stream(7, "inst", s));
    const StructuredAnswer a = (s % 2) ? f.corrupt(inst, inst.oracle_answer, 1, s) : inst.oracle_answer;
    const double score = score_critiqueability(f, NoisyDiscriminator{0.5, 0.9}, inst, a, derive_stream(7, "d", s)).value();
    ASSERT_TRUE(score == 0.9 || std::abs(score - 0.1) < 1e-12);
    correct += (score >= 0.5) == static_cast<bool>(s % 2);
  }
  EXPECT_NEAR(correct / double(n), 0.5, 3 * binomial_se(0.5, n));
}

TEST(NoisyCritiquer, HitRateSetsValidFraction) {
  const Family& f = family_lookup(FamilyId::three_sat);
  const int n = 10000;
  int valid = 0, total = 0;
  for (int s = 0; total < n; ++s) {
    const TaskInstance inst = f.generate(derive_stream(8, "inst", s));
    const StructuredAnswer a = f.corrupt(inst, inst.oracle_answer, 2, s);
    if (!f.critiqueability_oracle(inst, a).critiqueable) continue;
    ++total;
    valid += f.helpfulness_oracle(inst, a, sample_critique(f, NoisyCritiquer{0.5}, inst, a, derive_stream(8, "c", s)).value);
  }
  EXPECT_NEAR(valid / double(n), 0.5, 3 * binomial_se(0.5, n));
}

TEST(NoisyJudge, FlipRate) {
  const Family& f = family_lookup(FamilyId::addition);
  const TaskInstance inst = testing::worked_addition();
  const StructuredAnswer a = AdditionSum{1505629};
  const StructuredCritique good = DigitClaim{6, 4};
  int ones = 0;
  const int n = 10000;
  for (int s = 0; s < n; ++s) ones += judge_helpfulness(f, NoisyJudge{0.2}, inst, a, good, s).value() == 1.0;
  EXPECT_NEAR(ones / double(n), 0.8, 3 * binomial_se(0.8, n));
}

TEST(Policies, RejectOutOfRangeParameters) {
  const Family& f = family_lookup(FamilyId::addition);
  const TaskInstance inst = f.generate(1);
  EXPECT_THROW(sample_answer(f, NoisyGenerator{1.5, 1}, inst, 0), InvalidArgument);
  EXPECT_THROW(sample_answer(f, NoisyGenerator{1.0, 0}, inst, 0), InvalidArgument);
  EXPECT_THROW(score_critiqueability(f, NoisyDiscriminator{0.1, 0.5}, inst, inst.oracle_answer, 0), InvalidArgument);
  EXPECT_THROW(score_critiqueability(f, ConstantDiscriminator{2.0}, inst, inst.oracle_answer, 0), InvalidArgument);
  EXPECT_THROW(sample_critique(f, NoisyCritiquer{-0.1}, inst, inst.oracle_answer, 0), InvalidArgument);
}

TEST(FixedAnswer, ParseFailureBecomesFlawedAnswer) {
  const Family& f = family_lookup(FamilyId::addition);
  const TaskInstance inst = testing::worked_addition();
  const auto ok = sample_answer(f, FixedAnswerGenerator{"1405629"}, inst, 0);
  EXPECT_FALSE(ok.parse_failed);
  EXPECT_EQ(ok.value, StructuredAnswer(AdditionSum{1405629}));
  const auto bad = sample_answer(f, FixedAnswerGenerator{"one million"}, inst, 0);
  EXPECT_TRUE(bad.parse_failed);
  EXPECT_EQ(bad.raw, "one million");
  EXPECT_TRUE(f.critiqueability_oracle(inst, bad.value).critiqueable);
}

TEST(ProviderPolicy, AnswerUsesPromptAndParsesFirstLine) {
  const Family& f = family_lookup(FamilyId::addition);
  const TaskInstance inst = testing::worked_addition();
  auto client = std::make_shared<FakeClient>(std::vector<provider::Completion>{{" 1505629\n\nmore", std::nullopt}});
  const auto s = sample_answer(f, fake_policy(client), inst, 0);
  EXPECT_EQ(s.value, StructuredAnswer(AdditionSum{1505629}));
  EXPECT_FALSE(s.parse_failed);
  ASSERT_EQ(client->requests.size(), 1u);
  EXPECT_EQ(client->requests[0].prompt, "Question: 505579 + 900050\n\nAnswer:");
  EXPECT_EQ(client->requests[0].model, "fake");
  EXPECT_EQ(client->requests[0].temperature, 1.0);
}

TEST(ProviderPolicy, UnparseableCompletionsAreCountedNotFatal) {
  const Family& f = family_lookup(FamilyId::addition);
  const TaskInstance inst = testing::worked_addition();
  auto client = std::make_shared<FakeClient>(std::vector<provider::Completion>{{"I think it is big", std::nullopt}});
  const auto a = sample_answer(f, fake_policy(client), inst, 0);
  EXPECT_TRUE(a.parse_failed);
  EXPECT_EQ(a.raw, "I think it is big");
  EXPECT_TRUE(f.critiqueability_oracle(inst, a.value).critiqueable);
  const auto c = sample_critique(f, fake_policy(client), inst, AdditionSum{1505629}, 0);
  EXPECT_TRUE(c.parse_failed);
  EXPECT_FALSE(f.helpfulness_oracle(inst, AdditionSum{1505629}, c.value));
}

TEST(ProviderPolicy, CritiqueAndScores) {
  const Family& f = family_lookup(FamilyId::addition);
  const TaskInstance inst = testing::worked_addition();
  const StructuredAnswer a = AdditionSum{1505629};
  auto critic = std::make_shared<FakeClient>(std::vector<provider::Completion>{{"Digit at index 6 should be 4\n", std::nullopt}});
  EXPECT_EQ(sample_critique(f, fake_policy(critic), inst, a, 0).value, StructuredCritique(DigitClaim{6, 4}));
  EXPECT_TRUE(critic->requests[0].prompt.ends_with(
      "Are there any critiques for the above answer? If so, write one\nYes\n"));

  provider::CompletionToken tok{" Yes", std::log(0.6), {{" Yes", std::log(0.6)}, {" No", std::log(0.2)}}};
  auto disc = std::make_shared<FakeClient>(std::vector<provider::Completion>{{" Yes", std::vector{tok}}});
  EXPECT_NEAR(score_critiqueability(f, fake_policy(disc), inst, a, 0).value(), 0.75, 1e-12);
  EXPECT_EQ(disc->requests[0].logprobs, 5);

  auto judge = std::make_shared<FakeClient>(std::vector<provider::Completion>{{"No", std::nullopt}});
  EXPECT_EQ(judge_helpfulness(f, fake_policy(judge), inst, a, DigitClaim{6, 4}, 0).value(), 0.0);
  EXPECT_TRUE(judge->requests[0].prompt.find("Digit at index 6 should be 4") != std::string::npos);
}

TEST(NoiseLadder, NoiseDecreasesWithScale) {
  for (std::size_t i = 1; i < kNoiseLadder.size(); ++i) {
    EXPECT_LT(kNoiseLadder[i].epsilon, kNoiseLadder[i - 1].epsilon);
    EXPECT_GT(kNoiseLadder[i].hit_q, kNoiseLadder[i - 1].hit_q);
    EXPECT_LT(kNoiseLadder[i].flip_delta, kNoiseLadder[i - 1].flip_delta);
    EXPECT_LT(kNoiseLadder[i].judge_flip, kNoiseLadder[i - 1].judge_flip);
  }
  EXPECT_EQ(noise_profile("m").hit_q, 0.5);
  EXPECT_THROW(noise_profile("xxl"), InvalidArgument);
}

TEST(PolicyJson, RoundTripAndLadder) {
  using nlohmann::json;
  namespace pj = policy_json;
  const GeneratorPolicy g = NoisyGenerator{0.25, 3};
  EXPECT_EQ(pj::generator_from_json(pj::to_json(g), "generator"), g);
  const DiscriminatorPolicy d = NoisyDiscriminator{0.1, 0.8};
  EXPECT_EQ(pj::discriminator_from_json(pj::to_json(d), "discriminator"), d);
  const CritiquePolicy c = NoisyCritiquer{0.4};
  EXPECT_EQ(pj::critiquer_from_json(pj::to_json(c), "critiquer"), c);
  const HelpfulnessJudge h = NoisyJudge{0.05};
  EXPECT_EQ(pj::judge_from_json(pj::to_json(h), "judge"), h);

  EXPECT_EQ(pj::generator_from_json(json{{"kind", "noisy"}, {"profile", "xl"}}, "g"), GeneratorPolicy(NoisyGenerator{0.3, 1}));
  EXPECT_EQ(pj::critiquer_from_json(json{{"kind", "noisy"}, {"profile", "xs"}}, "c"), CritiquePolicy(NoisyCritiquer{0.2}));

  const json prov = {{"kind", "provider"}, {"profile", {{"endpoint", "http://localhost:9/x"}, {"model_name", "m"}}}};
  const GeneratorPolicy pg = pj::generator_from_json(prov, "generator");
  EXPECT_EQ(std::get<ProviderPolicy>(pg).profile.endpoint, "http://localhost:9/x");
  EXPECT_EQ(pj::to_json(pg)["profile"]["model_name"], "m");
}

TEST(PolicyJson, ErrorsNameTheKey) {
  using nlohmann::json;
  namespace pj = policy_json;
  auto key_of = [](auto&& fn) -> std::string {
    try {
      fn();
    } catch (const ConfigError& e) {
      return e.key();
    }
    return "<no error>";
  };
  EXPECT_EQ(key_of([] { pj::generator_from_json(json{{"kind", "noisy"}, {"epsilon", 2.0}}, "gdc.generator"); }),
            "gdc.generator.epsilon");
  EXPECT_EQ(key_of([] { pj::generator_from_json(json{{"kind", "wild"}}, "gdc.generator"); }), "gdc.generator.kind");
  EXPECT_EQ(key_of([] { pj::critiquer_from_json(json{{"kind", "noisy"}}, "c"); }), "c.hit_q");
  EXPECT_EQ(key_of([] { pj::judge_from_json(json{{"kind", "oracle"}, {"flip", 0.1}}, "j"); }), "j.flip");
  EXPECT_EQ(key_of([] { pj::discriminator_from_json(json{{"kind", "noisy"}, {"profile", "huge"}}, "d"); }), "d.profile");
  EXPECT_EQ(key_of([] {
              pj::generator_from_json(json{{"kind", "provider"}, {"profile", {{"endpoint", "ftp://x"}, {"model_name", "m"}}}},
                                      "g");
            }),
            "g.profile.endpoint");
}

}  // namespace
}  // namespace critlab
