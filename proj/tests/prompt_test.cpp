#include <critlab/families.hpp>
#include <critlab/prompt.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "test_support.hpp"

namespace critlab {
namespace {

TEST(Prompt, CritiqueabilityEndsWithCritiqueLine) {
  const Family& f = family_lookup(FamilyId::addition);
  const TaskInstance inst = testing::worked_addition();
  const StructuredAnswer a = AdditionSum{1505629};
  const std::string p = format_prompt(f, PromptKind::critiqueability, inst, &a);
  EXPECT_EQ(p,
            "Question: 505579 + 900050\n\n"
            "Answer: 1505629\n\n"
            "Are there any critiques for the above answer? If so, write one\n");
  EXPECT_EQ(p, format_prompt(f, PromptKind::critiqueability, inst, &a));
}

TEST(Prompt, KindsShareOnePrefix) {
  const Family& f = family_lookup(FamilyId::addition);
  const TaskInstance inst = testing::worked_addition();
  const StructuredAnswer a = AdditionSum{1505629};
  const StructuredCritique c = DigitClaim{6, 4};
  const std::string base = format_prompt(f, PromptKind::critiqueability, inst, &a);
  EXPECT_EQ(format_prompt(f, PromptKind::critique, inst, &a), base + "Yes\n");
  EXPECT_EQ(format_prompt(f, PromptKind::helpfulness, inst, &a, &c),
            base + "Digit at index 6 should be 4\n\n" + std::string(kHelpfulnessPromptLine) + "\n");
  EXPECT_EQ(format_prompt(f, PromptKind::conditional_refinement, inst, &a, &c),
            base + "Digit at index 6 should be 4\n\n" + std::string(kRefinementPromptLine) + "\n");
  EXPECT_EQ(format_prompt(f, PromptKind::direct_refinement, inst, &a),
            base + "Yes\n\n" + std::string(kRefinementPromptLine) + "\n");
}

TEST(Prompt, PassageLeadsWhenPresent) {
  const Family& f = family_lookup(FamilyId::paired_mcq);
  const TaskInstance inst = testing::worked_mcq();
  EXPECT_TRUE(format_prompt(f, PromptKind::answer, inst).starts_with("[passage]\n\nQuestion: Q1. "));
}

TEST(Prompt, MissingFieldsAreErrors) {
  EXPECT_THROW(format_prompt(PromptKind::critique, PromptFields{"", "q", std::nullopt, std::nullopt}), InvalidArgument);
  EXPECT_THROW(format_prompt(PromptKind::helpfulness, PromptFields{"", "q", "a", std::nullopt}), InvalidArgument);
  EXPECT_THROW(format_prompt(PromptKind::conditional_refinement, PromptFields{"", "q", "a", std::nullopt}),
               InvalidArgument);
  EXPECT_NO_THROW(format_prompt(PromptKind::answer, PromptFields{"", "q", std::nullopt, std::nullopt}));
}

struct GoldenCase {
  FamilyId family;
  TaskInstance instance;
  StructuredAnswer answer;
};

std::string all_kinds(const GoldenCase& g) {
  const Family& f = family_lookup(g.family);
  const StructuredCritique c = f.critique_oracle(g.instance, g.answer, 0);
  std::string out;
  for (PromptKind k : kAllPromptKinds) {
    out += "===== " + std::string(to_string(k)) + " =====\n";
    out += format_prompt(f, k, g.instance, &g.answer, &c);
    out += "\n";
  }
  return out;
}

std::vector<GoldenCase> golden_cases() {
  using namespace testing;
  return {
      {FamilyId::addition, worked_addition(), AdditionSum{1505629}},
      {FamilyId::three_sat, worked_sat(), family_lookup(FamilyId::three_sat).parse_answer(kWorkedSatAnswer)},
      {FamilyId::alphabetize, worked_alphabetize(), WordSequence{split_words(kWorkedWordAnswer)}},
      {FamilyId::paired_mcq, worked_mcq(), McqChoices{'C', 'D'}},
  };
}

// Regenerate with CRITLAB_UPDATE_GOLDEN=1 and review the diff by hand.
TEST(Prompt, GoldenFiles) {
  const bool update = std::getenv("CRITLAB_UPDATE_GOLDEN") != nullptr;
  for (const GoldenCase& g : golden_cases()) {
    const std::string path = std::string(CRITLAB_TEST_DATA_DIR) + "/golden/" + std::string(to_string(g.family)) + ".txt";
    const std::string got = all_kinds(g);
    if (update) {
      std::ofstream(path, std::ios::binary) << got;
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    ASSERT_TRUE(in) << "missing golden file " << path;
    std::stringstream want;
    want << in.rdbuf();
    EXPECT_EQ(got, want.str()) << path;
  }
}

}  // namespace
}  // namespace critlab
