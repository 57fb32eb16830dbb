#pragma once

// Prompt layout shared by every task kind. Fields always appear in the order
// passage, question, answer, critiqueability, critique, helpfulness,
// refinement; each kind keeps the prefix it needs and leaves the completion
// region open at the end.

#include <critlab/family.hpp>

namespace critlab {

enum class PromptKind {
  answer,
  critiqueability,
  critique,
  helpfulness,
  conditional_refinement,
  direct_refinement,
};

inline constexpr std::array<PromptKind, 6> kAllPromptKinds = {
    PromptKind::answer,      PromptKind::critiqueability,        PromptKind::critique,
    PromptKind::helpfulness, PromptKind::conditional_refinement, PromptKind::direct_refinement,
};

inline constexpr std::string_view to_string(PromptKind k) noexcept {
  switch (k) {
    case PromptKind::answer: return "answer";
    case PromptKind::critiqueability: return "critiqueability";
    case PromptKind::critique: return "critique";
    case PromptKind::helpfulness: return "helpfulness";
    case PromptKind::conditional_refinement: return "conditional_refinement";
    case PromptKind::direct_refinement: return "direct_refinement";
  }
  return "?";
}

inline constexpr std::string_view kCritiquePromptLine =
    "Are there any critiques for the above answer? If so, write one";
inline constexpr std::string_view kHelpfulnessPromptLine = "Is this critique correct and useful? Reply Yes or No";
inline constexpr std::string_view kRefinementPromptLine = "Revised answer:";

struct PromptFields {
  std::string passage;  // empty: no passage block
  std::string question;
  std::optional<std::string> answer;
  std::optional<std::string> critique;
};

inline std::string format_prompt(PromptKind kind, const PromptFields& f) {
  auto require = [&](const std::optional<std::string>& field, const char* name) -> const std::string& {
    if (!field)
      throw InvalidArgument(std::string("format_prompt: ") + std::string(to_string(kind)) + " prompt needs " + name);
    return *field;
  };
  std::string out;
  if (!f.passage.empty()) out += f.passage + "\n\n";
  out += "Question: " + f.question + "\n\n";
  if (kind == PromptKind::answer) return out + "Answer:";

  out += "Answer: " + require(f.answer, "an answer") + "\n\n";
  out += kCritiquePromptLine;
  out += '\n';
  switch (kind) {
    case PromptKind::critiqueability: return out;
    case PromptKind::critique: return out + "Yes\n";
    case PromptKind::helpfulness:
      return out + require(f.critique, "a critique") + "\n\n" + std::string(kHelpfulnessPromptLine) + "\n";
    case PromptKind::conditional_refinement:
      return out + require(f.critique, "a critique") + "\n\n" + std::string(kRefinementPromptLine) + "\n";
    case PromptKind::direct_refinement: return out + "Yes\n\n" + std::string(kRefinementPromptLine) + "\n";
    case PromptKind::answer: break;
  }
  return out;
}

/// Renders the family's question, answer and critique text into the layout.
inline std::string format_prompt(const Family& family, PromptKind kind, const TaskInstance& instance,
                                 const StructuredAnswer* answer = nullptr,
                                 const StructuredCritique* critique = nullptr) {
  PromptFields f{family.passage_text(instance), family.question_text(instance), std::nullopt, std::nullopt};
  if (answer) f.answer = family.render_answer(*answer);
  if (critique) f.critique = family.render_critique(*critique);
  return format_prompt(kind, f);
}

}  // namespace critlab
