#pragma once

// The task-family interface. Oracles work on structured values; text only
// appears in render_* / parse_* at the policy boundary.

#include <critlab/core.hpp>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace critlab {

struct SatConfig {
  int variables = 9;
  int clauses = 38;
};

struct McqCorpusQuestion {
  std::string stem;
  std::array<std::string, 4> options;
  char answer_label = 'A';
  friend bool operator==(const McqCorpusQuestion&, const McqCorpusQuestion&) = default;
};

struct McqCorpusRecord {
  std::string passage;
  std::vector<McqCorpusQuestion> questions;
  friend bool operator==(const McqCorpusRecord&, const McqCorpusRecord&) = default;
};

using McqCorpus = std::vector<McqCorpusRecord>;

/// Null pointers select the bundled word list / corpus.
struct FamilyConfig {
  SatConfig sat;
  std::shared_ptr<const std::vector<std::string>> words;
  std::shared_ptr<const McqCorpus> corpus;
};

/// How critique_oracle chooses among several valid critiques. `canonical`
/// follows each family's documented rule; `uniform` draws any valid one.
enum class CritiquePick { canonical, uniform };

class Family {
 public:
  virtual ~Family() = default;

  virtual FamilyId id() const noexcept = 0;

  virtual TaskInstance generate(std::uint64_t seed) const = 0;
  virtual StructuredAnswer solve_oracle(const TaskInstance& instance) const = 0;
  virtual Judgement critiqueability_oracle(const TaskInstance& instance,
                                           const StructuredAnswer& answer) const = 0;

  /// Every distinct critique that helpfulness_oracle accepts, in canonical order.
  virtual std::vector<StructuredCritique> valid_critiques(const TaskInstance& instance,
                                                          const StructuredAnswer& answer) const = 0;

  /// Throws InvalidArgument when the answer is not critiqueable.
  virtual StructuredCritique critique_oracle(const TaskInstance& instance,
                                             const StructuredAnswer& answer, std::uint64_t seed,
                                             CritiquePick pick) const = 0;
  StructuredCritique critique_oracle(const TaskInstance& instance, const StructuredAnswer& answer,
                                     std::uint64_t seed) const {
    return critique_oracle(instance, answer, seed, CritiquePick::canonical);
  }

  virtual bool helpfulness_oracle(const TaskInstance& instance, const StructuredAnswer& answer,
                                  const StructuredCritique& critique) const = 0;

  /// Applies `strength` random atomic edits; strength must be >= 1.
  virtual StructuredAnswer corrupt(const TaskInstance& instance, const StructuredAnswer& answer,
                                   int strength, std::uint64_t seed) const = 0;

  /// Requires helpfulness_oracle(instance, answer, critique).
  virtual StructuredAnswer apply_critique(const TaskInstance& instance,
                                          const StructuredAnswer& answer,
                                          const StructuredCritique& critique) const = 0;

  /// A well-formed critique that helpfulness_oracle rejects for this answer.
  virtual StructuredCritique invalid_critique(const TaskInstance& instance,
                                              const StructuredAnswer& answer) const = 0;

  /// A critiqueable stand-in for answers that could not be parsed.
  virtual StructuredAnswer flawed_answer(const TaskInstance& instance) const = 0;

  /// Family flaw measure: differing digits, unsatisfied clauses,
  /// inversions + multiset distance, or wrong labels.
  virtual std::size_t flaw_count(const TaskInstance& instance,
                                 const StructuredAnswer& answer) const = 0;

  virtual std::string passage_text(const TaskInstance& instance) const = 0;
  virtual std::string question_text(const TaskInstance& instance) const = 0;

  virtual std::string render_answer(const StructuredAnswer& answer) const = 0;
  virtual StructuredAnswer parse_answer(std::string_view text) const = 0;
  virtual std::string render_critique(const StructuredCritique& critique) const = 0;
  virtual StructuredCritique parse_critique(std::string_view text) const = 0;
};

/// Implements Family for one (question, answer, critique) triple by unpacking
/// the variants and forwarding to typed hooks on Derived.
template <class Derived, class Q, class A, class C>
class BasicFamily : public Family {
 public:
  using QuestionType = Q;
  using AnswerType = A;
  using CritiqueType = C;

  TaskInstance generate(std::uint64_t seed) const override {
    Rng rng(seed);
    Q q = self().make_question(rng);
    A oracle = self().solve(q);
    const FamilyId fid = id();
    return TaskInstance{fid, make_instance_id(fid, seed), std::move(q), std::move(oracle), seed};
  }

  StructuredAnswer solve_oracle(const TaskInstance& instance) const override {
    return self().solve(question(instance));
  }

  Judgement critiqueability_oracle(const TaskInstance& instance,
                                   const StructuredAnswer& answer) const override {
    return Judgement{self().flawed(question(instance), typed(answer))};
  }

  std::vector<StructuredCritique> valid_critiques(const TaskInstance& instance,
                                                  const StructuredAnswer& answer) const override {
    std::vector<StructuredCritique> out;
    for (C& c : self().all_valid(question(instance), typed(answer))) out.emplace_back(std::move(c));
    return out;
  }

  StructuredCritique critique_oracle(const TaskInstance& instance, const StructuredAnswer& answer,
                                     std::uint64_t seed, CritiquePick pick) const override {
    const Q& q = question(instance);
    const A& a = typed(answer);
    std::vector<C> valid = self().all_valid(q, a);
    if (valid.empty())
      throw InvalidArgument("critique_oracle: answer for " + instance.instance_id +
                            " is not critiqueable");
    Rng rng(seed);
    if (pick == CritiquePick::uniform) return valid[rng.below(valid.size())];
    return self().pick_canonical(std::move(valid), rng);
  }

  bool helpfulness_oracle(const TaskInstance& instance, const StructuredAnswer& answer,
                          const StructuredCritique& critique) const override {
    return self().helpful(question(instance), typed(answer), typed(critique));
  }

  StructuredAnswer corrupt(const TaskInstance& instance, const StructuredAnswer& answer,
                           int strength, std::uint64_t seed) const override {
    if (strength < 1)
      throw InvalidArgument("corrupt: strength must be >= 1, got " + std::to_string(strength));
    const Q& q = question(instance);
    A a = typed(answer);
    Rng rng(seed);
    for (int i = 0; i < strength; ++i) a = self().corrupt_once(q, a, rng);
    return a;
  }

  StructuredAnswer apply_critique(const TaskInstance& instance, const StructuredAnswer& answer,
                                  const StructuredCritique& critique) const override {
    const Q& q = question(instance);
    const A& a = typed(answer);
    const C& c = typed(critique);
    if (!self().helpful(q, a, c))
      throw InvalidArgument("apply_critique: critique '" + Derived::render_critique_text(c) +
                            "' is not valid for " + instance.instance_id);
    return self().apply(q, a, c);
  }

  StructuredCritique invalid_critique(const TaskInstance& instance,
                                      const StructuredAnswer& answer) const override {
    return self().invalid(question(instance), typed(answer));
  }

  StructuredAnswer flawed_answer(const TaskInstance& instance) const override {
    return self().placeholder(question(instance));
  }

  std::size_t flaw_count(const TaskInstance& instance,
                         const StructuredAnswer& answer) const override {
    return self().flaws(question(instance), typed(answer));
  }

  std::string passage_text(const TaskInstance& instance) const override {
    return self().passage(question(instance));
  }

  std::string question_text(const TaskInstance& instance) const override {
    return self().question_line(question(instance));
  }

  std::string render_answer(const StructuredAnswer& answer) const override {
    return Derived::render_answer_text(typed(answer));
  }

  StructuredAnswer parse_answer(std::string_view text) const override {
    return Derived::parse_answer_text(text);
  }

  std::string render_critique(const StructuredCritique& critique) const override {
    return Derived::render_critique_text(typed(critique));
  }

  StructuredCritique parse_critique(std::string_view text) const override {
    return Derived::parse_critique_text(text);
  }

 protected:
  // Defaults that individual families may hide.
  C pick_canonical(std::vector<C> valid, Rng&) const { return std::move(valid.front()); }
  std::string passage(const Q&) const { return {}; }

  const Q& question(const TaskInstance& instance) const {
    if (instance.family != id())
      throw TagMismatch("instance " + instance.instance_id + " does not belong to family " +
                        std::string(to_string(id())));
    const Q* q = std::get_if<Q>(&instance.question);
    if (!q) throw TagMismatch("instance question does not match family " + std::string(to_string(id())));
    return *q;
  }

  const A& typed(const StructuredAnswer& answer) const {
    const A* a = std::get_if<A>(&answer);
    if (!a)
      throw TagMismatch("answer of family " + std::string(to_string(family_of(answer))) +
                        " given to family " + std::string(to_string(id())));
    return *a;
  }

  const C& typed(const StructuredCritique& critique) const {
    const C* c = std::get_if<C>(&critique);
    if (!c)
      throw TagMismatch("critique of family " + std::string(to_string(family_of(critique))) +
                        " given to family " + std::string(to_string(id())));
    return *c;
  }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

}  // namespace critlab
