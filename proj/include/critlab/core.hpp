#pragma once

// Family-agnostic domain types shared by every other header.

#include <sodium.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace critlab {

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value of one family was handed to an operation of another.
class TagMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Text that does not follow a grammar. `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// A configuration value is missing or out of range. `key` is a dotted path.
class ConfigError : public InvalidArgument {
 public:
  ConfigError(std::string key, const std::string& problem)
      : InvalidArgument("config key '" + key + "': " + problem), key_(std::move(key)), problem_(problem) {}
  const std::string& key() const noexcept { return key_; }
  const std::string& problem() const noexcept { return problem_; }

 private:
  std::string key_;
  std::string problem_;
};

// ---------------------------------------------------------------------------
// Family identifiers

enum class FamilyId { addition, three_sat, alphabetize, paired_mcq };

inline constexpr std::array<FamilyId, 4> kAllFamilies = {
    FamilyId::addition, FamilyId::three_sat, FamilyId::alphabetize, FamilyId::paired_mcq};

inline constexpr std::string_view to_string(FamilyId id) noexcept {
  switch (id) {
    case FamilyId::addition: return "addition";
    case FamilyId::three_sat: return "three_sat";
    case FamilyId::alphabetize: return "alphabetize";
    case FamilyId::paired_mcq: return "paired_mcq";
  }
  return "unknown";
}

inline std::optional<FamilyId> parse_family_id(std::string_view name) noexcept {
  for (FamilyId id : kAllFamilies)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

inline FamilyId family_id_or_throw(std::string_view name) {
  if (auto id = parse_family_id(name)) return *id;
  throw InvalidArgument("unknown family '" + std::string(name) +
                        "' (allowed: addition, three_sat, alphabetize, paired_mcq)");
}

// ---------------------------------------------------------------------------
// Seeds and randomness

/// Mixes (master_seed, label, index) into a child seed with BLAKE2b.
inline std::uint64_t derive_stream(std::uint64_t master_seed, std::string_view label,
                                   std::uint64_t index) {
  static const int init = sodium_init();
  (void)init;
  std::vector<unsigned char> msg;
  msg.reserve(17 + label.size());
  for (int i = 0; i < 8; ++i) msg.push_back(static_cast<unsigned char>(master_seed >> (8 * i)));
  for (int i = 0; i < 8; ++i) msg.push_back(static_cast<unsigned char>(index >> (8 * i)));
  msg.push_back(static_cast<unsigned char>(label.size() & 0xff));
  msg.insert(msg.end(), label.begin(), label.end());
  std::array<unsigned char, 8> out{};
  crypto_generichash(out.data(), out.size(), msg.data(), msg.size(), nullptr, 0);
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed |= static_cast<std::uint64_t>(out[i]) << (8 * i);
  return seed;
}

/// derive_stream chained over several indices: label/i, then "#"/j, ...
inline std::uint64_t seed_path(std::uint64_t master_seed, std::string_view label,
                               std::initializer_list<std::uint64_t> indices) {
  std::uint64_t seed = master_seed;
  bool first = true;
  for (std::uint64_t idx : indices) {
    seed = derive_stream(seed, first ? label : std::string_view("#"), idx);
    first = false;
  }
  if (first) seed = derive_stream(seed, label, 0);
  return seed;
}

/// mt19937_64 with portable sampling helpers. The standard distributions are
/// implementation-defined, so they are avoided to keep outputs identical
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("Rng::below: bound must be positive");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Answers

struct AdditionSum {
  std::uint64_t value = 0;
  friend bool operator==(const AdditionSum&, const AdditionSum&) = default;
};

struct SatAssignment {
  std::map<std::string, bool> values;
  friend bool operator==(const SatAssignment&, const SatAssignment&) = default;
};

struct WordSequence {
  std::vector<std::string> words;
  friend bool operator==(const WordSequence&, const WordSequence&) = default;
};

struct McqChoices {
  char first = 'A';
  char second = 'A';
  friend bool operator==(const McqChoices&, const McqChoices&) = default;
};

using StructuredAnswer = std::variant<AdditionSum, SatAssignment, WordSequence, McqChoices>;

// ---------------------------------------------------------------------------
// Critiques

/// `index` is 1-based from the least significant digit.
struct DigitClaim {
  int index = 1;
  int claimed_digit = 0;
  friend bool operator==(const DigitClaim&, const DigitClaim&) = default;
};

struct Literal {
  std::string variable;
  bool negated = false;
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct UnsatisfiedClause {
  Clause clause;
  friend bool operator==(const UnsatisfiedClause&, const UnsatisfiedClause&) = default;
};

enum class DefectKind { missing_word, extra_word, misordered };

/// For misordered, `word` is the left word and `other` the right one; the
/// claim is that `word` sorts after `other`.
struct ListDefect {
  DefectKind kind = DefectKind::missing_word;
  std::string word;
  std::string other;
  friend bool operator==(const ListDefect&, const ListDefect&) = default;
};

struct McqCorrection {
  int question_index = 1;
  char claimed_choice = 'A';
  friend bool operator==(const McqCorrection&, const McqCorrection&) = default;
};

using StructuredCritique = std::variant<DigitClaim, UnsatisfiedClause, ListDefect, McqCorrection>;

// ---------------------------------------------------------------------------
// Questions

struct AdditionQuestion {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const AdditionQuestion&, const AdditionQuestion&) = default;
};

struct SatQuestion {
  std::vector<std::string> variables;
  std::vector<Clause> clauses;
  std::map<std::string, bool> planted;
  friend bool operator==(const SatQuestion&, const SatQuestion&) = default;
};

struct AlphabetizeQuestion {
  std::vector<std::string> words;
  friend bool operator==(const AlphabetizeQuestion&, const AlphabetizeQuestion&) = default;
};

struct McqItem {
  std::string stem;
  std::array<std::string, 4> options;
  char correct = 'A';
  friend bool operator==(const McqItem&, const McqItem&) = default;
};

struct McqQuestion {
  std::string passage;
  std::array<McqItem, 2> items;
  friend bool operator==(const McqQuestion&, const McqQuestion&) = default;
};

using Question = std::variant<AdditionQuestion, SatQuestion, AlphabetizeQuestion, McqQuestion>;

// Variant alternatives share the family order, so index() doubles as a tag.
inline FamilyId family_of(const StructuredAnswer& a) noexcept { return kAllFamilies[a.index()]; }
inline FamilyId family_of(const StructuredCritique& c) noexcept { return kAllFamilies[c.index()]; }
inline FamilyId family_of(const Question& q) noexcept { return kAllFamilies[q.index()]; }

// ---------------------------------------------------------------------------
// Instances and judgements

struct TaskInstance {
  FamilyId family = FamilyId::addition;
  std::string instance_id;
  Question question;
  StructuredAnswer oracle_answer;
  std::uint64_t seed = 0;
  friend bool operator==(const TaskInstance&, const TaskInstance&) = default;
};

/// "{family}-{seed as 16 lowercase hex digits}"
inline std::string make_instance_id(FamilyId family, std::uint64_t seed) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(seed));
  return std::string(to_string(family)) + "-" + hex;
}

struct Judgement {
  bool critiqueable = false;
  friend bool operator==(const Judgement&, const Judgement&) = default;
};

/// A probability-like value in [0, 1].
class Score {
 public:
  constexpr Score() = default;
  explicit Score(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0))
      throw InvalidArgument("Score must lie in [0,1], got " + std::to_string(value));
  }
  constexpr double value() const noexcept { return value_; }
  friend bool operator==(const Score&, const Score&) = default;

 private:
  double value_ = 0.0;
};

// ---------------------------------------------------------------------------
// Scanner used by the text grammars

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t position() const noexcept { return pos_; }
  bool at_end() { skip_ws(); return pos_ >= text_.size(); }

  void skip_ws() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  /// Consumes `word` after optional whitespace; interior whitespace in `word`
  /// matches any non-empty whitespace run.
  bool accept(std::string_view word) {
    const std::size_t save = pos_;
    skip_ws();
    std::size_t i = 0;
    while (i < word.size()) {
      if (is_space(word[i])) {
        while (i < word.size() && is_space(word[i])) ++i;
        if (pos_ >= text_.size() || !is_space(text_[pos_])) { pos_ = save; return false; }
        skip_ws();
        continue;
      }
      if (pos_ >= text_.size() || text_[pos_] != word[i]) { pos_ = save; return false; }
      ++pos_;
      ++i;
    }
    return true;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("'" + std::string(word) + "'");
  }

  /// [a-z_][a-z0-9_]*
  std::string identifier(std::string_view what = "identifier") {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (is_lower(text_[pos_]) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (is_lower(text_[pos_]) || is_digit(text_[pos_]) || text_[pos_] == '_'))
        ++pos_;
    }
    if (pos_ == start) fail(std::string(what));
    return std::string(text_.substr(start, pos_ - start));
  }

  /// [a-z]+
  std::string lower_word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_lower(text_[pos_])) ++pos_;
    if (pos_ == start) fail("lowercase word");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t unsigned_integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      const std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        pos_ = start;
        fail("integer that fits in 64 bits");
      }
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("decimal digits");
    return v;
  }

  char label() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] >= 'A' && text_[pos_] <= 'D') return text_[pos_++];
    fail("choice label A-D");
  }

  void expect_end() {
    if (!at_end()) fail("end of input");
  }

  [[noreturn]] void fail(std::string expected) const { throw ParseError(pos_, std::move(expected)); }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace critlab
