#pragma once

#include <critlab/family.hpp>

namespace critlab {

namespace digits {

inline int count(std::uint64_t v) noexcept {
  int n = 1;
  while (v >= 10) { v /= 10; ++n; }
  return n;
}

/// 10^(index-1), or 0 when that place does not fit in 64 bits.
inline std::uint64_t place(int index) noexcept {
  if (index < 1 || index > 20) return 0;
  std::uint64_t p = 1;
  for (int i = 1; i < index; ++i) p *= 10;
  return p;
}

/// Digit at a 1-based index from the least significant end; 0 past the end.
inline int at(std::uint64_t v, int index) noexcept {
  const std::uint64_t p = place(index);
  if (p == 0) return 0;
  return static_cast<int>((v / p) % 10);
}

inline std::uint64_t with_digit(std::uint64_t v, int index, int digit) {
  const std::uint64_t p = place(index);
  if (p == 0) throw InvalidArgument("digit index " + std::to_string(index) + " out of range");
  return v - static_cast<std::uint64_t>(at(v, index)) * p + static_cast<std::uint64_t>(digit) * p;
}

}  // namespace digits

class AdditionFamily
    : public BasicFamily<AdditionFamily, AdditionQuestion, AdditionSum, DigitClaim> {
 public:
  FamilyId id() const noexcept override { return FamilyId::addition; }

  AdditionQuestion make_question(Rng& rng) const {
    const auto a = static_cast<std::uint64_t>(rng.between(100000, 999999));
    const auto b = static_cast<std::uint64_t>(rng.between(100000, 999999));
    return {a, b};
  }

  AdditionSum solve(const AdditionQuestion& q) const { return {q.a + q.b}; }

  bool flawed(const AdditionQuestion& q, const AdditionSum& s) const { return s.value != q.a + q.b; }

  /// Ascending digit index, so front() is the lowest differing digit.
  std::vector<DigitClaim> all_valid(const AdditionQuestion& q, const AdditionSum& s) const {
    const std::uint64_t truth = q.a + q.b;
    std::vector<DigitClaim> out;
    const int n = std::max(digits::count(truth), digits::count(s.value));
    for (int i = 1; i <= n; ++i)
      if (digits::at(s.value, i) != digits::at(truth, i)) out.push_back({i, digits::at(truth, i)});
    return out;
  }

  bool helpful(const AdditionQuestion& q, const AdditionSum& s, const DigitClaim& c) const {
    if (c.index < 1 || c.claimed_digit < 0 || c.claimed_digit > 9) return false;
    return digits::at(s.value, c.index) != c.claimed_digit &&
           digits::at(q.a + q.b, c.index) == c.claimed_digit;
  }

  AdditionSum corrupt_once(const AdditionQuestion&, const AdditionSum& s, Rng& rng) const {
    const int index = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(digits::count(s.value))));
    const int old_digit = digits::at(s.value, index);
    int d = static_cast<int>(rng.below(9));
    if (d >= old_digit) ++d;
    return {digits::with_digit(s.value, index, d)};
  }

  AdditionSum apply(const AdditionQuestion&, const AdditionSum& s, const DigitClaim& c) const {
    return {digits::with_digit(s.value, c.index, c.claimed_digit)};
  }

  DigitClaim invalid(const AdditionQuestion&, const AdditionSum& s) const {
    return {1, digits::at(s.value, 1)};
  }

  AdditionSum placeholder(const AdditionQuestion&) const { return {0}; }

  std::size_t flaws(const AdditionQuestion& q, const AdditionSum& s) const {
    return all_valid(q, s).size();
  }

  std::string question_line(const AdditionQuestion& q) const {
    return std::to_string(q.a) + " + " + std::to_string(q.b);
  }

  static std::string render_answer_text(const AdditionSum& s) { return std::to_string(s.value); }

  static AdditionSum parse_answer_text(std::string_view text) {
    Scanner sc(text);
    AdditionSum s{sc.unsigned_integer()};
    sc.expect_end();
    return s;
  }

  static std::string render_critique_text(const DigitClaim& c) {
    return "Digit at index " + std::to_string(c.index) + " should be " +
           std::to_string(c.claimed_digit);
  }

  static DigitClaim parse_critique_text(std::string_view text) {
    Scanner sc(text);
    sc.expect("Digit at index");
    const std::size_t index_pos = sc.position();
    const std::uint64_t index = sc.unsigned_integer();
    if (index < 1 || index > 1000) throw ParseError(index_pos, "digit index >= 1");
    sc.expect("should be");
    const std::size_t digit_pos = sc.position();
    const std::uint64_t digit = sc.unsigned_integer();
    if (digit > 9) throw ParseError(digit_pos, "single digit 0-9");
    sc.expect_end();
    return {static_cast<int>(index), static_cast<int>(digit)};
  }
};

}  // namespace critlab
