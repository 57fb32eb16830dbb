#pragma once

#include <critlab/family.hpp>

#include <set>

namespace critlab {

namespace sat {

inline constexpr std::string_view kNot = "\xC2\xAC";      // ¬
inline constexpr std::string_view kOr = "\xE2\x88\xA8";   // ∨
inline constexpr std::string_view kAnd = "\xE2\x88\xA7";  // ∧

/// Unassigned variables make their literals false.
inline bool literal_true(const Literal& lit, const std::map<std::string, bool>& values) {
  auto it = values.find(lit.variable);
  if (it == values.end()) return false;
  return it->second != lit.negated;
}

inline bool clause_satisfied(const Clause& c, const std::map<std::string, bool>& values) {
  return literal_true(c[0], values) || literal_true(c[1], values) || literal_true(c[2], values);
}

inline std::size_t satisfied_count(const std::vector<Clause>& clauses,
                                   const std::map<std::string, bool>& values) {
  std::size_t n = 0;
  for (const Clause& c : clauses) n += clause_satisfied(c, values) ? 1 : 0;
  return n;
}

/// Clauses compare as literal multisets, so "(a ∨ ¬b ∨ c)" names the same
/// clause as "(c ∨ a ∨ ¬b)".
inline Clause sorted(Clause c) {
  std::sort(c.begin(), c.end());
  return c;
}

inline bool same_clause(const Clause& x, const Clause& y) { return sorted(x) == sorted(y); }

inline std::string variable_name(int i, int n) {
  if (n <= 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i + 1);
}

inline std::string render_literal(const Literal& l) {
  return l.negated ? std::string(kNot) + l.variable : l.variable;
}

inline std::string render_clause(const Clause& c) {
  return "(" + render_literal(c[0]) + " " + std::string(kOr) + " " + render_literal(c[1]) + " " +
         std::string(kOr) + " " + render_literal(c[2]) + ")";
}

inline Literal parse_literal(Scanner& sc) {
  Literal l;
  l.negated = sc.accept(kNot) || sc.accept("!") || sc.accept("~");
  l.variable = sc.identifier("variable name");
  return l;
}

inline Clause parse_clause(Scanner& sc) {
  Clause c;
  sc.expect("(");
  for (int i = 0; i < 3; ++i) {
    if (i > 0 && !sc.accept(kOr) && !sc.accept("|")) sc.fail("'" + std::string(kOr) + "' or '|'");
    c[static_cast<std::size_t>(i)] = parse_literal(sc);
  }
  sc.expect(")");
  return c;
}

}  // namespace sat

class ThreeSatFamily
    : public BasicFamily<ThreeSatFamily, SatQuestion, SatAssignment, UnsatisfiedClause> {
 public:
  explicit ThreeSatFamily(SatConfig config = {}) : config_(config) {
    if (config_.variables < 3)
      throw InvalidArgument("three_sat: variables must be >= 3, got " + std::to_string(config_.variables));
    if (config_.clauses < 1)
      throw InvalidArgument("three_sat: clauses must be >= 1, got " + std::to_string(config_.clauses));
  }

  FamilyId id() const noexcept override { return FamilyId::three_sat; }
  const SatConfig& config() const noexcept { return config_; }

  /// Plants an assignment, then draws each clause uniformly among ordered
  /// 3-literal clauses over distinct variables that the assignment satisfies.
  SatQuestion make_question(Rng& rng) const {
    const int n = config_.variables;
    SatQuestion q;
    for (int i = 0; i < n; ++i) q.variables.push_back(sat::variable_name(i, n));
    for (const auto& v : q.variables) q.planted[v] = rng.bernoulli(0.5);
    const auto un = static_cast<std::uint64_t>(n);
    while (q.clauses.size() < static_cast<std::size_t>(config_.clauses)) {
      const auto x = rng.below(un), y = rng.below(un), z = rng.below(un);
      const bool nx = rng.bernoulli(0.5), ny = rng.bernoulli(0.5), nz = rng.bernoulli(0.5);
      if (x == y || y == z || x == z) continue;
      Clause c{Literal{q.variables[x], nx}, Literal{q.variables[y], ny}, Literal{q.variables[z], nz}};
      if (!sat::clause_satisfied(c, q.planted)) continue;
      q.clauses.push_back(std::move(c));
    }
    return q;
  }

  SatAssignment solve(const SatQuestion& q) const { return {q.planted}; }

  bool flawed(const SatQuestion& q, const SatAssignment& a) const {
    for (const Clause& c : q.clauses)
      if (!sat::clause_satisfied(c, a.values)) return true;
    return false;
  }

  std::vector<UnsatisfiedClause> all_valid(const SatQuestion& q, const SatAssignment& a) const {
    std::vector<UnsatisfiedClause> out;
    std::set<Clause> seen;
    for (const Clause& c : q.clauses)
      if (!sat::clause_satisfied(c, a.values) && seen.insert(sat::sorted(c)).second)
        out.push_back({c});
    return out;
  }

  UnsatisfiedClause pick_canonical(std::vector<UnsatisfiedClause> valid, Rng& rng) const {
    return std::move(valid[rng.below(valid.size())]);
  }

  bool helpful(const SatQuestion& q, const SatAssignment& a, const UnsatisfiedClause& u) const {
    if (sat::clause_satisfied(u.clause, a.values)) return false;
    return std::any_of(q.clauses.begin(), q.clauses.end(),
                       [&](const Clause& c) { return sat::same_clause(c, u.clause); });
  }

  SatAssignment corrupt_once(const SatQuestion& q, const SatAssignment& a, Rng& rng) const {
    SatAssignment out = a;
    const std::string& v = q.variables[rng.below(q.variables.size())];
    auto it = out.values.find(v);
    if (it == out.values.end())
      out.values[v] = true;
    else
      it->second = !it->second;
    return out;
  }

  /// Makes the named clause true by flipping whichever of its variables
  /// leaves the most clauses satisfied; ties go to the smallest name.
  SatAssignment apply(const SatQuestion& q, const SatAssignment& a, const UnsatisfiedClause& u) const {
    std::vector<Literal> lits(u.clause.begin(), u.clause.end());
    std::sort(lits.begin(), lits.end());
    std::optional<SatAssignment> best;
    std::size_t best_count = 0;
    for (const Literal& l : lits) {
      SatAssignment candidate = a;
      candidate.values[l.variable] = !l.negated;
      const std::size_t count = sat::satisfied_count(q.clauses, candidate.values);
      if (!best || count > best_count) {
        best = std::move(candidate);
        best_count = count;
      }
    }
    return *best;
  }

  UnsatisfiedClause invalid(const SatQuestion& q, const SatAssignment& a) const {
    std::vector<std::string> assigned;
    for (const auto& v : q.variables)
      if (a.values.count(v)) assigned.push_back(v);
    if (!assigned.empty()) {
      // A clause holding a literal the answer makes true cannot be unsatisfied.
      const std::string& t = assigned.front();
      Clause c;
      c[0] = Literal{t, !a.values.at(t)};
      std::size_t k = 1;
      for (const auto& v : q.variables) {
        if (k == 3) break;
        if (v != t) c[k++] = Literal{v, false};
      }
      return {c};
    }
    // Nothing assigned: the clause the planted assignment falsifies is never
    // part of the formula.
    Clause c;
    for (std::size_t k = 0; k < 3; ++k) c[k] = Literal{q.variables[k], q.planted.at(q.variables[k])};
    return {c};
  }

  SatAssignment placeholder(const SatQuestion& q) const {
    SatAssignment a;
    for (const auto& v : q.variables) a.values[v] = false;
    for (const Literal& l : q.clauses.front()) a.values[l.variable] = l.negated;
    return a;
  }

  std::size_t flaws(const SatQuestion& q, const SatAssignment& a) const {
    return q.clauses.size() - sat::satisfied_count(q.clauses, a.values);
  }

  std::string question_line(const SatQuestion& q) const {
    std::string s = "Provide boolean values for ";
    for (std::size_t i = 0; i < q.variables.size(); ++i) {
      if (i) s += ", ";
      s += q.variables[i];
    }
    s += " that satisfy the following formula: ";
    for (std::size_t i = 0; i < q.clauses.size(); ++i) {
      if (i) s += " " + std::string(sat::kAnd) + " ";
      s += sat::render_clause(q.clauses[i]);
    }
    return s;
  }

  static std::string render_answer_text(const SatAssignment& a) {
    std::string s;
    for (const auto& [name, value] : a.values) {
      if (!s.empty()) s += ", ";
      s += name + " = " + (value ? "true" : "false");
    }
    return s;
  }

  static SatAssignment parse_answer_text(std::string_view text) {
    Scanner sc(text);
    SatAssignment a;
    if (sc.at_end()) return a;
    do {
      const std::size_t pos = (sc.skip_ws(), sc.position());
      std::string name = sc.identifier("variable name");
      sc.expect("=");
      bool value;
      if (sc.accept("true"))
        value = true;
      else if (sc.accept("false"))
        value = false;
      else
        sc.fail("'true' or 'false'");
      if (!a.values.emplace(std::move(name), value).second)
        throw ParseError(pos, "each variable assigned once");
    } while (sc.accept(","));
    sc.expect_end();
    return a;
  }

  static std::string render_critique_text(const UnsatisfiedClause& u) {
    return "The following clause is not satisfied: " + sat::render_clause(u.clause);
  }

  static UnsatisfiedClause parse_critique_text(std::string_view text) {
    Scanner sc(text);
    sc.expect("The following clause is not satisfied:");
    UnsatisfiedClause u{sat::parse_clause(sc)};
    sc.expect_end();
    return u;
  }

 private:
  SatConfig config_;
};

}  // namespace critlab
