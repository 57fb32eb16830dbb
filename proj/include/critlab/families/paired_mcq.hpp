#pragma once

#include <critlab/family.hpp>
#include <critlab/data/mcq_corpus.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace critlab {

class CorpusError : public Error {
 public:
  using Error::Error;
};

namespace mcq {

inline bool valid_label(char c) { return c >= 'A' && c <= 'D'; }

inline char label_from_json(const nlohmann::json& j) {
  const std::string s = j.get<std::string>();
  if (s.size() != 1 || !valid_label(s[0])) throw CorpusError("answer label must be one of A-D, got '" + s + "'");
  return s[0];
}

inline std::array<std::string, 4> options_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw CorpusError("each question needs exactly 4 options");
  return {j[0].get<std::string>(), j[1].get<std::string>(), j[2].get<std::string>(),
          j[3].get<std::string>()};
}

/// Accepts the native record shape
///   {"passage", "questions": [{"stem", "options": [4], "answer_label"}]}
/// and RACE-style records
///   {"article", "questions": [stem...], "options": [[4]...], "answers": [label...]}.
inline McqCorpusRecord record_from_json(const nlohmann::json& j) {
  McqCorpusRecord r;
  try {
    if (j.contains("article")) {
      r.passage = j.at("article").get<std::string>();
      const auto& stems = j.at("questions");
      const auto& opts = j.at("options");
      const auto& answers = j.at("answers");
      if (stems.size() != opts.size() || stems.size() != answers.size())
        throw CorpusError("RACE record has mismatched questions/options/answers lengths");
      for (std::size_t i = 0; i < stems.size(); ++i)
        r.questions.push_back({stems[i].get<std::string>(), options_from_json(opts[i]),
                               label_from_json(answers[i])});
    } else {
      r.passage = j.at("passage").get<std::string>();
      for (const auto& q : j.at("questions"))
        r.questions.push_back({q.at("stem").get<std::string>(), options_from_json(q.at("options")),
                               label_from_json(q.at("answer_label"))});
    }
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError(std::string("malformed corpus record: ") + e.what());
  }
  return r;
}

inline nlohmann::ordered_json record_to_json(const McqCorpusRecord& r) {
  nlohmann::ordered_json j;
  j["passage"] = r.passage;
  j["questions"] = nlohmann::ordered_json::array();
  for (const auto& q : r.questions)
    j["questions"].push_back({{"stem", q.stem},
                              {"options", q.options},
                              {"answer_label", std::string(1, q.answer_label)}});
  return j;
}

/// Parses jsonl text and keeps records with at least two questions.
inline McqCorpus parse_corpus(std::string_view text) {
  McqCorpus corpus;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw CorpusError("corpus line " + std::to_string(line_no) + ": " + e.what());
      }
      try {
        McqCorpusRecord r = record_from_json(j);
        if (r.questions.size() >= 2) corpus.push_back(std::move(r));
      } catch (const CorpusError& e) {
        throw CorpusError("corpus line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return corpus;
}

inline std::shared_ptr<const McqCorpus> load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open MCQ corpus '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return std::make_shared<const McqCorpus>(parse_corpus(ss.str()));
}

inline char wrong_label(char correct) { return correct == 'D' ? 'A' : static_cast<char>(correct + 1); }

}  // namespace mcq

inline const std::shared_ptr<const McqCorpus>& bundled_corpus() {
  static const auto corpus = std::make_shared<const McqCorpus>(mcq::parse_corpus(data::kMcqCorpus));
  return corpus;
}

class PairedMcqFamily
    : public BasicFamily<PairedMcqFamily, McqQuestion, McqChoices, McqCorrection> {
 public:
  explicit PairedMcqFamily(std::shared_ptr<const McqCorpus> corpus = nullptr)
      : corpus_(corpus ? std::move(corpus) : bundled_corpus()) {
    if (corpus_->empty()) throw CorpusError("paired_mcq: corpus has no usable records (need >= 2 questions)");
  }

  FamilyId id() const noexcept override { return FamilyId::paired_mcq; }
  const McqCorpus& corpus() const noexcept { return *corpus_; }

  McqQuestion make_question(Rng& rng) const {
    const McqCorpusRecord& r = (*corpus_)[rng.below(corpus_->size())];
    const std::size_t first = rng.below(r.questions.size());
    std::size_t second = rng.below(r.questions.size() - 1);
    if (second >= first) ++second;
    McqQuestion q;
    q.passage = r.passage;
    for (std::size_t k = 0; k < 2; ++k) {
      const McqCorpusQuestion& src = r.questions[k == 0 ? first : second];
      q.items[k] = McqItem{src.stem, src.options, src.answer_label};
    }
    return q;
  }

  McqChoices solve(const McqQuestion& q) const { return {q.items[0].correct, q.items[1].correct}; }

  bool flawed(const McqQuestion& q, const McqChoices& c) const {
    return c.first != q.items[0].correct || c.second != q.items[1].correct;
  }

  std::vector<McqCorrection> all_valid(const McqQuestion& q, const McqChoices& c) const {
    std::vector<McqCorrection> out;
    if (c.first != q.items[0].correct) out.push_back({1, q.items[0].correct});
    if (c.second != q.items[1].correct) out.push_back({2, q.items[1].correct});
    return out;
  }

  bool helpful(const McqQuestion& q, const McqChoices& c, const McqCorrection& m) const {
    if (m.question_index != 1 && m.question_index != 2) return false;
    const char chosen = label_of(c, m.question_index);
    const char correct = q.items[static_cast<std::size_t>(m.question_index - 1)].correct;
    return chosen != correct && m.claimed_choice == correct;
  }

  /// Moves one question's label to a wrong label it does not already hold.
  McqChoices corrupt_once(const McqQuestion& q, const McqChoices& c, Rng& rng) const {
    McqChoices out = c;
    const int k = 1 + static_cast<int>(rng.below(2));
    const char correct = q.items[static_cast<std::size_t>(k - 1)].correct;
    char& slot = k == 1 ? out.first : out.second;
    std::vector<char> options;
    for (char l : {'A', 'B', 'C', 'D'})
      if (l != correct && l != slot) options.push_back(l);
    slot = options[rng.below(options.size())];
    return out;
  }

  McqChoices apply(const McqQuestion&, const McqChoices& c, const McqCorrection& m) const {
    McqChoices out = c;
    (m.question_index == 1 ? out.first : out.second) = m.claimed_choice;
    return out;
  }

  McqCorrection invalid(const McqQuestion&, const McqChoices& c) const { return {1, c.first}; }

  McqChoices placeholder(const McqQuestion& q) const {
    return {mcq::wrong_label(q.items[0].correct), mcq::wrong_label(q.items[1].correct)};
  }

  std::size_t flaws(const McqQuestion& q, const McqChoices& c) const { return all_valid(q, c).size(); }

  std::string passage(const McqQuestion& q) const { return q.passage; }

  std::string question_line(const McqQuestion& q) const {
    std::string s;
    for (std::size_t k = 0; k < 2; ++k) {
      if (k) s += '\n';
      s += "Q" + std::to_string(k + 1) + ". " + q.items[k].stem;
      for (std::size_t o = 0; o < 4; ++o)
        s += "\n" + std::string(1, static_cast<char>('A' + o)) + ". " + q.items[k].options[o];
    }
    return s;
  }

  static std::string render_answer_text(const McqChoices& c) {
    return std::string("1 = ") + c.first + ", 2 = " + c.second;
  }

  static McqChoices parse_answer_text(std::string_view text) {
    Scanner sc(text);
    McqChoices c;
    sc.expect("1");
    sc.expect("=");
    c.first = sc.label();
    sc.expect(",");
    sc.expect("2");
    sc.expect("=");
    c.second = sc.label();
    sc.expect_end();
    return c;
  }

  static std::string render_critique_text(const McqCorrection& m) {
    return "Answer to question " + std::to_string(m.question_index) + " should be " + m.claimed_choice;
  }

  static McqCorrection parse_critique_text(std::string_view text) {
    Scanner sc(text);
    sc.expect("Answer to question");
    McqCorrection m;
    if (sc.accept("1"))
      m.question_index = 1;
    else if (sc.accept("2"))
      m.question_index = 2;
    else
      sc.fail("question index 1 or 2");
    sc.expect("should be");
    m.claimed_choice = sc.label();
    sc.expect_end();
    return m;
  }

 private:
  static char label_of(const McqChoices& c, int k) { return k == 1 ? c.first : c.second; }

  std::shared_ptr<const McqCorpus> corpus_;
};

}  // namespace critlab
