#pragma once

#include <critlab/family.hpp>
#include <critlab/data/word_list.hpp>

#include <set>

namespace critlab {

inline constexpr std::size_t kAlphabetizeWords = 18;

/// The bundled lowercase word list, split once.
inline const std::shared_ptr<const std::vector<std::string>>& bundled_words() {
  static const auto words = [] {
    auto out = std::make_shared<std::vector<std::string>>();
    std::string_view rest = data::kWordList;
    while (!rest.empty()) {
      const std::size_t nl = rest.find('\n');
      std::string_view line = rest.substr(0, nl);
      if (!line.empty()) out->emplace_back(line);
      if (nl == std::string_view::npos) break;
      rest.remove_prefix(nl + 1);
    }
    return std::shared_ptr<const std::vector<std::string>>(std::move(out));
  }();
  return words;
}

namespace words {

inline std::map<std::string, int> counts(const std::vector<std::string>& ws) {
  std::map<std::string, int> m;
  for (const auto& w : ws) ++m[w];
  return m;
}

inline std::size_t inversions(const std::vector<std::string>& ws) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      if (ws[i] > ws[j]) ++n;
  return n;
}

inline std::size_t multiset_distance(const std::vector<std::string>& answer,
                                     const std::vector<std::string>& input) {
  auto have = counts(answer);
  auto want = counts(input);
  std::size_t d = 0;
  for (const auto& [w, c] : have) d += static_cast<std::size_t>(std::abs(c - (want.count(w) ? want[w] : 0)));
  for (const auto& [w, c] : want)
    if (!have.count(w)) d += static_cast<std::size_t>(c);
  return d;
}

inline bool valid_word(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

}  // namespace words

class AlphabetizeFamily
    : public BasicFamily<AlphabetizeFamily, AlphabetizeQuestion, WordSequence, ListDefect> {
 public:
  explicit AlphabetizeFamily(std::shared_ptr<const std::vector<std::string>> word_list = nullptr)
      : words_(word_list ? std::move(word_list) : bundled_words()) {
    std::set<std::string> distinct;
    for (const auto& w : *words_) {
      if (!words::valid_word(w))
        throw InvalidArgument("alphabetize: word list entry '" + w + "' is not lowercase ASCII");
      distinct.insert(w);
    }
    if (distinct.size() < kAlphabetizeWords + 1)
      throw InvalidArgument("alphabetize: word list needs at least 19 distinct words");
  }

  FamilyId id() const noexcept override { return FamilyId::alphabetize; }
  const std::vector<std::string>& word_list() const noexcept { return *words_; }

  AlphabetizeQuestion make_question(Rng& rng) const {
    AlphabetizeQuestion q;
    std::set<std::string> used;
    while (q.words.size() < kAlphabetizeWords) {
      const std::string& w = (*words_)[rng.below(words_->size())];
      if (used.insert(w).second) q.words.push_back(w);
    }
    return q;
  }

  WordSequence solve(const AlphabetizeQuestion& q) const {
    WordSequence s{q.words};
    std::sort(s.words.begin(), s.words.end());
    return s;
  }

  bool flawed(const AlphabetizeQuestion& q, const WordSequence& s) const {
    return words::counts(s.words) != words::counts(q.words) ||
           !std::is_sorted(s.words.begin(), s.words.end());
  }

  /// Missing words (input order), then extra words (answer order), then
  /// misordered adjacent pairs (answer order).
  std::vector<ListDefect> all_valid(const AlphabetizeQuestion& q, const WordSequence& s) const {
    std::vector<ListDefect> out;
    auto have = words::counts(s.words);
    auto want = words::counts(q.words);
    std::set<std::string> seen;
    for (const auto& w : q.words)
      if (have[w] < want[w] && seen.insert(w).second)
        out.push_back({DefectKind::missing_word, w, {}});
    seen.clear();
    for (const auto& w : s.words)
      if (have[w] > want[w] && seen.insert(w).second) out.push_back({DefectKind::extra_word, w, {}});
    std::set<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i + 1 < s.words.size(); ++i)
      if (s.words[i] > s.words[i + 1] && pairs.emplace(s.words[i], s.words[i + 1]).second)
        out.push_back({DefectKind::misordered, s.words[i], s.words[i + 1]});
    return out;
  }

  bool helpful(const AlphabetizeQuestion& q, const WordSequence& s, const ListDefect& d) const {
    switch (d.kind) {
      case DefectKind::missing_word: return count(s.words, d.word) < count(q.words, d.word);
      case DefectKind::extra_word: return count(s.words, d.word) > count(q.words, d.word);
      case DefectKind::misordered: return misordered_at(s, d) < s.words.size();
    }
    return false;
  }

  /// Half the time swaps an adjacent pair; otherwise deletes a word and
  /// inserts a word-list word that the answer does not contain.
  WordSequence corrupt_once(const AlphabetizeQuestion&, const WordSequence& s, Rng& rng) const {
    WordSequence out = s;
    auto& ws = out.words;
    const bool swap = rng.bernoulli(0.5);
    if (swap && ws.size() >= 2) {
      const std::size_t i = rng.below(ws.size() - 1);
      if (ws[i] != ws[i + 1]) {
        std::swap(ws[i], ws[i + 1]);
        return out;
      }
    }
    if (!ws.empty()) ws.erase(ws.begin() + static_cast<std::ptrdiff_t>(rng.below(ws.size())));
    std::set<std::string> present(s.words.begin(), s.words.end());
    std::string fresh = (*words_)[rng.below(words_->size())];
    for (int tries = 0; present.count(fresh) && tries < 256; ++tries)
      fresh = (*words_)[rng.below(words_->size())];
    if (present.count(fresh)) {
      auto it = std::find_if(words_->begin(), words_->end(),
                             [&](const std::string& w) { return !present.count(w); });
      if (it != words_->end()) fresh = *it;
    }
    ws.insert(ws.begin() + static_cast<std::ptrdiff_t>(rng.below(ws.size() + 1)), std::move(fresh));
    return out;
  }

  WordSequence apply(const AlphabetizeQuestion&, const WordSequence& s, const ListDefect& d) const {
    WordSequence out = s;
    auto& ws = out.words;
    switch (d.kind) {
      case DefectKind::missing_word: {
        // Position creating the fewest new inversions; earliest on ties.
        std::size_t best = 0, best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t p = 0; p <= ws.size(); ++p) {
          std::size_t cost = 0;
          for (std::size_t j = 0; j < ws.size(); ++j)
            if (j < p ? ws[j] > d.word : ws[j] < d.word) ++cost;
          if (cost < best_cost) { best_cost = cost; best = p; }
        }
        ws.insert(ws.begin() + static_cast<std::ptrdiff_t>(best), d.word);
        break;
      }
      case DefectKind::extra_word: {
        // Remove the occurrence involved in the most inversions.
        std::size_t best = ws.size(), best_inv = 0;
        for (std::size_t i = 0; i < ws.size(); ++i) {
          if (ws[i] != d.word) continue;
          std::size_t inv = 0;
          for (std::size_t j = 0; j < ws.size(); ++j)
            if ((j < i && ws[j] > ws[i]) || (j > i && ws[j] < ws[i])) ++inv;
          if (best == ws.size() || inv > best_inv) { best = i; best_inv = inv; }
        }
        ws.erase(ws.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
      case DefectKind::misordered: {
        const std::size_t i = misordered_at(s, d);
        std::swap(ws[i], ws[i + 1]);
        break;
      }
    }
    return out;
  }

  ListDefect invalid(const AlphabetizeQuestion& q, const WordSequence& s) const {
    const std::string& w = q.words.front();
    if (count(s.words, w) >= count(q.words, w)) return {DefectKind::missing_word, w, {}};
    return {DefectKind::extra_word, w, {}};
  }

  WordSequence placeholder(const AlphabetizeQuestion&) const { return {}; }

  std::size_t flaws(const AlphabetizeQuestion& q, const WordSequence& s) const {
    return words::inversions(s.words) + words::multiset_distance(s.words, q.words);
  }

  std::string question_line(const AlphabetizeQuestion& q) const {
    return "Alphabetize the following words: " + join(q.words);
  }

  static std::string render_answer_text(const WordSequence& s) { return join(s.words); }

  static WordSequence parse_answer_text(std::string_view text) {
    Scanner sc(text);
    WordSequence s;
    while (!sc.at_end()) s.words.push_back(sc.lower_word());
    return s;
  }

  static std::string render_critique_text(const ListDefect& d) {
    switch (d.kind) {
      case DefectKind::missing_word: return "Missing word: " + d.word;
      case DefectKind::extra_word: return "Extra word: " + d.word;
      case DefectKind::misordered:
        return "Words misordered: " + d.word + " comes alphabetically after " + d.other;
    }
    return {};
  }

  static ListDefect parse_critique_text(std::string_view text) {
    Scanner sc(text);
    ListDefect d;
    if (sc.accept("Missing word:")) {
      d.kind = DefectKind::missing_word;
      d.word = sc.lower_word();
    } else if (sc.accept("Extra word:")) {
      d.kind = DefectKind::extra_word;
      d.word = sc.lower_word();
    } else if (sc.accept("Words misordered:")) {
      d.kind = DefectKind::misordered;
      d.word = sc.lower_word();
      sc.expect("comes alphabetically after");
      d.other = sc.lower_word();
    } else {
      sc.fail("'Missing word:', 'Extra word:' or 'Words misordered:'");
    }
    sc.expect_end();
    return d;
  }

 private:
  static int count(const std::vector<std::string>& ws, const std::string& w) {
    return static_cast<int>(std::count(ws.begin(), ws.end(), w));
  }

  /// Index of the first adjacent (word, other) pair with word > other, or size().
  static std::size_t misordered_at(const WordSequence& s, const ListDefect& d) {
    if (!(d.word > d.other)) return s.words.size();
    for (std::size_t i = 0; i + 1 < s.words.size(); ++i)
      if (s.words[i] == d.word && s.words[i + 1] == d.other) return i;
    return s.words.size();
  }

  static std::string join(const std::vector<std::string>& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (i) out += ' ';
      out += ws[i];
    }
    return out;
  }

  std::shared_ptr<const std::vector<std::string>> words_;
};

}  // namespace critlab
