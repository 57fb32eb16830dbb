#pragma once

// Flat jsonl records for tasks, answers, critiques and helpfulness labels.
// Texts, not structured payloads, are the interchange form; unknown fields
// survive a read/write cycle through `extras`.

#include <critlab/family.hpp>
#include <critlab/report.hpp>

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace critlab {

/// A read or parse failure tied to one line of one file. Line is 1-based;
/// 0 means the failure is not line-specific (open, decompress).
class IoError : public Error {
 public:
  IoError(const std::string& path, std::size_t line, const std::string& problem)
      : Error(line ? path + ":" + std::to_string(line) + ": " + problem : path + ": " + problem),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// ---------------------------------------------------------------------------
// Question payloads

namespace detail {

inline std::string literal_text(const Literal& l) { return (l.negated ? "\xC2\xAC" : "") + l.variable; }

inline Literal literal_from_text(const std::string& s) {
  static const std::string neg = "\xC2\xAC";
  if (s.starts_with(neg)) return Literal{s.substr(neg.size()), true};
  return Literal{s, false};
}

}  // namespace detail

inline ordered_json question_to_json(const Question& q) {
  return std::visit(
      overloaded{
          [](const AdditionQuestion& a) { return ordered_json{{"a", a.a}, {"b", a.b}}; },
          [](const SatQuestion& s) {
            ordered_json clauses = ordered_json::array();
            for (const Clause& c : s.clauses) {
              ordered_json lits = ordered_json::array();
              for (const Literal& l : c) lits.push_back(detail::literal_text(l));
              clauses.push_back(std::move(lits));
            }
            return ordered_json{{"variables", s.variables}, {"clauses", std::move(clauses)}};
          },
          [](const AlphabetizeQuestion& a) { return ordered_json{{"words", a.words}}; },
          [](const McqQuestion& m) {
            ordered_json items = ordered_json::array();
            for (const McqItem& it : m.items)
              items.push_back(ordered_json{{"stem", it.stem},
                                           {"options", it.options},
                                           {"correct", std::string(1, it.correct)}});
            return ordered_json{{"passage", m.passage}, {"items", std::move(items)}};
          },
      },
      q);
}

/// The SAT planted assignment is hidden state; callers recover it from the
/// oracle answer (see to_instance).
inline Question question_from_json(FamilyId family, const ordered_json& j) {
  switch (family) {
    case FamilyId::addition:
      return AdditionQuestion{j.at("a").get<std::uint64_t>(), j.at("b").get<std::uint64_t>()};
    case FamilyId::three_sat: {
      SatQuestion s;
      s.variables = j.at("variables").get<std::vector<std::string>>();
      for (const auto& c : j.at("clauses")) {
        if (!c.is_array() || c.size() != 3) throw InvalidArgument("clause must list 3 literals");
        Clause clause;
        for (std::size_t k = 0; k < 3; ++k) clause[k] = detail::literal_from_text(c[k].get<std::string>());
        s.clauses.push_back(std::move(clause));
      }
      return s;
    }
    case FamilyId::alphabetize:
      return AlphabetizeQuestion{j.at("words").get<std::vector<std::string>>()};
    case FamilyId::paired_mcq: {
      McqQuestion m;
      m.passage = j.at("passage").get<std::string>();
      const auto& items = j.at("items");
      if (!items.is_array() || items.size() != 2) throw InvalidArgument("paired_mcq needs 2 items");
      for (std::size_t k = 0; k < 2; ++k) {
        m.items[k].stem = items[k].at("stem").get<std::string>();
        m.items[k].options = items[k].at("options").get<std::array<std::string, 4>>();
        const auto c = items[k].at("correct").get<std::string>();
        if (c.size() != 1 || c[0] < 'A' || c[0] > 'D') throw InvalidArgument("correct must be A-D");
        m.items[k].correct = c[0];
      }
      return m;
    }
  }
  throw InvalidArgument("unknown family id");
}

// ---------------------------------------------------------------------------
// Records

struct TaskRecord {
  FamilyId family = FamilyId::addition;
  std::string instance_id;
  std::uint64_t seed = 0;
  ordered_json question = ordered_json::object();
  std::string oracle_answer_text;
  ordered_json extras = ordered_json::object();
  friend bool operator==(const TaskRecord&, const TaskRecord&) = default;
};

struct AnswerRecord {
  std::string instance_id;
  std::string answer_text;
  bool critiqueable = false;
  ordered_json extras = ordered_json::object();
  friend bool operator==(const AnswerRecord&, const AnswerRecord&) = default;
};

struct CritiqueRecord {
  std::string instance_id;
  std::string answer_text;
  std::string critique_text;
  bool valid = false;
  ordered_json extras = ordered_json::object();
  friend bool operator==(const CritiqueRecord&, const CritiqueRecord&) = default;
};

struct HelpfulnessRecord {
  std::string instance_id;
  std::string answer_text;
  std::string critique_text;
  bool label = false;
  ordered_json extras = ordered_json::object();
  friend bool operator==(const HelpfulnessRecord&, const HelpfulnessRecord&) = default;
};

inline TaskRecord to_record(const Family& family, const TaskInstance& inst) {
  return TaskRecord{inst.family, inst.instance_id, inst.seed, question_to_json(inst.question),
                    family.render_answer(inst.oracle_answer), ordered_json::object()};
}

/// Rebuilds the instance a TaskRecord describes; the record must belong to
/// `family`.
inline TaskInstance to_instance(const Family& family, const TaskRecord& r) {
  if (r.family != family.id())
    throw TagMismatch("record " + r.instance_id + " belongs to " + std::string(to_string(r.family)));
  TaskInstance inst{r.family, r.instance_id, question_from_json(r.family, r.question),
                    family.parse_answer(r.oracle_answer_text), r.seed};
  if (auto* sat = std::get_if<SatQuestion>(&inst.question))
    sat->planted = std::get<SatAssignment>(inst.oracle_answer).values;
  return inst;
}

namespace detail {

template <class R>
struct RecordFields;

template <>
struct RecordFields<TaskRecord> {
  static constexpr std::array<std::string_view, 5> names{"family", "instance_id", "seed", "question",
                                                         "oracle_answer_text"};
  static void write(ordered_json& j, const TaskRecord& r) {
    j["family"] = to_string(r.family);
    j["instance_id"] = r.instance_id;
    j["seed"] = r.seed;
    j["question"] = r.question;
    j["oracle_answer_text"] = r.oracle_answer_text;
  }
  static void read(const ordered_json& j, TaskRecord& r) {
    r.family = family_id_or_throw(j.at("family").get<std::string>());
    r.instance_id = j.at("instance_id").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.question = j.at("question");
    if (!r.question.is_object()) throw InvalidArgument("question must be an object");
    r.oracle_answer_text = j.at("oracle_answer_text").get<std::string>();
  }
};

template <>
struct RecordFields<AnswerRecord> {
  static constexpr std::array<std::string_view, 3> names{"instance_id", "answer_text", "critiqueable"};
  static void write(ordered_json& j, const AnswerRecord& r) {
    j["instance_id"] = r.instance_id;
    j["answer_text"] = r.answer_text;
    j["critiqueable"] = r.critiqueable;
  }
  static void read(const ordered_json& j, AnswerRecord& r) {
    r.instance_id = j.at("instance_id").get<std::string>();
    r.answer_text = j.at("answer_text").get<std::string>();
    r.critiqueable = j.at("critiqueable").get<bool>();
  }
};

template <>
struct RecordFields<CritiqueRecord> {
  static constexpr std::array<std::string_view, 4> names{"instance_id", "answer_text", "critique_text",
                                                         "valid"};
  static void write(ordered_json& j, const CritiqueRecord& r) {
    j["instance_id"] = r.instance_id;
    j["answer_text"] = r.answer_text;
    j["critique_text"] = r.critique_text;
    j["valid"] = r.valid;
  }
  static void read(const ordered_json& j, CritiqueRecord& r) {
    r.instance_id = j.at("instance_id").get<std::string>();
    r.answer_text = j.at("answer_text").get<std::string>();
    r.critique_text = j.at("critique_text").get<std::string>();
    r.valid = j.at("valid").get<bool>();
  }
};

template <>
struct RecordFields<HelpfulnessRecord> {
  static constexpr std::array<std::string_view, 4> names{"instance_id", "answer_text", "critique_text",
                                                         "label"};
  static void write(ordered_json& j, const HelpfulnessRecord& r) {
    j["instance_id"] = r.instance_id;
    j["answer_text"] = r.answer_text;
    j["critique_text"] = r.critique_text;
    j["label"] = r.label;
  }
  static void read(const ordered_json& j, HelpfulnessRecord& r) {
    r.instance_id = j.at("instance_id").get<std::string>();
    r.answer_text = j.at("answer_text").get<std::string>();
    r.critique_text = j.at("critique_text").get<std::string>();
    r.label = j.at("label").get<bool>();
  }
};

inline bool ends_with_gz(const std::string& path) { return path.size() > 3 && path.ends_with(".gz"); }

/// Whole-file read; gzip is detected by suffix.
inline std::string read_file(const std::string& path) {
  if (ends_with_gz(path)) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw IoError(path, 0, "cannot open");
    std::string out;
    char buf[1 << 16];
    int n;
    while ((n = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(n));
    int err = 0;
    const char* msg = gzerror(f, &err);
    const std::string problem = (n < 0 || err < 0) ? std::string(msg ? msg : "gzip error") : "";
    gzclose(f);
    if (!problem.empty()) throw IoError(path, 0, "decompression failed: " + problem);
    return out;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, 0, "cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// gzip output carries no timestamp, so equal content gives equal bytes.
inline void write_file(const std::string& path, std::string_view bytes) {
  if (ends_with_gz(path)) {
    gzFile f = gzopen(path.c_str(), "wb9");
    if (!f) throw IoError(path, 0, "cannot open for writing");
    const bool ok = bytes.empty() ||
                    gzwrite(f, bytes.data(), static_cast<unsigned>(bytes.size())) == static_cast<int>(bytes.size());
    if (gzclose(f) != Z_OK || !ok) throw IoError(path, 0, "write failed");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, 0, "cannot open for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError(path, 0, "write failed");
}

/// Calls fn(line_number, object) for each non-blank line; a blank final line
/// is tolerated, blank lines elsewhere are errors.
template <class Fn>
void for_each_json_line(const std::string& path, const std::string& text, Fn&& fn) {
  std::size_t pos = 0, line = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    ++line;
    std::string_view s(text.data() + pos, end - pos);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    pos = end + 1;
    if (s.empty()) {
      if (pos >= text.size()) break;
      throw IoError(path, line, "blank line");
    }
    ordered_json j;
    try {
      j = ordered_json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw IoError(path, line, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw IoError(path, line, "expected a JSON object");
    fn(line, std::move(j));
  }
}

}  // namespace detail

template <class R>
ordered_json record_to_json(const R& r) {
  ordered_json j = ordered_json::object();
  detail::RecordFields<R>::write(j, r);
  for (const auto& [k, v] : r.extras.items())
    if (!j.contains(k)) j[k] = v;
  return j;
}

template <class R>
R record_from_json(const ordered_json& j) {
  R r;
  detail::RecordFields<R>::read(j, r);
  for (const auto& [k, v] : j.items()) {
    const auto& names = detail::RecordFields<R>::names;
    if (std::find(names.begin(), names.end(), k) == names.end()) r.extras[k] = v;
  }
  return r;
}

template <class R>
std::string to_jsonl(const std::vector<R>& records) {
  std::string out;
  for (const R& r : records) {
    out += record_to_json(r).dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
    out += '\n';
  }
  return out;
}

template <class R>
void write_jsonl(const std::string& path, const std::vector<R>& records) {
  detail::write_file(path, to_jsonl(records));
}

/// All-or-nothing: any bad line throws IoError naming it.
template <class R>
std::vector<R> read_jsonl(const std::string& path) {
  const std::string text = detail::read_file(path);
  std::vector<R> out;
  detail::for_each_json_line(path, text, [&](std::size_t line, ordered_json j) {
    try {
      out.push_back(record_from_json<R>(j));
    } catch (const nlohmann::json::exception& e) {
      throw IoError(path, line, std::string("schema: ") + e.what());
    } catch (const Error& e) {
      throw IoError(path, line, std::string("schema: ") + e.what());
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Released-data loader

struct ReleasedSummary {
  std::size_t count = 0;
  std::map<std::string, std::size_t> field_histogram;  // field -> records carrying it
  std::vector<ordered_json> records;
};

/// Tolerant: any JSON object per line is accepted.
inline ReleasedSummary load_released_records(const std::string& path) {
  ReleasedSummary s;
  const std::string text = detail::read_file(path);
  detail::for_each_json_line(path, text, [&](std::size_t, ordered_json j) {
    for (const auto& [k, v] : j.items()) ++s.field_histogram[k];
    s.records.push_back(std::move(j));
  });
  s.count = s.records.size();
  return s;
}

}  // namespace critlab
