#pragma once

// Run configuration documents, report emission (JSON / CSV), and merging of
// reports into plot-ready tables. Record schemas live in records.hpp.

#include <critlab/experiments.hpp>
#include <critlab/json_config.hpp>
#include <critlab/records.hpp>

#include <charconv>
#include <filesystem>

namespace critlab::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Run configuration

struct GdcSection {
  gdc::GdcConfig config;
  std::optional<int> c_variants_m;  // also measure C_m / C_M / C_hM with m critiques
  std::vector<int> scaling_n;       // also sweep win rates over these N
};

/// One declarative document for every subcommand. Each section is optional
/// and inherits family, family config and seed from the top level.
struct RunConfig {
  FamilyId family = FamilyId::addition;
  FamilyConfig family_config;
  std::uint64_t seed = 0;
  std::string label;
  std::optional<GdcSection> gdc;
  std::optional<experiments::DebateConfig> debate;
  std::optional<experiments::RefinementConfig> refine;
  std::optional<experiments::AssistRun> assist;
  std::optional<experiments::DatasetConfig> dataset;
};

namespace detail {

using cfg::join;

template <class T, class F>
T policy_or(const json& j, const std::string& path, std::string_view key, T fallback, F parse) {
  const auto it = j.find(key);
  return it == j.end() ? fallback : parse(*it, join(path, key));
}

/// Re-keys errors raised by a section's own validate() under that section.
template <class F>
void scoped(const std::string& path, F&& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    if (e.key().starts_with(path + ".")) throw;
    throw ConfigError(join(path, e.key()), e.problem());
  }
}

inline std::vector<int> int_list(const json& j, const std::string& path, std::string_view key, std::vector<int> fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  const std::string k = join(path, key);
  if (!it->is_array() || it->empty()) throw ConfigError(k, "expected a non-empty array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const int v = cfg::convert<int>((*it)[i], k + "[" + std::to_string(i) + "]");
    if (v < 1) throw ConfigError(k + "[" + std::to_string(i) + "]", "must be >= 1");
    out.push_back(v);
  }
  return out;
}

inline std::vector<std::string> read_word_file(const std::string& path, const std::string& key) {
  std::ifstream in(path);
  if (!in) throw ConfigError(key, "cannot read word list '" + path + "'");
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

inline GdcSection parse_gdc(const json& j, const RunConfig& top) {
  const std::string p = "gdc";
  cfg::only_keys(j, p,
                 {"n_instances", "best_of_n", "generator", "discriminator", "critiquer", "judge", "tie_break",
                  "bootstrap_resamples", "c_variants_m", "scaling_n"});
  GdcSection s;
  gdc::GdcConfig& c = s.config;
  c.family = top.family;
  c.family_config = top.family_config;
  c.master_seed = top.seed;
  c.n_instances = cfg::at_least(j, p, "n_instances", 1, c.n_instances);
  c.best_of_n = cfg::at_least(j, p, "best_of_n", 1, c.best_of_n);
  c.generator = policy_or(j, p, "generator", c.generator, policy_json::generator_from_json);
  c.discriminator = policy_or(j, p, "discriminator", c.discriminator, policy_json::discriminator_from_json);
  c.critiquer = policy_or(j, p, "critiquer", c.critiquer, policy_json::critiquer_from_json);
  c.judge = policy_or(j, p, "judge", c.judge, policy_json::judge_from_json);
  const std::string tie = cfg::get_or<std::string>(j, p, "tie_break", "random_seeded");
  if (tie == "first") c.tie_break = gdc::TieBreak::first;
  else if (tie == "random_seeded") c.tie_break = gdc::TieBreak::random_seeded;
  else throw ConfigError(join(p, "tie_break"), "unknown value '" + tie + "' (allowed: random_seeded, first)");
  c.bootstrap_resamples = cfg::at_least(j, p, "bootstrap_resamples", 100, c.bootstrap_resamples);
  if (j.contains("c_variants_m")) s.c_variants_m = cfg::at_least(j, p, "c_variants_m", 1);
  s.scaling_n = int_list(j, p, "scaling_n", {});
  scoped(p, [&] { gdc::validate(c); });
  return s;
}

inline experiments::DebateConfig parse_debate(const json& j, const RunConfig& top) {
  const std::string p = "debate";
  cfg::only_keys(j, p, {"n_pairs", "critiquer", "judge", "discriminator", "n_values", "bootstrap_resamples"});
  experiments::DebateConfig c;
  c.family = top.family;
  c.family_config = top.family_config;
  c.master_seed = top.seed;
  c.n_pairs = cfg::at_least(j, p, "n_pairs", 1, c.n_pairs);
  c.critiquer = policy_or(j, p, "critiquer", c.critiquer, policy_json::critiquer_from_json);
  c.judge = policy_or(j, p, "judge", c.judge, policy_json::judge_from_json);
  c.discriminator = policy_or(j, p, "discriminator", c.discriminator, policy_json::discriminator_from_json);
  c.n_values = int_list(j, p, "n_values", c.n_values);
  c.bootstrap_resamples = cfg::at_least(j, p, "bootstrap_resamples", 100, c.bootstrap_resamples);
  scoped(p, [&] { experiments::validate(c); });
  return c;
}

inline experiments::RefinementConfig parse_refine(const json& j, const RunConfig& top) {
  const std::string p = "refine";
  cfg::only_keys(j, p,
                 {"n_instances", "generator", "critiquer", "judge", "direct_rate", "best_of", "bootstrap_resamples"});
  experiments::RefinementConfig c;
  c.family = top.family;
  c.family_config = top.family_config;
  c.master_seed = top.seed;
  c.n_instances = cfg::at_least(j, p, "n_instances", 1, c.n_instances);
  c.generator = policy_or(j, p, "generator", c.generator, policy_json::generator_from_json);
  c.critiquer = policy_or(j, p, "critiquer", c.critiquer, policy_json::critiquer_from_json);
  c.judge = policy_or(j, p, "judge", c.judge, policy_json::judge_from_json);
  c.direct_rate = cfg::probability(j, p, "direct_rate", c.direct_rate);
  c.best_of = cfg::at_least(j, p, "best_of", 1, c.best_of);
  c.bootstrap_resamples = cfg::at_least(j, p, "bootstrap_resamples", 100, c.bootstrap_resamples);
  scoped(p, [&] { experiments::validate(c); });
  return c;
}

inline experiments::AssistRun parse_assist(const json& j, const RunConfig& top) {
  const std::string p = "assist";
  cfg::only_keys(j, p,
                 {"n_instances", "k_shown", "p_find", "p_accept_valid", "p_accept_invalid", "critiquer", "ranker",
                  "strength", "bootstrap_resamples"});
  experiments::AssistRun c;
  c.family = top.family;
  c.family_config = top.family_config;
  c.master_seed = top.seed;
  auto& a = c.assist;
  c.n_instances = cfg::at_least(j, p, "n_instances", 1, c.n_instances);
  a.k_shown = cfg::at_least(j, p, "k_shown", 0, a.k_shown);
  a.p_find = cfg::probability(j, p, "p_find", a.p_find);
  a.p_accept_valid = cfg::probability(j, p, "p_accept_valid", a.p_accept_valid);
  a.p_accept_invalid = cfg::probability(j, p, "p_accept_invalid", a.p_accept_invalid);
  a.critiquer = policy_or(j, p, "critiquer", a.critiquer, policy_json::critiquer_from_json);
  a.ranker = policy_or(j, p, "ranker", a.ranker, policy_json::judge_from_json);
  a.strength = cfg::at_least(j, p, "strength", 1, a.strength);
  c.bootstrap_resamples = cfg::at_least(j, p, "bootstrap_resamples", 100, c.bootstrap_resamples);
  scoped(p, [&] { experiments::validate(c); });
  return c;
}

inline experiments::DatasetConfig parse_dataset(const json& j, const RunConfig& top) {
  const std::string p = "dataset";
  cfg::only_keys(j, p,
                 {"n_base", "n_critiqueability", "generator", "deterministic_answers", "allow_corruption",
                  "max_repeats"});
  experiments::DatasetConfig c;
  c.family = top.family;
  c.family_config = top.family_config;
  c.master_seed = top.seed;
  c.n_base = cfg::at_least(j, p, "n_base", 0, c.n_base);
  c.n_critiqueability = cfg::at_least(j, p, "n_critiqueability", 0, c.n_critiqueability);
  c.generator = policy_or(j, p, "generator", c.generator, policy_json::generator_from_json);
  c.deterministic_answers = cfg::get_or<bool>(j, p, "deterministic_answers", c.deterministic_answers);
  c.allow_corruption = cfg::get_or<bool>(j, p, "allow_corruption", c.allow_corruption);
  c.max_repeats = cfg::at_least(j, p, "max_repeats", 0, c.max_repeats);
  scoped(p, [&] { experiments::validate(c); });
  return c;
}

}  // namespace detail

/// Validates the whole document, every section included, before returning.
/// Relative file paths resolve against `base_dir`.
inline RunConfig parse_run_config(const json& j, const std::filesystem::path& base_dir = {}) {
  cfg::only_keys(j, "",
                 {"family", "seed", "label", "sat", "words_file", "corpus_file", "gdc", "debate", "refine", "assist",
                  "dataset"});
  RunConfig rc;
  const std::string fam = cfg::get<std::string>(j, "", "family");
  if (auto id = parse_family_id(fam)) rc.family = *id;
  else throw ConfigError("family", "unknown family '" + fam + "' (allowed: addition, three_sat, alphabetize, paired_mcq)");
  rc.seed = cfg::get_or<std::uint64_t>(j, "", "seed", 0);
  rc.label = cfg::get_or<std::string>(j, "", "label", "");
  if (j.contains("sat")) {
    const json& s = j.at("sat");
    cfg::only_keys(s, "sat", {"variables", "clauses"});
    rc.family_config.sat.variables = cfg::at_least(s, "sat", "variables", 3, rc.family_config.sat.variables);
    rc.family_config.sat.clauses = cfg::at_least(s, "sat", "clauses", 1, rc.family_config.sat.clauses);
  }
  auto resolve = [&](const std::string& p) { return (base_dir / p).lexically_normal().string(); };
  if (j.contains("words_file"))
    rc.family_config.words = std::make_shared<const std::vector<std::string>>(
        detail::read_word_file(resolve(cfg::get<std::string>(j, "", "words_file")), "words_file"));
  if (j.contains("corpus_file")) {
    try {
      rc.family_config.corpus = mcq::load_corpus(resolve(cfg::get<std::string>(j, "", "corpus_file")));
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError("corpus_file", e.what());
    }
  }
  try {
    make_family(rc.family, rc.family_config);
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(rc.family == FamilyId::three_sat ? "sat" : rc.family == FamilyId::alphabetize ? "words_file" : "corpus_file",
                      e.what());
  }
  if (j.contains("gdc")) rc.gdc = detail::parse_gdc(j.at("gdc"), rc);
  if (j.contains("debate")) rc.debate = detail::parse_debate(j.at("debate"), rc);
  if (j.contains("refine")) rc.refine = detail::parse_refine(j.at("refine"), rc);
  if (j.contains("assist")) rc.assist = detail::parse_assist(j.at("assist"), rc);
  if (j.contains("dataset")) rc.dataset = detail::parse_dataset(j.at("dataset"), rc);
  return rc;
}

/// IoError when the file cannot be read; ConfigError for malformed content.
inline RunConfig load_run_config(const std::string& path) {
  const std::string text = critlab::detail::read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }
  return parse_run_config(j, std::filesystem::path(path).parent_path());
}

// ---------------------------------------------------------------------------
// Reports

/// Thrown for report files that do not have the report shape, and for
/// reports that cannot be merged.
class ReportSchemaError : public Error {
 public:
  using Error::Error;
};

enum class ReportFormat { json, csv };

/// Shortest decimal that reads back to the same double.
inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline ordered_json report_to_json(const Report& r) {
  ordered_json j;
  j["kind"] = r.kind;
  j["family"] = to_string(r.family);
  j["label"] = r.label;
  j["config"] = r.config;
  ordered_json metrics = ordered_json::array();
  for (const MetricRow& m : r.metrics) {
    ordered_json row;
    row["metric"] = m.metric;
    row["best_of_n"] = m.best_of_n;
    row["value"] = m.value;
    row["se"] = m.se ? ordered_json(*m.se) : ordered_json(nullptr);
    metrics.push_back(std::move(row));
  }
  j["metrics"] = std::move(metrics);
  j["metadata"] = r.metadata;
  return j;
}

inline Report report_from_json(const ordered_json& j) {
  try {
    Report r;
    r.kind = j.at("kind").get<std::string>();
    r.family = family_id_or_throw(j.at("family").get<std::string>());
    r.label = j.at("label").get<std::string>();
    r.config = j.at("config");
    for (const auto& m : j.at("metrics")) {
      MetricRow row{m.at("metric").get<std::string>(), m.at("best_of_n").get<int>(), m.at("value").get<double>(),
                    std::nullopt};
      if (!m.at("se").is_null()) row.se = m.at("se").get<double>();
      r.metrics.push_back(std::move(row));
    }
    r.metadata = j.at("metadata");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ReportSchemaError(std::string("not a report: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ReportSchemaError(std::string("not a report: ") + e.what());
  }
}

inline Report read_report(const std::string& path) {
  const std::string text = critlab::detail::read_file(path);
  try {
    return report_from_json(ordered_json::parse(text));
  } catch (const ordered_json::parse_error& e) {
    throw ReportSchemaError(path + ": invalid JSON: " + e.what());
  } catch (const ReportSchemaError& e) {
    throw ReportSchemaError(path + ": " + e.what());
  }
}

inline constexpr std::string_view kCsvHeader = "kind,family,label,best_of_n,metric,value,se";

/// Same report, same bytes. CSV has a header plus one row per metric.
inline std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(r).dump(2) + "\n";
  std::string out(kCsvHeader);
  out += '\n';
  for (const MetricRow& m : r.metrics) {
    out += csv_field(r.kind) + ',' + std::string(to_string(r.family)) + ',' + csv_field(r.label) + ',' +
           std::to_string(m.best_of_n) + ',' + csv_field(m.metric) + ',' + format_number(m.value) + ',' +
           (m.se ? format_number(*m.se) : std::string()) + '\n';
  }
  return out;
}

/// Reports side by side, one row per report (e.g. per noise profile), one
/// column pair (value, se) per metric. Column names append "@N" for
/// best-of-N metrics.
struct MergedTable {
  std::string kind;
  FamilyId family = FamilyId::addition;
  std::vector<std::string> columns;
  std::vector<std::string> labels;
  std::vector<std::vector<std::optional<double>>> values, ses;  // [row][column]
};

inline std::string column_name(const MetricRow& m) {
  return m.best_of_n > 0 ? m.metric + "@" + std::to_string(m.best_of_n) : m.metric;
}

inline MergedTable merge_reports(const std::vector<Report>& reports) {
  if (reports.empty()) throw ReportSchemaError("no reports to merge");
  MergedTable t;
  t.kind = reports.front().kind;
  t.family = reports.front().family;
  for (const Report& r : reports) {
    if (r.kind != t.kind)
      throw ReportSchemaError("cannot merge report kinds '" + t.kind + "' and '" + r.kind + "'");
    if (r.family != t.family)
      throw ReportSchemaError("cannot merge families '" + std::string(to_string(t.family)) + "' and '" +
                              std::string(to_string(r.family)) + "'");
    for (const MetricRow& m : r.metrics) {
      const std::string c = column_name(m);
      if (std::find(t.columns.begin(), t.columns.end(), c) == t.columns.end()) t.columns.push_back(c);
    }
  }
  for (const Report& r : reports) {
    t.labels.push_back(r.label);
    std::vector<std::optional<double>> v(t.columns.size()), s(t.columns.size());
    for (const MetricRow& m : r.metrics) {
      const auto k = static_cast<std::size_t>(std::find(t.columns.begin(), t.columns.end(), column_name(m)) - t.columns.begin());
      v[k] = m.value;
      s[k] = m.se;
    }
    t.values.push_back(std::move(v));
    t.ses.push_back(std::move(s));
  }
  return t;
}

inline std::string merged_csv(const MergedTable& t) {
  std::string out = "label";
  for (const auto& c : t.columns) out += ',' + csv_field(c) + ',' + csv_field(c + "_se");
  out += '\n';
  for (std::size_t r = 0; r < t.labels.size(); ++r) {
    out += csv_field(t.labels[r]);
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      out += ',' + (t.values[r][c] ? format_number(*t.values[r][c]) : std::string());
      out += ',' + (t.ses[r][c] ? format_number(*t.ses[r][c]) : std::string());
    }
    out += '\n';
  }
  return out;
}

/// Whitespace-separated columns with a '#' header; row index first so the
/// file plots directly. Missing cells are "NaN"; spaces in labels become '_'.
inline std::string merged_dat(const MergedTable& t) {
  std::string out = "# index label";
  for (const auto& c : t.columns) out += ' ' + c + ' ' + c + "_se";
  out += '\n';
  for (std::size_t r = 0; r < t.labels.size(); ++r) {
    std::string label = t.labels[r].empty() ? "-" : t.labels[r];
    std::replace_if(label.begin(), label.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }, '_');
    out += std::to_string(r) + ' ' + label;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      out += ' ' + (t.values[r][c] ? format_number(*t.values[r][c]) : std::string("NaN"));
      out += ' ' + (t.ses[r][c] ? format_number(*t.ses[r][c]) : std::string("NaN"));
    }
    out += '\n';
  }
  return out;
}

}  // namespace critlab::io
