#include <critlab/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace critlab::io {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("critlab_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

std::vector<AnswerRecord> sample_answers(std::size_t n) {
  std::vector<AnswerRecord> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back({"addition-" + std::to_string(i), std::to_string(1000 + i), i % 2 == 0, ordered_json::object()});
  return out;
}

TEST(Jsonl, RoundTripPlainAndGzip) {
  TempDir d;
  const auto recs = sample_answers(100);
  write_jsonl(d.file("a.jsonl"), recs);
  write_jsonl(d.file("a.jsonl.gz"), recs);
  EXPECT_EQ(read_jsonl<AnswerRecord>(d.file("a.jsonl")), recs);
  EXPECT_EQ(read_jsonl<AnswerRecord>(d.file("a.jsonl.gz")), recs);

  std::ifstream gz(d.file("a.jsonl.gz"), std::ios::binary);
  unsigned char magic[2] = {};
  gz.read(reinterpret_cast<char*>(magic), 2);
  EXPECT_EQ(magic[0], 0x1f);
  EXPECT_EQ(magic[1], 0x8b);
  EXPECT_LT(fs::file_size(d.file("a.jsonl.gz")), fs::file_size(d.file("a.jsonl")));

  write_jsonl(d.file("b.jsonl.gz"), recs);
  EXPECT_EQ(critlab::detail::read_file(d.file("a.jsonl.gz")), critlab::detail::read_file(d.file("b.jsonl.gz")));
}

TEST(Jsonl, AllRecordKindsRoundTrip) {
  TempDir d;
  const Family& fam = family_lookup(FamilyId::paired_mcq);
  std::vector<TaskRecord> tasks;
  for (std::uint64_t s = 0; s < 20; ++s) tasks.push_back(to_record(fam, fam.generate(s)));
  write_jsonl(d.file("t.jsonl"), tasks);
  const auto back = read_jsonl<TaskRecord>(d.file("t.jsonl"));
  EXPECT_EQ(back, tasks);
  for (std::size_t i = 0; i < tasks.size(); ++i) EXPECT_EQ(to_instance(fam, back[i]), fam.generate(i));

  const std::vector<CritiqueRecord> crits{{"x", "A, B", "Answer to question 2 should be A", true, ordered_json::object()}};
  write_jsonl(d.file("c.jsonl"), crits);
  EXPECT_EQ(read_jsonl<CritiqueRecord>(d.file("c.jsonl")), crits);
  const std::vector<HelpfulnessRecord> help{{"x", "A, B", "Answer to question 1 should be C", false, ordered_json::object()}};
  write_jsonl(d.file("h.jsonl"), help);
  EXPECT_EQ(read_jsonl<HelpfulnessRecord>(d.file("h.jsonl")), help);
}

TEST(Jsonl, SatInstancesRebuildFromRecords) {
  const Family& fam = family_lookup(FamilyId::three_sat);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const TaskInstance inst = fam.generate(s);
    EXPECT_EQ(to_instance(fam, record_from_json<TaskRecord>(record_to_json(to_record(fam, inst)))), inst);
  }
  EXPECT_THROW(to_instance(family_lookup(FamilyId::addition), to_record(fam, fam.generate(1))), TagMismatch);
}

TEST(Jsonl, UnknownFieldsArePreserved) {
  TempDir d;
  write_text(d.file("x.jsonl"),
             "{\"instance_id\":\"a\",\"answer_text\":\"12\",\"critiqueable\":true,\"policy\":\"m\",\"n\":[1,2]}\n");
  const auto recs = read_jsonl<AnswerRecord>(d.file("x.jsonl"));
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].extras["policy"], "m");
  write_jsonl(d.file("y.jsonl"), recs);
  EXPECT_EQ(critlab::detail::read_file(d.file("y.jsonl")), critlab::detail::read_file(d.file("x.jsonl")));
}

TEST(Jsonl, MalformedLineIsNamedAndNothingIsReturned) {
  TempDir d;
  std::string text;
  for (int i = 1; i <= 10; ++i)
    text += i == 7 ? "{\"instance_id\": \"x\", oops}\n"
                   : "{\"instance_id\":\"x\",\"answer_text\":\"1\",\"critiqueable\":false}\n";
  write_text(d.file("bad.jsonl"), text);
  try {
    read_jsonl<AnswerRecord>(d.file("bad.jsonl"));
    FAIL();
  } catch (const IoError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_NE(std::string(e.what()).find(":7:"), std::string::npos);
  }
  write_text(d.file("schema.jsonl"), "{\"instance_id\":\"x\",\"answer_text\":\"1\"}\n");
  try {
    read_jsonl<AnswerRecord>(d.file("schema.jsonl"));
    FAIL();
  } catch (const IoError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(read_jsonl<AnswerRecord>(d.file("missing.jsonl")), IoError);
}

TEST(Released, CountsAndHistogram) {
  TempDir d;
  write_text(d.file("empty.jsonl"), "");
  const auto empty = load_released_records(d.file("empty.jsonl"));
  EXPECT_EQ(empty.count, 0u);
  EXPECT_TRUE(empty.field_histogram.empty());

  write_text(d.file("mixed.jsonl"), "{\"a\":1}\n{\"a\":2,\"b\":\"x\"}\n{\"c\":null}\n");
  const auto mixed = load_released_records(d.file("mixed.jsonl"));
  EXPECT_EQ(mixed.count, 3u);
  EXPECT_EQ(mixed.field_histogram, (std::map<std::string, std::size_t>{{"a", 2}, {"b", 1}, {"c", 1}}));

  write_jsonl(d.file("gz.jsonl.gz"), sample_answers(25));
  EXPECT_EQ(load_released_records(d.file("gz.jsonl.gz")).count, 25u);
}

Report sample_report(std::string label, double shift = 0.0, FamilyId fam = FamilyId::addition) {
  gdc::GdcConfig c;
  c.family = fam;
  c.n_instances = 200;
  c.generator = NoisyGenerator{0.5 + shift, 1};
  return gdc::to_report(gdc::run_gdc(c), fam, std::move(label));
}

TEST(Reports, StableBytesAndRoundTrip) {
  const Report r = sample_report("m");
  EXPECT_EQ(emit_report(r, ReportFormat::json), emit_report(sample_report("m"), ReportFormat::json));
  EXPECT_EQ(emit_report(r, ReportFormat::csv), emit_report(sample_report("m"), ReportFormat::csv));
  EXPECT_EQ(report_from_json(ordered_json::parse(emit_report(r, ReportFormat::json))), r);

  const std::string csv = emit_report(r, ReportFormat::csv);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), r.metrics.size() + 1);
  EXPECT_TRUE(csv.starts_with(std::string(kCsvHeader) + "\n"));
  EXPECT_NE(csv.find("gdc,addition,m,1,g_value,"), std::string::npos);
}

TEST(Reports, CsvQuotingAndMissingSe) {
  Report r;
  r.kind = "dataset";
  r.label = "a,\"b\"";
  r.metrics.push_back({"answer_records", 0, 1000, std::nullopt});
  EXPECT_EQ(emit_report(r, ReportFormat::csv),
            std::string(kCsvHeader) + "\ndataset,addition,\"a,\"\"b\"\"\",0,answer_records,1000,\n");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(std::stod(format_number(1.0 / 3)), 1.0 / 3);
}

TEST(Reports, MergeTables) {
  const MergedTable one = merge_reports({sample_report("m")});
  EXPECT_EQ(one.labels, std::vector<std::string>{"m"});
  EXPECT_EQ(one.columns.size(), 10u);
  EXPECT_EQ(one.columns[1], "d_value@2");

  std::vector<Report> five;
  for (const NoiseProfile& p : kNoiseLadder) five.push_back(sample_report(std::string(p.name), -p.epsilon / 4));
  const MergedTable t = merge_reports(five);
  const std::string csv = merged_csv(t), dat = merged_dat(t);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
  EXPECT_EQ(std::count(dat.begin(), dat.end(), '\n'), 6);
  EXPECT_TRUE(dat.starts_with("# index label g_value@1 g_value@1_se"));
  EXPECT_NE(dat.find("\n0 xs "), std::string::npos);

  try {
    merge_reports({sample_report("a"), sample_report("b", 0, FamilyId::three_sat)});
    FAIL();
  } catch (const ReportSchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("three_sat"), std::string::npos);
  }
  EXPECT_THROW(report_from_json(ordered_json{{"kind", "gdc"}}), ReportSchemaError);
}

json full_config() {
  return json::parse(R"({
    "family": "addition", "seed": 11, "label": "m",
    "gdc": {"n_instances": 100, "best_of_n": 4,
            "generator": {"kind": "noisy", "profile": "m"},
            "discriminator": {"kind": "noisy", "flip_delta": 0.1},
            "critiquer": {"kind": "oracle"}, "judge": {"kind": "oracle"},
            "tie_break": "first", "c_variants_m": 4, "scaling_n": [1, 2, 4]},
    "debate": {"n_pairs": 50, "n_values": [1, 2]},
    "refine": {"n_instances": 50, "direct_rate": 0.25},
    "assist": {"n_instances": 50, "p_find": 0.3},
    "dataset": {"n_base": 5, "n_critiqueability": 10}
  })");
}

TEST(RunConfigDoc, ParsesEverySection) {
  const RunConfig rc = parse_run_config(full_config());
  EXPECT_EQ(rc.family, FamilyId::addition);
  EXPECT_EQ(rc.seed, 11u);
  ASSERT_TRUE(rc.gdc && rc.debate && rc.refine && rc.assist && rc.dataset);
  EXPECT_EQ(rc.gdc->config.best_of_n, 4);
  EXPECT_EQ(rc.gdc->config.master_seed, 11u);
  EXPECT_EQ(rc.gdc->config.tie_break, gdc::TieBreak::first);
  EXPECT_EQ(std::get<NoisyGenerator>(rc.gdc->config.generator).epsilon, noise_profile("m").epsilon);
  EXPECT_EQ(rc.gdc->c_variants_m, 4);
  EXPECT_EQ(rc.gdc->scaling_n, (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(rc.debate->n_values, (std::vector<int>{1, 2}));
  EXPECT_EQ(rc.refine->direct_rate, 0.25);
  EXPECT_EQ(rc.assist->assist.p_find, 0.3);
  EXPECT_EQ(rc.assist->assist.p_accept_valid, experiments::AssistConfig{}.p_accept_valid);
  EXPECT_EQ(rc.dataset->n_critiqueability, 10);
}

std::string error_key(const json& j) {
  try {
    parse_run_config(j);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<accepted>";
}

TEST(RunConfigDoc, ErrorsNameTheKey) {
  json j = full_config();
  j["gdc"]["best_of_n"] = 0;
  EXPECT_EQ(error_key(j), "gdc.best_of_n");
  j = full_config();
  j["gdc"]["typo"] = 1;
  EXPECT_EQ(error_key(j), "gdc.typo");
  j = full_config();
  j["debate"]["n_values"] = {1, 0};
  EXPECT_EQ(error_key(j), "debate.n_values[1]");
  j = full_config();
  j["dataset"]["n_critiqueability"] = 7;
  EXPECT_EQ(error_key(j), "dataset.n_critiqueability");
  j = full_config();
  j["refine"]["judge"] = {{"kind", "psychic"}};
  EXPECT_EQ(error_key(j), "refine.judge.kind");
  j = full_config();
  j["assist"]["p_accept_invalid"] = 2;
  EXPECT_EQ(error_key(j), "assist.p_accept_invalid");
  j = full_config();
  j["family"] = "bogus";
  EXPECT_EQ(error_key(j), "family");
  j = full_config();
  j["seed"] = "x";
  EXPECT_EQ(error_key(j), "seed");
  j = full_config();
  j["gdc"]["tie_break"] = "coin";
  EXPECT_EQ(error_key(j), "gdc.tie_break");
  j = full_config();
  j["gdc"]["generator"] = {{"kind", "provider"}, {"profile", {{"model_name", "x"}}}};
  EXPECT_EQ(error_key(j), "gdc.generator.profile.endpoint");
}

TEST(RunConfigDoc, FilesResolveRelativeToTheConfig) {
  TempDir d;
  std::string words;
  for (char a = 'a'; a <= 'z'; ++a) words += std::string("word") + a + "x\n";
  write_text(d.file("words.txt"), words);
  write_text(d.file("run.json"), R"({"family": "alphabetize", "words_file": "words.txt", "gdc": {}})");
  const RunConfig rc = load_run_config(d.file("run.json"));
  ASSERT_TRUE(rc.family_config.words);
  EXPECT_EQ(rc.family_config.words->size(), 26u);
  EXPECT_THROW(load_run_config(d.file("nope.json")), IoError);
  write_text(d.file("broken.json"), "{");
  EXPECT_THROW(load_run_config(d.file("broken.json")), ConfigError);
  write_text(d.file("sat.json"), R"({"family": "three_sat", "sat": {"variables": 2}})");
  EXPECT_THROW(load_run_config(d.file("sat.json")), ConfigError);
}

}  // namespace
}  // namespace critlab::io
