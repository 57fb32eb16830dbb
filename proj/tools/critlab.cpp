// critlab: batch front end for task generation, the gap measurements, the
// composite experiments, dataset building and report merging.
//
// Exit codes: 0 success, 1 runtime failure (I/O, provider, unmergeable
// reports), 2 usage (bad flags, invalid config). Results go to files and a
// short summary to stdout; diagnostics go to stderr.

#include <critlab/io.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

namespace {

namespace fs = std::filesystem;
using namespace critlab;

constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;

struct Options {
  int jobs = 1;
  std::string config;
  std::string out = ".";
  bool gzip = false;

  // gen-tasks
  std::string family;
  int count = 0;
  std::uint64_t seed = 0;
  int sat_variables = SatConfig{}.variables;
  int sat_clauses = SatConfig{}.clauses;
  std::string words_file;
  std::string corpus_file;

  // report
  std::vector<std::string> inputs;
  std::string format = "both";
};

void log(const std::string& msg) { std::cerr << "critlab: " << msg << "\n"; }

std::string pm(const gdc::Estimate& e) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.4f +/- %.4f", e.value, e.se);
  return buf;
}

std::string label_of(const io::RunConfig& rc) {
  return rc.label.empty() ? std::string(to_string(rc.family)) : rc.label;
}

fs::path prepare_out(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw IoError(dir, 0, "cannot create output directory: " + ec.message());
  return p;
}

void write_report(const fs::path& dir, const std::string& stem, const Report& r) {
  detail::write_file((dir / (stem + ".json")).string(), io::emit_report(r, io::ReportFormat::json));
  detail::write_file((dir / (stem + ".csv")).string(), io::emit_report(r, io::ReportFormat::csv));
  log("wrote " + (dir / stem).string() + ".{json,csv}");
}

template <class T>
const T& section(const std::optional<T>& s, const char* name) {
  if (!s) throw ConfigError(name, "missing section");
  return *s;
}

int gen_tasks(const Options& o) {
  FamilyConfig fc;
  fc.sat = SatConfig{o.sat_variables, o.sat_clauses};
  if (!o.words_file.empty()) {
    std::vector<std::string> words;
    std::istringstream in(detail::read_file(o.words_file));
    for (std::string w; std::getline(in, w);)
      if (!w.empty()) words.push_back(w);
    fc.words = std::make_shared<const std::vector<std::string>>(std::move(words));
  }
  if (!o.corpus_file.empty()) fc.corpus = mcq::load_corpus(o.corpus_file);
  const FamilyId id = family_id_or_throw(o.family);
  const auto fam = make_family(id, fc);
  std::vector<TaskRecord> recs(static_cast<std::size_t>(o.count));
  parallel_for(recs.size(), o.jobs,
               [&](std::size_t i) { recs[i] = to_record(*fam, fam->generate(derive_stream(o.seed, "tasks", i))); });
  write_jsonl(o.out, recs);
  std::cout << recs.size() << " tasks written to " << o.out << "\n";
  return 0;
}

int run_gdc(const Options& o) {
  const io::RunConfig rc = io::load_run_config(o.config);
  const io::GdcSection& s = section(rc.gdc, "gdc");
  const fs::path dir = prepare_out(o.out);
  const gdc::GapReport g = gdc::run_gdc(s.config, o.jobs);
  write_report(dir, "gdc", gdc::to_report(g, rc.family, label_of(rc)));
  std::cout << "family " << to_string(rc.family) << ", N = " << g.best_of_n << ", " << g.n_instances << " instances\n"
            << "G       " << pm(g.g) << "\n"
            << "D       " << pm(g.d) << "\n"
            << "C       " << pm(g.c) << "\n"
            << "GD gap  " << pm(g.gd_gap) << "\n"
            << "GC gap  " << pm(g.gc_gap) << "\n"
            << "CD gap  " << pm(g.cd_gap) << "\n"
            << "win D   " << pm(g.win_rate_d) << "\n"
            << "win C   " << pm(g.win_rate_c) << "\n";
  if (s.c_variants_m) {
    const auto v = gdc::measure_c_variants(s.config, *s.c_variants_m, o.jobs);
    write_report(dir, "gdc_variants", gdc::to_report(v, s.config, label_of(rc)));
    std::cout << "C_m     " << pm(v.c_score) << "\nC_M     " << pm(v.c_best) << "\nC_hM    " << pm(v.c_any) << "\n";
  }
  if (!s.scaling_n.empty()) {
    const auto pts = gdc::gd_gc_scaling(s.config, s.scaling_n, o.jobs);
    write_report(dir, "gdc_scaling", gdc::to_report(pts, s.config, label_of(rc)));
    for (const auto& p : pts)
      std::cout << "N = " << p.n << "  D win " << pm(p.d_win) << "  C win " << pm(p.c_win) << "\n";
  }
  return 0;
}

int run_debate(const Options& o) {
  const io::RunConfig rc = io::load_run_config(o.config);
  const auto& cfg = section(rc.debate, "debate");
  const fs::path dir = prepare_out(o.out);
  const auto r = experiments::run_debate(cfg, o.jobs);
  write_report(dir, "debate", experiments::to_report(r, rc.family, label_of(rc)));
  std::cout << "discriminator      " << pm(r.discriminator) << "\n";
  for (const auto& [n, e] : r.by_n) std::cout << "helpfulness N = " << n << "  " << pm(e) << "\n";
  return 0;
}

int run_refine(const Options& o) {
  const io::RunConfig rc = io::load_run_config(o.config);
  const auto& cfg = section(rc.refine, "refine");
  const fs::path dir = prepare_out(o.out);
  const auto r = experiments::run_refinement(cfg, o.jobs);
  write_report(dir, "refine", experiments::to_report(r, rc.family, label_of(rc)));
  std::cout << r.n_flawed << " flawed answers\n";
  for (auto mode : experiments::kAllRefinementModes)
    std::cout << "improved " << experiments::to_string(mode) << "  "
              << pm(r.modes[static_cast<std::size_t>(mode)].improved) << "\n";
  return 0;
}

int run_assist(const Options& o) {
  const io::RunConfig rc = io::load_run_config(o.config);
  const auto& cfg = section(rc.assist, "assist");
  const fs::path dir = prepare_out(o.out);
  const auto r = experiments::run_assist_sim(cfg, o.jobs);
  write_report(dir, "assist", experiments::to_report(r, rc.family, label_of(rc)));
  std::cout << "intended found   unassisted " << pm(r.unassisted.intended_found) << "  assisted "
            << pm(r.assisted.intended_found) << "\n"
            << "found per answer unassisted " << pm(r.unassisted.mean_found) << "  assisted "
            << pm(r.assisted.mean_found) << "\n"
            << "false discoveries per answer " << pm(r.false_discoveries) << "\n";
  return 0;
}

int build_dataset(const Options& o) {
  const io::RunConfig rc = io::load_run_config(o.config);
  const auto& cfg = section(rc.dataset, "dataset");
  const fs::path dir = prepare_out(o.out);
  const auto ds = experiments::build_dataset(cfg);
  const std::string ext = o.gzip ? ".jsonl.gz" : ".jsonl";
  auto path = [&](const char* stem) { return (dir / (stem + ext)).string(); };
  write_jsonl(path("base"), ds.base);
  write_jsonl(path("tasks"), ds.tasks);
  write_jsonl(path("critiqueability"), ds.answers);
  write_jsonl(path("critiques"), ds.critiques);
  write_jsonl(path("helpfulness"), ds.helpfulness);
  write_report(dir, "dataset", experiments::to_report(ds, cfg, label_of(rc)));
  std::size_t crit = 0;
  for (const auto& a : ds.answers) crit += a.critiqueable;
  std::cout << ds.base.size() << " base records, " << ds.answers.size() << " answer records (" << crit
            << " critiqueable), " << ds.critiques.size() << " critique demonstrations in " << dir.string() << "\n";
  return 0;
}

int report(const Options& o) {
  std::vector<Report> reports;
  for (const auto& in : o.inputs) reports.push_back(io::read_report(in));
  const io::MergedTable t = io::merge_reports(reports);
  const fs::path prefix(o.out);
  if (prefix.has_parent_path()) prepare_out(prefix.parent_path().string());
  if (o.format != "dat") detail::write_file(prefix.string() + ".csv", io::merged_csv(t));
  if (o.format != "csv") detail::write_file(prefix.string() + ".dat", io::merged_dat(t));
  std::cout << t.labels.size() << " reports (" << t.kind << ", " << to_string(t.family) << ") merged into "
            << prefix.string() << (o.format == "both" ? ".{csv,dat}" : "." + o.format) << "\n";
  return 0;
}

CLI::App* config_command(CLI::App& app, const char* name, const char* help, Options& o) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("--config", o.config, "run configuration (JSON)")->required();
  sub->add_option("--out", o.out, "output directory")->capture_default_str();
  sub->add_option("--jobs", o.jobs, "worker threads; results do not depend on it")->capture_default_str()->check(CLI::PositiveNumber);
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"critlab: synthetic critique experiments"};
  app.require_subcommand(1);

  const std::vector<std::string> families{"addition", "three_sat", "alphabetize", "paired_mcq"};
  CLI::App* gen = app.add_subcommand("gen-tasks", "Write generated task records as jsonl");
  gen->add_option("--family", o.family, "task family")->required()->check(CLI::IsMember(families));
  gen->add_option("--count", o.count, "number of tasks")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "master seed")->capture_default_str();
  gen->add_option("--out", o.out, "output file (.jsonl or .jsonl.gz)")->required();
  gen->add_option("--sat-variables", o.sat_variables, "3-SAT variable count")->capture_default_str();
  gen->add_option("--sat-clauses", o.sat_clauses, "3-SAT clause count")->capture_default_str();
  gen->add_option("--words-file", o.words_file, "alphabetize word list, one word per line");
  gen->add_option("--corpus-file", o.corpus_file, "paired-MCQ corpus (jsonl)");
  gen->add_option("--jobs", o.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  CLI::App* gdc_cmd = config_command(app, "run-gdc", "Measure G, D, C and the gaps between them", o);
  CLI::App* debate_cmd = config_command(app, "run-debate", "Honest/misleading pair discrimination", o);
  CLI::App* refine_cmd = config_command(app, "run-refine", "Critique-conditioned and direct refinement", o);
  CLI::App* assist_cmd = config_command(app, "run-assist", "Simulated labelers with and without critique assistance", o);
  CLI::App* dataset_cmd = config_command(app, "build-dataset", "Two-round dataset with balanced critiqueability", o);
  dataset_cmd->add_flag("--gzip", o.gzip, "gzip the jsonl outputs");

  CLI::App* report_cmd = app.add_subcommand("report", "Merge reports into one table keyed by label");
  report_cmd->add_option("--in", o.inputs, "report JSON files")->required()->expected(1, -1);
  report_cmd->add_option("--format", o.format, "csv, dat or both")->capture_default_str()->check(CLI::IsMember({"csv", "dat", "both"}));
  report_cmd->add_option("--out", o.out, "output path prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (gen->parsed()) return gen_tasks(o);
    if (gdc_cmd->parsed()) return run_gdc(o);
    if (debate_cmd->parsed()) return run_debate(o);
    if (refine_cmd->parsed()) return run_refine(o);
    if (assist_cmd->parsed()) return run_assist(o);
    if (dataset_cmd->parsed()) return build_dataset(o);
    if (report_cmd->parsed()) return report(o);
  } catch (const ConfigError& e) {
    log(std::string("invalid configuration: ") + e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    log(std::string("error: ") + e.what());
    return kRuntimeError;
  }
  return kUsageError;
}
