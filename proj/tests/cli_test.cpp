// Drives the built critlab binary end to end.

#include <gtest/gtest.h>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args) {
  const fs::path log = fs::temp_directory_path() / ("critlab_cli_" + std::to_string(::getpid()) + ".log");
  const std::string cmd = std::string(CRITLAB_CLI) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove(log);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("critlab_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string at(const std::string& name) const { return (dir_ / name).string(); }
  std::string write_config(const std::string& name, const json& j) const {
    std::ofstream(at(name)) << j.dump(2);
    return at(name);
  }
  fs::path dir_;
};

const std::string kConfigs = std::string(CRITLAB_SOURCE_DIR) + "/configs";

TEST_F(Cli, GenTasksIsDeterministic) {
  ASSERT_EQ(run("gen-tasks --family addition --count 10 --seed 7 --out " + at("a.jsonl")).code, 0);
  ASSERT_EQ(run("gen-tasks --family addition --count 10 --seed 7 --out " + at("b.jsonl") + " --jobs 4").code, 0);
  const std::string a = slurp(at("a.jsonl"));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 10);
  EXPECT_EQ(a, slurp(at("b.jsonl")));
  ASSERT_EQ(run("gen-tasks --family three_sat --count 5 --seed 7 --out " + at("c.jsonl.gz")).code, 0);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  const Outcome bogus = run("gen-tasks --family bogus --count 10 --out " + at("x.jsonl"));
  EXPECT_EQ(bogus.code, 2);
  for (const char* f : {"addition", "three_sat", "alphabetize", "paired_mcq"})
    EXPECT_NE(bogus.out.find(f), std::string::npos) << bogus.out;
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("gen-tasks --family addition --count 0 --out " + at("x.jsonl")).code, 2);
  EXPECT_EQ(run("run-gdc --config " + kConfigs + "/addition_m.json --jobs 0").code, 2);
}

TEST_F(Cli, HelpEverywhereExitsZero) {
  for (const char* sub : {"", "gen-tasks", "run-gdc", "run-debate", "run-refine", "run-assist", "build-dataset", "report"}) {
    const Outcome r = run(std::string(sub) + " --help");
    EXPECT_EQ(r.code, 0) << sub;
    EXPECT_NE(r.out.find("--"), std::string::npos) << sub;
  }
  const Outcome r = run("run-gdc --help");
  for (const char* flag : {"--config", "--out", "--jobs"}) EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
}

TEST_F(Cli, ConfigProblems) {
  EXPECT_EQ(run("run-gdc --config " + at("missing.json") + " --out " + at("o")).code, 1);
  json j = {{"family", "addition"}, {"gdc", {{"best_of_n", 0}}}};
  const Outcome bad = run("run-gdc --config " + write_config("bad.json", j) + " --out " + at("o"));
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("gdc.best_of_n"), std::string::npos) << bad.out;
  j = {{"family", "addition"}};
  const Outcome missing = run("run-debate --config " + write_config("nodebate.json", j) + " --out " + at("o"));
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.out.find("debate"), std::string::npos);
}

TEST_F(Cli, RunGdcReportsAndRepeats) {
  const json j = {{"family", "addition"},
                  {"seed", 3},
                  {"gdc", {{"n_instances", 500}, {"best_of_n", 2}, {"generator", {{"kind", "noisy"}, {"epsilon", 0.5}}}}}};
  const std::string cfg = write_config("gdc.json", j);
  const Outcome r = run("run-gdc --config " + cfg + " --out " + at("a"));
  ASSERT_EQ(r.code, 0) << r.out;
  for (const char* key : {"G ", "D ", "C ", "GD gap", "GC gap", "CD gap", "+/-"}) EXPECT_NE(r.out.find(key), std::string::npos);
  ASSERT_EQ(run("run-gdc --config " + cfg + " --out " + at("b") + " --jobs 8").code, 0);
  EXPECT_EQ(slurp(at("a/gdc.json")), slurp(at("b/gdc.json")));
  EXPECT_EQ(slurp(at("a/gdc.csv")), slurp(at("b/gdc.csv")));
  const json rep = json::parse(slurp(at("a/gdc.json")));
  EXPECT_EQ(rep["kind"], "gdc");
  EXPECT_EQ(rep["metrics"].size(), 10u);
}

TEST_F(Cli, DebateMatchesClosedForm) {
  const json j = {{"family", "addition"},
                  {"seed", 8},
                  {"debate", {{"n_pairs", 4000}, {"critiquer", {{"kind", "noisy"}, {"hit_q", 0.5}}}, {"n_values", {1, 2, 4}}}}};
  ASSERT_EQ(run("run-debate --config " + write_config("d.json", j) + " --out " + at("o")).code, 0);
  const json rep = json::parse(slurp(at("o/debate.json")));
  const std::map<int, double> want{{1, 0.75}, {2, 0.875}, {4, 0.96875}};
  int seen = 0;
  for (const auto& m : rep["metrics"]) {
    if (m["metric"] != "accuracy_helpfulness") continue;
    const double p = want.at(m["best_of_n"].get<int>());
    EXPECT_NEAR(m["value"].get<double>(), p, 3 * std::sqrt(p * (1 - p) / 4000) + 1e-12);
    ++seen;
  }
  EXPECT_EQ(seen, 3);
}

TEST_F(Cli, AssistDefaultProfileHelps) {
  const json j = {{"family", "addition"}, {"seed", 2}, {"assist", json::object()}};
  ASSERT_EQ(run("run-assist --config " + write_config("a.json", j) + " --out " + at("o")).code, 0);
  const json rep = json::parse(slurp(at("o/assist.json")));
  std::map<std::string, double> v;
  for (const auto& m : rep["metrics"]) v[m["metric"]] = m["value"];
  EXPECT_GT(v["mean_found_assisted"], v["mean_found_unassisted"]);
}

TEST_F(Cli, BuildDatasetBalances) {
  const json j = {{"family", "alphabetize"}, {"seed", 5}, {"dataset", {{"n_base", 20}, {"n_critiqueability", 1000}}}};
  const std::string cfg = write_config("ds.json", j);
  ASSERT_EQ(run("build-dataset --config " + cfg + " --out " + at("o")).code, 0);
  std::ifstream in(at("o/critiqueability.jsonl"));
  int lines = 0, crit = 0;
  for (std::string line; std::getline(in, line); ++lines) crit += json::parse(line)["critiqueable"].get<bool>();
  EXPECT_EQ(lines, 1000);
  EXPECT_EQ(crit, 500);
  ASSERT_EQ(run("build-dataset --config " + cfg + " --out " + at("p") + " --gzip").code, 0);
  ASSERT_EQ(run("build-dataset --config " + cfg + " --out " + at("q") + " --gzip").code, 0);
  EXPECT_EQ(slurp(at("p/critiques.jsonl.gz")), slurp(at("q/critiques.jsonl.gz")));
}

TEST_F(Cli, ReportMergesProfiles) {
  std::string ins;
  for (const char* p : {"xs", "s", "m", "l", "xl"}) {
    json j = json::parse(slurp(kConfigs + "/ladder/" + p + ".json"));
    j["gdc"]["n_instances"] = 200;
    ASSERT_EQ(run("run-gdc --config " + write_config(std::string(p) + ".json", j) + " --out " + at(p)).code, 0);
    ins += " " + at(std::string(p) + "/gdc.json");
  }
  ASSERT_EQ(run("report --in" + ins + " --out " + at("curve")).code, 0);
  const std::string dat = slurp(at("curve.dat")), csv = slurp(at("curve.csv"));
  EXPECT_EQ(std::count(dat.begin(), dat.end(), '\n'), 6);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
  EXPECT_NE(dat.find("\n4 xl "), std::string::npos);

  ASSERT_EQ(run("report --in " + at("m/gdc.json") + " --out " + at("one") + " --format csv").code, 0);
  EXPECT_TRUE(fs::exists(at("one.csv")));
  EXPECT_FALSE(fs::exists(at("one.dat")));

  json other = json::parse(slurp(kConfigs + "/ladder/m.json"));
  other["family"] = "paired_mcq";
  other["gdc"]["n_instances"] = 50;
  ASSERT_EQ(run("run-gdc --config " + write_config("mcq.json", other) + " --out " + at("mcq")).code, 0);
  const Outcome mixed = run("report --in " + at("m/gdc.json") + " " + at("mcq/gdc.json") + " --out " + at("bad"));
  EXPECT_EQ(mixed.code, 1);
  EXPECT_NE(mixed.out.find("paired_mcq"), std::string::npos) << mixed.out;
}

}  // namespace
