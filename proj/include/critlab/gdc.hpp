#pragma once

// Generator / discriminator / critique measurements. Every instance draws
// from labeled seed streams, so G, D and C see the same generator samples
// and the gaps are paired differences.
//
// Streams (master seed, label, indices):
//   gdc/instance  (i)        task instance
//   gdc/answers   (i, j)     generator sample j; sample 0 is G's sample
//   gdc/baseline  (i)        independent sample for empirical win rates
//   gdc/disc      (i, j)     discriminator score of sample j
//   gdc/critique  (i, j, k)  critique k of sample j
//   gdc/judge     (i, j, k)  judge verdict on critique k of sample j
//   gdc/rank      (i, j, k)  judge score used only to rank critiques (C_M)
//   gdc/tie       (i, s, N)  tie-break for selector s

#include <critlab/families.hpp>
#include <critlab/parallel.hpp>
#include <critlab/policies.hpp>
#include <critlab/report.hpp>
#include <critlab/stats.hpp>

namespace critlab::gdc {

enum class TieBreak { random_seeded, first };

inline std::string_view to_string(TieBreak t) noexcept {
  return t == TieBreak::first ? "first" : "random_seeded";
}

struct GdcConfig {
  FamilyId family = FamilyId::addition;
  FamilyConfig family_config;
  int n_instances = 1000;
  int best_of_n = 2;
  GeneratorPolicy generator = OracleGenerator{};
  DiscriminatorPolicy discriminator = OracleDiscriminator{};
  CritiquePolicy critiquer = OracleCritiquer{};
  HelpfulnessJudge judge = OracleJudge{};
  TieBreak tie_break = TieBreak::random_seeded;
  std::uint64_t master_seed = 0;
  int bootstrap_resamples = 1000;
};

inline void validate(const GdcConfig& c) {
  if (c.n_instances < 1) throw ConfigError("n_instances", "must be >= 1");
  if (c.best_of_n < 1) throw ConfigError("best_of_n", "must be >= 1");
  if (c.bootstrap_resamples < 100) throw ConfigError("bootstrap_resamples", "must be >= 100");
}

inline ordered_json config_to_json(const GdcConfig& c) {
  ordered_json j;
  j["family"] = to_string(c.family);
  j["n_instances"] = c.n_instances;
  j["best_of_n"] = c.best_of_n;
  j["generator"] = policy_json::to_json(c.generator);
  j["discriminator"] = policy_json::to_json(c.discriminator);
  j["critiquer"] = policy_json::to_json(c.critiquer);
  j["judge"] = policy_json::to_json(c.judge);
  j["tie_break"] = to_string(c.tie_break);
  j["master_seed"] = c.master_seed;
  j["bootstrap_resamples"] = c.bootstrap_resamples;
  if (c.family == FamilyId::three_sat) j["sat"] = {{"variables", c.family_config.sat.variables}, {"clauses", c.family_config.sat.clauses}};
  return j;
}

/// Mean with a bootstrap standard error (one sigma).
struct Estimate {
  double value = 0.0;
  double se = 0.0;
  friend bool operator==(const Estimate&, const Estimate&) = default;
};

struct Outcomes {
  std::vector<double> per_instance;
  Estimate estimate;
};

inline Estimate estimate(const std::vector<double>& v, const GdcConfig& c, std::string_view metric) {
  Estimate e{stats::mean(v), 0.0};
  if (v.size() >= 2)
    e.se = stats::bootstrap_se(v, {c.bootstrap_resamples, {}}, derive_stream(c.master_seed, "gdc/bootstrap/" + std::string(metric), 0));
  return e;
}

/// Binary-outcome win rate against a baseline: (1 + acc - acc_baseline) / 2.
inline double win_rate(double accuracy, double baseline_accuracy) {
  if (!(accuracy >= 0 && accuracy <= 1 && baseline_accuracy >= 0 && baseline_accuracy <= 1))
    throw InvalidArgument("win_rate: accuracies must lie in [0, 1]");
  return (1.0 + accuracy - baseline_accuracy) / 2.0;
}

/// Paired outcome: 1 for a win, 1/2 for a tie, 0 for a loss.
inline double paired_win(double challenger, double baseline) {
  return challenger > baseline ? 1.0 : challenger < baseline ? 0.0 : 0.5;
}

/// Index of the smallest key. Among equal keys: the first, or a seeded
/// uniform choice.
inline std::size_t select_min(const std::vector<double>& keys, TieBreak tie, std::uint64_t seed) {
  if (keys.empty()) throw InvalidArgument("select_min: no candidates");
  const double best = *std::min_element(keys.begin(), keys.end());
  std::vector<std::size_t> ties;
  for (std::size_t j = 0; j < keys.size(); ++j)
    if (keys[j] == best) ties.push_back(j);
  if (tie == TieBreak::first || ties.size() == 1) return ties.front();
  Rng rng(seed);
  return ties[rng.below(ties.size())];
}

/// Tie-break stream ids. Every C variant shares kSelectC so that equal keys
/// resolve identically across variants.
enum Selector : std::uint64_t { kSelectD = 0, kSelectC = 1 };

/// Stream-addressed access to everything one instance needs.
class Engine {
 public:
  explicit Engine(const GdcConfig& c) : cfg_(c), family_(make_family(c.family, c.family_config)) { validate(c); }

  const GdcConfig& config() const noexcept { return cfg_; }
  const Family& family() const noexcept { return *family_; }

  TaskInstance instance(std::size_t i) const { return family_->generate(derive_stream(cfg_.master_seed, "gdc/instance", i)); }

  Sampled<StructuredAnswer> answer(const TaskInstance& inst, std::size_t i, std::size_t j) const {
    return sample_answer(*family_, cfg_.generator, inst, seed_path(cfg_.master_seed, "gdc/answers", {i, j}));
  }

  Sampled<StructuredAnswer> baseline(const TaskInstance& inst, std::size_t i) const {
    return sample_answer(*family_, cfg_.generator, inst, seed_path(cfg_.master_seed, "gdc/baseline", {i}));
  }

  double disc(const TaskInstance& inst, const StructuredAnswer& a, std::size_t i, std::size_t j) const {
    return score_critiqueability(*family_, cfg_.discriminator, inst, a, seed_path(cfg_.master_seed, "gdc/disc", {i, j}))
        .value();
  }

  Sampled<StructuredCritique> critique(const TaskInstance& inst, const StructuredAnswer& a, std::size_t i, std::size_t j,
                                       std::size_t k) const {
    return sample_critique(*family_, cfg_.critiquer, inst, a, seed_path(cfg_.master_seed, "gdc/critique", {i, j, k}));
  }

  double verdict(const TaskInstance& inst, const StructuredAnswer& a, const StructuredCritique& c, std::size_t i,
                 std::size_t j, std::size_t k) const {
    return judge_helpfulness(*family_, cfg_.judge, inst, a, c, seed_path(cfg_.master_seed, "gdc/judge", {i, j, k})).value();
  }

  double rank(const TaskInstance& inst, const StructuredAnswer& a, const StructuredCritique& c, std::size_t i,
              std::size_t j, std::size_t k) const {
    return judge_helpfulness(*family_, cfg_.judge, inst, a, c, seed_path(cfg_.master_seed, "gdc/rank", {i, j, k})).value();
  }

  std::uint64_t tie_seed(std::size_t i, std::uint64_t selector, std::uint64_t extra = 0) const {
    return seed_path(cfg_.master_seed, "gdc/tie", {i, selector, extra});
  }

  double correct(const TaskInstance& inst, const StructuredAnswer& a) const {
    return family_->critiqueability_oracle(inst, a).critiqueable ? 0.0 : 1.0;
  }

 private:
  GdcConfig cfg_;
  std::shared_ptr<const Family> family_;
};

/// A judged-valid critique makes its answer less preferred.
inline double judged_poor(double verdict_score) { return verdict_score >= 0.5 ? 1.0 : 0.0; }

struct InstanceResult {
  double g = 0, d = 0, c = 0, baseline = 0;
  int generator_parse_failures = 0;
  int critique_parse_failures = 0;
};

inline InstanceResult evaluate_instance(const Engine& e, std::size_t i) {
  const GdcConfig& cfg = e.config();
  const TaskInstance inst = e.instance(i);
  const std::size_t n = static_cast<std::size_t>(cfg.best_of_n);
  InstanceResult r;
  std::vector<StructuredAnswer> answers;
  std::vector<double> correct, d_keys, c_keys;
  for (std::size_t j = 0; j < n; ++j) {
    auto s = e.answer(inst, i, j);
    r.generator_parse_failures += s.parse_failed;
    correct.push_back(e.correct(inst, s.value));
    d_keys.push_back(e.disc(inst, s.value, i, j));
    auto crit = e.critique(inst, s.value, i, j, 0);
    r.critique_parse_failures += crit.parse_failed;
    c_keys.push_back(judged_poor(e.verdict(inst, s.value, crit.value, i, j, 0)));
    answers.push_back(std::move(s.value));
  }
  auto base = e.baseline(inst, i);
  r.generator_parse_failures += base.parse_failed;
  r.baseline = e.correct(inst, base.value);
  r.g = correct[0];
  r.d = correct[select_min(d_keys, cfg.tie_break, e.tie_seed(i, kSelectD))];
  r.c = correct[select_min(c_keys, cfg.tie_break, e.tie_seed(i, kSelectC))];
  return r;
}

inline std::vector<InstanceResult> evaluate_all(const GdcConfig& cfg, int jobs) {
  const Engine e(cfg);
  std::vector<InstanceResult> out(static_cast<std::size_t>(cfg.n_instances));
  parallel_for(out.size(), jobs, [&](std::size_t i) { out[i] = evaluate_instance(e, i); });
  return out;
}

template <class F>
Outcomes outcomes_of(const std::vector<InstanceResult>& rs, const GdcConfig& cfg, std::string_view metric, F field) {
  Outcomes o;
  for (const auto& r : rs) o.per_instance.push_back(field(r));
  o.estimate = estimate(o.per_instance, cfg, metric);
  return o;
}

/// Accuracy of one generator sample per instance.
inline Outcomes measure_g(const GdcConfig& cfg, int jobs = 1) {
  return outcomes_of(evaluate_all(cfg, jobs), cfg, "g", [](const InstanceResult& r) { return r.g; });
}

/// Accuracy of the best-of-N sample with the lowest critiqueability score.
inline Outcomes measure_d(const GdcConfig& cfg, int jobs = 1) {
  return outcomes_of(evaluate_all(cfg, jobs), cfg, "d", [](const InstanceResult& r) { return r.d; });
}

/// Accuracy of the best-of-N sample whose critique is judged invalid.
inline Outcomes measure_c(const GdcConfig& cfg, int jobs = 1) {
  return outcomes_of(evaluate_all(cfg, jobs), cfg, "c", [](const InstanceResult& r) { return r.c; });
}

inline constexpr std::string_view kCSearchNote =
    "C selects on judged critique validity; the judge consults ground truth, so C can profit from a small "
    "search against it.";

struct GapReport {
  ordered_json config;
  Estimate g, d, c;
  Estimate win_rate_d, win_rate_c;                      // (1 + acc - g) / 2
  Estimate empirical_win_rate_d, empirical_win_rate_c;  // paired vs an independent sample
  Estimate gd_gap, gc_gap, cd_gap;
  int n_instances = 0;
  int best_of_n = 0;
  std::size_t generator_samples = 0;
  std::size_t critiques_drawn = 0;
  std::size_t generator_parse_failures = 0;
  std::size_t critique_parse_failures = 0;
  std::string note;
  friend bool operator==(const GapReport&, const GapReport&) = default;
};

inline GapReport run_gdc(const GdcConfig& cfg, int jobs = 1) {
  const auto rs = evaluate_all(cfg, jobs);
  auto est = [&](std::string_view name, auto f) {
    std::vector<double> v;
    for (const auto& r : rs) v.push_back(f(r));
    return estimate(v, cfg, name);
  };
  GapReport rep;
  rep.config = config_to_json(cfg);
  rep.g = est("g", [](const auto& r) { return r.g; });
  rep.d = est("d", [](const auto& r) { return r.d; });
  rep.c = est("c", [](const auto& r) { return r.c; });
  rep.win_rate_d = est("win_rate_d", [](const auto& r) { return (1 + r.d - r.g) / 2; });
  rep.win_rate_c = est("win_rate_c", [](const auto& r) { return (1 + r.c - r.g) / 2; });
  rep.empirical_win_rate_d = est("empirical_win_rate_d", [](const auto& r) { return paired_win(r.d, r.baseline); });
  rep.empirical_win_rate_c = est("empirical_win_rate_c", [](const auto& r) { return paired_win(r.c, r.baseline); });
  rep.gd_gap = est("gd_gap", [](const auto& r) { return r.d - r.g; });
  rep.gc_gap = est("gc_gap", [](const auto& r) { return r.c - r.g; });
  rep.cd_gap = est("cd_gap", [](const auto& r) { return r.c - r.d; });
  rep.n_instances = cfg.n_instances;
  rep.best_of_n = cfg.best_of_n;
  rep.generator_samples = rs.size() * (static_cast<std::size_t>(cfg.best_of_n) + 1);
  rep.critiques_drawn = rs.size() * static_cast<std::size_t>(cfg.best_of_n);
  for (const auto& r : rs) {
    rep.generator_parse_failures += static_cast<std::size_t>(r.generator_parse_failures);
    rep.critique_parse_failures += static_cast<std::size_t>(r.critique_parse_failures);
  }
  rep.note = kCSearchNote;
  return rep;
}

inline Report to_report(const GapReport& g, FamilyId family, std::string label = {}) {
  Report r;
  r.kind = "gdc";
  r.family = family;
  r.label = std::move(label);
  r.config = g.config;
  const int n = g.best_of_n;
  auto row = [&](std::string name, int bon, const Estimate& e) { r.metrics.push_back({std::move(name), bon, e.value, e.se}); };
  row("g_value", 1, g.g);
  row("d_value", n, g.d);
  row("c_value", n, g.c);
  row("win_rate_d", n, g.win_rate_d);
  row("win_rate_c", n, g.win_rate_c);
  row("empirical_win_rate_d", n, g.empirical_win_rate_d);
  row("empirical_win_rate_c", n, g.empirical_win_rate_c);
  row("gd_gap", n, g.gd_gap);
  row("gc_gap", n, g.gc_gap);
  row("cd_gap", n, g.cd_gap);
  r.metadata["n_instances"] = g.n_instances;
  r.metadata["best_of_n"] = g.best_of_n;
  r.metadata["generator_samples"] = g.generator_samples;
  r.metadata["critiques_drawn"] = g.critiques_drawn;
  r.metadata["generator_parse_failures"] = g.generator_parse_failures;
  r.metadata["critique_parse_failures"] = g.critique_parse_failures;
  r.metadata["note"] = g.note;
  return r;
}

// ---------------------------------------------------------------------------
// Critique-selection variants

struct CVariants {
  int m = 1;
  Estimate c;        // one critique, binary verdict (as measure_c)
  Estimate c_score;  // C_m: verdict score itself is the selection key
  Estimate c_best;   // C_M: best of m critiques by rank score, then a verdict
  Estimate c_any;    // C_hM: poor if any of m critiques is judged valid
};

/// All variants reuse measure_c's answer and critique streams; critique 0
/// and its verdict are shared, so m = 1 makes C_M identical to C.
inline CVariants measure_c_variants(const GdcConfig& cfg, int m, int jobs = 1) {
  if (m < 1) throw InvalidArgument("measure_c_variants: m must be >= 1");
  const Engine e(cfg);
  struct Row {
    double c, score, best, any;
  };
  std::vector<Row> rows(static_cast<std::size_t>(cfg.n_instances));
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const TaskInstance inst = e.instance(i);
    std::vector<double> correct, kc, kscore, kbest, kany;
    for (std::size_t j = 0; j < static_cast<std::size_t>(cfg.best_of_n); ++j) {
      const StructuredAnswer a = e.answer(inst, i, j).value;
      correct.push_back(e.correct(inst, a));
      std::vector<StructuredCritique> crits;
      std::vector<double> verdicts, ranks;
      for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
        crits.push_back(e.critique(inst, a, i, j, k).value);
        verdicts.push_back(e.verdict(inst, a, crits.back(), i, j, k));
        ranks.push_back(e.rank(inst, a, crits.back(), i, j, k));
      }
      const std::size_t top = static_cast<std::size_t>(std::max_element(ranks.begin(), ranks.end()) - ranks.begin());
      kc.push_back(judged_poor(verdicts[0]));
      kscore.push_back(verdicts[0]);
      kbest.push_back(judged_poor(verdicts[top]));
      kany.push_back(judged_poor(*std::max_element(verdicts.begin(), verdicts.end())));
    }
    rows[i] = Row{correct[select_min(kc, cfg.tie_break, e.tie_seed(i, kSelectC))],
                  correct[select_min(kscore, cfg.tie_break, e.tie_seed(i, kSelectC))],
                  correct[select_min(kbest, cfg.tie_break, e.tie_seed(i, kSelectC))],
                  correct[select_min(kany, cfg.tie_break, e.tie_seed(i, kSelectC))]};
  });
  auto est = [&](std::string_view name, double Row::*field) {
    std::vector<double> v;
    for (const auto& r : rows) v.push_back(r.*field);
    return estimate(v, cfg, name);
  };
  return CVariants{m, est("c", &Row::c), est("c_score", &Row::score), est("c_best", &Row::best), est("c_any", &Row::any)};
}

// ---------------------------------------------------------------------------
// Scaling in N

struct ScalingPoint {
  int n = 1;
  Estimate d_win;  // paired win rate of best-of-N (D) against sample 0
  Estimate c_win;
  Estimate d_accuracy;
  Estimate c_accuracy;
};

/// Best-of-N against best-of-1 for each N, sharing one answer stream: the
/// first N samples of instance i are the same for every N.
inline std::vector<ScalingPoint> gd_gc_scaling(const GdcConfig& cfg, const std::vector<int>& n_values, int jobs = 1) {
  if (n_values.empty()) throw InvalidArgument("gd_gc_scaling: n_values must be non-empty");
  for (int n : n_values)
    if (n < 1) throw InvalidArgument("gd_gc_scaling: every N must be >= 1");
  const std::size_t max_n = static_cast<std::size_t>(*std::max_element(n_values.begin(), n_values.end()));
  GdcConfig wide = cfg;
  wide.best_of_n = static_cast<int>(max_n);
  const Engine e(wide);
  const std::size_t count = static_cast<std::size_t>(cfg.n_instances);
  // [instance][point] -> (d correct, c correct, g correct)
  std::vector<std::vector<std::array<double, 3>>> per(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    const TaskInstance inst = e.instance(i);
    std::vector<double> correct, d_keys, c_keys;
    for (std::size_t j = 0; j < max_n; ++j) {
      const StructuredAnswer a = e.answer(inst, i, j).value;
      correct.push_back(e.correct(inst, a));
      d_keys.push_back(e.disc(inst, a, i, j));
      c_keys.push_back(judged_poor(e.verdict(inst, a, e.critique(inst, a, i, j, 0).value, i, j, 0)));
    }
    for (int n : n_values) {
      const auto un = static_cast<std::size_t>(n);
      const std::vector<double> dk(d_keys.begin(), d_keys.begin() + n), ck(c_keys.begin(), c_keys.begin() + n);
      per[i].push_back({correct[select_min(dk, cfg.tie_break, e.tie_seed(i, kSelectD, un))],
                        correct[select_min(ck, cfg.tie_break, e.tie_seed(i, kSelectC, un))], correct[0]});
    }
  });
  std::vector<ScalingPoint> out;
  for (std::size_t p = 0; p < n_values.size(); ++p) {
    std::vector<double> dw, cw, da, ca;
    for (const auto& row : per) {
      dw.push_back(paired_win(row[p][0], row[p][2]));
      cw.push_back(paired_win(row[p][1], row[p][2]));
      da.push_back(row[p][0]);
      ca.push_back(row[p][1]);
    }
    const std::string tag = "/" + std::to_string(n_values[p]);
    out.push_back({n_values[p], estimate(dw, cfg, "scaling/d_win" + tag), estimate(cw, cfg, "scaling/c_win" + tag),
                   estimate(da, cfg, "scaling/d" + tag), estimate(ca, cfg, "scaling/c" + tag)});
  }
  return out;
}

inline Report to_report(const CVariants& v, const GdcConfig& cfg, std::string label = {}) {
  Report r;
  r.kind = "gdc_variants";
  r.family = cfg.family;
  r.label = std::move(label);
  r.config = config_to_json(cfg);
  r.config["m"] = v.m;
  const int n = cfg.best_of_n;
  r.metrics.push_back({"c_value", n, v.c.value, v.c.se});
  r.metrics.push_back({"c_score_value", n, v.c_score.value, v.c_score.se});
  r.metrics.push_back({"c_best_value", n, v.c_best.value, v.c_best.se});
  r.metrics.push_back({"c_any_value", n, v.c_any.value, v.c_any.se});
  return r;
}

inline Report to_report(const std::vector<ScalingPoint>& pts, const GdcConfig& cfg, std::string label = {}) {
  Report r;
  r.kind = "gdc_scaling";
  r.family = cfg.family;
  r.label = std::move(label);
  r.config = config_to_json(cfg);
  r.config.erase("best_of_n");
  for (const auto& p : pts) {
    r.metrics.push_back({"d_win_vs_single", p.n, p.d_win.value, p.d_win.se});
    r.metrics.push_back({"c_win_vs_single", p.n, p.c_win.value, p.c_win.se});
    r.metrics.push_back({"d_value", p.n, p.d_accuracy.value, p.d_accuracy.se});
    r.metrics.push_back({"c_value", p.n, p.c_accuracy.value, p.c_accuracy.se});
  }
  return r;
}

}  // namespace critlab::gdc
