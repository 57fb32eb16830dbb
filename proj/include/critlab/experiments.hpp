#pragma once

// Composite experiments on top of the families and gdc machinery: debate on
// honest/misleading pairs, critique-conditioned refinement, a simulated
// critique-assistance study, and the two-round dataset builder.
//
// Each experiment owns a label prefix for its seed streams (debate/...,
// refine/..., assist/..., dataset/...), so runs are bit-reproducible for any
// job count.

#include <critlab/gdc.hpp>
#include <critlab/records.hpp>

#include <numeric>
#include <set>

namespace critlab::experiments {

using gdc::Estimate;

namespace detail {

inline Estimate estimate(const std::vector<double>& v, int resamples, std::uint64_t master, std::string_view label) {
  if (v.empty()) return {};
  Estimate e{stats::mean(v), 0.0};
  if (v.size() >= 2) e.se = stats::bootstrap_se(v, {resamples, {}}, derive_stream(master, std::string(label), 0));
  return e;
}

inline void check_resamples(int r) {
  if (r < 100) throw ConfigError("bootstrap_resamples", "must be >= 100");
}

inline void check_probability(double p, const char* key) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(key, "must lie in [0, 1]");
}

inline bool coin(std::uint64_t seed) { return Rng(seed).bernoulli(0.5); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Debate

inline constexpr std::string_view kDebateNote =
    "synthetic analog: honest/misleading pairs over a base task family with oracle-defined flaws";

struct HonestMisleadingPair {
  TaskInstance instance;
  StructuredAnswer honest;
  StructuredAnswer misleading;
};

/// Streams: debate/instance(i); debate/corrupt(i, attempt) until the
/// strength-1 corruption is critiqueable.
inline HonestMisleadingPair make_pair(const Family& family, std::uint64_t master, std::size_t i) {
  TaskInstance inst = family.generate(derive_stream(master, "debate/instance", i));
  StructuredAnswer honest = family.solve_oracle(inst);
  for (std::uint64_t attempt = 0; attempt < 256; ++attempt) {
    StructuredAnswer m = family.corrupt(inst, honest, 1, seed_path(master, "debate/corrupt", {i, attempt}));
    if (family.critiqueability_oracle(inst, m).critiqueable) return {std::move(inst), std::move(honest), std::move(m)};
  }
  throw Error("no critiqueable corruption found for " + inst.instance_id);
}

struct DebateConfig {
  FamilyId family = FamilyId::addition;
  FamilyConfig family_config;
  int n_pairs = 1000;
  CritiquePolicy critiquer = NoisyCritiquer{0.5};
  HelpfulnessJudge judge = OracleJudge{};
  DiscriminatorPolicy discriminator = OracleDiscriminator{};
  std::vector<int> n_values{1, 2, 4, 8};
  std::uint64_t master_seed = 0;
  int bootstrap_resamples = 1000;
};

inline void validate(const DebateConfig& c) {
  if (c.n_pairs < 1) throw ConfigError("n_pairs", "must be >= 1");
  if (c.n_values.empty()) throw ConfigError("n_values", "must list at least one N");
  for (int n : c.n_values)
    if (n < 1) throw ConfigError("n_values", "each N must be >= 1, got " + std::to_string(n));
  detail::check_resamples(c.bootstrap_resamples);
}

inline ordered_json config_to_json(const DebateConfig& c) {
  ordered_json j;
  j["family"] = to_string(c.family);
  j["n_pairs"] = c.n_pairs;
  j["critiquer"] = policy_json::to_json(c.critiquer);
  j["judge"] = policy_json::to_json(c.judge);
  j["discriminator"] = policy_json::to_json(c.discriminator);
  j["n_values"] = c.n_values;
  j["master_seed"] = c.master_seed;
  j["bootstrap_resamples"] = c.bootstrap_resamples;
  return j;
}

struct DebateResult {
  ordered_json config;
  Estimate discriminator;                      // method A
  std::vector<std::pair<int, Estimate>> by_n;  // method B, in n_values order
  std::size_t critique_parse_failures = 0;
  friend bool operator==(const DebateResult&, const DebateResult&) = default;
};

/// Outcome 1 picks the honest answer, 0 the misleading one. Method B uses
/// the first N of one stream of max(N) critiques per side, so larger N only
/// adds evidence. Ties go to a seeded coin: debate/coin(i, 0) for method A,
/// debate/coin(i, N) for method B.
inline DebateResult run_debate(const DebateConfig& cfg, int jobs = 1) {
  validate(cfg);
  const auto family = make_family(cfg.family, cfg.family_config);
  const std::size_t max_n = static_cast<std::size_t>(*std::max_element(cfg.n_values.begin(), cfg.n_values.end()));
  const std::size_t pairs = static_cast<std::size_t>(cfg.n_pairs);
  const std::uint64_t m = cfg.master_seed;

  std::vector<double> a(pairs);
  std::vector<std::vector<double>> b(cfg.n_values.size(), std::vector<double>(pairs));
  std::vector<std::size_t> failures(pairs);

  parallel_for(pairs, jobs, [&](std::size_t i) {
    const HonestMisleadingPair p = make_pair(*family, m, i);
    const std::array<const StructuredAnswer*, 2> side{&p.honest, &p.misleading};

    std::array<double, 2> disc{};
    for (std::size_t s = 0; s < 2; ++s)
      disc[s] = score_critiqueability(*family, cfg.discriminator, p.instance, *side[s], seed_path(m, "debate/disc", {i, s}))
                    .value();
    a[i] = disc[0] < disc[1] ? 1.0 : disc[0] > disc[1] ? 0.0 : detail::coin(seed_path(m, "debate/coin", {i, 0}));

    std::array<std::vector<double>, 2> verdicts;
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t k = 0; k < max_n; ++k) {
        auto c = sample_critique(*family, cfg.critiquer, p.instance, *side[s], seed_path(m, "debate/critique", {i, s, k}));
        failures[i] += c.parse_failed;
        verdicts[s].push_back(
            judge_helpfulness(*family, cfg.judge, p.instance, *side[s], c.value, seed_path(m, "debate/judge", {i, s, k}))
                .value());
      }
    for (std::size_t t = 0; t < cfg.n_values.size(); ++t) {
      const auto n = static_cast<std::size_t>(cfg.n_values[t]);
      const double h = *std::max_element(verdicts[0].begin(), verdicts[0].begin() + static_cast<std::ptrdiff_t>(n));
      const double x = *std::max_element(verdicts[1].begin(), verdicts[1].begin() + static_cast<std::ptrdiff_t>(n));
      b[t][i] = h < x ? 1.0 : h > x ? 0.0 : detail::coin(seed_path(m, "debate/coin", {i, n}));
    }
  });

  DebateResult r;
  r.config = config_to_json(cfg);
  r.discriminator = detail::estimate(a, cfg.bootstrap_resamples, m, "debate/bootstrap/discriminator");
  for (std::size_t t = 0; t < cfg.n_values.size(); ++t)
    r.by_n.emplace_back(cfg.n_values[t], detail::estimate(b[t], cfg.bootstrap_resamples, m,
                                                          "debate/bootstrap/n" + std::to_string(cfg.n_values[t])));
  for (std::size_t f : failures) r.critique_parse_failures += f;
  return r;
}

/// Closed form for an oracle judge and a critiquer that finds a valid
/// critique with probability q: the misleading side is exposed unless all N
/// miss, and then the coin is fair.
inline double debate_closed_form(double q, int n) {
  const double miss = std::pow(1.0 - q, n);
  return (1.0 - miss) + miss / 2.0;
}

inline Report to_report(const DebateResult& d, FamilyId family, std::string label = {}) {
  Report r;
  r.kind = "debate";
  r.family = family;
  r.label = std::move(label);
  r.config = d.config;
  r.metrics.push_back({"accuracy_discriminator", 0, d.discriminator.value, d.discriminator.se});
  for (const auto& [n, e] : d.by_n) r.metrics.push_back({"accuracy_helpfulness", n, e.value, e.se});
  r.metadata["critique_parse_failures"] = d.critique_parse_failures;
  r.metadata["note"] = kDebateNote;
  return r;
}

// ---------------------------------------------------------------------------
// Refinement

enum class RefinementMode { conditional_random, conditional_best_of_8, direct };

inline constexpr std::array<RefinementMode, 3> kAllRefinementModes = {
    RefinementMode::conditional_random, RefinementMode::conditional_best_of_8, RefinementMode::direct};

inline std::string_view to_string(RefinementMode m) noexcept {
  switch (m) {
    case RefinementMode::conditional_random: return "conditional_random";
    case RefinementMode::conditional_best_of_8: return "conditional_best_of_8";
    case RefinementMode::direct: return "direct";
  }
  return "?";
}

inline constexpr std::string_view kDirectRefinementNote =
    "direct refinement is simulated: it fixes one flaw with probability direct_rate";

/// Conditional modes always carry the critique they considered, applied or
/// not; direct refinement never carries one.
struct RefinementRecord {
  TaskInstance instance;
  StructuredAnswer original;
  std::optional<StructuredCritique> critique;
  StructuredAnswer refined;
  RefinementMode mode = RefinementMode::conditional_random;
};

struct RefinementConfig {
  FamilyId family = FamilyId::addition;
  FamilyConfig family_config;
  int n_instances = 1000;
  GeneratorPolicy generator = NoisyGenerator{1.0, 1};
  CritiquePolicy critiquer = OracleCritiquer{};
  HelpfulnessJudge judge = OracleJudge{};
  double direct_rate = 0.5;
  int best_of = 8;
  std::uint64_t master_seed = 0;
  int bootstrap_resamples = 1000;
  bool keep_records = false;
};

inline void validate(const RefinementConfig& c) {
  if (c.n_instances < 1) throw ConfigError("n_instances", "must be >= 1");
  if (c.best_of < 1) throw ConfigError("best_of", "must be >= 1");
  detail::check_probability(c.direct_rate, "direct_rate");
  detail::check_resamples(c.bootstrap_resamples);
}

inline ordered_json config_to_json(const RefinementConfig& c) {
  ordered_json j;
  j["family"] = to_string(c.family);
  j["n_instances"] = c.n_instances;
  j["generator"] = policy_json::to_json(c.generator);
  j["critiquer"] = policy_json::to_json(c.critiquer);
  j["judge"] = policy_json::to_json(c.judge);
  j["direct_rate"] = c.direct_rate;
  j["best_of"] = c.best_of;
  j["master_seed"] = c.master_seed;
  j["bootstrap_resamples"] = c.bootstrap_resamples;
  return j;
}

struct ModeOutcome {
  Estimate improved;     // flaw count strictly decreased
  Estimate reached_sound;  // no flaws remain
  std::size_t increased = 0;
  friend bool operator==(const ModeOutcome&, const ModeOutcome&) = default;
};

struct RefinementResult {
  ordered_json config;
  std::size_t n_flawed = 0;
  std::array<ModeOutcome, 3> modes;  // indexed by RefinementMode
  std::vector<RefinementRecord> records;
  std::size_t generator_parse_failures = 0;
  std::size_t critique_parse_failures = 0;
};

/// A conditional refiner edits only when the judge accepts the critique and
/// the critique really is helpful; otherwise it returns the answer unchanged.
/// Streams: refine/instance(i), refine/answer(i), refine/critique(i, k),
/// refine/judge(i, k), refine/direct(i). The random mode uses critique 0.
inline RefinementResult run_refinement(const RefinementConfig& cfg, int jobs = 1) {
  validate(cfg);
  const auto family = make_family(cfg.family, cfg.family_config);
  const std::uint64_t m = cfg.master_seed;
  const std::size_t n = static_cast<std::size_t>(cfg.n_instances);

  struct Row {
    bool flawed = false;
    std::array<std::size_t, 3> before{}, after{};
    std::vector<RefinementRecord> records;
    std::size_t gen_fail = 0, crit_fail = 0;
  };
  std::vector<Row> rows(n);

  parallel_for(n, jobs, [&](std::size_t i) {
    Row& row = rows[i];
    const TaskInstance inst = family->generate(derive_stream(m, "refine/instance", i));
    auto sampled = sample_answer(*family, cfg.generator, inst, derive_stream(m, "refine/answer", i));
    row.gen_fail = sampled.parse_failed;
    const StructuredAnswer& a = sampled.value;
    const std::size_t flaws = family->flaw_count(inst, a);
    if (!family->critiqueability_oracle(inst, a).critiqueable) return;
    row.flawed = true;

    std::vector<StructuredCritique> crits;
    std::vector<double> verdicts;
    for (std::size_t k = 0; k < static_cast<std::size_t>(cfg.best_of); ++k) {
      auto c = sample_critique(*family, cfg.critiquer, inst, a, seed_path(m, "refine/critique", {i, k}));
      row.crit_fail += c.parse_failed;
      verdicts.push_back(judge_helpfulness(*family, cfg.judge, inst, a, c.value, seed_path(m, "refine/judge", {i, k})).value());
      crits.push_back(std::move(c.value));
    }
    auto conditional = [&](std::size_t k) {
      if (verdicts[k] >= 0.5 && family->helpfulness_oracle(inst, a, crits[k])) return family->apply_critique(inst, a, crits[k]);
      return a;
    };
    const std::size_t best = static_cast<std::size_t>(std::max_element(verdicts.begin(), verdicts.end()) - verdicts.begin());

    std::array<StructuredAnswer, 3> refined{conditional(0), conditional(best), a};
    if (Rng(derive_stream(m, "refine/direct", i)).bernoulli(cfg.direct_rate))
      refined[2] = family->apply_critique(inst, a, family->critique_oracle(inst, a, derive_stream(m, "refine/direct_pick", i)));
    for (std::size_t mode = 0; mode < 3; ++mode) {
      row.before[mode] = flaws;
      row.after[mode] = family->flaw_count(inst, refined[mode]);
    }
    if (cfg.keep_records) {
      row.records.push_back({inst, a, crits[0], refined[0], RefinementMode::conditional_random});
      row.records.push_back({inst, a, crits[best], refined[1], RefinementMode::conditional_best_of_8});
      row.records.push_back({inst, a, std::nullopt, refined[2], RefinementMode::direct});
    }
  });

  RefinementResult r;
  r.config = config_to_json(cfg);
  for (std::size_t mode = 0; mode < 3; ++mode) {
    std::vector<double> improved, sound;
    for (const Row& row : rows) {
      if (!row.flawed) continue;
      improved.push_back(row.after[mode] < row.before[mode] ? 1.0 : 0.0);
      sound.push_back(row.after[mode] == 0 ? 1.0 : 0.0);
      r.modes[mode].increased += row.after[mode] > row.before[mode];
    }
    const std::string name(to_string(kAllRefinementModes[mode]));
    r.modes[mode].improved = detail::estimate(improved, cfg.bootstrap_resamples, m, "refine/bootstrap/improved/" + name);
    r.modes[mode].reached_sound = detail::estimate(sound, cfg.bootstrap_resamples, m, "refine/bootstrap/sound/" + name);
  }
  for (Row& row : rows) {
    r.n_flawed += row.flawed;
    r.generator_parse_failures += row.gen_fail;
    r.critique_parse_failures += row.crit_fail;
    for (auto& rec : row.records) r.records.push_back(std::move(rec));
  }
  return r;
}

inline Report to_report(const RefinementResult& res, FamilyId family, std::string label = {}) {
  Report r;
  r.kind = "refinement";
  r.family = family;
  r.label = std::move(label);
  r.config = res.config;
  const int best_of = res.config.value("best_of", 8);
  for (RefinementMode mode : kAllRefinementModes) {
    const ModeOutcome& o = res.modes[static_cast<std::size_t>(mode)];
    const int bon = mode == RefinementMode::conditional_best_of_8 ? best_of : 0;
    r.metrics.push_back({"improved_" + std::string(to_string(mode)), bon, o.improved.value, o.improved.se});
  }
  for (RefinementMode mode : kAllRefinementModes) {
    const ModeOutcome& o = res.modes[static_cast<std::size_t>(mode)];
    const int bon = mode == RefinementMode::conditional_best_of_8 ? best_of : 0;
    r.metrics.push_back({"reached_sound_" + std::string(to_string(mode)), bon, o.reached_sound.value, o.reached_sound.se});
  }
  r.metadata["n_flawed"] = res.n_flawed;
  ordered_json inc;
  for (RefinementMode mode : kAllRefinementModes) inc[std::string(to_string(mode))] = res.modes[static_cast<std::size_t>(mode)].increased;
  r.metadata["increased_flaw_count"] = inc;
  r.metadata["generator_parse_failures"] = res.generator_parse_failures;
  r.metadata["critique_parse_failures"] = res.critique_parse_failures;
  r.metadata["note"] = kDirectRefinementNote;
  return r;
}

// ---------------------------------------------------------------------------
// Assistance simulation

/// Defaults come from tools/fit_assist on the addition family at strength 2:
/// unassisted intended-critique discovery sits at p_find, and hit_q with
/// p_accept_valid were chosen so the assisted arm lands near 0.45.
struct AssistConfig {
  int k_shown = 8;
  double p_find = 0.27;
  double p_accept_valid = 0.5;
  double p_accept_invalid = 0.05;
  CritiquePolicy critiquer = NoisyCritiquer{0.15};
  HelpfulnessJudge ranker = NoisyJudge{0.1};  // orders the shown critiques
  int strength = 2;
};

struct AssistRun {
  FamilyId family = FamilyId::addition;
  FamilyConfig family_config;
  int n_instances = 10000;
  AssistConfig assist;
  std::uint64_t master_seed = 0;
  int bootstrap_resamples = 1000;
};

inline void validate(const AssistRun& c) {
  if (c.n_instances < 1) throw ConfigError("n_instances", "must be >= 1");
  if (c.assist.k_shown < 0) throw ConfigError("k_shown", "must be >= 0");
  if (c.assist.strength < 1) throw ConfigError("strength", "must be >= 1");
  detail::check_probability(c.assist.p_find, "p_find");
  detail::check_probability(c.assist.p_accept_valid, "p_accept_valid");
  detail::check_probability(c.assist.p_accept_invalid, "p_accept_invalid");
  detail::check_resamples(c.bootstrap_resamples);
}

inline ordered_json config_to_json(const AssistRun& c) {
  ordered_json j;
  j["family"] = to_string(c.family);
  j["n_instances"] = c.n_instances;
  j["k_shown"] = c.assist.k_shown;
  j["p_find"] = c.assist.p_find;
  j["p_accept_valid"] = c.assist.p_accept_valid;
  j["p_accept_invalid"] = c.assist.p_accept_invalid;
  j["critiquer"] = policy_json::to_json(c.assist.critiquer);
  j["ranker"] = policy_json::to_json(c.assist.ranker);
  j["strength"] = c.assist.strength;
  j["master_seed"] = c.master_seed;
  j["bootstrap_resamples"] = c.bootstrap_resamples;
  return j;
}

struct ArmOutcome {
  Estimate mean_found;      // valid critiques found per answer
  Estimate critiqued;       // answers with at least one valid critique found
  Estimate intended_found;  // flawed answers whose intended critique was found
  friend bool operator==(const ArmOutcome&, const ArmOutcome&) = default;
};

struct AssistResult {
  ordered_json config;
  ArmOutcome unassisted, assisted;
  Estimate false_discoveries;  // accepted invalid critiques per answer
  std::size_t n_flawed = 0;
  std::size_t true_flaws = 0;
  friend bool operator==(const AssistResult&, const AssistResult&) = default;
};

/// Both arms share the find stream assist/find(i), so the assisted found set
/// always contains the unassisted one. Assistance draws from
/// assist/critique(i, k), assist/rank(i, k) and assist/accept(i). The
/// intended critique is the canonical oracle critique (assist/intended(i)).
inline AssistResult run_assist_sim(const AssistRun& cfg, int jobs = 1) {
  validate(cfg);
  const AssistConfig& ac = cfg.assist;
  const auto family = make_family(cfg.family, cfg.family_config);
  const std::uint64_t m = cfg.master_seed;
  const std::size_t n = static_cast<std::size_t>(cfg.n_instances);

  struct Row {
    double found_u = 0, found_a = 0, crit_u = 0, crit_a = 0, false_disc = 0;
    bool flawed = false;
    double intended_u = 0, intended_a = 0;
    std::size_t flaws = 0;
  };
  std::vector<Row> rows(n);

  parallel_for(n, jobs, [&](std::size_t i) {
    Row& row = rows[i];
    const TaskInstance inst = family->generate(derive_stream(m, "assist/instance", i));
    const StructuredAnswer a = family->corrupt(inst, inst.oracle_answer, ac.strength, derive_stream(m, "assist/corrupt", i));
    const std::vector<StructuredCritique> flaws = family->valid_critiques(inst, a);
    row.flaws = flaws.size();
    row.flawed = !flaws.empty();
    std::optional<StructuredCritique> intended;
    if (row.flawed) intended = family->critique_oracle(inst, a, derive_stream(m, "assist/intended", i));

    std::vector<StructuredCritique> unassisted;
    Rng find(derive_stream(m, "assist/find", i));
    for (const auto& f : flaws)
      if (find.bernoulli(ac.p_find)) unassisted.push_back(f);

    std::vector<StructuredCritique> shown;
    std::vector<double> scores;
    for (std::size_t k = 0; k < static_cast<std::size_t>(ac.k_shown); ++k) {
      auto c = sample_critique(*family, ac.critiquer, inst, a, seed_path(m, "assist/critique", {i, k}));
      if (std::find(shown.begin(), shown.end(), c.value) != shown.end()) continue;
      scores.push_back(judge_helpfulness(*family, ac.ranker, inst, a, c.value, seed_path(m, "assist/rank", {i, k})).value());
      shown.push_back(std::move(c.value));
    }
    std::vector<std::size_t> order(shown.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return scores[x] > scores[y]; });

    std::vector<StructuredCritique> assisted = unassisted;
    Rng accept(derive_stream(m, "assist/accept", i));
    for (std::size_t k : order) {
      if (family->helpfulness_oracle(inst, a, shown[k])) {
        if (accept.bernoulli(ac.p_accept_valid) && std::find(assisted.begin(), assisted.end(), shown[k]) == assisted.end())
          assisted.push_back(shown[k]);
      } else if (accept.bernoulli(ac.p_accept_invalid)) {
        row.false_disc += 1;
      }
    }
    auto has = [](const std::vector<StructuredCritique>& v, const StructuredCritique& c) {
      return std::find(v.begin(), v.end(), c) != v.end();
    };
    row.found_u = static_cast<double>(unassisted.size());
    row.found_a = static_cast<double>(assisted.size());
    row.crit_u = unassisted.empty() ? 0.0 : 1.0;
    row.crit_a = assisted.empty() ? 0.0 : 1.0;
    if (intended) {
      row.intended_u = has(unassisted, *intended);
      row.intended_a = has(assisted, *intended);
    }
  });

  AssistResult r;
  r.config = config_to_json(cfg);
  auto est = [&](std::string_view name, auto field, bool flawed_only) {
    std::vector<double> v;
    for (const Row& row : rows)
      if (!flawed_only || row.flawed) v.push_back(field(row));
    return detail::estimate(v, cfg.bootstrap_resamples, m, "assist/bootstrap/" + std::string(name));
  };
  r.unassisted.mean_found = est("mean_found_unassisted", [](const Row& x) { return x.found_u; }, false);
  r.assisted.mean_found = est("mean_found_assisted", [](const Row& x) { return x.found_a; }, false);
  r.unassisted.critiqued = est("critiqued_unassisted", [](const Row& x) { return x.crit_u; }, false);
  r.assisted.critiqued = est("critiqued_assisted", [](const Row& x) { return x.crit_a; }, false);
  r.unassisted.intended_found = est("intended_found_unassisted", [](const Row& x) { return x.intended_u; }, true);
  r.assisted.intended_found = est("intended_found_assisted", [](const Row& x) { return x.intended_a; }, true);
  r.false_discoveries = est("false_discoveries", [](const Row& x) { return x.false_disc; }, false);
  for (const Row& row : rows) {
    r.n_flawed += row.flawed;
    r.true_flaws += row.flaws;
  }
  return r;
}

inline Report to_report(const AssistResult& res, FamilyId family, std::string label = {}) {
  Report r;
  r.kind = "assist";
  r.family = family;
  r.label = std::move(label);
  r.config = res.config;
  auto row = [&](std::string name, const Estimate& e) { r.metrics.push_back({std::move(name), 0, e.value, e.se}); };
  row("intended_found_unassisted", res.unassisted.intended_found);
  row("intended_found_assisted", res.assisted.intended_found);
  row("mean_found_unassisted", res.unassisted.mean_found);
  row("mean_found_assisted", res.assisted.mean_found);
  row("critiqued_unassisted", res.unassisted.critiqued);
  row("critiqued_assisted", res.assisted.critiqued);
  row("false_discoveries_per_answer", res.false_discoveries);
  r.metadata["n_flawed"] = res.n_flawed;
  r.metadata["true_flaws"] = res.true_flaws;
  r.metadata["note"] = "simulated labelers; parameters are fitted, not measured";
  return r;
}

// ---------------------------------------------------------------------------
// Dataset builder

/// Thrown when half the round-2 answers cannot be made critiqueable: the
/// generator never errs and corruption is disabled.
class ImpossibleBalance : public Error {
 public:
  using Error::Error;
};

struct DatasetConfig {
  FamilyId family = FamilyId::addition;
  FamilyConfig family_config;
  int n_base = 100;
  int n_critiqueability = 1000;
  GeneratorPolicy generator = NoisyGenerator{0.5, 1};
  bool deterministic_answers = true;
  bool allow_corruption = true;
  int max_repeats = 64;
  std::uint64_t master_seed = 0;
};

inline void validate(const DatasetConfig& c) {
  if (c.n_base < 0) throw ConfigError("n_base", "must be >= 0");
  if (c.n_critiqueability < 0 || c.n_critiqueability % 2 != 0)
    throw ConfigError("n_critiqueability", "must be a non-negative even number");
  if (c.max_repeats < 0) throw ConfigError("max_repeats", "must be >= 0");
}

inline ordered_json config_to_json(const DatasetConfig& c) {
  ordered_json j;
  j["family"] = to_string(c.family);
  j["n_base"] = c.n_base;
  j["n_critiqueability"] = c.n_critiqueability;
  j["generator"] = policy_json::to_json(c.generator);
  j["deterministic_answers"] = c.deterministic_answers;
  j["allow_corruption"] = c.allow_corruption;
  j["max_repeats"] = c.max_repeats;
  j["master_seed"] = c.master_seed;
  return j;
}

struct DatasetStats {
  std::size_t candidates = 0;        // instances drawn in the unique pass
  std::size_t repeated_answers = 0;  // records from repeated instances
  std::size_t corruption_fill = 0;   // critiqueable records made by corruption
  std::size_t oracle_fill = 0;       // sound records taken from the oracle
  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

struct Dataset {
  std::vector<TaskRecord> base;           // round 1
  std::vector<TaskRecord> tasks;          // instances referenced by round 2
  std::vector<AnswerRecord> answers;      // round 2, half critiqueable
  std::vector<CritiqueRecord> critiques;  // one oracle demonstration per critiqueable answer
  std::vector<HelpfulnessRecord> helpfulness;
  DatasetStats stats;
  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Round 2 fills two buckets of n/2 in passes that stop as soon as both are
/// full: (1) one answer per fresh instance, answer seed dataset/answer(c, 0);
/// (2) unless answers are deterministic, fresh answers dataset/answer(c, r)
/// for r = 1..max_repeats over the same candidates; (3) critiqueable gaps
/// from strength-1 corruption (dataset/corrupt(c, attempt)), sound gaps from
/// oracle answers. Duplicate (instance, answer) pairs are never emitted.
/// Records are ordered by candidate, then by pass.
inline Dataset build_dataset(const DatasetConfig& cfg) {
  validate(cfg);
  const auto family = make_family(cfg.family, cfg.family_config);
  const std::uint64_t m = cfg.master_seed;
  Dataset ds;

  for (std::size_t i = 0; i < static_cast<std::size_t>(cfg.n_base); ++i)
    ds.base.push_back(to_record(*family, family->generate(derive_stream(m, "dataset/base", i))));

  const std::size_t half = static_cast<std::size_t>(cfg.n_critiqueability) / 2;
  const std::size_t pool = 2 * static_cast<std::size_t>(cfg.n_critiqueability);
  struct Entry {
    std::size_t candidate, pass, attempt;
    StructuredAnswer answer;
    bool critiqueable;
    std::string source;
  };
  std::vector<Entry> entries;
  std::array<std::size_t, 2> filled{};  // [sound, critiqueable]
  std::set<std::pair<std::size_t, std::string>> seen;
  std::map<std::size_t, TaskInstance> instances;

  auto instance = [&](std::size_t c) -> const TaskInstance& {
    auto it = instances.find(c);
    if (it == instances.end())
      it = instances.emplace(c, family->generate(derive_stream(m, "dataset/instance", c))).first;
    return it->second;
  };
  auto done = [&] { return filled[0] >= half && filled[1] >= half; };
  auto offer = [&](std::size_t c, std::size_t pass, std::size_t attempt, StructuredAnswer a, const char* source) {
    const TaskInstance& inst = instance(c);
    const bool crit = family->critiqueability_oracle(inst, a).critiqueable;
    if (filled[crit] >= half) return false;
    if (!seen.emplace(c, family->render_answer(a)).second) return false;
    ++filled[crit];
    entries.push_back({c, pass, attempt, std::move(a), crit, source});
    return true;
  };

  std::size_t c = 0;
  for (; c < pool && !done(); ++c)
    offer(c, 0, 0, sample_answer(*family, cfg.generator, instance(c), seed_path(m, "dataset/answer", {c, 0})).value,
          "generator");
  ds.stats.candidates = c;
  const std::size_t drawn = c;

  if (!cfg.deterministic_answers)
    for (std::size_t r = 1; r <= static_cast<std::size_t>(cfg.max_repeats) && !done(); ++r)
      for (std::size_t k = 0; k < drawn && !done(); ++k)
        if (offer(k, 1, r, sample_answer(*family, cfg.generator, instance(k), seed_path(m, "dataset/answer", {k, r})).value,
                  "generator"))
          ++ds.stats.repeated_answers;

  if (filled[1] < half && !cfg.allow_corruption)
    throw ImpossibleBalance("only " + std::to_string(filled[1]) + " of " + std::to_string(half) +
                            " critiqueable answers found and corruption is disabled");
  for (std::size_t k = 0; filled[1] < half; ++k)
    for (std::size_t attempt = 0; attempt < 8; ++attempt) {
      const TaskInstance& inst = instance(k);
      if (offer(k, 2, attempt, family->corrupt(inst, inst.oracle_answer, 1, seed_path(m, "dataset/corrupt", {k, attempt})),
                "corruption")) {
        ++ds.stats.corruption_fill;
        break;
      }
    }
  for (std::size_t k = 0; filled[0] < half; ++k)
    if (offer(k, 2, 0, instance(k).oracle_answer, "oracle")) ++ds.stats.oracle_fill;

  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.candidate, x.pass, x.attempt) < std::tie(y.candidate, y.pass, y.attempt);
  });
  std::set<std::size_t> used;
  for (const Entry& e : entries) {
    const TaskInstance& inst = instance(e.candidate);
    if (used.insert(e.candidate).second) ds.tasks.push_back(to_record(*family, inst));
    const std::string text = family->render_answer(e.answer);
    AnswerRecord rec{inst.instance_id, text, e.critiqueable, ordered_json::object()};
    rec.extras["source"] = e.source;
    ds.answers.push_back(std::move(rec));
    if (!e.critiqueable) continue;
    const auto good = family->critique_oracle(inst, e.answer, seed_path(m, "dataset/critique", {e.candidate, e.pass, e.attempt}));
    const std::string good_text = family->render_critique(good);
    ds.critiques.push_back({inst.instance_id, text, good_text, true, ordered_json::object()});
    ds.helpfulness.push_back({inst.instance_id, text, good_text, true, ordered_json::object()});
    ds.helpfulness.push_back(
        {inst.instance_id, text, family->render_critique(family->invalid_critique(inst, e.answer)), false, ordered_json::object()});
  }
  return ds;
}

struct DatasetCheck {
  std::size_t answers = 0;
  std::size_t critiqueable = 0;
  std::size_t mismatches = 0;  // stored booleans that disagree with oracles
  std::vector<std::string> problems;
};

/// Recomputes every stored boolean from the task records alone.
inline DatasetCheck validate_dataset(const Family& family, const std::vector<TaskRecord>& tasks,
                                     const std::vector<AnswerRecord>& answers, const std::vector<CritiqueRecord>& critiques,
                                     const std::vector<HelpfulnessRecord>& helpfulness) {
  std::map<std::string, TaskInstance> by_id;
  for (const TaskRecord& t : tasks) by_id.emplace(t.instance_id, to_instance(family, t));
  DatasetCheck chk;
  auto lookup = [&](const std::string& id) -> const TaskInstance* {
    auto it = by_id.find(id);
    if (it != by_id.end()) return &it->second;
    ++chk.mismatches;
    chk.problems.push_back("unknown instance " + id);
    return nullptr;
  };
  auto check = [&](bool stored, bool truth, const std::string& what) {
    if (stored == truth) return;
    ++chk.mismatches;
    chk.problems.push_back(what);
  };
  for (const AnswerRecord& a : answers) {
    ++chk.answers;
    chk.critiqueable += a.critiqueable;
    if (const auto* inst = lookup(a.instance_id))
      check(a.critiqueable, family.critiqueability_oracle(*inst, family.parse_answer(a.answer_text)).critiqueable,
            "answer " + a.instance_id + ": " + a.answer_text);
  }
  for (const CritiqueRecord& c : critiques)
    if (const auto* inst = lookup(c.instance_id))
      check(c.valid,
            family.helpfulness_oracle(*inst, family.parse_answer(c.answer_text), family.parse_critique(c.critique_text)),
            "critique " + c.instance_id + ": " + c.critique_text);
  for (const HelpfulnessRecord& h : helpfulness)
    if (const auto* inst = lookup(h.instance_id))
      check(h.label,
            family.helpfulness_oracle(*inst, family.parse_answer(h.answer_text), family.parse_critique(h.critique_text)),
            "helpfulness " + h.instance_id + ": " + h.critique_text);
  return chk;
}

inline Report to_report(const Dataset& ds, const DatasetConfig& cfg, std::string label = {}) {
  Report r;
  r.kind = "dataset";
  r.family = cfg.family;
  r.label = std::move(label);
  r.config = config_to_json(cfg);
  std::size_t crit = 0;
  for (const auto& a : ds.answers) crit += a.critiqueable;
  const double n = static_cast<double>(ds.answers.size());
  r.metrics.push_back({"base_records", 0, static_cast<double>(ds.base.size()), std::nullopt});
  r.metrics.push_back({"answer_records", 0, n, std::nullopt});
  r.metrics.push_back({"critiqueable_fraction", 0, n > 0 ? static_cast<double>(crit) / n : 0.0, std::nullopt});
  r.metrics.push_back({"critique_demonstrations", 0, static_cast<double>(ds.critiques.size()), std::nullopt});
  r.metadata["unique_instances"] = ds.tasks.size();
  r.metadata["candidates"] = ds.stats.candidates;
  r.metadata["repeated_answers"] = ds.stats.repeated_answers;
  r.metadata["corruption_fill"] = ds.stats.corruption_fill;
  r.metadata["oracle_fill"] = ds.stats.oracle_fill;
  return r;
}

}  // namespace critlab::experiments
