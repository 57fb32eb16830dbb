#pragma once

// Answer, discriminator, critique and helpfulness policies: exact oracles,
// noise-parameterized stand-ins for models of varying skill, and adapters
// that ask a completion provider. Simulated policies are pure in their seed.

#include <critlab/family.hpp>
#include <critlab/json_config.hpp>
#include <critlab/prompt.hpp>
#include <critlab/provider.hpp>

namespace critlab {

using provider::ProviderProfile;

// ---------------------------------------------------------------------------
// Policy kinds

struct OracleGenerator {
  friend bool operator==(const OracleGenerator&, const OracleGenerator&) = default;
};
/// Oracle answer, then `strength` corrupting edits with probability epsilon.
struct NoisyGenerator {
  double epsilon = 0.0;
  int strength = 1;
  friend bool operator==(const NoisyGenerator&, const NoisyGenerator&) = default;
};
/// The same answer text for every instance; parse failures become flawed answers.
struct FixedAnswerGenerator {
  std::string text;
  friend bool operator==(const FixedAnswerGenerator&, const FixedAnswerGenerator&) = default;
};
struct ProviderPolicy {
  ProviderProfile profile;
  std::shared_ptr<provider::CompletionClient> client;
  friend bool operator==(const ProviderPolicy& a, const ProviderPolicy& b) { return a.profile == b.profile; }
};

using GeneratorPolicy = std::variant<OracleGenerator, NoisyGenerator, FixedAnswerGenerator, ProviderPolicy>;

struct OracleDiscriminator {
  friend bool operator==(const OracleDiscriminator&, const OracleDiscriminator&) = default;
};
/// Correct label w.p. 1 - flip_delta; "yes" scores `confidence`, "no" 1 - confidence.
struct NoisyDiscriminator {
  double flip_delta = 0.0;
  double confidence = 1.0;
  friend bool operator==(const NoisyDiscriminator&, const NoisyDiscriminator&) = default;
};
/// Uninformative: the same score for every answer.
struct ConstantDiscriminator {
  double score = 0.5;
  friend bool operator==(const ConstantDiscriminator&, const ConstantDiscriminator&) = default;
};

using DiscriminatorPolicy =
    std::variant<OracleDiscriminator, NoisyDiscriminator, ConstantDiscriminator, ProviderPolicy>;

struct OracleCritiquer {
  friend bool operator==(const OracleCritiquer&, const OracleCritiquer&) = default;
};
/// A valid critique w.p. hit_q when one exists, else an invalid one.
struct NoisyCritiquer {
  double hit_q = 0.0;
  friend bool operator==(const NoisyCritiquer&, const NoisyCritiquer&) = default;
};

using CritiquePolicy = std::variant<OracleCritiquer, NoisyCritiquer, ProviderPolicy>;

struct OracleJudge {
  friend bool operator==(const OracleJudge&, const OracleJudge&) = default;
};
struct NoisyJudge {
  double flip = 0.0;
  friend bool operator==(const NoisyJudge&, const NoisyJudge&) = default;
};

using HelpfulnessJudge = std::variant<OracleJudge, NoisyJudge, ProviderPolicy>;

// ---------------------------------------------------------------------------
// Noise ladder standing in for model scale

struct NoiseProfile {
  std::string_view name;
  double epsilon;
  double hit_q;
  double flip_delta;
  double judge_flip;
};

inline constexpr std::array<NoiseProfile, 5> kNoiseLadder = {{
    {"xs", 0.7, 0.2, 0.4, 0.2},
    {"s", 0.6, 0.35, 0.3, 0.15},
    {"m", 0.5, 0.5, 0.2, 0.1},
    {"l", 0.4, 0.65, 0.12, 0.05},
    {"xl", 0.3, 0.8, 0.05, 0.02},
}};

inline const NoiseProfile& noise_profile(std::string_view name) {
  for (const auto& p : kNoiseLadder)
    if (p.name == name) return p;
  throw InvalidArgument("unknown noise profile '" + std::string(name) + "' (allowed: xs, s, m, l, xl)");
}

// ---------------------------------------------------------------------------
// Sampling

template <class T>
struct Sampled {
  T value;
  bool parse_failed = false;
  std::string raw;  // completion text for provider policies
};

namespace detail {

inline void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument(std::string(what) + " must lie in [0, 1]");
}

inline provider::Completion ask(const ProviderPolicy& p, std::string prompt, int logprobs) {
  if (!p.client) throw InvalidArgument("provider policy has no client");
  return p.client->complete({p.profile.model_name, std::move(prompt), p.profile.temperature,
                             p.profile.max_tokens, logprobs});
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace detail

using detail::overloaded;

inline Sampled<StructuredAnswer> sample_answer(const Family& family, const GeneratorPolicy& policy,
                                               const TaskInstance& instance, std::uint64_t seed) {
  auto parse_or_flawed = [&](std::string text) {
    try {
      return Sampled<StructuredAnswer>{family.parse_answer(text), false, std::move(text)};
    } catch (const ParseError&) {
      return Sampled<StructuredAnswer>{family.flawed_answer(instance), true, std::move(text)};
    }
  };
  return std::visit(
      overloaded{
          [&](const OracleGenerator&) { return Sampled<StructuredAnswer>{family.solve_oracle(instance), false, {}}; },
          [&](const NoisyGenerator& g) {
            detail::check_probability(g.epsilon, "epsilon");
            StructuredAnswer a = family.solve_oracle(instance);
            Rng rng(seed);
            if (rng.bernoulli(g.epsilon)) a = family.corrupt(instance, a, g.strength, derive_stream(seed, "corrupt", 0));
            return Sampled<StructuredAnswer>{std::move(a), false, {}};
          },
          [&](const FixedAnswerGenerator& g) { return parse_or_flawed(g.text); },
          [&](const ProviderPolicy& p) {
            const auto c = detail::ask(p, format_prompt(family, PromptKind::answer, instance), 0);
            auto s = parse_or_flawed(provider::first_line(c.text));
            s.raw = c.text;
            return s;
          },
      },
      policy);
}

inline Score score_critiqueability(const Family& family, const DiscriminatorPolicy& policy,
                                   const TaskInstance& instance, const StructuredAnswer& answer,
                                   std::uint64_t seed) {
  return std::visit(
      overloaded{
          [&](const OracleDiscriminator&) {
            return Score(family.critiqueability_oracle(instance, answer).critiqueable ? 1.0 : 0.0);
          },
          [&](const NoisyDiscriminator& d) {
            detail::check_probability(d.flip_delta, "flip_delta");
            if (!(d.confidence > 0.5 && d.confidence <= 1.0))
              throw InvalidArgument("confidence must lie in (0.5, 1]");
            const bool truth = family.critiqueability_oracle(instance, answer).critiqueable;
            Rng rng(seed);
            const bool label = rng.bernoulli(d.flip_delta) ? !truth : truth;
            return Score(label ? d.confidence : 1.0 - d.confidence);
          },
          [&](const ConstantDiscriminator& d) { return Score(d.score); },
          [&](const ProviderPolicy& p) {
            return provider::yes_no_score(
                detail::ask(p, format_prompt(family, PromptKind::critiqueability, instance, &answer), p.profile.logprobs));
          },
      },
      policy);
}

inline Sampled<StructuredCritique> sample_critique(const Family& family, const CritiquePolicy& policy,
                                                   const TaskInstance& instance, const StructuredAnswer& answer,
                                                   std::uint64_t seed) {
  auto fallback = [&] { return family.invalid_critique(instance, answer); };
  auto critiqueable = [&] { return family.critiqueability_oracle(instance, answer).critiqueable; };
  return std::visit(
      overloaded{
          [&](const OracleCritiquer&) {
            return Sampled<StructuredCritique>{
                critiqueable() ? family.critique_oracle(instance, answer, seed) : fallback(), false, {}};
          },
          [&](const NoisyCritiquer& c) {
            detail::check_probability(c.hit_q, "hit_q");
            Rng rng(seed);
            if (critiqueable() && rng.bernoulli(c.hit_q))
              return Sampled<StructuredCritique>{family.critique_oracle(
                  instance, answer, derive_stream(seed, "pick", 0), CritiquePick::uniform), false, {}};
            return Sampled<StructuredCritique>{fallback(), false, {}};
          },
          [&](const ProviderPolicy& p) {
            const auto c = detail::ask(p, format_prompt(family, PromptKind::critique, instance, &answer), 0);
            try {
              return Sampled<StructuredCritique>{family.parse_critique(provider::first_line(c.text)), false, c.text};
            } catch (const ParseError&) {
              return Sampled<StructuredCritique>{fallback(), true, c.text};
            }
          },
      },
      policy);
}

inline Score judge_helpfulness(const Family& family, const HelpfulnessJudge& judge, const TaskInstance& instance,
                               const StructuredAnswer& answer, const StructuredCritique& critique,
                               std::uint64_t seed) {
  return std::visit(
      overloaded{
          [&](const OracleJudge&) {
            return Score(family.helpfulness_oracle(instance, answer, critique) ? 1.0 : 0.0);
          },
          [&](const NoisyJudge& j) {
            detail::check_probability(j.flip, "flip");
            const bool truth = family.helpfulness_oracle(instance, answer, critique);
            Rng rng(seed);
            return Score((rng.bernoulli(j.flip) ? !truth : truth) ? 1.0 : 0.0);
          },
          [&](const ProviderPolicy& p) {
            return provider::yes_no_score(detail::ask(
                p, format_prompt(family, PromptKind::helpfulness, instance, &answer, &critique), p.profile.logprobs));
          },
      },
      judge);
}

// ---------------------------------------------------------------------------
// JSON form: {"kind": "oracle" | "noisy" | ... , parameters...}. A noisy
// policy may name a ladder profile instead of spelling out its noise.

namespace policy_json {

using nlohmann::json;

inline json profile_to_json(const ProviderProfile& p) {
  return json{{"endpoint", p.endpoint},       {"model_name", p.model_name}, {"temperature", p.temperature},
              {"max_tokens", p.max_tokens},   {"auth_env", p.auth_env},     {"logprobs", p.logprobs},
              {"max_in_flight", p.max_in_flight}, {"max_retries", p.max_retries}, {"backoff_ms", p.backoff_ms},
              {"timeout_s", p.timeout_s}};
}

inline ProviderProfile profile_from_json(const json& j, const std::string& path) {
  cfg::only_keys(j, path,
                 {"endpoint", "model_name", "temperature", "max_tokens", "auth_env", "logprobs", "max_in_flight",
                  "max_retries", "backoff_ms", "timeout_s"});
  ProviderProfile p;
  p.endpoint = cfg::get<std::string>(j, path, "endpoint");
  p.model_name = cfg::get<std::string>(j, path, "model_name");
  p.temperature = cfg::get_or<double>(j, path, "temperature", p.temperature);
  p.max_tokens = cfg::get_or<int>(j, path, "max_tokens", p.max_tokens);
  p.auth_env = cfg::get_or<std::string>(j, path, "auth_env", p.auth_env);
  p.logprobs = cfg::get_or<int>(j, path, "logprobs", p.logprobs);
  p.max_in_flight = cfg::get_or<int>(j, path, "max_in_flight", p.max_in_flight);
  p.max_retries = cfg::get_or<int>(j, path, "max_retries", p.max_retries);
  p.backoff_ms = cfg::get_or<int>(j, path, "backoff_ms", p.backoff_ms);
  p.timeout_s = cfg::get_or<int>(j, path, "timeout_s", p.timeout_s);
  try {
    provider::validate(p);
  } catch (const ConfigError& e) {
    throw ConfigError(cfg::join(path, e.key()), e.problem());
  }
  return p;
}

inline ProviderPolicy provider_from_json(const json& j, const std::string& path) {
  if (!j.contains("profile")) throw ConfigError(cfg::join(path, "profile"), "missing");
  ProviderPolicy p{profile_from_json(j.at("profile"), cfg::join(path, "profile")), nullptr};
  p.client = std::make_shared<provider::HttpCompletionClient>(p.profile);
  return p;
}

inline std::string kind_of(const json& j, const std::string& path) {
  return cfg::get<std::string>(j, path, "kind");
}

[[noreturn]] inline void bad_kind(const std::string& path, const std::string& kind, const char* allowed) {
  throw ConfigError(cfg::join(path, "kind"), "unknown kind '" + kind + "' (allowed: " + allowed + ")");
}

inline const NoiseProfile* ladder(const json& j, const std::string& path) {
  if (!j.contains("profile")) return nullptr;
  try {
    return &noise_profile(cfg::get<std::string>(j, path, "profile"));
  } catch (const InvalidArgument& e) {
    throw ConfigError(cfg::join(path, "profile"), e.what());
  }
}

inline GeneratorPolicy generator_from_json(const json& j, const std::string& path) {
  const std::string kind = kind_of(j, path);
  if (kind == "oracle") {
    cfg::only_keys(j, path, {"kind"});
    return OracleGenerator{};
  }
  if (kind == "noisy") {
    cfg::only_keys(j, path, {"kind", "epsilon", "strength", "profile"});
    const NoiseProfile* lp = ladder(j, path);
    NoisyGenerator g;
    g.epsilon = lp ? cfg::probability(j, path, "epsilon", lp->epsilon) : cfg::probability(j, path, "epsilon");
    g.strength = cfg::at_least(j, path, "strength", 1, 1);
    return g;
  }
  if (kind == "fixed_answer") {
    cfg::only_keys(j, path, {"kind", "text"});
    return FixedAnswerGenerator{cfg::get<std::string>(j, path, "text")};
  }
  if (kind == "provider") {
    cfg::only_keys(j, path, {"kind", "profile"});
    return provider_from_json(j, path);
  }
  bad_kind(path, kind, "oracle, noisy, fixed_answer, provider");
}

inline DiscriminatorPolicy discriminator_from_json(const json& j, const std::string& path) {
  const std::string kind = kind_of(j, path);
  if (kind == "oracle") {
    cfg::only_keys(j, path, {"kind"});
    return OracleDiscriminator{};
  }
  if (kind == "noisy") {
    cfg::only_keys(j, path, {"kind", "flip_delta", "confidence", "profile"});
    const NoiseProfile* lp = ladder(j, path);
    NoisyDiscriminator d;
    d.flip_delta =
        lp ? cfg::probability(j, path, "flip_delta", lp->flip_delta) : cfg::probability(j, path, "flip_delta");
    d.confidence = cfg::get_or<double>(j, path, "confidence", 1.0);
    if (!(d.confidence > 0.5 && d.confidence <= 1.0))
      throw ConfigError(cfg::join(path, "confidence"), "must lie in (0.5, 1]");
    return d;
  }
  if (kind == "constant") {
    cfg::only_keys(j, path, {"kind", "score"});
    return ConstantDiscriminator{cfg::probability(j, path, "score", 0.5)};
  }
  if (kind == "provider") {
    cfg::only_keys(j, path, {"kind", "profile"});
    return provider_from_json(j, path);
  }
  bad_kind(path, kind, "oracle, noisy, constant, provider");
}

inline CritiquePolicy critiquer_from_json(const json& j, const std::string& path) {
  const std::string kind = kind_of(j, path);
  if (kind == "oracle") {
    cfg::only_keys(j, path, {"kind"});
    return OracleCritiquer{};
  }
  if (kind == "noisy") {
    cfg::only_keys(j, path, {"kind", "hit_q", "profile"});
    const NoiseProfile* lp = ladder(j, path);
    return NoisyCritiquer{lp ? cfg::probability(j, path, "hit_q", lp->hit_q) : cfg::probability(j, path, "hit_q")};
  }
  if (kind == "provider") {
    cfg::only_keys(j, path, {"kind", "profile"});
    return provider_from_json(j, path);
  }
  bad_kind(path, kind, "oracle, noisy, provider");
}

inline HelpfulnessJudge judge_from_json(const json& j, const std::string& path) {
  const std::string kind = kind_of(j, path);
  if (kind == "oracle") {
    cfg::only_keys(j, path, {"kind"});
    return OracleJudge{};
  }
  if (kind == "noisy") {
    cfg::only_keys(j, path, {"kind", "flip", "profile"});
    const NoiseProfile* lp = ladder(j, path);
    return NoisyJudge{lp ? cfg::probability(j, path, "flip", lp->judge_flip) : cfg::probability(j, path, "flip")};
  }
  if (kind == "provider") {
    cfg::only_keys(j, path, {"kind", "profile"});
    return provider_from_json(j, path);
  }
  bad_kind(path, kind, "oracle, noisy, provider");
}

inline json to_json(const GeneratorPolicy& p) {
  return std::visit(overloaded{
                        [](const OracleGenerator&) { return json{{"kind", "oracle"}}; },
                        [](const NoisyGenerator& g) {
                          return json{{"kind", "noisy"}, {"epsilon", g.epsilon}, {"strength", g.strength}};
                        },
                        [](const FixedAnswerGenerator& g) { return json{{"kind", "fixed_answer"}, {"text", g.text}}; },
                        [](const ProviderPolicy& q) { return json{{"kind", "provider"}, {"profile", profile_to_json(q.profile)}}; },
                    },
                    p);
}

inline json to_json(const DiscriminatorPolicy& p) {
  return std::visit(overloaded{
                        [](const OracleDiscriminator&) { return json{{"kind", "oracle"}}; },
                        [](const NoisyDiscriminator& d) {
                          return json{{"kind", "noisy"}, {"flip_delta", d.flip_delta}, {"confidence", d.confidence}};
                        },
                        [](const ConstantDiscriminator& d) { return json{{"kind", "constant"}, {"score", d.score}}; },
                        [](const ProviderPolicy& q) { return json{{"kind", "provider"}, {"profile", profile_to_json(q.profile)}}; },
                    },
                    p);
}

inline json to_json(const CritiquePolicy& p) {
  return std::visit(overloaded{
                        [](const OracleCritiquer&) { return json{{"kind", "oracle"}}; },
                        [](const NoisyCritiquer& c) { return json{{"kind", "noisy"}, {"hit_q", c.hit_q}}; },
                        [](const ProviderPolicy& q) { return json{{"kind", "provider"}, {"profile", profile_to_json(q.profile)}}; },
                    },
                    p);
}

inline json to_json(const HelpfulnessJudge& p) {
  return std::visit(overloaded{
                        [](const OracleJudge&) { return json{{"kind", "oracle"}}; },
                        [](const NoisyJudge& j) { return json{{"kind", "noisy"}, {"flip", j.flip}}; },
                        [](const ProviderPolicy& q) { return json{{"kind", "provider"}, {"profile", profile_to_json(q.profile)}}; },
                    },
                    p);
}

}  // namespace policy_json

}  // namespace critlab
