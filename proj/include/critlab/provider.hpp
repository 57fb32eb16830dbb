#pragma once

// Bridge to an external text-completion service. One JSON request carries
// the prompt; the JSON response carries the completion text and, optionally,
// per-token alternatives with log-probabilities.

#include <critlab/core.hpp>

#ifdef CRITLAB_WITH_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <semaphore>
#include <thread>

namespace critlab::provider {

using nlohmann::json;

class ProviderError : public Error {
 public:
  ProviderError(const std::string& what, std::string raw = {}) : Error(what), raw_(std::move(raw)) {}
  /// The response body or completion text that triggered the error, if any.
  const std::string& raw() const noexcept { return raw_; }

 private:
  std::string raw_;
};

struct ProviderProfile {
  std::string endpoint;  // http(s)://host[:port]/path
  std::string model_name;
  double temperature = 0.0;
  int max_tokens = 64;
  std::string auth_env;  // empty: no Authorization header
  int logprobs = 5;
  int max_in_flight = 4;
  int max_retries = 4;
  int backoff_ms = 200;
  int timeout_s = 60;
  friend bool operator==(const ProviderProfile&, const ProviderProfile&) = default;
};

inline void validate(const ProviderProfile& p) {
  auto bad = [](const std::string& key, const std::string& why) {
    throw ConfigError(key, why);
  };
  if (p.endpoint.rfind("http://", 0) != 0 && p.endpoint.rfind("https://", 0) != 0)
    bad("endpoint", "must start with http:// or https://");
  if (p.model_name.empty()) bad("model_name", "must be non-empty");
  if (!(p.temperature >= 0)) bad("temperature", "must be >= 0");
  if (p.max_tokens < 1) bad("max_tokens", "must be >= 1");
  if (p.logprobs < 0) bad("logprobs", "must be >= 0");
  if (p.max_in_flight < 1 || p.max_in_flight > 1024) bad("max_in_flight", "must be in [1, 1024]");
  if (p.max_retries < 0) bad("max_retries", "must be >= 0");
  if (p.backoff_ms < 0) bad("backoff_ms", "must be >= 0");
  if (p.timeout_s < 1) bad("timeout_s", "must be >= 1");
}

// ---------------------------------------------------------------------------
// Wire types

struct CompletionRequest {
  std::string model;
  std::string prompt;
  double temperature = 0.0;
  int max_tokens = 64;
  int logprobs = 0;
  friend bool operator==(const CompletionRequest&, const CompletionRequest&) = default;
};

struct TokenAlternative {
  std::string token;
  double logprob = 0.0;
  friend bool operator==(const TokenAlternative&, const TokenAlternative&) = default;
};

struct CompletionToken {
  std::string token;
  double logprob = 0.0;
  std::vector<TokenAlternative> top_alternatives;
  friend bool operator==(const CompletionToken&, const CompletionToken&) = default;
};

struct Completion {
  std::string text;
  std::optional<std::vector<CompletionToken>> tokens;
  friend bool operator==(const Completion&, const Completion&) = default;
};

inline json to_json(const CompletionRequest& r) {
  return json{{"model", r.model},
              {"prompt", r.prompt},
              {"temperature", r.temperature},
              {"max_tokens", r.max_tokens},
              {"logprobs", r.logprobs}};
}

inline CompletionRequest request_from_json(const json& j) {
  CompletionRequest r;
  r.model = j.at("model").get<std::string>();
  r.prompt = j.at("prompt").get<std::string>();
  r.temperature = j.at("temperature").get<double>();
  r.max_tokens = j.at("max_tokens").get<int>();
  r.logprobs = j.value("logprobs", 0);
  return r;
}

inline json to_json(const Completion& c) {
  json j{{"text", c.text}};
  if (c.tokens) {
    json toks = json::array();
    for (const auto& t : *c.tokens) {
      json alts = json::array();
      for (const auto& a : t.top_alternatives) alts.push_back({{"token", a.token}, {"logprob", a.logprob}});
      toks.push_back({{"token", t.token}, {"logprob", t.logprob}, {"top_alternatives", alts}});
    }
    j["tokens"] = std::move(toks);
  }
  return j;
}

inline Completion completion_from_json(const json& j) {
  Completion c;
  c.text = j.at("text").get<std::string>();
  if (j.contains("tokens") && !j.at("tokens").is_null()) {
    std::vector<CompletionToken> toks;
    for (const auto& t : j.at("tokens")) {
      CompletionToken ct{t.at("token").get<std::string>(), t.at("logprob").get<double>(), {}};
      if (t.contains("top_alternatives"))
        for (const auto& a : t.at("top_alternatives"))
          ct.top_alternatives.push_back({a.at("token").get<std::string>(), a.at("logprob").get<double>()});
      toks.push_back(std::move(ct));
    }
    c.tokens = std::move(toks);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Completion text helpers

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

/// First non-blank line, trimmed. Answers and critiques are single-line.
inline std::string first_line(std::string_view text) {
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    const std::string_view line = trim(rest.substr(0, nl));
    if (!line.empty()) return std::string(line);
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  return {};
}

/// Pr[Yes] / (Pr[Yes] + Pr[No]) over the first non-blank token and its
/// alternatives; falls back to 1/0 from the sampled text when neither token
/// carries a probability.
inline Score yes_no_score(const Completion& c) {
  if (c.tokens) {
    for (const auto& t : *c.tokens) {
      if (trim(t.token).empty()) continue;
      double yes = 0, no = 0;
      std::vector<TokenAlternative> all = t.top_alternatives;
      if (std::none_of(all.begin(), all.end(), [&](const auto& a) { return a.token == t.token; }))
        all.push_back({t.token, t.logprob});
      for (const auto& a : all) {
        const std::string_view w = trim(a.token);
        if (w == "Yes") yes += std::exp(a.logprob);
        if (w == "No") no += std::exp(a.logprob);
      }
      if (yes + no > 0) return Score(yes / (yes + no));
      break;
    }
  }
  return Score(first_line(c.text).rfind("Yes", 0) == 0 ? 1.0 : 0.0);
}

// ---------------------------------------------------------------------------
// Clients

class CompletionClient {
 public:
  virtual ~CompletionClient() = default;
  /// Thread-safe; may be called concurrently.
  virtual Completion complete(const CompletionRequest& request) = 0;
};

struct Endpoint {
  std::string base;  // scheme://host[:port]
  std::string path;
};

inline Endpoint split_endpoint(std::string_view url) {
  const auto scheme = url.find("://");
  if (scheme == std::string_view::npos) throw InvalidArgument("endpoint has no scheme: " + std::string(url));
  const auto slash = url.find('/', scheme + 3);
  if (slash == std::string_view::npos) return {std::string(url), "/"};
  return {std::string(url.substr(0, slash)), std::string(url.substr(slash))};
}

/// POSTs CompletionRequest JSON to the profile's endpoint. Transport errors,
/// 429 and 5xx are retried with exponential backoff; at most max_in_flight
/// requests are outstanding at once.
class HttpCompletionClient : public CompletionClient {
 public:
  explicit HttpCompletionClient(ProviderProfile profile)
      : profile_(std::move(profile)),
        endpoint_((validate(profile_), split_endpoint(profile_.endpoint))),
        slots_(std::make_unique<std::counting_semaphore<1024>>(profile_.max_in_flight)) {
#ifndef CRITLAB_WITH_OPENSSL
    if (profile_.endpoint.rfind("https://", 0) == 0)
      throw InvalidArgument("provider.endpoint: https requires a build with OpenSSL");
#endif
  }

  Completion complete(const CompletionRequest& request) override {
    httplib::Headers headers;
    if (!profile_.auth_env.empty()) {
      const char* token = std::getenv(profile_.auth_env.c_str());
      if (!token || !*token)
        throw ProviderError("environment variable " + profile_.auth_env + " is not set");
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
    const std::string body = to_json(request).dump();

    slots_->acquire();
    struct Release {
      std::counting_semaphore<1024>* s;
      ~Release() { s->release(); }
    } release{slots_.get()};

    std::string last_error;
    for (int attempt = 0; attempt <= profile_.max_retries; ++attempt) {
      if (attempt > 0)
        std::this_thread::sleep_for(std::chrono::milliseconds(profile_.backoff_ms) * (1 << std::min(attempt - 1, 16)));
      httplib::Client cli(endpoint_.base);
      cli.set_connection_timeout(profile_.timeout_s);
      cli.set_read_timeout(profile_.timeout_s);
      auto res = cli.Post(endpoint_.path, headers, body, "application/json");
      if (!res) {
        last_error = "transport error: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status == 429 || res->status >= 500) {
        last_error = "HTTP " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200)
        throw ProviderError("provider returned HTTP " + std::to_string(res->status), res->body);
      try {
        return completion_from_json(json::parse(res->body));
      } catch (const json::exception& e) {
        throw ProviderError(std::string("malformed provider response: ") + e.what(), res->body);
      }
    }
    throw ProviderError("provider request failed after " + std::to_string(profile_.max_retries + 1) +
                        " attempts (" + last_error + ")");
  }

  const ProviderProfile& profile() const noexcept { return profile_; }

 private:
  ProviderProfile profile_;
  Endpoint endpoint_;
  std::unique_ptr<std::counting_semaphore<1024>> slots_;
};

}  // namespace critlab::provider
