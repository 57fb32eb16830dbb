#pragma once

// Typed, key-path-aware access to JSON configuration objects. Every failure
// is a ConfigError naming the full dotted key.

#include <critlab/core.hpp>

#include <json.hpp>

#include <set>

namespace critlab::cfg {

using nlohmann::json;

inline std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

inline void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
}

/// Rejects keys outside `allowed`, so typos fail before a run starts.
inline void only_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
  require_object(j, path);
  const std::set<std::string_view> ok(allowed);
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) throw ConfigError(join(path, k), "unknown key");
}

template <class T>
T convert(const json& v, const std::string& key) {
  if constexpr (std::is_same_v<T, bool>) {
    if (!v.is_boolean()) throw ConfigError(key, "expected a boolean");
  } else if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
    if constexpr (std::is_unsigned_v<T>) {
      if (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)
        throw ConfigError(key, "expected a non-negative integer");
    }
  } else if constexpr (std::is_floating_point_v<T>) {
    if (!v.is_number()) throw ConfigError(key, "expected a number");
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string()) throw ConfigError(key, "expected a string");
  }
  return v.get<T>();
}

template <class T>
T get(const json& j, const std::string& path, std::string_view key) {
  require_object(j, path);
  const auto it = j.find(key);
  if (it == j.end()) throw ConfigError(join(path, key), "missing");
  return convert<T>(*it, join(path, key));
}

template <class T>
T get_or(const json& j, const std::string& path, std::string_view key, T fallback) {
  require_object(j, path);
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  return convert<T>(*it, join(path, key));
}

inline double probability(const json& j, const std::string& path, std::string_view key,
                          std::optional<double> fallback = std::nullopt) {
  const double p = fallback ? get_or<double>(j, path, key, *fallback) : get<double>(j, path, key);
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(join(path, key), "must lie in [0, 1]");
  return p;
}

inline int at_least(const json& j, const std::string& path, std::string_view key, int lo,
                    std::optional<int> fallback = std::nullopt) {
  const int v = fallback ? get_or<int>(j, path, key, *fallback) : get<int>(j, path, key);
  if (v < lo) throw ConfigError(join(path, key), "must be >= " + std::to_string(lo));
  return v;
}

}  // namespace critlab::cfg
