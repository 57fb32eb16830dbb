#pragma once

// Error bars: standard error of the mean, (cluster) bootstrap, and the
// Wilson interval. All reported uncertainties are one standard deviation.

#include <critlab/core.hpp>

#include <cmath>
#include <span>

namespace critlab::stats {

inline double mean(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("mean: no values");
  double s = 0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

/// Standard deviation of the sample (divisor n) over sqrt(n); matches the
/// plug-in variance the bootstrap converges to.
inline double sem(std::span<const double> values) {
  if (values.size() < 2) throw InvalidArgument("sem: need at least 2 values");
  const double m = mean(values);
  double ss = 0;
  for (double v : values) ss += (v - m) * (v - m);
  const double n = static_cast<double>(values.size());
  return std::sqrt(ss / n) / std::sqrt(n);
}

struct BootstrapSpec {
  int resamples = 1000;
  /// Cluster key per value; empty means every value is its own cluster.
  std::vector<std::string> clusters;
};

/// Standard deviation of resampled means. Resampling draws whole clusters
/// with replacement; each resample's mean pools the drawn clusters' values.
/// Inputs are put in canonical order first, so the result depends only on
/// the multiset of (cluster, value) pairs and the seed.
inline double bootstrap_se(std::span<const double> values, const BootstrapSpec& spec, std::uint64_t seed) {
  if (spec.resamples < 100)
    throw InvalidArgument("bootstrap_se: resamples must be >= 100, got " + std::to_string(spec.resamples));
  if (!spec.clusters.empty() && spec.clusters.size() != values.size())
    throw InvalidArgument("bootstrap_se: cluster keys must match values one-to-one");

  // (sum, count) per cluster in canonical order.
  std::vector<std::pair<double, double>> groups;
  if (spec.clusters.empty()) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    for (double v : sorted) groups.emplace_back(v, 1.0);
  } else {
    std::map<std::string, std::vector<double>> by_key;
    for (std::size_t i = 0; i < values.size(); ++i) by_key[spec.clusters[i]].push_back(values[i]);
    for (auto& [key, vs] : by_key) {
      std::sort(vs.begin(), vs.end());
      double s = 0;
      for (double v : vs) s += v;
      groups.emplace_back(s, static_cast<double>(vs.size()));
    }
  }
  if (groups.size() < 2) throw InvalidArgument("bootstrap_se: need at least 2 clusters");

  Rng rng(seed);
  const std::size_t k = groups.size();
  double m1 = 0, m2 = 0;
  for (int r = 0; r < spec.resamples; ++r) {
    double s = 0, n = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& g = groups[rng.below(k)];
      s += g.first;
      n += g.second;
    }
    const double m = s / n;
    m1 += m;
    m2 += m * m;
  }
  const double rs = spec.resamples;
  const double var = (m2 - m1 * m1 / rs) / (rs - 1);
  return var > 0 ? std::sqrt(var) : 0.0;
}

struct Interval {
  double low = 0;
  double high = 0;
};

/// Wilson score interval; z = 1 gives the one-sigma (68.3%) band.
inline Interval binomial_ci(std::uint64_t successes, std::uint64_t n, double z = 1.0) {
  if (n == 0 || successes > n) throw InvalidArgument("binomial_ci: need 0 <= successes <= n and n >= 1");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1 + z2 / nn;
  const double center = (p + z2 / (2 * nn)) / denom;
  const double half = z / denom * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn));
  return {std::clamp(center - half, 0.0, 1.0), std::clamp(center + half, 0.0, 1.0)};
}

}  // namespace critlab::stats
