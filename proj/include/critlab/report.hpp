#pragma once

// The common shape every experiment reduces to: a config echo, a flat list
// of metrics with one-sigma errors, and free-form metadata.

#include <critlab/core.hpp>

#include <json.hpp>

namespace critlab {

using ordered_json = nlohmann::ordered_json;

struct MetricRow {
  std::string metric;
  int best_of_n = 0;  // 0: not a best-of-N metric
  double value = 0.0;
  std::optional<double> se;
  friend bool operator==(const MetricRow&, const MetricRow&) = default;
};

struct Report {
  std::string kind;  // gdc, debate, refinement, assist, dataset
  FamilyId family = FamilyId::addition;
  std::string label;  // free text, e.g. a noise-profile name
  ordered_json config = ordered_json::object();
  std::vector<MetricRow> metrics;
  ordered_json metadata = ordered_json::object();
  friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace critlab
