#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "figrf/dataset.hpp"
#include "figrf/forest.hpp"

namespace figrf {

struct FigrfConfig {
  int n_estimators = 100;
  std::optional<int> max_depth;
  int features_per_tree = 0;  // 0 = floor(sqrt(d)), resolved at fit time
  Vector probabilities;       // per-feature sampling distribution
  std::uint64_t seed = 0;

  void validate() const;
};

// Feature-importance-guided forest: per-tree feature subsets are drawn from
// `probabilities` by weighted sampling without replacement.
struct FigrfModel {
  std::vector<ForestTree> trees;
  std::vector<std::int64_t> usage_counts;  // trees containing each feature
  FigrfConfig config;                      // features_per_tree holds the resolved value
  int n_features = 0;
  std::vector<std::string> feature_names;
};

FigrfModel fit_figrf(const Dataset& train, const FigrfConfig& config, int n_threads = 1);

int predict_figrf(const FigrfModel& model, const Eigen::Ref<const Vector>& sample);

struct UsageRow {
  int feature = -1;
  std::string name;
  std::int64_t count = 0;
  double percent = 0.0;  // 100 * count / n_estimators
};

// Usage rows sorted by descending count, ties toward the lower feature index.
std::vector<UsageRow> usage_report(const FigrfModel& model);

}  // namespace figrf
