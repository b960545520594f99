#include "figrf/figrf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "figrf/parallel.hpp"
#include "figrf/sampling.hpp"

namespace figrf {

void FigrfConfig::validate() const {
  if (n_estimators < 1) throw std::invalid_argument("FigrfConfig: n_estimators must be >= 1");
  if (max_depth && *max_depth < 1) throw std::invalid_argument("FigrfConfig: max_depth must be >= 1");
  if (features_per_tree < 0) {
    throw std::invalid_argument("FigrfConfig: features_per_tree must be positive (0 = auto)");
  }
  if (probabilities.size() == 0) {
    throw std::invalid_argument("FigrfConfig: probabilities must be provided");
  }
  double sum = 0.0;
  int positive = 0;
  for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
    if (probabilities(i) < 0.0) {
      throw std::invalid_argument("FigrfConfig: probabilities must be non-negative");
    }
    if (probabilities(i) > 0.0) ++positive;
    sum += probabilities(i);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("FigrfConfig: probabilities must sum to 1");
  }
  if (features_per_tree > positive) {
    throw std::invalid_argument(
        "FigrfConfig: features_per_tree exceeds the number of positive-probability features");
  }
}

FigrfModel fit_figrf(const Dataset& train, const FigrfConfig& config, int n_threads) {
  config.validate();
  check_trainable(train);
  if (config.probabilities.size() != train.n_features()) {
    throw std::invalid_argument("fit_figrf: probabilities length differs from feature count");
  }
  const int n = static_cast<int>(train.n_samples());
  const int m = resolve_features_per_tree(config.features_per_tree, train.n_features());
  int positive = 0;
  for (Eigen::Index i = 0; i < config.probabilities.size(); ++i) {
    if (config.probabilities(i) > 0.0) ++positive;
  }
  if (m > positive) {
    throw std::invalid_argument(
        "fit_figrf: features_per_tree exceeds the number of positive-probability features");
  }

  FigrfModel model;
  model.config = config;
  model.config.features_per_tree = m;
  model.n_features = static_cast<int>(train.n_features());
  model.feature_names = train.feature_names;
  model.trees.resize(static_cast<std::size_t>(config.n_estimators));

  parallel_for(config.n_estimators, n_threads, [&](int t) {
    Rng row_rng(derive_seed(config.seed, static_cast<std::uint64_t>(t), 0));
    Rng feature_rng(derive_seed(config.seed, static_cast<std::uint64_t>(t), 1));
    const std::vector<int> rows = bootstrap_indices(n, row_rng);
    std::vector<int> features =
        weighted_sample_without_replacement(config.probabilities, m, feature_rng);
    std::sort(features.begin(), features.end());

    const Matrix boot_x = train.features(rows, Eigen::all);
    const IntVector boot_y = train.labels(rows);
    TreeConfig tree_config{config.max_depth, 2, derive_seed(config.seed, t, 2)};
    ForestTree& member = model.trees[static_cast<std::size_t>(t)];
    member.tree = fit_tree(boot_x, boot_y, features, tree_config);
    member.features = std::move(features);
  });

  model.usage_counts.assign(static_cast<std::size_t>(model.n_features), 0);
  for (const ForestTree& member : model.trees) {
    for (int f : member.features) ++model.usage_counts[static_cast<std::size_t>(f)];
  }
  return model;
}

int predict_figrf(const FigrfModel& model, const Eigen::Ref<const Vector>& sample) {
  if (model.trees.empty()) throw std::invalid_argument("predict_figrf: model has no trees");
  return majority_vote(model.trees, sample);
}

std::vector<UsageRow> usage_report(const FigrfModel& model) {
  if (model.trees.empty()) throw std::invalid_argument("usage_report: model has no trees");
  std::vector<UsageRow> rows;
  rows.reserve(model.usage_counts.size());
  for (std::size_t f = 0; f < model.usage_counts.size(); ++f) {
    UsageRow row;
    row.feature = static_cast<int>(f);
    row.name = f < model.feature_names.size() ? model.feature_names[f]
                                              : "feature_" + std::to_string(f);
    row.count = model.usage_counts[f];
    row.percent = 100.0 * static_cast<double>(row.count) /
                  static_cast<double>(model.config.n_estimators);
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const UsageRow& a, const UsageRow& b) { return a.count > b.count; });
  return rows;
}

}  // namespace figrf
