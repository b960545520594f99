#include "figrf/forest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "figrf/parallel.hpp"

namespace figrf {

void ForestConfig::validate() const {
  if (n_estimators < 1) throw std::invalid_argument("ForestConfig: n_estimators must be >= 1");
  if (max_depth && *max_depth < 1) throw std::invalid_argument("ForestConfig: max_depth must be >= 1");
  if (features_per_tree < 0) {
    throw std::invalid_argument("ForestConfig: features_per_tree must be positive (0 = auto)");
  }
}

std::vector<int> bootstrap_indices(int n, Rng& rng) {
  std::vector<int> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(n));
  return rows;
}

std::vector<int> uniform_sample_without_replacement(int d, int m, Rng& rng) {
  std::vector<int> pool(static_cast<std::size_t>(d));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < m; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(d - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(m));
  std::sort(pool.begin(), pool.end());
  return pool;
}

int resolve_features_per_tree(int configured, Eigen::Index d) {
  const int m = configured > 0 ? configured : static_cast<int>(std::floor(std::sqrt(static_cast<double>(d))));
  if (m < 1 || m > d) throw std::invalid_argument("features_per_tree out of range for this dataset");
  return m;
}

// Shape and label-range checks only; pure-label training data is legal and
// simply produces leaf-only trees.
void check_trainable(const Dataset& train) {
  if (train.features.rows() != train.labels.size()) {
    throw std::invalid_argument("fit: feature rows and label count differ");
  }
  if (train.n_samples() < 1) throw std::invalid_argument("fit: no training samples");
  for (Eigen::Index i = 0; i < train.labels.size(); ++i) {
    if (train.labels(i) != 0 && train.labels(i) != 1) {
      throw std::invalid_argument("fit: labels must be binary (0/1)");
    }
  }
}

ForestModel fit_forest(const Dataset& train, const ForestConfig& config, int n_threads) {
  config.validate();
  check_trainable(train);
  const int n = static_cast<int>(train.n_samples());
  const int m = resolve_features_per_tree(config.features_per_tree, train.n_features());

  ForestModel model;
  model.config = config;
  model.config.features_per_tree = m;
  model.n_features = static_cast<int>(train.n_features());
  model.feature_names = train.feature_names;
  model.trees.resize(static_cast<std::size_t>(config.n_estimators));

  parallel_for(config.n_estimators, n_threads, [&](int t) {
    Rng row_rng(derive_seed(config.seed, static_cast<std::uint64_t>(t), 0));
    Rng feature_rng(derive_seed(config.seed, static_cast<std::uint64_t>(t), 1));
    const std::vector<int> rows = bootstrap_indices(n, row_rng);
    std::vector<int> features = uniform_sample_without_replacement(model.n_features, m, feature_rng);

    const Matrix boot_x = train.features(rows, Eigen::all);
    const IntVector boot_y = train.labels(rows);
    TreeConfig tree_config{config.max_depth, 2, derive_seed(config.seed, t, 2)};
    ForestTree& member = model.trees[static_cast<std::size_t>(t)];
    member.tree = fit_tree(boot_x, boot_y, features, tree_config);
    member.features = std::move(features);
  });

  return model;
}

int majority_vote(const std::vector<ForestTree>& trees, const Eigen::Ref<const Vector>& sample) {
  std::int64_t ones = 0;
  for (const ForestTree& t : trees) ones += t.tree.predict(sample);
  const std::int64_t zeros = static_cast<std::int64_t>(trees.size()) - ones;
  return ones > zeros ? 1 : 0;
}

int predict_forest(const ForestModel& model, const Eigen::Ref<const Vector>& sample) {
  if (model.trees.empty()) throw std::invalid_argument("predict_forest: model has no trees");
  return majority_vote(model.trees, sample);
}

}  // namespace figrf
