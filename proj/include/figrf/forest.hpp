#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "figrf/dataset.hpp"
#include "figrf/rng.hpp"
#include "figrf/tree.hpp"

namespace figrf {

struct ForestConfig {
  int n_estimators = 100;
  std::optional<int> max_depth;
  int features_per_tree = 0;  // 0 = floor(sqrt(d)), resolved at fit time
  std::uint64_t seed = 0;

  void validate() const;
};

// One ensemble member: the tree plus the feature subset it was trained on.
struct ForestTree {
  DecisionTree tree;
  std::vector<int> features;  // sorted ascending
};

struct ForestModel {
  std::vector<ForestTree> trees;
  ForestConfig config;  // features_per_tree holds the resolved value
  int n_features = 0;
  std::vector<std::string> feature_names;
};

// Bagged forest with per-tree uniform feature sampling. Per-tree randomness
// derives from (seed, tree index), so fits are scheduling-independent.
ForestModel fit_forest(const Dataset& train, const ForestConfig& config, int n_threads = 1);

int predict_forest(const ForestModel& model, const Eigen::Ref<const Vector>& sample);

// Majority vote over arbitrary tree lists; exact ties resolve to class 0.
int majority_vote(const std::vector<ForestTree>& trees, const Eigen::Ref<const Vector>& sample);

// Row-wise prediction helper.
template <class Model>
IntVector predict_rows(const Model& model, const Eigen::Ref<const Matrix>& rows) {
  IntVector out(rows.rows());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    out(i) = majority_vote(model.trees, rows.row(i).transpose());
  }
  return out;
}

// Shape and label-range checks shared by the ensemble fitters.
void check_trainable(const Dataset& train);

// Resolves the 0 = floor(sqrt(d)) default and range-checks against d.
int resolve_features_per_tree(int configured, Eigen::Index d);

// n draws with replacement from [0, n).
std::vector<int> bootstrap_indices(int n, Rng& rng);

// m distinct indices from [0, d), uniform, sorted ascending.
std::vector<int> uniform_sample_without_replacement(int d, int m, Rng& rng);

}  // namespace figrf
