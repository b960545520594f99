#pragma once

#include <cstdint>
#include <vector>

#include "figrf/dataset.hpp"
#include "figrf/forest.hpp"

namespace figrf {

struct ImportanceConfig {
  int n_repeats = 5;         // shuffles per feature for permutation importance
  double softmax_alpha = 1.0;
  int mi_bins = 10;          // equal-frequency bins for continuous features
  std::uint64_t seed = 0;

  void validate() const;
};

struct ImportanceProfile {
  Vector permutation;
  Vector gini;
  Vector mutual_info;
  Vector permutation_normalized;
  Vector gini_normalized;
  Vector mutual_info_normalized;
  Vector averaged;            // mean of the three normalized scores
  std::vector<int> ranking;   // descending averaged, ties toward lower index
  Vector probabilities;       // softmax(alpha * averaged)
};

// Mean accuracy drop on `validation` over independent shuffles of each
// feature column. Values may be negative.
Vector permutation_importance(const ForestModel& model, const Dataset& validation,
                              const ImportanceConfig& config);

// Sum of per-tree accumulated Gini importance over the whole forest.
Vector gini_importance(const ForestModel& model);

// Empirical mutual information (natural log) between each feature and the
// label; continuous features are discretized into equal-frequency bins,
// features with at most mi_bins distinct values keep their raw values as
// categories.
Vector mutual_information(const Dataset& train, const ImportanceConfig& config);

ImportanceProfile compose(const Vector& permutation, const Vector& gini, const Vector& mutual_info,
                          const ImportanceConfig& config);

}  // namespace figrf
