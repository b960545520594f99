#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "figrf/math.hpp"

namespace figrf {

struct TreeConfig {
  std::optional<int> max_depth;  // absent = unbounded
  int min_samples_split = 2;
  std::uint64_t seed = 0;

  void validate() const;
};

// Flattened node. Internal nodes have feature >= 0 and child indices into the
// owning tree's node vector; leaves have feature == -1.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double impurity_decrease = 0.0;  // Gini decrease of the split, per sample at the node
  double sample_fraction = 0.0;    // fraction of training samples reaching the node
  int label = 0;                   // majority class (tie -> lower id)
  std::array<std::int64_t, 2> class_counts{0, 0};

  bool is_leaf() const { return feature < 0; }
};

class DecisionTree {
 public:
  std::vector<TreeNode> nodes;  // root at index 0
  std::vector<int> feature_indices_used;  // sorted, unique, features split on
  std::int64_t n_train = 0;

  int predict(const Eigen::Ref<const Vector>& sample) const;
  int depth() const;  // edge count from root to deepest node
};

// Greedy CART fit restricted to `allowed_features` (full-matrix indices).
// Chooses the split maximizing the weighted Gini decrease; ties break toward
// the lower feature index, then the lower threshold.
DecisionTree fit_tree(const Eigen::Ref<const Matrix>& features,
                      const Eigen::Ref<const IntVector>& labels,
                      const std::vector<int>& allowed_features, const TreeConfig& config);

// Adds p(node) * impurity_decrease for every internal node into `out`, indexed
// by feature.
void accumulate_gini_importance(const DecisionTree& tree, Eigen::Ref<Vector> out);

}  // namespace figrf
