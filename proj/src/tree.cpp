#include "figrf/tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace figrf {

void TreeConfig::validate() const {
  if (max_depth && *max_depth < 1) throw std::invalid_argument("TreeConfig: max_depth must be >= 1");
  if (min_samples_split < 2) throw std::invalid_argument("TreeConfig: min_samples_split must be >= 2");
}

int DecisionTree::predict(const Eigen::Ref<const Vector>& sample) const {
  int i = 0;
  while (!nodes[static_cast<std::size_t>(i)].is_leaf()) {
    const TreeNode& n = nodes[static_cast<std::size_t>(i)];
    i = sample(n.feature) <= n.threshold ? n.left : n.right;
  }
  return nodes[static_cast<std::size_t>(i)].label;
}

int DecisionTree::depth() const {
  // nodes are appended parent-first, so a forward scan sees parents first
  std::vector<int> level(nodes.size(), 0);
  int deepest = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].is_leaf()) continue;
    level[static_cast<std::size_t>(nodes[i].left)] = level[i] + 1;
    level[static_cast<std::size_t>(nodes[i].right)] = level[i] + 1;
    deepest = std::max(deepest, level[i] + 1);
  }
  return deepest;
}

namespace {

using int128 = __int128;

struct BestSplit {
  bool found = false;
  int feature = -1;
  double threshold = 0.0;
  // score of the partition as the exact fraction num/den, where
  // num = (aL^2+bL^2)*nR + (aR^2+bR^2)*nL and den = nL*nR; maximizing this
  // fraction maximizes the weighted Gini decrease at a fixed node.
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::int64_t n_left = 0;
  std::array<std::int64_t, 2> left_counts{0, 0};
};

struct Builder {
  const Eigen::Ref<const Matrix>& X;
  const Eigen::Ref<const IntVector>& y;
  const std::vector<int>& allowed;
  int max_depth;  // -1 = unbounded
  int min_samples_split;
  std::vector<TreeNode> nodes;
  std::set<int> used;

  int build(std::vector<int>& rows, int depth) {
    const std::int64_t n = static_cast<std::int64_t>(rows.size());
    std::array<std::int64_t, 2> counts{0, 0};
    for (int r : rows) ++counts[static_cast<std::size_t>(y(r))];

    const int node_index = static_cast<int>(nodes.size());
    nodes.emplace_back();
    nodes.back().label = counts[1] > counts[0] ? 1 : 0;
    nodes.back().class_counts = counts;
    nodes.back().sample_fraction =
        static_cast<double>(n) / static_cast<double>(X.rows());

    const bool pure = counts[0] == 0 || counts[1] == 0;
    const bool depth_capped = max_depth >= 0 && depth >= max_depth;
    if (pure || depth_capped || n < min_samples_split) return node_index;

    // zero-gain splits of impure nodes are admissible (a symmetric XOR node
    // needs one to become separable below); only a node with no candidate
    // split at all becomes a leaf
    const BestSplit best = scan_splits(rows, counts, n);
    if (!best.found) return node_index;

    std::vector<int> left_rows, right_rows;
    left_rows.reserve(static_cast<std::size_t>(best.n_left));
    right_rows.reserve(rows.size() - static_cast<std::size_t>(best.n_left));
    for (int r : rows) {
      (X(r, best.feature) <= best.threshold ? left_rows : right_rows).push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();

    const std::int64_t nl = static_cast<std::int64_t>(left_rows.size());
    const std::int64_t nr = n - nl;
    const std::array<std::int64_t, 2> lc = best.left_counts;
    const std::array<std::int64_t, 2> rc{counts[0] - lc[0], counts[1] - lc[1]};
    const double imp_node = gini_impurity(Eigen::Vector2d(double(counts[0]), double(counts[1])));
    const double imp_left = gini_impurity(Eigen::Vector2d(double(lc[0]), double(lc[1])));
    const double imp_right = gini_impurity(Eigen::Vector2d(double(rc[0]), double(rc[1])));
    const double decrease =
        std::max(0.0, imp_node - (double(nl) / double(n)) * imp_left -
                          (double(nr) / double(n)) * imp_right);

    used.insert(best.feature);
    const int left_index = build(left_rows, depth + 1);
    const int right_index = build(right_rows, depth + 1);

    TreeNode& node = nodes[static_cast<std::size_t>(node_index)];
    node.feature = best.feature;
    node.threshold = best.threshold;
    node.left = left_index;
    node.right = right_index;
    node.impurity_decrease = decrease;
    return node_index;
  }

  BestSplit scan_splits(const std::vector<int>& rows, const std::array<std::int64_t, 2>& counts,
                        std::int64_t n) {
    BestSplit best;
    std::vector<std::pair<double, int>> order;  // (value, label)
    order.reserve(rows.size());

    for (int f : allowed) {
      order.clear();
      for (int r : rows) order.emplace_back(X(r, f), y(r));
      std::sort(order.begin(), order.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });

      std::array<std::int64_t, 2> left{0, 0};
      for (std::int64_t i = 1; i < n; ++i) {
        ++left[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)].second)];
        const double lo = order[static_cast<std::size_t>(i - 1)].first;
        const double hi = order[static_cast<std::size_t>(i)].first;
        if (!(lo < hi)) continue;

        const std::int64_t nl = i, nr = n - i;
        const std::array<std::int64_t, 2> right{counts[0] - left[0], counts[1] - left[1]};
        const std::int64_t num = (left[0] * left[0] + left[1] * left[1]) * nr +
                                 (right[0] * right[0] + right[1] * right[1]) * nl;
        const std::int64_t den = nl * nr;

        // strictly-better comparison keeps the first (lowest feature, lowest
        // threshold) candidate on exact ties
        if (best.found && int128(num) * best.den <= int128(best.num) * den) continue;

        double threshold = lo + 0.5 * (hi - lo);
        if (!(threshold >= lo && threshold < hi)) threshold = lo;

        best.found = true;
        best.feature = f;
        best.threshold = threshold;
        best.num = num;
        best.den = den;
        best.n_left = nl;
        best.left_counts = left;
      }
    }

    return best;
  }
};

}  // namespace

DecisionTree fit_tree(const Eigen::Ref<const Matrix>& features,
                      const Eigen::Ref<const IntVector>& labels,
                      const std::vector<int>& allowed_features, const TreeConfig& config) {
  config.validate();
  if (allowed_features.empty()) throw std::invalid_argument("fit_tree: allowed_features is empty");
  if (features.rows() != labels.size()) {
    throw std::invalid_argument("fit_tree: features and labels have mismatched lengths");
  }
  if (features.rows() == 0) throw std::invalid_argument("fit_tree: no training samples");
  for (int f : allowed_features) {
    if (f < 0 || f >= features.cols()) {
      throw std::invalid_argument("fit_tree: allowed feature index out of range");
    }
  }

  Builder builder{features, labels, allowed_features,
                  config.max_depth ? *config.max_depth : -1, config.min_samples_split,
                  {}, {}};
  std::vector<int> rows(static_cast<std::size_t>(features.rows()));
  std::iota(rows.begin(), rows.end(), 0);
  builder.build(rows, 0);

  DecisionTree tree;
  tree.nodes = std::move(builder.nodes);
  tree.feature_indices_used.assign(builder.used.begin(), builder.used.end());
  tree.n_train = features.rows();
  return tree;
}

void accumulate_gini_importance(const DecisionTree& tree, Eigen::Ref<Vector> out) {
  for (const TreeNode& n : tree.nodes) {
    if (n.is_leaf()) continue;
    if (n.feature >= out.size()) {
      throw std::invalid_argument("accumulate_gini_importance: output vector too short");
    }
    out(n.feature) += n.sample_fraction * n.impurity_decrease;
  }
}

}  // namespace figrf
