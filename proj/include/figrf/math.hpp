#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace figrf {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;

// Gini impurity of a class-count vector: 1 - sum_k (c_k / total)^2.
template <class Derived>
double gini_impurity(const Eigen::DenseBase<Derived>& class_counts) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < class_counts.size(); ++i) {
    const double c = static_cast<double>(class_counts(i));
    if (c < 0.0) throw std::invalid_argument("gini_impurity: negative class count");
    total += c;
  }
  if (total <= 0.0) throw std::invalid_argument("gini_impurity: all class counts are zero");
  double sum_sq = 0.0;
  for (Eigen::Index i = 0; i < class_counts.size(); ++i) {
    const double p = static_cast<double>(class_counts(i)) / total;
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

// Min-max scale to [0, 1]. A constant vector maps to all zeros.
template <class Derived>
Vector min_max_normalize(const Eigen::MatrixBase<Derived>& scores) {
  Vector x = scores;
  if (x.size() == 0) return x;
  const double lo = x.minCoeff();
  const double hi = x.maxCoeff();
  if (hi - lo <= 0.0) return Vector::Zero(x.size());
  return ((x.array() - lo) / (hi - lo)).matrix();
}

// Softmax of alpha * scores, guarded against overflow by max subtraction.
template <class Derived>
Vector softmax(const Eigen::MatrixBase<Derived>& scores, double alpha) {
  if (scores.size() == 0) throw std::invalid_argument("softmax: empty input");
  Vector s = alpha * scores;
  const Vector e = (s.array() - s.maxCoeff()).exp().matrix();
  return e / e.sum();
}

// Indices sorted by descending score; equal scores keep the lower index first.
inline std::vector<int> descending_ranking(const Eigen::Ref<const Vector>& scores) {
  std::vector<int> idx(static_cast<std::size_t>(scores.size()));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return scores(a) > scores(b); });
  return idx;
}

}  // namespace figrf
