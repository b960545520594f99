#include "figrf/sampling.hpp"

#include <stdexcept>

namespace figrf {

std::vector<int> weighted_sample_without_replacement(const Eigen::Ref<const Vector>& probabilities,
                                                     int m, Rng& rng) {
  const Eigen::Index d = probabilities.size();
  int positive = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (probabilities(i) < 0.0) {
      throw std::invalid_argument("weighted_sample_without_replacement: negative probability");
    }
    if (probabilities(i) > 0.0) ++positive;
  }
  if (m < 0 || m > positive) {
    throw std::invalid_argument(
        "weighted_sample_without_replacement: m exceeds the number of positive-probability entries");
  }

  std::vector<double> weight(probabilities.data(), probabilities.data() + d);
  std::vector<int> picked;
  picked.reserve(static_cast<std::size_t>(m));

  for (int k = 0; k < m; ++k) {
    double mass = 0.0;
    for (double w : weight) mass += w;
    const double u = rng.next_unit() * mass;

    double cumulative = 0.0;
    int choice = -1;
    for (Eigen::Index i = 0; i < d; ++i) {
      const double w = weight[static_cast<std::size_t>(i)];
      if (w <= 0.0) continue;
      cumulative += w;
      if (u < cumulative) {
        choice = static_cast<int>(i);
        break;
      }
      choice = static_cast<int>(i);  // floating-point dust: fall back to the last positive
    }
    picked.push_back(choice);
    weight[static_cast<std::size_t>(choice)] = 0.0;
  }
  return picked;
}

}  // namespace figrf
