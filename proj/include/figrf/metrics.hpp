#pragma once

#include <cstdint>

#include "figrf/math.hpp"

namespace figrf {

// Binary confusion counts, positive class = label 1.
struct ConfusionMatrix {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t tn = 0;
  std::int64_t fn = 0;

  std::int64_t total() const { return tp + fp + tn + fn; }
};

struct MetricReport {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double fitness = 0.0;  // mean of the four metrics above
  ConfusionMatrix matrix;
};

// Standard binary metrics with zero-division conventions: precision, recall
// and F1 fall back to 0 when their denominators vanish.
MetricReport evaluate(const Eigen::Ref<const IntVector>& predictions,
                      const Eigen::Ref<const IntVector>& truth);

}  // namespace figrf
