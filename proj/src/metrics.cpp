#include "figrf/metrics.hpp"

#include <stdexcept>

namespace figrf {

MetricReport evaluate(const Eigen::Ref<const IntVector>& predictions,
                      const Eigen::Ref<const IntVector>& truth) {
  if (predictions.size() != truth.size()) {
    throw std::invalid_argument("evaluate: predictions and truth have different lengths");
  }
  if (predictions.size() == 0) throw std::invalid_argument("evaluate: empty inputs");

  MetricReport r;
  for (Eigen::Index i = 0; i < truth.size(); ++i) {
    const bool pred_pos = predictions(i) == 1;
    const bool true_pos = truth(i) == 1;
    if (pred_pos && true_pos) {
      ++r.matrix.tp;
    } else if (pred_pos && !true_pos) {
      ++r.matrix.fp;
    } else if (!pred_pos && true_pos) {
      ++r.matrix.fn;
    } else {
      ++r.matrix.tn;
    }
  }

  const double total = static_cast<double>(r.matrix.total());
  r.accuracy = static_cast<double>(r.matrix.tp + r.matrix.tn) / total;
  r.precision = r.matrix.tp + r.matrix.fp > 0
                    ? static_cast<double>(r.matrix.tp) / static_cast<double>(r.matrix.tp + r.matrix.fp)
                    : 0.0;
  r.recall = r.matrix.tp + r.matrix.fn > 0
                 ? static_cast<double>(r.matrix.tp) / static_cast<double>(r.matrix.tp + r.matrix.fn)
                 : 0.0;
  r.f1 = r.precision + r.recall > 0.0 ? 2.0 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
  r.fitness = (r.accuracy + r.precision + r.recall + r.f1) / 4.0;
  return r;
}

}  // namespace figrf
