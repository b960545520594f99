#include "figrf/importance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace figrf {

void ImportanceConfig::validate() const {
  if (n_repeats < 1) throw std::invalid_argument("ImportanceConfig: n_repeats must be >= 1");
  if (mi_bins < 2) throw std::invalid_argument("ImportanceConfig: mi_bins must be >= 2");
  if (!(softmax_alpha > 0.0)) {
    throw std::invalid_argument("ImportanceConfig: softmax_alpha must be positive");
  }
}

namespace {

double accuracy_of(const IntVector& predictions, const IntVector& truth) {
  std::int64_t hits = 0;
  for (Eigen::Index i = 0; i < truth.size(); ++i) hits += predictions(i) == truth(i);
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

}  // namespace

Vector permutation_importance(const ForestModel& model, const Dataset& validation,
                              const ImportanceConfig& config) {
  config.validate();
  if (model.trees.empty()) throw std::invalid_argument("permutation_importance: untrained model");
  if (validation.n_samples() == 0) {
    throw std::invalid_argument("permutation_importance: empty validation data");
  }

  const Eigen::Index n = validation.n_samples();
  const Eigen::Index d = validation.n_features();
  const IntVector base_predictions = predict_rows(model, validation.features);
  const double acc_base = accuracy_of(base_predictions, validation.labels);

  Matrix working = validation.features;
  Vector out(d);
  std::vector<int> perm(static_cast<std::size_t>(n));

  for (Eigen::Index f = 0; f < d; ++f) {
    const Vector original = validation.features.col(f);
    double drop_sum = 0.0;
    for (int r = 0; r < config.n_repeats; ++r) {
      Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(f), static_cast<std::uint64_t>(r)));
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(perm);
      for (Eigen::Index i = 0; i < n; ++i) {
        working(i, f) = original(perm[static_cast<std::size_t>(i)]);
      }
      const double acc_perm = accuracy_of(predict_rows(model, working), validation.labels);
      drop_sum += acc_base - acc_perm;
    }
    working.col(f) = original;
    out(f) = drop_sum / static_cast<double>(config.n_repeats);
  }
  return out;
}

Vector gini_importance(const ForestModel& model) {
  if (model.trees.empty()) throw std::invalid_argument("gini_importance: untrained model");
  Vector out = Vector::Zero(model.n_features);
  for (const ForestTree& member : model.trees) {
    accumulate_gini_importance(member.tree, out);
  }
  return out;
}

namespace {

// Bin codes for one feature column: raw-value categories when the column has
// at most `bins` distinct values, equal-frequency (quantile) bins otherwise.
std::vector<int> discretize_column(const Vector& column, int bins) {
  const Eigen::Index n = column.size();
  std::vector<double> sorted(column.data(), column.data() + n);
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> distinct(sorted);
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<int> codes(static_cast<std::size_t>(n));
  if (static_cast<int>(distinct.size()) <= bins) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto it = std::lower_bound(distinct.begin(), distinct.end(), column(i));
      codes[static_cast<std::size_t>(i)] = static_cast<int>(it - distinct.begin());
    }
    return codes;
  }

  std::vector<double> edges;
  edges.reserve(static_cast<std::size_t>(bins - 1));
  for (int k = 1; k < bins; ++k) {
    edges.push_back(sorted[static_cast<std::size_t>(n) * static_cast<std::size_t>(k) /
                           static_cast<std::size_t>(bins)]);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto it = std::upper_bound(edges.begin(), edges.end(), column(i));
    codes[static_cast<std::size_t>(i)] = static_cast<int>(it - edges.begin());
  }
  return codes;
}

double mi_from_codes(const std::vector<int>& codes, const IntVector& labels) {
  const int n_bins = codes.empty() ? 0 : *std::max_element(codes.begin(), codes.end()) + 1;
  std::vector<std::array<std::int64_t, 2>> joint(static_cast<std::size_t>(n_bins), {0, 0});
  std::array<std::int64_t, 2> label_marginal{0, 0};
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const int yl = labels(static_cast<Eigen::Index>(i));
    ++joint[static_cast<std::size_t>(codes[i])][static_cast<std::size_t>(yl)];
    ++label_marginal[static_cast<std::size_t>(yl)];
  }

  const double n = static_cast<double>(codes.size());
  double mi = 0.0;
  for (int b = 0; b < n_bins; ++b) {
    const std::int64_t bin_total = joint[static_cast<std::size_t>(b)][0] +
                                   joint[static_cast<std::size_t>(b)][1];
    if (bin_total == 0) continue;
    for (int y = 0; y < 2; ++y) {
      const std::int64_t c = joint[static_cast<std::size_t>(b)][static_cast<std::size_t>(y)];
      if (c == 0 || label_marginal[static_cast<std::size_t>(y)] == 0) continue;
      const double pxy = static_cast<double>(c) / n;
      const double px = static_cast<double>(bin_total) / n;
      const double py = static_cast<double>(label_marginal[static_cast<std::size_t>(y)]) / n;
      mi += pxy * std::log(pxy / (px * py));
    }
  }
  return mi;
}

}  // namespace

Vector mutual_information(const Dataset& train, const ImportanceConfig& config) {
  config.validate();
  if (train.n_samples() == 0) throw std::invalid_argument("mutual_information: empty data");
  Vector out(train.n_features());
  for (Eigen::Index f = 0; f < train.n_features(); ++f) {
    const std::vector<int> codes = discretize_column(train.features.col(f), config.mi_bins);
    out(f) = mi_from_codes(codes, train.labels);
  }
  return out;
}

ImportanceProfile compose(const Vector& permutation, const Vector& gini, const Vector& mutual_info,
                          const ImportanceConfig& config) {
  config.validate();
  if (permutation.size() != gini.size() || gini.size() != mutual_info.size()) {
    throw std::invalid_argument("compose: score vectors have mismatched lengths");
  }
  if (permutation.size() == 0) throw std::invalid_argument("compose: empty score vectors");

  ImportanceProfile profile;
  profile.permutation = permutation;
  profile.gini = gini;
  profile.mutual_info = mutual_info;
  profile.permutation_normalized = min_max_normalize(permutation);
  profile.gini_normalized = min_max_normalize(gini);
  profile.mutual_info_normalized = min_max_normalize(mutual_info);
  profile.averaged = (profile.gini_normalized + profile.permutation_normalized +
                      profile.mutual_info_normalized) /
                     3.0;
  profile.ranking = descending_ranking(profile.averaged);
  profile.probabilities = softmax(profile.averaged, config.softmax_alpha);
  return profile;
}

}  // namespace figrf
