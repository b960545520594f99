#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "figrf/dataset.hpp"
#include "figrf/figrf.hpp"
#include "figrf/forest.hpp"

namespace figrf {

// Preprocessing carried with a saved model so raw CSV rows can be transformed
// exactly as at training time.
struct Preprocessing {
  std::string label_column;
  std::vector<ColumnSpec> columns;
  Vector imputation_values;  // per column, used for missing cells
  Standardizer standardizer;
};

// On-disk representation shared by the uniform and the weighted ensembles;
// the `sampling` tag distinguishes them.
struct ModelFile {
  std::string sampling;  // "uniform" or "weighted"
  int n_estimators = 0;
  std::optional<int> max_depth;
  int features_per_tree = 0;
  std::uint64_t seed = 0;
  Vector probabilities;                    // weighted only
  std::vector<std::int64_t> usage_counts;  // weighted only
  std::vector<ForestTree> trees;
  std::vector<std::string> feature_names;
  Preprocessing preprocessing;
};

ModelFile to_model_file(const FigrfModel& model, const Preprocessing& preprocessing);
ModelFile to_model_file(const ForestModel& model, const Preprocessing& preprocessing);

std::string model_to_json(const ModelFile& file);
ModelFile model_from_json(const std::string& text);

void save_model(const ModelFile& file, const std::string& path);
ModelFile load_model(const std::string& path);

// Majority vote of the stored trees on an already-preprocessed sample.
int predict_model(const ModelFile& file, const Eigen::Ref<const Vector>& sample);

}  // namespace figrf
