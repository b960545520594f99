#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "figrf/dataset.hpp"
#include "figrf/figrf.hpp"
#include "figrf/forest.hpp"
#include "figrf/importance.hpp"
#include "figrf/metrics.hpp"
#include "figrf/sa_tuner.hpp"
#include "figrf/serialize.hpp"

namespace figrf {

// End-to-end run configuration. The split seed pins the evaluation partition
// (part of the experiment definition); model_seed drives every stochastic
// learner on top of it and is what the --seed flag overrides.
struct RunConfig {
  std::string dataset_path;
  std::string label_column = "label";
  std::vector<ColumnSpec> columns;

  SplitSpec split;                 // outer train/test partition
  double validation_slice = 0.25;  // stratified share of train held out for tuning

  int baseline_estimators = 100;
  std::optional<int> baseline_max_depth;

  ImportanceConfig importance;
  SaConfig sa;

  std::string out_dir = "out";
  std::uint64_t model_seed = 42;
  int threads = 1;  // 0 = auto

  void validate() const;
};

// Parses the key/value config format with [section] headers.
RunConfig parse_config_file(const std::string& path);

// Holds the test split hostage until the single final evaluation.
class SealedDataset {
 public:
  explicit SealedDataset(Dataset data) : data_(std::move(data)) {}
  SealedDataset() = default;

  const Dataset& unseal() {
    if (unsealed_) throw std::logic_error("SealedDataset: test data already consumed");
    unsealed_ = true;
    return data_;
  }
  bool consumed() const { return unsealed_; }

 private:
  Dataset data_;
  bool unsealed_ = false;
};

// Loaded, split and standardized data; test rows stay raw and sealed.
struct PreparedData {
  std::vector<ColumnSpec> columns;
  Vector imputation_values;
  Standardizer standardizer;
  Dataset train_full;   // standardized train split (importance + final fits)
  Dataset train_core;   // train minus the validation slice
  Dataset validation;   // held-out slice for permutation importance and SA
  SealedDataset test;   // raw rows, standardized only at final evaluation
};

PreparedData prepare_data(const RunConfig& config);

struct ImportanceStage {
  ForestModel forest;  // fit on train_core; Gini scores come from it
  ImportanceProfile profile;
};

ImportanceStage compute_importance(const PreparedData& data, const RunConfig& config);

struct RunResult {
  ImportanceStage importance;
  SaResult tuning;
  MetricReport baseline_report;
  MetricReport figrf_report;
  FigrfModel final_model;
  std::vector<UsageRow> usage;
};

// Full pipeline: baseline, importance profile, SA tuning, final retrain on
// train+validation, one evaluation on the sealed test split. Writes all
// report files into config.out_dir.
RunResult cmd_run(const RunConfig& config);

// Importance stage only; writes importance.json/importance.csv/top_features.txt.
ImportanceStage cmd_importance(const RunConfig& config);

// Importance + SA tuning; writes sa_trace.jsonl and tuned_params.json.
SaResult cmd_tune(const RunConfig& config);

// Applies the model's stored preprocessing to a raw CSV and writes one
// prediction per row ("prediction" header) to `out`.
void cmd_predict(const std::string& model_path, const std::string& csv_path, std::ostream& out);

// Predicts on a labeled CSV and scores against its labels.
MetricReport cmd_evaluate(const std::string& model_path, const std::string& csv_path);

// Report writers shared with the CLI and tests.
std::string metric_report_to_json(const MetricReport& report);
std::string number_repr(double value);  // shortest round-trip decimal form

}  // namespace figrf
