#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "figrf/math.hpp"

namespace figrf {

enum class ColumnKind { numeric, categorical };
enum class MissingPolicy { median, placeholder_category };

// Per-column ingestion rules. For categorical columns `categories` maps the
// observed strings (in order) to dense codes 0..k-1; an empty list means the
// map is built from the file in first-occurrence order.
struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::numeric;
  MissingPolicy missing_policy = MissingPolicy::median;
  std::vector<std::string> categories;
};

// Column-major numeric feature matrix plus binary labels.
struct Dataset {
  Matrix features;  // n x d
  IntVector labels;  // n entries in {0, 1}
  std::vector<std::string> feature_names;
  std::vector<ColumnKind> kinds;  // d entries; numeric when unspecified

  Eigen::Index n_samples() const { return features.rows(); }
  Eigen::Index n_features() const { return features.cols(); }

  // Full invariants of a loaded dataset: aligned shapes, binary labels,
  // d >= 1, n >= 2, both classes present.
  void validate() const;

  // Row subset, preserving column metadata.
  Dataset select_rows(const std::vector<int>& row_indices) const;
};

struct SplitSpec {
  double test_fraction = 0.2;
  double validation_fraction = 0.0;
  bool stratified = true;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SplitResult {
  Dataset train;
  Dataset validation;
  Dataset test;
};

// Per-column standardization statistics fit on training data. Columns with
// zero standard deviation, and categorical columns, pass through unchanged.
struct Standardizer {
  Vector mean;
  Vector stddev;  // population (1/n) standard deviation
  std::vector<ColumnKind> kinds;
};

// Loader output with the resolved per-column metadata the pipeline needs to
// reproduce preprocessing at predict time.
struct LoadedCsv {
  Dataset data;
  std::vector<ColumnSpec> columns;  // resolved specs incl. built category maps
  Vector imputation_values;         // value used for missing cells, per column
};

LoadedCsv load_csv_full(const std::string& path, const std::string& label_column,
                        const std::vector<ColumnSpec>& specs = {});

Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::vector<ColumnSpec>& specs = {});

SplitResult split(const Dataset& data, const SplitSpec& spec);

Standardizer fit_standardizer(const Dataset& train);
Dataset apply_standardizer(const Standardizer& s, const Dataset& data);

}  // namespace figrf
