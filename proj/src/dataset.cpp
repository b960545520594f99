#include "figrf/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "figrf/rng.hpp"

namespace figrf {

namespace {

bool is_missing(const std::string& cell) { return cell.empty() || cell == "NA"; }

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

double parse_number(const std::string& cell, const std::string& column, std::size_t row) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(cell, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != cell.size() || consumed == 0) {
    throw std::runtime_error("load_csv: cannot parse '" + cell + "' in column '" + column +
                             "' at data row " + std::to_string(row + 1));
  }
  return value;
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

void Dataset::validate() const {
  if (features.rows() != labels.size()) {
    throw std::invalid_argument("Dataset: feature rows and label count differ");
  }
  if (n_features() < 1) throw std::invalid_argument("Dataset: needs at least one feature");
  if (n_samples() < 2) throw std::invalid_argument("Dataset: needs at least two samples");
  bool has0 = false, has1 = false;
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    if (labels(i) == 0) {
      has0 = true;
    } else if (labels(i) == 1) {
      has1 = true;
    } else {
      throw std::invalid_argument("Dataset: label " + std::to_string(labels(i)) +
                                  " is not binary (0/1)");
    }
  }
  if (!has0 || !has1) throw std::invalid_argument("Dataset: both classes must be present");
}

Dataset Dataset::select_rows(const std::vector<int>& row_indices) const {
  Dataset out;
  out.features = features(row_indices, Eigen::all);
  out.labels = labels(row_indices);
  out.feature_names = feature_names;
  out.kinds = kinds;
  return out;
}

void SplitSpec::validate() const {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw std::invalid_argument("SplitSpec: test_fraction must be in (0,1)");
  }
  if (!(validation_fraction >= 0.0 && validation_fraction < 1.0)) {
    throw std::invalid_argument("SplitSpec: validation_fraction must be in [0,1)");
  }
  if (test_fraction + validation_fraction >= 1.0) {
    throw std::invalid_argument("SplitSpec: test_fraction + validation_fraction must be < 1");
  }
}

LoadedCsv load_csv_full(const std::string& path, const std::string& label_column,
                        const std::vector<ColumnSpec>& specs) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_csv: cannot open file '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("load_csv: file '" + path + "' is empty");
  strip_cr(line);
  const std::vector<std::string> header = split_line(line);

  std::ptrdiff_t label_idx = -1;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (header[j] == label_column) label_idx = static_cast<std::ptrdiff_t>(j);
  }
  if (label_idx < 0) {
    throw std::runtime_error("load_csv: label column '" + label_column + "' not found in header of '" +
                             path + "'");
  }

  std::vector<std::vector<std::string>> raw;  // per data row
  std::size_t row_no = 0;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty() && in.peek() == EOF) break;  // trailing newline
    std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size()) {
      throw std::runtime_error("load_csv: data row " + std::to_string(row_no + 1) + " has " +
                               std::to_string(cells.size()) + " cells, header has " +
                               std::to_string(header.size()));
    }
    raw.push_back(std::move(cells));
    ++row_no;
  }

  const std::size_t n = raw.size();
  const std::size_t d = header.size() - 1;

  LoadedCsv out;
  out.data.feature_names.reserve(d);
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (static_cast<std::ptrdiff_t>(j) != label_idx) out.data.feature_names.push_back(header[j]);
  }

  // Resolve column specs by name; unspecified columns default to numeric/median.
  out.columns.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    out.columns[j].name = out.data.feature_names[j];
    for (const ColumnSpec& s : specs) {
      if (s.name == out.data.feature_names[j]) out.columns[j] = s;
    }
  }

  out.data.labels.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& cell = raw[i][static_cast<std::size_t>(label_idx)];
    const double v = parse_number(cell, label_column, i);
    if (v != 0.0 && v != 1.0) {
      throw std::runtime_error("load_csv: label value '" + cell + "' at data row " +
                               std::to_string(i + 1) + " is not binary (0/1)");
    }
    out.data.labels(static_cast<Eigen::Index>(i)) = static_cast<int>(v);
  }

  out.data.features.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  out.data.kinds.resize(d);
  out.imputation_values = Vector::Zero(static_cast<Eigen::Index>(d));

  for (std::size_t j = 0, src = 0; src < header.size(); ++src) {
    if (static_cast<std::ptrdiff_t>(src) == label_idx) continue;
    ColumnSpec& spec = out.columns[j];
    out.data.kinds[j] = spec.kind;
    const Eigen::Index col = static_cast<Eigen::Index>(j);

    if (spec.kind == ColumnKind::numeric) {
      std::vector<double> observed;
      std::vector<std::size_t> missing_rows;
      for (std::size_t i = 0; i < n; ++i) {
        const std::string& cell = raw[i][src];
        if (is_missing(cell)) {
          missing_rows.push_back(i);
        } else {
          const double v = parse_number(cell, spec.name, i);
          out.data.features(static_cast<Eigen::Index>(i), col) = v;
          observed.push_back(v);
        }
      }
      double fill = 0.0;
      if (!missing_rows.empty()) {
        if (observed.empty()) {
          throw std::runtime_error("load_csv: column '" + spec.name + "' has no observed values");
        }
        fill = median_of(observed);
        for (std::size_t i : missing_rows) {
          out.data.features(static_cast<Eigen::Index>(i), col) = fill;
        }
      } else if (!observed.empty()) {
        fill = median_of(observed);
      }
      out.imputation_values(col) = fill;
    } else {
      const bool fixed_map = !spec.categories.empty();
      std::map<std::string, int> codes;
      for (std::size_t k = 0; k < spec.categories.size(); ++k) {
        codes[spec.categories[k]] = static_cast<int>(k);
      }
      auto code_of = [&](const std::string& value, std::size_t i) -> int {
        auto it = codes.find(value);
        if (it != codes.end()) return it->second;
        if (fixed_map) {
          throw std::runtime_error("load_csv: unknown category '" + value + "' in column '" +
                                   spec.name + "' at data row " + std::to_string(i + 1));
        }
        const int code = static_cast<int>(spec.categories.size());
        spec.categories.push_back(value);
        codes[value] = code;
        return code;
      };

      std::vector<double> observed;
      std::vector<std::size_t> missing_rows;
      for (std::size_t i = 0; i < n; ++i) {
        const std::string& cell = raw[i][src];
        if (is_missing(cell)) {
          if (spec.missing_policy == MissingPolicy::placeholder_category) {
            const double v = static_cast<double>(code_of("missing", i));
            out.data.features(static_cast<Eigen::Index>(i), col) = v;
            observed.push_back(v);
          } else {
            missing_rows.push_back(i);
          }
        } else {
          const double v = static_cast<double>(code_of(cell, i));
          out.data.features(static_cast<Eigen::Index>(i), col) = v;
          observed.push_back(v);
        }
      }
      double fill = 0.0;
      if (!missing_rows.empty()) {
        if (observed.empty()) {
          throw std::runtime_error("load_csv: column '" + spec.name + "' has no observed values");
        }
        // lower median keeps the imputed code integral
        std::sort(observed.begin(), observed.end());
        fill = observed[(observed.size() - 1) / 2];
        for (std::size_t i : missing_rows) {
          out.data.features(static_cast<Eigen::Index>(i), col) = fill;
        }
      } else if (spec.missing_policy == MissingPolicy::placeholder_category) {
        auto it = codes.find("missing");
        fill = it != codes.end() ? static_cast<double>(it->second) : 0.0;
      }
      out.imputation_values(col) = fill;
    }
    ++j;
  }

  out.data.validate();
  return out;
}

Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::vector<ColumnSpec>& specs) {
  return load_csv_full(path, label_column, specs).data;
}

namespace {

// Shuffle `indices` and peel off `n_test` then `n_validation` entries.
void deal(std::vector<int>& indices, Rng& rng, std::size_t n_test, std::size_t n_validation,
          std::vector<int>& test, std::vector<int>& validation, std::vector<int>& train) {
  rng.shuffle(indices);
  std::size_t pos = 0;
  for (std::size_t k = 0; k < n_test; ++k) test.push_back(indices[pos++]);
  for (std::size_t k = 0; k < n_validation; ++k) validation.push_back(indices[pos++]);
  for (; pos < indices.size(); ++pos) train.push_back(indices[pos]);
}

std::size_t rounded_count(double fraction, std::size_t n) {
  return static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
}

}  // namespace

SplitResult split(const Dataset& data, const SplitSpec& spec) {
  spec.validate();
  const std::size_t n = static_cast<std::size_t>(data.n_samples());

  std::vector<int> test_idx, val_idx, train_idx;

  if (spec.stratified) {
    std::vector<int> by_class[2];
    for (Eigen::Index i = 0; i < data.labels.size(); ++i) {
      by_class[data.labels(i) == 1 ? 1 : 0].push_back(static_cast<int>(i));
    }
    for (int c = 0; c < 2; ++c) {
      Rng rng(derive_seed(spec.seed, 0x5317ULL, static_cast<std::uint64_t>(c)));
      const std::size_t nc = by_class[c].size();
      deal(by_class[c], rng, rounded_count(spec.test_fraction, nc),
           rounded_count(spec.validation_fraction, nc), test_idx, val_idx, train_idx);
    }
  } else {
    std::vector<int> indices(n);
    std::iota(indices.begin(), indices.end(), 0);
    Rng rng(derive_seed(spec.seed, 0x5317ULL));
    deal(indices, rng, rounded_count(spec.test_fraction, n),
         rounded_count(spec.validation_fraction, n), test_idx, val_idx, train_idx);
  }

  if (test_idx.empty()) throw std::invalid_argument("split: fractions produce an empty test partition");
  if (train_idx.empty()) throw std::invalid_argument("split: fractions produce an empty train partition");
  if (spec.validation_fraction > 0.0 && val_idx.empty()) {
    throw std::invalid_argument("split: fractions produce an empty validation partition");
  }

  std::sort(test_idx.begin(), test_idx.end());
  std::sort(val_idx.begin(), val_idx.end());
  std::sort(train_idx.begin(), train_idx.end());

  SplitResult out;
  out.train = data.select_rows(train_idx);
  out.test = data.select_rows(test_idx);
  if (!val_idx.empty()) {
    out.validation = data.select_rows(val_idx);
  } else {
    out.validation.feature_names = data.feature_names;
    out.validation.kinds = data.kinds;
    out.validation.features.resize(0, data.n_features());
    out.validation.labels.resize(0);
  }
  return out;
}

Standardizer fit_standardizer(const Dataset& train) {
  if (train.n_samples() == 0) throw std::invalid_argument("fit_standardizer: empty training data");
  const Eigen::Index d = train.n_features();
  Standardizer s;
  s.mean = train.features.colwise().mean();
  s.stddev.resize(d);
  const double n = static_cast<double>(train.n_samples());
  for (Eigen::Index j = 0; j < d; ++j) {
    const double var = (train.features.col(j).array() - s.mean(j)).square().sum() / n;
    s.stddev(j) = std::sqrt(var);
  }
  s.kinds = train.kinds.empty() ? std::vector<ColumnKind>(static_cast<std::size_t>(d), ColumnKind::numeric)
                                : train.kinds;
  return s;
}

Dataset apply_standardizer(const Standardizer& s, const Dataset& data) {
  if (s.mean.size() != data.n_features()) {
    throw std::invalid_argument("apply_standardizer: column count mismatch");
  }
  Dataset out = data;
  for (Eigen::Index j = 0; j < data.n_features(); ++j) {
    const bool numeric = s.kinds.empty() || s.kinds[static_cast<std::size_t>(j)] == ColumnKind::numeric;
    if (numeric && s.stddev(j) > 0.0) {
      out.features.col(j) = (data.features.col(j).array() - s.mean(j)) / s.stddev(j);
    }
  }
  return out;
}

}  // namespace figrf
