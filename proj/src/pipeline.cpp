#include "figrf/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace figrf {

using nlohmann::json;

namespace {

constexpr std::uint64_t kSeedBaseline = 1;
constexpr std::uint64_t kSeedImportanceForest = 2;
constexpr std::uint64_t kSeedImportance = 3;
constexpr std::uint64_t kSeedSa = 4;
constexpr std::uint64_t kSeedFinal = 5;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

class ConfigReader {
 public:
  ConfigReader(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) throw std::runtime_error("config: cannot open '" + path_ + "'");
    std::string line, section;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      line = trim(line);
      if (line.empty() || line[0] == '#' || line[0] == ';') continue;
      if (line.front() == '[' && line.back() == ']') {
        section = trim(line.substr(1, line.size() - 2));
        continue;
      }
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) {
        throw std::runtime_error(path_ + ": line '" + line + "' is not key = value");
      }
      values_[section + "." + trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
  }

  std::optional<std::string> raw(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    return raw(key).value_or(fallback);
  }

  double get_double(const std::string& key, double fallback) const {
    const auto v = raw(key);
    if (!v) return fallback;
    try {
      std::size_t used = 0;
      const double x = std::stod(*v, &used);
      if (used != v->size()) throw std::invalid_argument("");
      return x;
    } catch (const std::exception&) {
      throw std::runtime_error(path_ + ": [" + key + "] is not a number: '" + *v + "'");
    }
  }

  long long get_int(const std::string& key, long long fallback) const {
    const auto v = raw(key);
    if (!v) return fallback;
    try {
      std::size_t used = 0;
      const long long x = std::stoll(*v, &used);
      if (used != v->size()) throw std::invalid_argument("");
      return x;
    } catch (const std::exception&) {
      throw std::runtime_error(path_ + ": [" + key + "] is not an integer: '" + *v + "'");
    }
  }

  bool get_bool(const std::string& key, bool fallback) const {
    const auto v = raw(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1") return true;
    if (*v == "false" || *v == "0") return false;
    throw std::runtime_error(path_ + ": [" + key + "] is not a boolean: '" + *v + "'");
  }

  // "none" (or absence) means no depth bound.
  std::optional<int> get_depth(const std::string& key) const {
    const auto v = raw(key);
    if (!v || *v == "none" || *v == "None") return std::nullopt;
    return static_cast<int>(get_int(key, 0));
  }

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::map<std::string, std::string> values_;
};

}  // namespace

void RunConfig::validate() const {
  if (dataset_path.empty()) throw std::invalid_argument("RunConfig: dataset path missing");
  if (label_column.empty()) throw std::invalid_argument("RunConfig: label column missing");
  split.validate();
  if (!(validation_slice > 0.0 && validation_slice < 1.0)) {
    throw std::invalid_argument("RunConfig: validation_slice must be in (0,1)");
  }
  if (baseline_estimators < 1) throw std::invalid_argument("RunConfig: baseline_estimators must be >= 1");
  importance.validate();
  sa.validate();
  if (threads < 0) throw std::invalid_argument("RunConfig: threads must be >= 0");
}

RunConfig parse_config_file(const std::string& path) {
  const ConfigReader reader(path);
  RunConfig config;

  config.dataset_path = reader.get_string("dataset.path", "");
  if (config.dataset_path.empty()) {
    throw std::runtime_error(path + ": [dataset] path is required");
  }
  // dataset paths resolve relative to the config file location
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  if (!config.dataset_path.empty() && std::filesystem::path(config.dataset_path).is_relative()) {
    const std::filesystem::path resolved = base / config.dataset_path;
    if (std::filesystem::exists(resolved)) config.dataset_path = resolved.string();
  }
  config.label_column = reader.get_string("dataset.label", "label");

  for (const std::string& name : split_list(reader.get_string("columns.categorical", ""))) {
    ColumnSpec spec;
    spec.name = name;
    spec.kind = ColumnKind::categorical;
    spec.missing_policy = MissingPolicy::placeholder_category;
    config.columns.push_back(std::move(spec));
  }

  config.split.test_fraction = reader.get_double("split.test_fraction", 0.2);
  config.split.stratified = reader.get_bool("split.stratified", true);
  config.split.seed = static_cast<std::uint64_t>(reader.get_int("split.seed", 1));
  config.validation_slice = reader.get_double("split.validation_slice", 0.25);

  config.baseline_estimators = static_cast<int>(reader.get_int("baseline.n_estimators", 100));
  config.baseline_max_depth = reader.get_depth("baseline.max_depth");

  config.importance.n_repeats = static_cast<int>(reader.get_int("importance.n_repeats", 5));
  config.importance.softmax_alpha = reader.get_double("importance.softmax_alpha", 1.0);
  config.importance.mi_bins = static_cast<int>(reader.get_int("importance.mi_bins", 10));

  config.sa.max_iterations = static_cast<int>(reader.get_int("sa.iterations", 30));
  config.sa.initial_temperature = reader.get_double("sa.initial_temperature", 1.0);
  config.sa.cooling_rate = reader.get_double("sa.cooling_rate", 0.95);

  config.out_dir = reader.get_string("output.dir", "out");
  config.model_seed = static_cast<std::uint64_t>(reader.get_int("run.seed", 42));

  try {
    config.validate();
  } catch (const std::exception& e) {
    throw std::runtime_error(reader.path() + ": " + e.what());
  }
  return config;
}

PreparedData prepare_data(const RunConfig& config) {
  config.validate();
  LoadedCsv loaded = load_csv_full(config.dataset_path, config.label_column, config.columns);

  SplitSpec outer = config.split;
  outer.validation_fraction = 0.0;
  SplitResult outer_split = split(loaded.data, outer);

  SplitSpec inner;
  inner.test_fraction = config.validation_slice;  // the inner "test" is the validation slice
  inner.validation_fraction = 0.0;
  inner.stratified = config.split.stratified;
  inner.seed = derive_seed(config.split.seed, 0x1717ULL);
  SplitResult inner_split = split(outer_split.train, inner);

  PreparedData data;
  data.columns = std::move(loaded.columns);
  data.imputation_values = std::move(loaded.imputation_values);
  data.standardizer = fit_standardizer(outer_split.train);
  data.train_full = apply_standardizer(data.standardizer, outer_split.train);
  data.train_core = apply_standardizer(data.standardizer, inner_split.train);
  data.validation = apply_standardizer(data.standardizer, inner_split.test);
  data.test = SealedDataset(std::move(outer_split.test));
  return data;
}

ImportanceStage compute_importance(const PreparedData& data, const RunConfig& config) {
  ImportanceStage stage;

  ForestConfig forest_config;
  forest_config.n_estimators = config.baseline_estimators;
  forest_config.max_depth = config.baseline_max_depth;
  forest_config.seed = derive_seed(config.model_seed, kSeedImportanceForest);
  stage.forest = fit_forest(data.train_core, forest_config, config.threads);

  ImportanceConfig imp = config.importance;
  imp.seed = derive_seed(config.model_seed, kSeedImportance);

  const Vector perm = permutation_importance(stage.forest, data.validation, imp);
  const Vector gini = gini_importance(stage.forest);
  const Vector mi = mutual_information(data.train_core, imp);
  stage.profile = compose(perm, gini, mi, imp);
  return stage;
}

std::string number_repr(double value) { return json(value).dump(); }

std::string metric_report_to_json(const MetricReport& report) {
  json j{{"accuracy", report.accuracy},
         {"precision", report.precision},
         {"recall", report.recall},
         {"f1", report.f1},
         {"fitness", report.fitness},
         {"confusion",
          {{"tp", report.matrix.tp}, {"fp", report.matrix.fp}, {"tn", report.matrix.tn},
           {"fn", report.matrix.fn}}}};
  return j.dump(2) + "\n";
}

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

json params_to_json(const HyperParams& params) {
  json j{{"n_estimators", params.n_estimators}};
  j["max_depth"] = params.max_depth ? json(*params.max_depth) : json(nullptr);
  return j;
}

std::string importance_json_text(const ImportanceStage& stage, const RunConfig& config,
                                 const std::vector<std::string>& names) {
  const ImportanceProfile& p = stage.profile;
  const Eigen::Index d = p.averaged.size();
  std::vector<int> rank_of(static_cast<std::size_t>(d));
  for (std::size_t k = 0; k < p.ranking.size(); ++k) {
    rank_of[static_cast<std::size_t>(p.ranking[k])] = static_cast<int>(k) + 1;
  }

  json features = json::array();
  for (Eigen::Index f = 0; f < d; ++f) {
    features.push_back(json{{"index", f},
                            {"name", names[static_cast<std::size_t>(f)]},
                            {"permutation", p.permutation(f)},
                            {"gini", p.gini(f)},
                            {"mutual_info", p.mutual_info(f)},
                            {"permutation_normalized", p.permutation_normalized(f)},
                            {"gini_normalized", p.gini_normalized(f)},
                            {"mutual_info_normalized", p.mutual_info_normalized(f)},
                            {"average", p.averaged(f)},
                            {"rank", rank_of[static_cast<std::size_t>(f)]},
                            {"probability", p.probabilities(f)}});
  }
  json ranked_names = json::array();
  for (int f : p.ranking) ranked_names.push_back(names[static_cast<std::size_t>(f)]);

  const json j{{"softmax_alpha", config.importance.softmax_alpha},
               {"n_repeats", config.importance.n_repeats},
               {"mi_bins", config.importance.mi_bins},
               {"features", features},
               {"ranking", ranked_names}};
  return j.dump(2) + "\n";
}

std::string importance_csv_text(const ImportanceProfile& p, const std::vector<std::string>& names) {
  std::vector<int> rank_of(p.ranking.size());
  for (std::size_t k = 0; k < p.ranking.size(); ++k) {
    rank_of[static_cast<std::size_t>(p.ranking[k])] = static_cast<int>(k) + 1;
  }
  std::ostringstream out;
  out << "index,name,permutation,gini,mutual_info,permutation_normalized,gini_normalized,"
         "mutual_info_normalized,average,rank,probability\n";
  for (Eigen::Index f = 0; f < p.averaged.size(); ++f) {
    out << f << ',' << names[static_cast<std::size_t>(f)] << ',' << number_repr(p.permutation(f))
        << ',' << number_repr(p.gini(f)) << ',' << number_repr(p.mutual_info(f)) << ','
        << number_repr(p.permutation_normalized(f)) << ',' << number_repr(p.gini_normalized(f))
        << ',' << number_repr(p.mutual_info_normalized(f)) << ',' << number_repr(p.averaged(f))
        << ',' << rank_of[static_cast<std::size_t>(f)] << ',' << number_repr(p.probabilities(f))
        << '\n';
  }
  return out.str();
}

std::string top_features_text(const ImportanceProfile& p, const std::vector<std::string>& names,
                              std::size_t top_k = 10) {
  std::ostringstream out;
  out << "rank  average      probability  feature\n";
  const std::size_t k = std::min(top_k, p.ranking.size());
  for (std::size_t r = 0; r < k; ++r) {
    const int f = p.ranking[r];
    std::ostringstream avg, prob;
    avg.precision(6);
    avg << std::fixed << p.averaged(f);
    prob.precision(6);
    prob << std::fixed << p.probabilities(f);
    out << r + 1 << (r + 1 < 10 ? "     " : "    ") << avg.str() << "     " << prob.str()
        << "     " << names[static_cast<std::size_t>(f)] << '\n';
  }
  return out.str();
}

std::string trace_jsonl_text(const SaResult& result) {
  std::ostringstream out;
  for (std::size_t k = 0; k < result.trace.size(); ++k) {
    const SaRecord& rec = result.trace[k];
    json j{{"iteration", k},
           {"candidate", params_to_json(rec.candidate)},
           {"fitness", rec.fitness},
           {"delta", rec.delta},
           {"temperature", rec.temperature},
           {"accepted", rec.accepted},
           {"new_best", rec.new_best}};
    j["draw"] = rec.has_draw ? json(rec.draw) : json(nullptr);
    out << j.dump() << '\n';
  }
  return out.str();
}

std::string tuned_params_text(const SaResult& result) {
  const json j{{"best", params_to_json(result.best)}, {"fitness", result.best_fitness}};
  return j.dump(2) + "\n";
}

std::string comparison_csv_text(const MetricReport& baseline, const MetricReport& figrf) {
  std::ostringstream out;
  out << "model,accuracy,precision,recall,f1\n";
  const auto row = [&](const std::string& name, const MetricReport& r) {
    out << name << ',' << number_repr(r.accuracy) << ',' << number_repr(r.precision) << ','
        << number_repr(r.recall) << ',' << number_repr(r.f1) << '\n';
  };
  row("baseline_rf", baseline);
  row("figrf", figrf);
  return out.str();
}

std::string usage_csv_text(const std::vector<UsageRow>& rows) {
  std::ostringstream out;
  out << "index,name,count,percent\n";
  for (const UsageRow& r : rows) {
    out << r.feature << ',' << r.name << ',' << r.count << ',' << number_repr(r.percent) << '\n';
  }
  return out.str();
}

Preprocessing make_preprocessing(const PreparedData& data, const RunConfig& config) {
  Preprocessing prep;
  prep.label_column = config.label_column;
  prep.columns = data.columns;
  prep.imputation_values = data.imputation_values;
  prep.standardizer = data.standardizer;
  return prep;
}

}  // namespace

ImportanceStage cmd_importance(const RunConfig& config) {
  const PreparedData data = prepare_data(config);
  const ImportanceStage stage = compute_importance(data, config);

  std::filesystem::create_directories(config.out_dir);
  const std::filesystem::path out(config.out_dir);
  write_file((out / "importance.json").string(),
             importance_json_text(stage, config, data.train_core.feature_names));
  write_file((out / "importance.csv").string(),
             importance_csv_text(stage.profile, data.train_core.feature_names));
  write_file((out / "top_features.txt").string(),
             top_features_text(stage.profile, data.train_core.feature_names));
  return stage;
}

SaResult cmd_tune(const RunConfig& config) {
  const PreparedData data = prepare_data(config);
  const ImportanceStage stage = compute_importance(data, config);

  SaConfig sa = config.sa;
  sa.seed = derive_seed(config.model_seed, kSeedSa);
  const SaResult result = anneal(data.train_core, data.validation, stage.profile.probabilities, sa,
                                 config.threads);

  std::filesystem::create_directories(config.out_dir);
  const std::filesystem::path out(config.out_dir);
  write_file((out / "sa_trace.jsonl").string(), trace_jsonl_text(result));
  write_file((out / "tuned_params.json").string(), tuned_params_text(result));
  return result;
}

RunResult cmd_run(const RunConfig& config) {
  PreparedData data = prepare_data(config);

  RunResult result;
  result.importance = compute_importance(data, config);

  SaConfig sa = config.sa;
  sa.seed = derive_seed(config.model_seed, kSeedSa);
  result.tuning = anneal(data.train_core, data.validation, result.importance.profile.probabilities,
                         sa, config.threads);

  // final guided forest retrains on train + validation with the tuned params
  FigrfConfig figrf_config;
  figrf_config.n_estimators = result.tuning.best.n_estimators;
  figrf_config.max_depth = result.tuning.best.max_depth;
  figrf_config.probabilities = result.importance.profile.probabilities;
  figrf_config.seed = derive_seed(config.model_seed, kSeedFinal);
  result.final_model = fit_figrf(data.train_full, figrf_config, config.threads);
  result.usage = usage_report(result.final_model);

  ForestConfig baseline_config;
  baseline_config.n_estimators = config.baseline_estimators;
  baseline_config.max_depth = config.baseline_max_depth;
  baseline_config.seed = derive_seed(config.model_seed, kSeedBaseline);
  const ForestModel baseline = fit_forest(data.train_full, baseline_config, config.threads);

  // the single look at the test split
  const Dataset test = apply_standardizer(data.standardizer, data.test.unseal());
  result.baseline_report = evaluate(predict_rows(baseline, test.features), test.labels);
  result.figrf_report = evaluate(predict_rows(result.final_model, test.features), test.labels);

  std::filesystem::create_directories(config.out_dir);
  const std::filesystem::path out(config.out_dir);
  write_file((out / "importance.json").string(),
             importance_json_text(result.importance, config, data.train_full.feature_names));
  write_file((out / "importance.csv").string(),
             importance_csv_text(result.importance.profile, data.train_full.feature_names));
  write_file((out / "top_features.txt").string(),
             top_features_text(result.importance.profile, data.train_full.feature_names));
  write_file((out / "sa_trace.jsonl").string(), trace_jsonl_text(result.tuning));
  write_file((out / "tuned_params.json").string(), tuned_params_text(result.tuning));
  write_file((out / "baseline_report.json").string(), metric_report_to_json(result.baseline_report));
  write_file((out / "figrf_report.json").string(), metric_report_to_json(result.figrf_report));
  write_file((out / "comparison.csv").string(),
             comparison_csv_text(result.baseline_report, result.figrf_report));
  write_file((out / "usage.csv").string(), usage_csv_text(result.usage));
  save_model(to_model_file(result.final_model, make_preprocessing(data, config)),
             (out / "model.json").string());
  return result;
}

namespace {

// Reads a raw CSV and rebuilds the model's feature matrix: columns matched by
// name, missing cells imputed from the stored statistics, stored standardizer
// applied. The label column, if present, is ignored.
Matrix features_for_model(const ModelFile& model, const std::string& csv_path,
                          IntVector* labels_out = nullptr) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("predict: cannot open '" + csv_path + "'");
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("predict: '" + csv_path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
    if (!line.empty() && line.back() == ',') header.emplace_back();
  }

  const std::vector<std::string>& names = model.feature_names;
  std::vector<std::ptrdiff_t> source_of(names.size(), -1);
  std::ptrdiff_t label_source = -1;
  for (std::size_t h = 0; h < header.size(); ++h) {
    bool known = false;
    for (std::size_t f = 0; f < names.size(); ++f) {
      if (header[h] == names[f]) {
        source_of[f] = static_cast<std::ptrdiff_t>(h);
        known = true;
      }
    }
    if (header[h] == model.preprocessing.label_column) {
      label_source = static_cast<std::ptrdiff_t>(h);
      known = true;
    }
    if (!known) {
      throw std::runtime_error("predict: input has extra column '" + header[h] + "'");
    }
  }
  for (std::size_t f = 0; f < names.size(); ++f) {
    if (source_of[f] < 0) {
      throw std::runtime_error("predict: input is missing column '" + names[f] + "'");
    }
  }

  std::vector<std::vector<std::string>> raw;
  std::size_t row_no = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && in.peek() == EOF) break;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != header.size()) {
      throw std::runtime_error("predict: data row " + std::to_string(row_no + 1) + " has " +
                               std::to_string(cells.size()) + " cells, header has " +
                               std::to_string(header.size()));
    }
    raw.push_back(std::move(cells));
    ++row_no;
  }

  const Eigen::Index n = static_cast<Eigen::Index>(raw.size());
  const Eigen::Index d = static_cast<Eigen::Index>(names.size());
  Matrix features(n, d);

  for (Eigen::Index f = 0; f < d; ++f) {
    const ColumnSpec& spec = model.preprocessing.columns[static_cast<std::size_t>(f)];
    const std::size_t src = static_cast<std::size_t>(source_of[static_cast<std::size_t>(f)]);
    for (Eigen::Index i = 0; i < n; ++i) {
      const std::string& cell = raw[static_cast<std::size_t>(i)][src];
      const bool missing = cell.empty() || cell == "NA";
      if (spec.kind == ColumnKind::numeric) {
        if (missing) {
          features(i, f) = model.preprocessing.imputation_values(f);
        } else {
          try {
            std::size_t used = 0;
            features(i, f) = std::stod(cell, &used);
            if (used != cell.size()) throw std::invalid_argument("");
          } catch (const std::exception&) {
            throw std::runtime_error("predict: cannot parse '" + cell + "' in column '" +
                                     spec.name + "' at data row " + std::to_string(i + 1));
          }
        }
      } else {
        std::string key = cell;
        if (missing) {
          if (spec.missing_policy == MissingPolicy::placeholder_category) {
            key = "missing";
          } else {
            features(i, f) = model.preprocessing.imputation_values(f);
            continue;
          }
        }
        const auto it = std::find(spec.categories.begin(), spec.categories.end(), key);
        if (it == spec.categories.end()) {
          throw std::runtime_error("predict: unknown category '" + key + "' in column '" +
                                   spec.name + "' at data row " + std::to_string(i + 1));
        }
        features(i, f) = static_cast<double>(it - spec.categories.begin());
      }
    }
  }

  if (labels_out != nullptr) {
    if (label_source < 0) {
      throw std::runtime_error("evaluate: input is missing label column '" +
                               model.preprocessing.label_column + "'");
    }
    labels_out->resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const std::string& cell = raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(label_source)];
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size() || (v != 0.0 && v != 1.0)) throw std::invalid_argument("");
        (*labels_out)(i) = static_cast<int>(v);
      } catch (const std::exception&) {
        throw std::runtime_error("evaluate: label '" + cell + "' at data row " +
                                 std::to_string(i + 1) + " is not binary (0/1)");
      }
    }
  }

  // standardize with the stored training statistics
  const Standardizer& s = model.preprocessing.standardizer;
  for (Eigen::Index f = 0; f < d; ++f) {
    const bool numeric = s.kinds.empty() || s.kinds[static_cast<std::size_t>(f)] == ColumnKind::numeric;
    if (numeric && s.stddev(f) > 0.0) {
      features.col(f) = (features.col(f).array() - s.mean(f)) / s.stddev(f);
    }
  }
  return features;
}

}  // namespace

void cmd_predict(const std::string& model_path, const std::string& csv_path, std::ostream& out) {
  const ModelFile model = load_model(model_path);
  const Matrix features = features_for_model(model, csv_path);
  out << "prediction\n";
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    out << predict_model(model, features.row(i).transpose()) << '\n';
  }
}

MetricReport cmd_evaluate(const std::string& model_path, const std::string& csv_path) {
  const ModelFile model = load_model(model_path);
  IntVector labels;
  const Matrix features = features_for_model(model, csv_path, &labels);
  IntVector predictions(features.rows());
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    predictions(i) = predict_model(model, features.row(i).transpose());
  }
  return evaluate(predictions, labels);
}

}  // namespace figrf
