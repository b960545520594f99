#include "figrf/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace figrf {

using nlohmann::json;

namespace {

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Vector vector_from_json(const json& arr) {
  Vector v(static_cast<Eigen::Index>(arr.size()));
  Eigen::Index i = 0;
  for (const json& x : arr) v(i++) = x.get<double>();
  return v;
}

json tree_to_json(const ForestTree& member) {
  json nodes = json::array();
  for (const TreeNode& n : member.tree.nodes) {
    nodes.push_back(json{{"feature", n.feature},
                         {"threshold", n.threshold},
                         {"left", n.left},
                         {"right", n.right},
                         {"decrease", n.impurity_decrease},
                         {"fraction", n.sample_fraction},
                         {"label", n.label},
                         {"counts", {n.class_counts[0], n.class_counts[1]}}});
  }
  return json{{"features", member.features}, {"n_train", member.tree.n_train}, {"nodes", nodes}};
}

ForestTree tree_from_json(const json& j) {
  ForestTree member;
  member.features = j.at("features").get<std::vector<int>>();
  member.tree.n_train = j.at("n_train").get<std::int64_t>();
  for (const json& jn : j.at("nodes")) {
    TreeNode n;
    n.feature = jn.at("feature").get<int>();
    n.threshold = jn.at("threshold").get<double>();
    n.left = jn.at("left").get<int>();
    n.right = jn.at("right").get<int>();
    n.impurity_decrease = jn.at("decrease").get<double>();
    n.sample_fraction = jn.at("fraction").get<double>();
    n.label = jn.at("label").get<int>();
    const auto counts = jn.at("counts").get<std::vector<std::int64_t>>();
    n.class_counts = {counts.at(0), counts.at(1)};
    member.tree.nodes.push_back(n);
  }
  for (const TreeNode& n : member.tree.nodes) {
    if (!n.is_leaf()) member.tree.feature_indices_used.push_back(n.feature);
  }
  std::sort(member.tree.feature_indices_used.begin(), member.tree.feature_indices_used.end());
  member.tree.feature_indices_used.erase(
      std::unique(member.tree.feature_indices_used.begin(), member.tree.feature_indices_used.end()),
      member.tree.feature_indices_used.end());
  return member;
}

std::string kind_name(ColumnKind kind) {
  return kind == ColumnKind::numeric ? "numeric" : "categorical";
}

std::string policy_name(MissingPolicy policy) {
  return policy == MissingPolicy::median ? "median" : "placeholder_category";
}

json preprocessing_to_json(const Preprocessing& p) {
  json columns = json::array();
  for (const ColumnSpec& c : p.columns) {
    columns.push_back(json{{"name", c.name},
                           {"kind", kind_name(c.kind)},
                           {"missing_policy", policy_name(c.missing_policy)},
                           {"categories", c.categories}});
  }
  json kinds = json::array();
  for (ColumnKind k : p.standardizer.kinds) kinds.push_back(kind_name(k));
  return json{{"label_column", p.label_column},
              {"columns", columns},
              {"imputation_values", vector_to_json(p.imputation_values)},
              {"standardizer", json{{"mean", vector_to_json(p.standardizer.mean)},
                                    {"stddev", vector_to_json(p.standardizer.stddev)},
                                    {"kinds", kinds}}}};
}

Preprocessing preprocessing_from_json(const json& j) {
  Preprocessing p;
  p.label_column = j.at("label_column").get<std::string>();
  for (const json& jc : j.at("columns")) {
    ColumnSpec c;
    c.name = jc.at("name").get<std::string>();
    c.kind = jc.at("kind").get<std::string>() == "numeric" ? ColumnKind::numeric
                                                           : ColumnKind::categorical;
    c.missing_policy = jc.at("missing_policy").get<std::string>() == "median"
                           ? MissingPolicy::median
                           : MissingPolicy::placeholder_category;
    c.categories = jc.at("categories").get<std::vector<std::string>>();
    p.columns.push_back(std::move(c));
  }
  p.imputation_values = vector_from_json(j.at("imputation_values"));
  const json& js = j.at("standardizer");
  p.standardizer.mean = vector_from_json(js.at("mean"));
  p.standardizer.stddev = vector_from_json(js.at("stddev"));
  for (const json& jk : js.at("kinds")) {
    p.standardizer.kinds.push_back(jk.get<std::string>() == "numeric" ? ColumnKind::numeric
                                                                      : ColumnKind::categorical);
  }
  return p;
}

json model_file_to_json_value(const ModelFile& file) {
  json trees = json::array();
  for (const ForestTree& member : file.trees) trees.push_back(tree_to_json(member));

  json j{{"sampling", file.sampling},
         {"n_estimators", file.n_estimators},
         {"features_per_tree", file.features_per_tree},
         {"seed", file.seed},
         {"feature_names", file.feature_names},
         {"trees", trees},
         {"preprocessing", preprocessing_to_json(file.preprocessing)}};
  j["max_depth"] = file.max_depth ? json(*file.max_depth) : json(nullptr);
  if (file.sampling == "weighted") {
    j["probabilities"] = vector_to_json(file.probabilities);
    j["usage_counts"] = file.usage_counts;
  }
  return j;
}

}  // namespace

ModelFile to_model_file(const FigrfModel& model, const Preprocessing& preprocessing) {
  ModelFile file;
  file.sampling = "weighted";
  file.n_estimators = model.config.n_estimators;
  file.max_depth = model.config.max_depth;
  file.features_per_tree = model.config.features_per_tree;
  file.seed = model.config.seed;
  file.probabilities = model.config.probabilities;
  file.usage_counts = model.usage_counts;
  file.trees = model.trees;
  file.feature_names = model.feature_names;
  file.preprocessing = preprocessing;
  return file;
}

ModelFile to_model_file(const ForestModel& model, const Preprocessing& preprocessing) {
  ModelFile file;
  file.sampling = "uniform";
  file.n_estimators = model.config.n_estimators;
  file.max_depth = model.config.max_depth;
  file.features_per_tree = model.config.features_per_tree;
  file.seed = model.config.seed;
  file.trees = model.trees;
  file.feature_names = model.feature_names;
  file.preprocessing = preprocessing;
  return file;
}

std::string model_to_json(const ModelFile& file) {
  return model_file_to_json_value(file).dump(2) + "\n";
}

ModelFile model_from_json(const std::string& text) {
  const json j = json::parse(text);
  ModelFile file;
  file.sampling = j.at("sampling").get<std::string>();
  if (file.sampling != "uniform" && file.sampling != "weighted") {
    throw std::runtime_error("model_from_json: unknown sampling tag '" + file.sampling + "'");
  }
  file.n_estimators = j.at("n_estimators").get<int>();
  if (!j.at("max_depth").is_null()) file.max_depth = j.at("max_depth").get<int>();
  file.features_per_tree = j.at("features_per_tree").get<int>();
  file.seed = j.at("seed").get<std::uint64_t>();
  file.feature_names = j.at("feature_names").get<std::vector<std::string>>();
  if (file.sampling == "weighted") {
    file.probabilities = vector_from_json(j.at("probabilities"));
    file.usage_counts = j.at("usage_counts").get<std::vector<std::int64_t>>();
  }
  for (const json& jt : j.at("trees")) file.trees.push_back(tree_from_json(jt));
  file.preprocessing = preprocessing_from_json(j.at("preprocessing"));
  return file;
}

void save_model(const ModelFile& file, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_model: cannot write '" + path + "'");
  out << model_to_json(file);
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_model: cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return model_from_json(text);
}

int predict_model(const ModelFile& file, const Eigen::Ref<const Vector>& sample) {
  if (file.trees.empty()) throw std::invalid_argument("predict_model: model has no trees");
  return majority_vote(file.trees, sample);
}

}  // namespace figrf
