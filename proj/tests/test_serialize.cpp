#include <doctest.h>

#include <filesystem>

#include "figrf/dataset.hpp"
#include "figrf/figrf.hpp"
#include "figrf/forest.hpp"
#include "figrf/serialize.hpp"
#include "test_util.hpp"

using figrf::Dataset;
using figrf::ModelFile;
using figrf::Vector;

namespace {

Dataset random_dataset(int n, int d, std::uint64_t seed) {
  figrf::Rng rng(seed);
  Dataset data;
  data.features.resize(n, d);
  data.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) data.features(i, j) = rng.next_unit() * 10.0 - 5.0;
    data.labels(i) = data.features(i, 1) > 0.0 ? 1 : 0;
  }
  for (int j = 0; j < d; ++j) data.feature_names.push_back("f" + std::to_string(j));
  data.kinds.assign(static_cast<std::size_t>(d), figrf::ColumnKind::numeric);
  return data;
}

figrf::Preprocessing sample_preprocessing(const Dataset& data) {
  figrf::Preprocessing prep;
  prep.label_column = "label";
  for (const std::string& name : data.feature_names) {
    figrf::ColumnSpec spec;
    spec.name = name;
    prep.columns.push_back(spec);
  }
  prep.imputation_values = Vector::Zero(data.n_features());
  prep.standardizer = figrf::fit_standardizer(data);
  return prep;
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("weighted model round-trips with identical predictions") {
    const Dataset data = random_dataset(90, 4, 21);
    figrf::FigrfConfig config;
    config.n_estimators = 30;
    config.max_depth = 7;
    config.probabilities = (Vector(4) << 0.4, 0.3, 0.2, 0.1).finished();
    config.seed = 77;
    const figrf::FigrfModel model = figrf::fit_figrf(data, config);

    const auto dir = testutil::make_temp_dir("model");
    const std::string path = (dir / "model.json").string();
    const ModelFile original = figrf::to_model_file(model, sample_preprocessing(data));
    figrf::save_model(original, path);
    const ModelFile loaded = figrf::load_model(path);

    CHECK(loaded.sampling == "weighted");
    CHECK(loaded.n_estimators == 30);
    CHECK(loaded.max_depth == std::optional<int>(7));
    CHECK(loaded.usage_counts == model.usage_counts);
    CHECK(loaded.probabilities == model.config.probabilities);
    CHECK(loaded.feature_names == data.feature_names);

    figrf::Rng rng(1234);
    for (int trial = 0; trial < 1000; ++trial) {
      Vector sample(4);
      for (int j = 0; j < 4; ++j) sample(j) = rng.next_unit() * 12.0 - 6.0;
      CHECK(figrf::predict_model(loaded, sample) == figrf::predict_figrf(model, sample));
    }

    // byte-identical re-serialization
    CHECK(figrf::model_to_json(loaded) == figrf::model_to_json(original));
  }

  TEST_CASE("uniform forest carries the sampling tag and round-trips") {
    const Dataset data = random_dataset(60, 3, 22);
    figrf::ForestConfig config;
    config.n_estimators = 15;
    config.seed = 5;
    const figrf::ForestModel model = figrf::fit_forest(data, config);

    const ModelFile file = figrf::to_model_file(model, sample_preprocessing(data));
    CHECK(file.sampling == "uniform");
    const ModelFile loaded = figrf::model_from_json(figrf::model_to_json(file));
    CHECK(loaded.sampling == "uniform");
    CHECK(loaded.trees.size() == 15);

    figrf::Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
      Vector sample(3);
      for (int j = 0; j < 3; ++j) sample(j) = rng.next_unit() * 8.0 - 4.0;
      CHECK(figrf::predict_model(loaded, sample) == figrf::predict_forest(model, sample));
    }
  }

  TEST_CASE("preprocessing block survives the round trip") {
    const Dataset data = random_dataset(40, 2, 23);
    figrf::Preprocessing prep = sample_preprocessing(data);
    prep.columns[1].kind = figrf::ColumnKind::categorical;
    prep.columns[1].missing_policy = figrf::MissingPolicy::placeholder_category;
    prep.columns[1].categories = {"low", "high", "missing"};
    prep.imputation_values(0) = 1.5;

    figrf::FigrfConfig config;
    config.n_estimators = 3;
    config.probabilities = (Vector(2) << 0.5, 0.5).finished();
    const figrf::FigrfModel model = figrf::fit_figrf(data, config);

    const ModelFile loaded =
        figrf::model_from_json(figrf::model_to_json(figrf::to_model_file(model, prep)));
    CHECK(loaded.preprocessing.label_column == "label");
    CHECK(loaded.preprocessing.columns[1].kind == figrf::ColumnKind::categorical);
    CHECK(loaded.preprocessing.columns[1].categories ==
          std::vector<std::string>{"low", "high", "missing"});
    CHECK(loaded.preprocessing.imputation_values(0) == 1.5);
    CHECK(loaded.preprocessing.standardizer.mean == prep.standardizer.mean);
    CHECK(loaded.preprocessing.standardizer.stddev == prep.standardizer.stddev);
  }

  TEST_CASE("malformed model files are rejected") {
    testutil::expect_error_containing([] { figrf::load_model("/nonexistent/model.json"); },
                                      "cannot open");
    testutil::expect_error_containing(
        [] {
          figrf::model_from_json(R"({"sampling":"magic","n_estimators":1,"max_depth":null,)"
                                 R"("features_per_tree":1,"seed":0,"feature_names":[],)"
                                 R"("trees":[],"preprocessing":{}})");
        },
        "sampling");
  }
}
