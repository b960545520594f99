#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "figrf/dataset.hpp"
#include "test_util.hpp"

using figrf::ColumnKind;
using figrf::ColumnSpec;
using figrf::Dataset;
using figrf::MissingPolicy;
using figrf::SplitSpec;

namespace {

const std::string kDataDir = FIGRF_DATA_DIR;

}  // namespace

TEST_SUITE("dataset") {
  TEST_CASE("bundled iris and wine load with the documented shapes") {
    const Dataset iris = figrf::load_csv(kDataDir + "/iris_binary.csv", "label");
    CHECK(iris.n_samples() == 150);
    CHECK(iris.n_features() == 4);
    CHECK(iris.feature_names[2] == "petal_length_cm");
    CHECK(iris.labels.sum() == 50);  // setosa grouped against the rest

    const Dataset wine = figrf::load_csv(kDataDir + "/wine_binary.csv", "label");
    CHECK(wine.n_samples() == 178);
    CHECK(wine.n_features() == 13);
    CHECK(wine.labels.sum() == 59);  // one cultivar against the others
  }

  TEST_CASE("load_csv is deterministic") {
    const Dataset a = figrf::load_csv(kDataDir + "/iris_binary.csv", "label");
    const Dataset b = figrf::load_csv(kDataDir + "/iris_binary.csv", "label");
    CHECK(a.features == b.features);
    CHECK(a.labels == b.labels);
    CHECK(a.feature_names == b.feature_names);
  }

  TEST_CASE("missing numeric cell is imputed with the column median") {
    const auto dir = testutil::make_temp_dir("csv");
    const auto path =
        testutil::write_text_file(dir, "missing.csv", "a,b,label\n1,4,0\nNA,5,1\n3,6,0\n");
    const Dataset data = figrf::load_csv(path.string(), "label");
    CHECK(data.features(1, 0) == 2.0);  // median of {1, 3}
    CHECK(data.features(1, 1) == 5.0);
  }

  TEST_CASE("categorical columns encode in first-occurrence order") {
    const auto dir = testutil::make_temp_dir("csv");
    const auto path = testutil::write_text_file(
        dir, "cat.csv", "color,label\nred,0\nblue,1\nred,0\n,1\ngreen,0\n");
    ColumnSpec spec;
    spec.name = "color";
    spec.kind = ColumnKind::categorical;
    spec.missing_policy = MissingPolicy::placeholder_category;
    const figrf::LoadedCsv loaded = figrf::load_csv_full(path.string(), "label", {spec});
    CHECK(loaded.columns[0].categories ==
          std::vector<std::string>{"red", "blue", "missing", "green"});
    CHECK(loaded.data.features(0, 0) == 0.0);
    CHECK(loaded.data.features(1, 0) == 1.0);
    CHECK(loaded.data.features(3, 0) == 2.0);  // the placeholder gets its own code
    CHECK(loaded.data.features(4, 0) == 3.0);
  }

  TEST_CASE("load errors are distinct and described") {
    const auto dir = testutil::make_temp_dir("csv");
    testutil::expect_error_containing(
        [&] { figrf::load_csv((dir / "absent.csv").string(), "label"); }, "cannot open");

    const auto bad_label =
        testutil::write_text_file(dir, "bad_label.csv", "a,label\n1,0\n2,2\n");
    testutil::expect_error_containing([&] { figrf::load_csv(bad_label.string(), "label"); },
                                      "not binary");

    const auto no_label = testutil::write_text_file(dir, "no_label.csv", "a,b\n1,2\n");
    testutil::expect_error_containing([&] { figrf::load_csv(no_label.string(), "y"); },
                                      "label column");

    const auto ragged =
        testutil::write_text_file(dir, "ragged.csv", "a,b,label\n1,2,0\n1,0\n3,4,1\n");
    testutil::expect_error_containing([&] { figrf::load_csv(ragged.string(), "label"); },
                                      "cells");
  }

  TEST_CASE("80:20 split of the iris data") {
    const Dataset iris = figrf::load_csv(kDataDir + "/iris_binary.csv", "label");
    SplitSpec spec;
    spec.test_fraction = 0.2;
    spec.seed = 7;
    const figrf::SplitResult result = figrf::split(iris, spec);
    CHECK(result.train.n_samples() == 120);
    CHECK(result.test.n_samples() == 30);
    CHECK(result.validation.n_samples() == 0);
    // stratified: 20% of each class
    CHECK(result.test.labels.sum() == 10);
    CHECK(result.train.labels.sum() == 40);

    const figrf::SplitResult again = figrf::split(iris, spec);
    CHECK(again.test.features == result.test.features);

    spec.stratified = false;
    const figrf::SplitResult plain_a = figrf::split(iris, spec);
    const figrf::SplitResult plain_b = figrf::split(iris, spec);
    CHECK(plain_a.test.features == plain_b.test.features);
    CHECK(plain_a.train.n_samples() + plain_a.test.n_samples() == 150);
  }

  TEST_CASE("degenerate fractions raise split errors") {
    const Dataset iris = figrf::load_csv(kDataDir + "/iris_binary.csv", "label");
    SplitSpec spec;
    spec.test_fraction = 1e-6;
    testutil::expect_error_containing([&] { figrf::split(iris, spec); }, "empty test");

    SplitSpec invalid;
    invalid.test_fraction = 0.5;
    invalid.validation_fraction = 0.5;
    CHECK_THROWS_AS(figrf::split(iris, invalid), std::invalid_argument);
  }

  TEST_CASE("stratified 8/2 splits of a balanced 10-sample set always balance the test") {
    Dataset data;
    data.features = figrf::Matrix::Random(10, 2);
    data.labels.resize(10);
    for (int i = 0; i < 10; ++i) data.labels(i) = i % 2;
    data.feature_names = {"x0", "x1"};
    data.kinds = {ColumnKind::numeric, ColumnKind::numeric};

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      SplitSpec spec;
      spec.test_fraction = 0.2;
      spec.seed = seed;
      const figrf::SplitResult result = figrf::split(data, spec);
      REQUIRE(result.test.n_samples() == 2);
      CHECK(result.test.labels.sum() == 1);  // exactly one of each class
    }
  }

  TEST_CASE("split partitions form a permutation of the row indices") {
    const Dataset iris = figrf::load_csv(kDataDir + "/iris_binary.csv", "label");
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
      SplitSpec spec;
      spec.test_fraction = 0.2;
      spec.validation_fraction = 0.25;
      spec.seed = seed;
      const figrf::SplitResult result = figrf::split(iris, spec);

      // rows are identifiable by their feature values in this file
      auto key = [](const Dataset& d, Eigen::Index i) {
        return d.features(i, 0) * 1e9 + d.features(i, 1) * 1e6 + d.features(i, 2) * 1e3 +
               d.features(i, 3);
      };
      std::vector<double> keys;
      for (const Dataset* part : {&result.train, &result.validation, &result.test}) {
        for (Eigen::Index i = 0; i < part->n_samples(); ++i) keys.push_back(key(*part, i));
      }
      REQUIRE(keys.size() == 150);
      std::vector<double> original;
      for (Eigen::Index i = 0; i < iris.n_samples(); ++i) original.push_back(key(iris, i));
      std::sort(keys.begin(), keys.end());
      std::sort(original.begin(), original.end());
      CHECK(keys == original);
    }
  }

  TEST_CASE("standardizer uses population statistics from train only") {
    Dataset train;
    train.features = (figrf::Matrix(3, 2) << 1.0, 5.0, 2.0, 5.0, 3.0, 5.0).finished();
    train.labels = (figrf::IntVector(3) << 0, 1, 0).finished();
    train.feature_names = {"x", "constant"};
    train.kinds = {ColumnKind::numeric, ColumnKind::numeric};

    const figrf::Standardizer s = figrf::fit_standardizer(train);
    CHECK(s.mean(0) == 2.0);
    CHECK(s.stddev(0) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));

    const Dataset scaled = figrf::apply_standardizer(s, train);
    CHECK(scaled.features(0, 0) == doctest::Approx(-std::sqrt(1.5)).epsilon(1e-9));
    CHECK(scaled.features(1, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(scaled.features(2, 0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-9));
    CHECK(scaled.features(0, 0) == doctest::Approx(-1.2247).epsilon(1e-4));

    // zero-variance column passes through unchanged
    CHECK(scaled.features.col(1) == train.features.col(1));

    // applying to other data keeps the train statistics
    Dataset other = train;
    other.features = (figrf::Matrix(1, 2) << 5.0, 9.0).finished();
    other.labels = (figrf::IntVector(1) << 1).finished();
    const Dataset transformed = figrf::apply_standardizer(s, other);
    CHECK(transformed.features(0, 0) ==
          doctest::Approx((5.0 - 2.0) / std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    CHECK(transformed.features(0, 1) == 9.0);
  }

  TEST_CASE("standardized train columns have zero mean and unit deviation") {
    const Dataset iris = figrf::load_csv(kDataDir + "/iris_binary.csv", "label");
    const figrf::Standardizer s = figrf::fit_standardizer(iris);
    const Dataset scaled = figrf::apply_standardizer(s, iris);
    const double n = static_cast<double>(scaled.n_samples());
    for (Eigen::Index j = 0; j < scaled.n_features(); ++j) {
      const double mean = scaled.features.col(j).mean();
      const double stddev = std::sqrt((scaled.features.col(j).array() - mean).square().sum() / n);
      CHECK(std::abs(mean) <= 1e-9);
      CHECK(std::abs(stddev - 1.0) <= 1e-9);
    }
  }

  TEST_CASE("dataset invariants are enforced") {
    Dataset bad;
    bad.features = figrf::Matrix::Random(3, 2);
    bad.labels = (figrf::IntVector(3) << 0, 1, 2).finished();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad.labels = (figrf::IntVector(3) << 0, 0, 0).finished();
    testutil::expect_error_containing([&] { bad.validate(); }, "both classes");
  }
}
