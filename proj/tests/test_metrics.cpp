#include <doctest.h>

#include <algorithm>
#include <vector>

#include "figrf/metrics.hpp"
#include "figrf/rng.hpp"

using figrf::IntVector;
using figrf::MetricReport;

namespace {

IntVector labels_of(const std::vector<int>& v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("perfect predictions score one everywhere") {
    const IntVector truth = labels_of({0, 1, 1, 0, 1});
    const MetricReport r = figrf::evaluate(truth, truth);
    CHECK(r.accuracy == 1.0);
    CHECK(r.precision == 1.0);
    CHECK(r.recall == 1.0);
    CHECK(r.f1 == 1.0);
    CHECK(r.fitness == 1.0);
    CHECK(r.matrix.fp == 0);
    CHECK(r.matrix.fn == 0);
  }

  TEST_CASE("all-negative prediction on half-positive truth") {
    const IntVector predictions = labels_of({0, 0, 0, 0, 0, 0, 0, 0});
    const IntVector truth = labels_of({1, 1, 1, 1, 0, 0, 0, 0});
    const MetricReport r = figrf::evaluate(predictions, truth);
    CHECK(r.accuracy == 0.5);
    CHECK(r.precision == 0.0);
    CHECK(r.recall == 0.0);
    CHECK(r.f1 == 0.0);
    CHECK(r.fitness == 0.125);
  }

  TEST_CASE("hand-computed confusion matrix") {
    std::vector<int> predictions, truth;
    const auto add = [&](int count, int pred, int actual) {
      for (int i = 0; i < count; ++i) {
        predictions.push_back(pred);
        truth.push_back(actual);
      }
    };
    add(27, 1, 1);   // tp
    add(12, 1, 0);   // fp
    add(200, 0, 0);  // tn
    add(22, 0, 1);   // fn

    const MetricReport r = figrf::evaluate(labels_of(predictions), labels_of(truth));
    CHECK(r.matrix.tp == 27);
    CHECK(r.matrix.fp == 12);
    CHECK(r.matrix.tn == 200);
    CHECK(r.matrix.fn == 22);
    CHECK(r.precision == 27.0 / 39.0);
    CHECK(r.recall == 27.0 / 49.0);
    CHECK(r.precision == doctest::Approx(0.6923).epsilon(1e-4));
    CHECK(r.recall == doctest::Approx(0.5510).epsilon(1e-4));
    CHECK(r.f1 == doctest::Approx(0.6136).epsilon(1e-4));
    CHECK(r.f1 == doctest::Approx(2.0 * r.precision * r.recall / (r.precision + r.recall))
                      .epsilon(1e-12));
    CHECK(r.accuracy == 227.0 / 261.0);
  }

  TEST_CASE("report is invariant under permuting the sample order") {
    figrf::Rng rng(3);
    std::vector<int> predictions(101), truth(101), order(101);
    for (int i = 0; i < 101; ++i) {
      predictions[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(2));
      truth[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(2));
      order[static_cast<std::size_t>(i)] = i;
    }
    const MetricReport base = figrf::evaluate(labels_of(predictions), labels_of(truth));

    rng.shuffle(order);
    std::vector<int> shuffled_pred(101), shuffled_truth(101);
    for (int i = 0; i < 101; ++i) {
      shuffled_pred[static_cast<std::size_t>(i)] = predictions[static_cast<std::size_t>(order[i])];
      shuffled_truth[static_cast<std::size_t>(i)] = truth[static_cast<std::size_t>(order[i])];
    }
    const MetricReport shuffled = figrf::evaluate(labels_of(shuffled_pred), labels_of(shuffled_truth));
    CHECK(base.accuracy == shuffled.accuracy);
    CHECK(base.precision == shuffled.precision);
    CHECK(base.recall == shuffled.recall);
    CHECK(base.f1 == shuffled.f1);
    CHECK(base.matrix.tp == shuffled.matrix.tp);
  }

  TEST_CASE("fitness reaches one exactly for diagonal confusion matrices") {
    const MetricReport diagonal = figrf::evaluate(labels_of({1, 0, 1}), labels_of({1, 0, 1}));
    CHECK(diagonal.fitness == 1.0);

    const MetricReport off = figrf::evaluate(labels_of({1, 1, 1}), labels_of({1, 0, 1}));
    CHECK(off.fitness < 1.0);
    CHECK(off.fitness >= 0.0);
  }

  TEST_CASE("empty or mismatched inputs are rejected") {
    CHECK_THROWS_AS(figrf::evaluate(IntVector(), IntVector()), std::invalid_argument);
    CHECK_THROWS_AS(figrf::evaluate(labels_of({1}), labels_of({1, 0})), std::invalid_argument);
  }
}
