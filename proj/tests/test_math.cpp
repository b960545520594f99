#include <doctest.h>

#include <cmath>

#include "figrf/math.hpp"
#include "figrf/rng.hpp"

using figrf::Vector;

TEST_SUITE("math") {
  TEST_CASE("gini impurity of known count vectors") {
    CHECK(figrf::gini_impurity(Eigen::Vector2d(5, 5)) == 0.5);
    CHECK(figrf::gini_impurity(Eigen::Vector2d(10, 0)) == 0.0);
    CHECK(figrf::gini_impurity(Eigen::Vector2d(3, 1)) == 0.375);
    CHECK(figrf::gini_impurity(Eigen::Vector3d(1, 1, 1)) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  }

  TEST_CASE("gini impurity rejects degenerate counts") {
    CHECK_THROWS_AS(figrf::gini_impurity(Eigen::Vector2d(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(figrf::gini_impurity(Eigen::Vector2d(-1, 2)), std::invalid_argument);
  }

  TEST_CASE("min-max normalization") {
    const Vector v = (Vector(3) << 1.0, 3.0, 2.0).finished();
    const Vector n = figrf::min_max_normalize(v);
    CHECK(n(0) == 0.0);
    CHECK(n(1) == 1.0);
    CHECK(n(2) == doctest::Approx(0.5).epsilon(1e-12));

    const Vector constant = Vector::Constant(4, 7.25);
    CHECK(figrf::min_max_normalize(constant).isZero(0.0));
  }

  TEST_CASE("softmax closed form at d=2") {
    const Vector scores = (Vector(2) << 1.0, 0.0).finished();
    const Vector p = figrf::softmax(scores, 1.0);
    const double e = std::exp(1.0);
    CHECK(p(0) == doctest::Approx(e / (e + 1.0)).epsilon(1e-12));
    CHECK(p(1) == doctest::Approx(1.0 / (e + 1.0)).epsilon(1e-12));
    CHECK(p(0) == doctest::Approx(0.7311).epsilon(1e-4));
    CHECK(p(1) == doctest::Approx(0.2689).epsilon(1e-4));
  }

  TEST_CASE("softmax of equal scores is uniform") {
    const Vector p = figrf::softmax(Vector::Constant(5, 3.0), 2.5);
    for (int i = 0; i < 5; ++i) CHECK(p(i) == doctest::Approx(0.2).epsilon(1e-12));
  }

  TEST_CASE("softmax mass on the top score is non-decreasing in alpha") {
    const Vector scores = (Vector(4) << 0.9, 0.4, 0.1, 0.0).finished();
    double previous = 0.0;
    for (double alpha : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
      const double top = figrf::softmax(scores, alpha)(0);
      CHECK(top >= previous);
      previous = top;
    }
  }

  TEST_CASE("softmax distribution invariants on random score vectors") {
    figrf::Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
      const int d = 2 + static_cast<int>(rng.below(7));
      Vector scores(d);
      for (int i = 0; i < d; ++i) scores(i) = rng.next_unit() * 4.0 - 2.0;
      const double alpha = 0.25 + rng.next_unit() * 8.0;

      const Vector p = figrf::softmax(scores, alpha);
      CHECK(std::abs(p.sum() - 1.0) <= 1e-9);
      CHECK(p.minCoeff() > 0.0);

      // rank preservation
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          if (scores(i) > scores(j)) CHECK(p(i) > p(j));
        }
      }

      // shift invariance
      const Vector shifted = figrf::softmax((scores.array() + 3.75).matrix(), alpha);
      for (int i = 0; i < d; ++i) CHECK(std::abs(p(i) - shifted(i)) <= 1e-12);
    }
  }

  TEST_CASE("descending ranking breaks ties toward the lower index") {
    const Vector scores = (Vector(4) << 1.0, 2.0, 2.0, 0.5).finished();
    const std::vector<int> ranking = figrf::descending_ranking(scores);
    CHECK(ranking == std::vector<int>{1, 2, 0, 3});
  }
}
