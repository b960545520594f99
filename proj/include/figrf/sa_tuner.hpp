#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "figrf/dataset.hpp"
#include "figrf/math.hpp"
#include "figrf/rng.hpp"

namespace figrf {

// Search box: n_estimators in [50, 150], max_depth in {5..20} or absent
// (unbounded depth).
struct HyperParams {
  static constexpr int kMinEstimators = 50;
  static constexpr int kMaxEstimators = 150;
  static constexpr int kMinDepth = 5;
  static constexpr int kMaxDepth = 20;

  int n_estimators = kMinEstimators;
  std::optional<int> max_depth;

  void validate() const;
  bool operator==(const HyperParams&) const = default;
};

// Lexicographic (n_estimators, depth) with unbounded depth ordered above 20;
// a smaller key is the simpler configuration.
std::pair<int, int> complexity(const HyperParams& params);

struct SaConfig {
  double initial_temperature = 1.0;
  double cooling_rate = 0.95;
  int max_iterations = 30;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SaRecord {
  HyperParams candidate;
  double fitness = 0.0;
  double delta = 0.0;       // candidate fitness minus current fitness
  double temperature = 0.0;
  bool accepted = false;
  bool new_best = false;
  bool has_draw = false;    // a uniform draw happens only for delta <= 0
  double draw = 0.0;
};

struct SaResult {
  HyperParams best;
  double best_fitness = 0.0;
  HyperParams initial;
  double initial_fitness = 0.0;
  std::vector<SaRecord> trace;
};

HyperParams random_initial(Rng& rng);

// Perturbs one parameter chosen 50/50. Estimator steps mix fine (+-1..2) and
// coarse (+-3..10) moves; depth steps are +-1..2, stepping above 20 removes
// the bound.
HyperParams neighbor(const HyperParams& current, Rng& rng);

// 1 when delta > 0, exp(delta / temperature) otherwise.
double acceptance_probability(double delta, double temperature);

// Annealing loop over an arbitrary fitness function.
SaResult anneal_with(const std::function<double(const HyperParams&)>& fitness,
                     const SaConfig& config);

// Trains a guided forest with `params` and returns its composite fitness on
// the validation split. The model seed derives from (base_seed, params), so
// re-evaluating identical params gives identical fitness.
double fitness_of(const HyperParams& params, const Dataset& train, const Dataset& validation,
                  const Vector& probabilities, std::uint64_t base_seed, int n_threads = 1);

SaResult anneal(const Dataset& train, const Dataset& validation, const Vector& probabilities,
                const SaConfig& config, int n_threads = 1);

}  // namespace figrf
