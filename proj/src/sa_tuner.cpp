#include "figrf/sa_tuner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "figrf/figrf.hpp"
#include "figrf/metrics.hpp"

namespace figrf {

void HyperParams::validate() const {
  if (n_estimators < kMinEstimators || n_estimators > kMaxEstimators) {
    throw std::invalid_argument("HyperParams: n_estimators outside [50, 150]");
  }
  if (max_depth && (*max_depth < kMinDepth || *max_depth > kMaxDepth)) {
    throw std::invalid_argument("HyperParams: max_depth outside [5, 20]");
  }
}

std::pair<int, int> complexity(const HyperParams& params) {
  return {params.n_estimators, params.max_depth ? *params.max_depth : HyperParams::kMaxDepth + 1};
}

void SaConfig::validate() const {
  if (!(initial_temperature > 0.0)) {
    throw std::invalid_argument("SaConfig: initial_temperature must be positive");
  }
  if (!(cooling_rate > 0.0 && cooling_rate < 1.0)) {
    throw std::invalid_argument("SaConfig: cooling_rate must be strictly inside (0,1)");
  }
  if (max_iterations < 1) throw std::invalid_argument("SaConfig: max_iterations must be >= 1");
}

HyperParams random_initial(Rng& rng) {
  HyperParams params;
  params.n_estimators = rng.uniform_int(HyperParams::kMinEstimators, HyperParams::kMaxEstimators);
  // 17 equally likely options: depths 5..20 plus unbounded
  const int option = rng.uniform_int(HyperParams::kMinDepth, HyperParams::kMaxDepth + 1);
  if (option <= HyperParams::kMaxDepth) params.max_depth = option;
  return params;
}

HyperParams neighbor(const HyperParams& current, Rng& rng) {
  HyperParams next = current;
  if (rng.next_unit() < 0.5) {
    int step;
    if (rng.next_unit() < 0.5) {
      static constexpr int fine[] = {-2, -1, 1, 2};
      step = fine[rng.below(4)];
    } else {
      // +-3..10, sign and magnitude uniform
      const int magnitude = rng.uniform_int(3, 10);
      step = rng.next_unit() < 0.5 ? -magnitude : magnitude;
    }
    next.n_estimators = std::clamp(current.n_estimators + step, HyperParams::kMinEstimators,
                                   HyperParams::kMaxEstimators);
  } else {
    if (!current.max_depth) {
      if (rng.next_unit() < 0.5) next.max_depth = HyperParams::kMaxDepth;
    } else {
      static constexpr int steps[] = {-2, -1, 1, 2};
      const int depth = *current.max_depth + steps[rng.below(4)];
      if (depth > HyperParams::kMaxDepth) {
        next.max_depth.reset();
      } else {
        next.max_depth = std::max(depth, HyperParams::kMinDepth);
      }
    }
  }
  return next;
}

double acceptance_probability(double delta, double temperature) {
  return delta > 0.0 ? 1.0 : std::exp(delta / temperature);
}

SaResult anneal_with(const std::function<double(const HyperParams&)>& fitness,
                     const SaConfig& config) {
  config.validate();
  Rng rng(derive_seed(config.seed, 0x5aULL));

  HyperParams current = random_initial(rng);
  double current_fitness = fitness(current);

  SaResult result;
  result.initial = current;
  result.initial_fitness = current_fitness;
  result.best = current;
  result.best_fitness = current_fitness;
  result.trace.reserve(static_cast<std::size_t>(config.max_iterations));

  for (int k = 0; k < config.max_iterations; ++k) {
    SaRecord record;
    record.temperature = config.initial_temperature * std::pow(config.cooling_rate, k);
    record.candidate = neighbor(current, rng);
    record.fitness = fitness(record.candidate);
    record.delta = record.fitness - current_fitness;

    if (record.delta > 0.0) {
      record.accepted = true;
    } else {
      record.draw = rng.next_unit();
      record.has_draw = true;
      record.accepted = record.draw < acceptance_probability(record.delta, record.temperature);
    }

    if (record.accepted) {
      current = record.candidate;
      current_fitness = record.fitness;
      if (record.fitness > result.best_fitness ||
          (record.fitness == result.best_fitness &&
           complexity(record.candidate) < complexity(result.best))) {
        result.best = record.candidate;
        result.best_fitness = record.fitness;
        record.new_best = true;
      }
    }
    result.trace.push_back(record);
  }
  return result;
}

double fitness_of(const HyperParams& params, const Dataset& train, const Dataset& validation,
                  const Vector& probabilities, std::uint64_t base_seed, int n_threads) {
  params.validate();
  FigrfConfig config;
  config.n_estimators = params.n_estimators;
  config.max_depth = params.max_depth;
  config.features_per_tree = 0;  // floor(sqrt(d))
  config.probabilities = probabilities;
  config.seed = derive_seed(base_seed, static_cast<std::uint64_t>(params.n_estimators),
                            params.max_depth ? static_cast<std::uint64_t>(*params.max_depth)
                                             : 0xD0ULL);
  const FigrfModel model = fit_figrf(train, config, n_threads);
  const IntVector predictions = predict_rows(model, validation.features);
  return evaluate(predictions, validation.labels).fitness;
}

SaResult anneal(const Dataset& train, const Dataset& validation, const Vector& probabilities,
                const SaConfig& config, int n_threads) {
  const std::uint64_t fitness_seed = derive_seed(config.seed, 0xF17ULL);
  return anneal_with(
      [&](const HyperParams& params) {
        return fitness_of(params, train, validation, probabilities, fitness_seed, n_threads);
      },
      config);
}

}  // namespace figrf
