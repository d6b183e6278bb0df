#include "itso/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "itso/rng.hpp"

namespace itso {
namespace {

void check_problem(const OptimizerConfig& config) {
  if (config.dimension == 0) {
    throw std::invalid_argument("dimension must be positive");
  }
  if (config.lower_bounds.size() != config.dimension ||
      config.upper_bounds.size() != config.dimension) {
    throw std::invalid_argument("bounds must match the dimension");
  }
  for (std::size_t j = 0; j < config.dimension; ++j) {
    if (!(config.lower_bounds[j] < config.upper_bounds[j])) {
      throw std::invalid_argument("lower bound must be below upper bound in every dimension");
    }
  }
  if (config.max_evaluations == 0) {
    throw std::invalid_argument("max_evaluations must be positive");
  }
}

class BaselineRun {
 public:
  BaselineRun(const OptimizerConfig& shared, const Objective& objective)
      : shared_(shared), objective_(objective) {
    trace_.reserve(shared.max_evaluations);
  }

  double evaluate(const std::vector<double>& point) {
    const double value = objective_(point);
    ++evaluations_;
    if (!std::isfinite(value)) {
      throw NonFiniteObjectiveError(point, evaluations_);
    }
    if (value <= best_value_) {
      best_value_ = value;
      best_point_ = point;
    }
    trace_.push_back({evaluations_, best_value_});
    return value;
  }

  bool budget_left() const { return evaluations_ < shared_.max_evaluations; }

  OptimizationResult finish() && {
    OptimizationResult result;
    result.best_point = std::move(best_point_);
    result.best_value = best_value_;
    result.trace = std::move(trace_);
    result.evaluations_used = evaluations_;
    return result;
  }

 private:
  const OptimizerConfig& shared_;
  const Objective& objective_;
  std::vector<TraceEntry> trace_;
  std::vector<double> best_point_;
  double best_value_ = std::numeric_limits<double>::infinity();
  std::size_t evaluations_ = 0;
};

}  // namespace

void BaselineConfig::validate() const {
  check_problem(shared);
  if (de_population != 0 && de_population < 4) {
    throw std::invalid_argument("de_population must be at least 4");
  }
  if (!(de_weight > 0.0 && de_weight <= 2.0)) {
    throw std::invalid_argument("de_weight must lie in (0, 2]");
  }
  if (!(de_crossover >= 0.0 && de_crossover <= 1.0)) {
    throw std::invalid_argument("de_crossover must lie in [0, 1]");
  }
}

std::size_t BaselineConfig::effective_population() const {
  if (de_population != 0) {
    return de_population;
  }
  return std::max<std::size_t>(4, 10 * shared.dimension);
}

OptimizationResult random_search(const BaselineConfig& config, const Objective& objective) {
  config.validate();
  if (config.kind != BaselineKind::kRandomSearch) {
    throw std::invalid_argument("config kind is not RANDOM_SEARCH");
  }
  const OptimizerConfig& shared = config.shared;
  std::mt19937_64 rng(shared.seed);
  BaselineRun run(shared, objective);
  std::vector<double> point(shared.dimension);
  while (run.budget_left()) {
    for (std::size_t j = 0; j < shared.dimension; ++j) {
      point[j] = uniform_in(rng, shared.lower_bounds[j], shared.upper_bounds[j]);
    }
    run.evaluate(point);
  }
  return std::move(run).finish();
}

OptimizationResult de_rand_1_bin(const BaselineConfig& config, const Objective& objective) {
  config.validate();
  if (config.kind != BaselineKind::kDifferentialEvolution) {
    throw std::invalid_argument("config kind is not DE_RAND_1_BIN");
  }
  const OptimizerConfig& shared = config.shared;
  const std::size_t population_size = config.effective_population();
  const std::size_t n = shared.dimension;

  std::mt19937_64 rng(shared.seed);
  BaselineRun run(shared, objective);

  std::vector<std::vector<double>> population;
  std::vector<double> fitness;
  population.reserve(population_size);
  fitness.reserve(population_size);

  std::vector<double> point(n);
  for (std::size_t i = 0; i < population_size && run.budget_left(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      point[j] = uniform_in(rng, shared.lower_bounds[j], shared.upper_bounds[j]);
    }
    fitness.push_back(run.evaluate(point));
    population.push_back(point);
  }

  std::vector<double> trial(n);
  while (run.budget_left()) {
    for (std::size_t target = 0; target < population_size; ++target) {
      if (!run.budget_left()) {
        break;
      }
      std::size_t a = uniform_index(rng, population_size);
      while (a == target) {
        a = uniform_index(rng, population_size);
      }
      std::size_t b = uniform_index(rng, population_size);
      while (b == target || b == a) {
        b = uniform_index(rng, population_size);
      }
      std::size_t c = uniform_index(rng, population_size);
      while (c == target || c == a || c == b) {
        c = uniform_index(rng, population_size);
      }

      const std::size_t forced = uniform_index(rng, n);
      for (std::size_t j = 0; j < n; ++j) {
        const double u = uniform01(rng);
        if (j == forced || u < config.de_crossover) {
          trial[j] = population[a][j] +
                     config.de_weight * (population[b][j] - population[c][j]);
        } else {
          trial[j] = population[target][j];
        }
        trial[j] = std::clamp(trial[j], shared.lower_bounds[j], shared.upper_bounds[j]);
      }

      const double trial_fitness = run.evaluate(trial);
      if (trial_fitness <= fitness[target]) {
        population[target] = trial;
        fitness[target] = trial_fitness;
      }
    }
  }
  return std::move(run).finish();
}

}  // namespace itso
