#pragma once

#include <cstddef>

#include "itso/optimizer.hpp"

namespace itso {

enum class BaselineKind { kRandomSearch, kDifferentialEvolution };

/// Control optimizers run under the same budget/seed/trace contract as the
/// main variants. Only the problem fields of `shared` are used (dimension,
/// bounds, max_evaluations, seed).
struct BaselineConfig {
  BaselineKind kind = BaselineKind::kRandomSearch;
  std::size_t de_population = 0;  // 0 = 10 * dimension; must be >= 4
  double de_weight = 0.8;         // differential weight F, in (0, 2]
  double de_crossover = 0.9;      // crossover rate CR, in [0, 1]
  OptimizerConfig shared;

  void validate() const;
  std::size_t effective_population() const;
};

/// Evaluates max_evaluations i.i.d. uniform in-box points.
OptimizationResult random_search(const BaselineConfig& config, const Objective& objective);

/// Classic DE/rand/1/bin: uniform initial population, mutant a + F*(b - c)
/// with distinct non-target members, binomial crossover with one forced
/// coordinate, greedy selection, box clipping. Stops exactly at the budget,
/// mid-generation if needed.
OptimizationResult de_rand_1_bin(const BaselineConfig& config, const Objective& objective);

}  // namespace itso
