#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "itso/history.hpp"
#include "itso/kernel.hpp"

namespace itso {

using Objective = std::function<double(std::span<const double>)>;

enum class Variant { kFull, kShort };

/// Search configuration over a box. A run performs `warmup` uniform-random
/// evaluations before adaptive sampling starts and spends exactly
/// `max_evaluations` objective calls in total.
///
/// A single run is strictly sequential; distinct runs are independent and may
/// execute concurrently as long as the objective is reentrant. RNG state is
/// per run, never shared.
struct OptimizerConfig {
  std::size_t dimension = 0;
  std::vector<double> lower_bounds;
  std::vector<double> upper_bounds;
  std::size_t max_evaluations = 0;
  std::uint64_t seed = 0;
  Variant variant = Variant::kShort;
  std::size_t alpha = 2;   // short variant: number of elite entries retained
  KernelSpec kernel{};     // full variant
  std::size_t warmup = 2;  // initial uniform-random evaluations, >= 2

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

std::size_t default_alpha(std::size_t max_evaluations);
std::size_t default_warmup(std::size_t dimension, std::size_t max_evaluations);

struct TraceEntry {
  std::size_t evaluation;  // 1-based objective call index
  double best_value;       // best-so-far after this evaluation
};

struct OptimizationResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  std::vector<TraceEntry> trace;  // one entry per evaluation, nonincreasing
  std::size_t evaluations_used = 0;
};

/// The objective returned a non-finite value; carries the offending point.
class NonFiniteObjectiveError : public std::runtime_error {
 public:
  NonFiniteObjectiveError(std::vector<double> point, std::size_t evaluation);
  const std::vector<double>& point() const { return point_; }
  std::size_t evaluation() const { return evaluation_; }

 private:
  std::vector<double> point_;
  std::size_t evaluation_;
};

/// Read-only view passed to the per-evaluation callback. The referenced
/// history lives only for the duration of the call.
struct IterationView {
  std::size_t evaluation;
  const EvaluationHistory& history;
  std::span<const double> best_point;
  double best_value;
};
using IterationCallback = std::function<void(const IterationView&)>;

/// Full variant: after warmup, each evaluation picks a random dimension j,
/// rebuilds the dimension-j marginal from the whole history, and sets the
/// incumbent's j-th coordinate to an inverse-transform sample of it. When
/// the marginal cannot be built (all objective values tied, or a single
/// distinct coordinate), the coordinate falls back to a uniform draw in its
/// bounds for that evaluation.
OptimizationResult optimize_full(const OptimizerConfig& config, const Objective& objective,
                                 const IterationCallback& on_evaluation = {});

/// Short variant: after warmup, sweeps dimensions round-robin; each
/// evaluation resamples one coordinate uniformly within the coordinate range
/// spanned by the `alpha` best history entries (the whole history while it
/// is still smaller than alpha).
OptimizationResult optimize_short(const OptimizerConfig& config, const Objective& objective,
                                  const IterationCallback& on_evaluation = {});

/// Dispatches on config.variant.
OptimizationResult optimize(const OptimizerConfig& config, const Objective& objective,
                            const IterationCallback& on_evaluation = {});

}  // namespace itso
