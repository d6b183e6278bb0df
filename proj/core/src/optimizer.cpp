#include "itso/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "itso/marginal.hpp"
#include "itso/rng.hpp"

namespace itso {
namespace {

constexpr double kEliteDuplicateTolerance = 1e-12;

std::string describe_point(std::span<const double> point) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i > 0) {
      out << ", ";
    }
    out << point[i];
  }
  out << ")";
  return out.str();
}

void validate_problem(const OptimizerConfig& config) {
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
    if (!std::isfinite(config.lower_bounds[j]) || !std::isfinite(config.upper_bounds[j])) {
      throw std::invalid_argument("bounds must be finite");
    }
  }
  if (config.max_evaluations == 0) {
    throw std::invalid_argument("max_evaluations must be positive");
  }
}

// Shared run state: history, incumbent, trace, budget accounting.
class RunState {
 public:
  RunState(const OptimizerConfig& config, const Objective& objective,
           const IterationCallback& on_evaluation)
      : config_(config),
        objective_(objective),
        on_evaluation_(on_evaluation),
        history_(config.dimension) {
    trace_.reserve(config.max_evaluations);
  }

  double evaluate(const std::vector<double>& point) {
    const double value = objective_(point);
    ++evaluations_;
    if (!std::isfinite(value)) {
      throw NonFiniteObjectiveError(point, evaluations_);
    }
    history_.append(point, value);
    if (value <= best_value_) {
      best_value_ = value;
      best_point_ = point;
    }
    trace_.push_back({evaluations_, best_value_});
    if (on_evaluation_) {
      on_evaluation_({evaluations_, history_, best_point_, best_value_});
    }
    return value;
  }

  void run_warmup(std::mt19937_64& rng, std::vector<double>& candidate) {
    const std::size_t warmup = std::min(config_.warmup, config_.max_evaluations);
    for (std::size_t i = 0; i < warmup; ++i) {
      for (std::size_t j = 0; j < config_.dimension; ++j) {
        candidate[j] = uniform_in(rng, config_.lower_bounds[j], config_.upper_bounds[j]);
      }
      evaluate(candidate);
    }
  }

  bool budget_left() const { return evaluations_ < config_.max_evaluations; }
  std::size_t evaluations() const { return evaluations_; }
  const EvaluationHistory& history() const { return history_; }
  const std::vector<double>& best_point() const { return best_point_; }
  double best_value() const { return best_value_; }

  OptimizationResult finish() && {
    OptimizationResult result;
    result.best_point = std::move(best_point_);
    result.best_value = best_value_;
    result.trace = std::move(trace_);
    result.evaluations_used = evaluations_;
    return result;
  }

 private:
  const OptimizerConfig& config_;
  const Objective& objective_;
  const IterationCallback& on_evaluation_;
  EvaluationHistory history_;
  std::vector<TraceEntry> trace_;
  std::vector<double> best_point_;
  double best_value_ = std::numeric_limits<double>::infinity();
  std::size_t evaluations_ = 0;
};

}  // namespace

NonFiniteObjectiveError::NonFiniteObjectiveError(std::vector<double> point,
                                                 std::size_t evaluation)
    : std::runtime_error("non-finite objective value at evaluation " +
                         std::to_string(evaluation) + ", point " + describe_point(point)),
      point_(std::move(point)),
      evaluation_(evaluation) {}

void OptimizerConfig::validate() const {
  validate_problem(*this);
  if (warmup < 2 || warmup > max_evaluations) {
    throw std::invalid_argument("warmup must lie in [2, max_evaluations]");
  }
  if (variant == Variant::kShort && alpha < 2) {
    throw std::invalid_argument("alpha must be at least 2");
  }
  if (variant == Variant::kFull) {
    if (kernel.variant == KernelVariant::kGaussian && kernel.gaussian_growth.has_value() &&
        !(*kernel.gaussian_growth > 0.0)) {
      throw std::invalid_argument("gaussian growth rate must be positive");
    }
    if (kernel.variant == KernelVariant::kNormalized && !(kernel.epsilon0 > 0.0)) {
      throw std::invalid_argument("epsilon0 must be positive");
    }
  }
}

std::size_t default_alpha(std::size_t max_evaluations) {
  return std::max<std::size_t>(2, max_evaluations / 100);
}

std::size_t default_warmup(std::size_t dimension, std::size_t max_evaluations) {
  const std::size_t preferred = std::max<std::size_t>(10, dimension);
  return std::clamp<std::size_t>(preferred, 2, max_evaluations);
}

OptimizationResult optimize_full(const OptimizerConfig& config, const Objective& objective,
                                 const IterationCallback& on_evaluation) {
  config.validate();
  if (config.variant != Variant::kFull) {
    throw std::invalid_argument("config variant is not FULL");
  }

  std::mt19937_64 rng(config.seed);
  RunState state(config, objective, on_evaluation);
  std::vector<double> candidate(config.dimension);
  state.run_warmup(rng, candidate);

  candidate = state.best_point();
  while (state.budget_left()) {
    const std::size_t j = uniform_index(rng, config.dimension);
    const double r = uniform01(rng);
    const std::pair<double, double> bounds{config.lower_bounds[j], config.upper_bounds[j]};
    double coordinate;
    try {
      const KernelSpec spec =
          resolve_growth(config.kernel, config.max_evaluations, state.history().values());
      const EmpiricalMarginal marginal =
          build_cdf(build_marginal(state.history(), j, spec, bounds));
      coordinate = inverse_cdf_sample(marginal, r);
    } catch (const std::invalid_argument&) {
      // Degenerate history (tied values or a single distinct coordinate):
      // sample this dimension uniformly instead.
      coordinate = bounds.first + r * (bounds.second - bounds.first);
    }
    candidate[j] = coordinate;
    state.evaluate(candidate);
    candidate[j] = state.best_point()[j];  // keep the working point at the incumbent
  }
  return std::move(state).finish();
}

OptimizationResult optimize_short(const OptimizerConfig& config, const Objective& objective,
                                  const IterationCallback& on_evaluation) {
  config.validate();
  if (config.variant != Variant::kShort) {
    throw std::invalid_argument("config variant is not SHORT");
  }

  std::mt19937_64 rng(config.seed);
  RunState state(config, objective, on_evaluation);

  // The alpha best distinct-valued entries so far, as a max-heap keyed on
  // (value, index): the root is the worst elite, replaced whenever a better
  // value arrives. Entries whose value duplicates an earlier one (absolute
  // tolerance 1e-12) never enter; near a stationary point the search emits
  // streams of such copies, and admitting them would collapse the sampling
  // windows onto a single point and freeze the run.
  struct Elite {
    double value;
    std::size_t index;
  };
  const auto heap_less = [](const Elite& a, const Elite& b) {
    return a.value < b.value || (a.value == b.value && a.index < b.index);
  };
  std::vector<Elite> elites;
  elites.reserve(config.alpha);
  std::set<double> seen_values;
  std::size_t next_index = 0;

  const auto is_duplicate = [&](double value) {
    const auto next = seen_values.lower_bound(value - kEliteDuplicateTolerance);
    return next != seen_values.end() && *next <= value + kEliteDuplicateTolerance;
  };

  const auto absorb = [&](double value) {
    const std::size_t index = next_index++;
    if (is_duplicate(value)) {
      return;
    }
    seen_values.insert(value);
    const Elite entry{value, index};
    if (elites.size() < config.alpha) {
      elites.push_back(entry);
      std::push_heap(elites.begin(), elites.end(), heap_less);
    } else if (value < elites.front().value) {
      std::pop_heap(elites.begin(), elites.end(), heap_less);
      elites.back() = entry;
      std::push_heap(elites.begin(), elites.end(), heap_less);
    }
  };

  std::vector<double> candidate(config.dimension);
  {
    const std::size_t warmup = std::min(config.warmup, config.max_evaluations);
    for (std::size_t i = 0; i < warmup; ++i) {
      for (std::size_t j = 0; j < config.dimension; ++j) {
        candidate[j] = uniform_in(rng, config.lower_bounds[j], config.upper_bounds[j]);
      }
      absorb(state.evaluate(candidate));
    }
  }

  candidate = state.best_point();
  bool done = !state.budget_left();
  while (!done) {
    for (std::size_t j = 0; j < config.dimension; ++j) {
      if (!state.budget_left()) {
        done = true;
        break;
      }
      double lo = std::numeric_limits<double>::infinity();
      double hi = -std::numeric_limits<double>::infinity();
      for (const Elite& elite : elites) {
        const double c = state.history().point(elite.index)[j];
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      const double u = uniform01(rng);
      candidate[j] = std::clamp(lo + u * (hi - lo), lo, hi);
      absorb(state.evaluate(candidate));
      candidate[j] = state.best_point()[j];
    }
  }
  return std::move(state).finish();
}

OptimizationResult optimize(const OptimizerConfig& config, const Objective& objective,
                            const IterationCallback& on_evaluation) {
  return config.variant == Variant::kFull ? optimize_full(config, objective, on_evaluation)
                                          : optimize_short(config, objective, on_evaluation);
}

}  // namespace itso
