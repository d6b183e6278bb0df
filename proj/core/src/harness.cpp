#include "itso/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "itso/baselines.hpp"
#include "itso/format.hpp"

namespace itso {
namespace {

constexpr std::string_view kGridOptimizerNames[] = {"itso-short", "itso-full", "random", "de"};

OptimizerConfig problem_config(const ObjectiveSpec& objective, std::size_t max_evaluations,
                               std::uint64_t seed) {
  OptimizerConfig config;
  config.dimension = objective.dimension();
  config.lower_bounds.assign(objective.lower_bounds().begin(), objective.lower_bounds().end());
  config.upper_bounds.assign(objective.upper_bounds().begin(), objective.upper_bounds().end());
  config.max_evaluations = max_evaluations;
  config.seed = seed;
  config.warmup = default_warmup(config.dimension, max_evaluations);
  return config;
}

Objective wrap(const ObjectiveSpec& objective) {
  return [&objective](std::span<const double> x) { return objective.evaluate(x); };
}

std::vector<double> normalize_with_anchors(std::span<const double> trace, double lo, double hi) {
  std::vector<double> normalized(trace.size(), 0.0);
  const double range = hi - lo;
  if (range > 0.0) {
    for (std::size_t i = 0; i < trace.size(); ++i) {
      normalized[i] = (trace[i] - lo) / range;
    }
  }
  return normalized;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  return out;
}

void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<TraceEntry>& trace) {
  std::ofstream out = open_for_write(path);
  out << "evaluation,best_f\n";
  for (const TraceEntry& entry : trace) {
    out << entry.evaluation << "," << format_double(entry.best_value) << "\n";
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string joined;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      joined += ",";
    }
    joined += items[i];
  }
  return joined;
}

}  // namespace

std::span<const std::string_view> grid_optimizer_names() { return kGridOptimizerNames; }

GridOptimizer make_grid_optimizer(std::string_view name) {
  GridOptimizer optimizer;
  optimizer.name = std::string(name);
  if (name == "itso-short") {
    optimizer.run = [](const ObjectiveSpec& objective, std::size_t max_evaluations,
                       std::uint64_t seed) {
      OptimizerConfig config = problem_config(objective, max_evaluations, seed);
      config.variant = Variant::kShort;
      config.alpha = default_alpha(max_evaluations);
      return optimize_short(config, wrap(objective));
    };
  } else if (name == "itso-full") {
    optimizer.run = [](const ObjectiveSpec& objective, std::size_t max_evaluations,
                       std::uint64_t seed) {
      OptimizerConfig config = problem_config(objective, max_evaluations, seed);
      config.variant = Variant::kFull;
      config.kernel = KernelSpec::normalized();
      return optimize_full(config, wrap(objective));
    };
  } else if (name == "random") {
    optimizer.run = [](const ObjectiveSpec& objective, std::size_t max_evaluations,
                       std::uint64_t seed) {
      BaselineConfig config;
      config.kind = BaselineKind::kRandomSearch;
      config.shared = problem_config(objective, max_evaluations, seed);
      return random_search(config, wrap(objective));
    };
  } else if (name == "de") {
    optimizer.run = [](const ObjectiveSpec& objective, std::size_t max_evaluations,
                       std::uint64_t seed) {
      BaselineConfig config;
      config.kind = BaselineKind::kDifferentialEvolution;
      config.shared = problem_config(objective, max_evaluations, seed);
      return de_rand_1_bin(config, wrap(objective));
    };
  } else {
    std::ostringstream msg;
    msg << "unknown optimizer \"" << name << "\"; valid names:";
    for (std::string_view known : kGridOptimizerNames) {
      msg << " " << known;
    }
    throw std::invalid_argument(msg.str());
  }
  return optimizer;
}

std::vector<double> average_runs(const std::vector<std::vector<double>>& traces) {
  if (traces.empty()) {
    throw std::invalid_argument("no traces to average");
  }
  const std::size_t length = traces.front().size();
  for (const auto& trace : traces) {
    if (trace.size() != length) {
      throw std::invalid_argument("ragged traces");
    }
  }
  std::vector<double> mean(length, 0.0);
  for (const auto& trace : traces) {
    for (std::size_t i = 0; i < length; ++i) {
      mean[i] += trace[i];
    }
  }
  const double count = static_cast<double>(traces.size());
  for (double& v : mean) {
    v /= count;
  }
  return mean;
}

std::vector<double> normalize_history(std::span<const double> mean_trace) {
  if (mean_trace.empty()) {
    throw std::invalid_argument("empty trace");
  }
  const auto [lo, hi] = std::minmax_element(mean_trace.begin(), mean_trace.end());
  return normalize_with_anchors(mean_trace, *lo, *hi);
}

std::vector<double> aggregate_h(const std::vector<std::vector<double>>& normalized) {
  if (normalized.empty()) {
    throw std::invalid_argument("no normalized traces");
  }
  const std::size_t length = normalized.front().size();
  for (const auto& trace : normalized) {
    if (trace.size() != length) {
      throw std::invalid_argument("ragged normalized traces");
    }
  }
  std::vector<double> h(length, 0.0);
  const double count = static_cast<double>(normalized.size());
  for (std::size_t i = 0; i < length; ++i) {
    double sum = 0.0;
    for (const auto& trace : normalized) {
      sum += trace[i];
    }
    h[i] = std::pow(sum / count, 0.1);
  }
  return h;
}

GridResult run_grid(const RunGrid& grid, const std::filesystem::path& out_dir) {
  if (grid.optimizers.empty()) {
    throw std::invalid_argument("grid has no optimizers");
  }
  if (grid.objectives.empty()) {
    throw std::invalid_argument("grid has no objectives");
  }
  if (grid.repeats == 0) {
    throw std::invalid_argument("repeats must be positive");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory " + out_dir.string() + ": " +
                             ec.message());
  }

  const std::size_t num_optimizers = grid.optimizers.size();
  const std::size_t num_objectives = grid.objectives.size();

  GridResult result;
  result.optimizer_names.reserve(num_optimizers);
  result.final_values.assign(num_optimizers, {});

  // means[o][l]: run-averaged best-so-far trace.
  std::vector<std::vector<std::vector<double>>> means(num_optimizers);

  for (std::size_t o = 0; o < num_optimizers; ++o) {
    const GridOptimizer& optimizer = grid.optimizers[o];
    result.optimizer_names.push_back(optimizer.name);
    means[o].resize(num_objectives);
    result.final_values[o].resize(num_objectives);

    for (std::size_t l = 0; l < num_objectives; ++l) {
      const ObjectiveSpec objective = make_objective(grid.objectives[l], grid.dimension);
      std::vector<std::vector<double>> traces;
      traces.reserve(grid.repeats);
      for (std::size_t k = 0; k < grid.repeats; ++k) {
        OptimizationResult run_result;
        try {
          run_result = optimizer.run(objective, grid.max_evaluations, grid.base_seed + k);
        } catch (const std::exception& e) {
          std::ostringstream msg;
          msg << "cell " << optimizer.name << "/" << objective.name() << "/run" << k
              << " failed: " << e.what();
          throw std::runtime_error(msg.str());
        }
        write_trace_csv(out_dir / (optimizer.name + "__" + objective.name() + "__run" +
                                   std::to_string(k) + ".csv"),
                        run_result.trace);
        std::vector<double> values(run_result.trace.size());
        for (std::size_t i = 0; i < run_result.trace.size(); ++i) {
          values[i] = run_result.trace[i].best_value;
        }
        result.final_values[o][l].push_back(run_result.best_value);
        traces.push_back(std::move(values));
      }
      means[o][l] = average_runs(traces);
    }
  }

  // Normalization anchors are shared across optimizers per objective so the
  // curves are comparable between optimizers.
  std::vector<double> anchor_lo(num_objectives, std::numeric_limits<double>::infinity());
  std::vector<double> anchor_hi(num_objectives, -std::numeric_limits<double>::infinity());
  for (std::size_t o = 0; o < num_optimizers; ++o) {
    for (std::size_t l = 0; l < num_objectives; ++l) {
      const auto [lo, hi] = std::minmax_element(means[o][l].begin(), means[o][l].end());
      anchor_lo[l] = std::min(anchor_lo[l], *lo);
      anchor_hi[l] = std::max(anchor_hi[l], *hi);
    }
  }

  result.aggregates.resize(num_optimizers);
  for (std::size_t o = 0; o < num_optimizers; ++o) {
    AggregateHistory& aggregate = result.aggregates[o];
    aggregate.objective_names = grid.objectives;
    aggregate.per_function_mean = means[o];
    aggregate.per_function_normalized.reserve(num_objectives);
    for (std::size_t l = 0; l < num_objectives; ++l) {
      aggregate.per_function_normalized.push_back(
          normalize_with_anchors(means[o][l], anchor_lo[l], anchor_hi[l]));
    }
    aggregate.h = aggregate_h(aggregate.per_function_normalized);
    aggregate.h_min = *std::min_element(aggregate.h.begin(), aggregate.h.end());

    std::ofstream h_file = open_for_write(out_dir / (result.optimizer_names[o] + "__h.csv"));
    h_file << "evaluation,h\n";
    for (std::size_t i = 0; i < aggregate.h.size(); ++i) {
      h_file << (i + 1) << "," << format_double(aggregate.h[i]) << "\n";
    }
  }

  std::ofstream summary = open_for_write(out_dir / "summary.csv");
  summary << "optimizer,h_min\n";
  for (std::size_t o = 0; o < num_optimizers; ++o) {
    summary << result.optimizer_names[o] << "," << format_double(result.aggregates[o].h_min)
            << "\n";
  }

  std::ofstream manifest = open_for_write(out_dir / "manifest.txt");
  manifest << "optimizers = " << join(result.optimizer_names) << "\n";
  manifest << "objectives = " << join(grid.objectives) << "\n";
  manifest << "dimension = " << grid.dimension << "\n";
  manifest << "max_evaluations = " << grid.max_evaluations << "\n";
  manifest << "repeats = " << grid.repeats << "\n";
  manifest << "base_seed = " << grid.base_seed << "\n";

  return result;
}

}  // namespace itso
