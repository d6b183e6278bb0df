#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "itso/objectives.hpp"
#include "itso/optimizer.hpp"

namespace itso {

/// A named optimizer that can run on any benchmark cell.
struct GridOptimizer {
  std::string name;
  std::function<OptimizationResult(const ObjectiveSpec& objective, std::size_t max_evaluations,
                                   std::uint64_t seed)>
      run;
};

/// Builds one of the registered runners: "itso-short", "itso-full",
/// "random", "de". Throws std::invalid_argument for unknown names.
GridOptimizer make_grid_optimizer(std::string_view name);

std::span<const std::string_view> grid_optimizer_names();

/// An (optimizer x objective x repeat) experiment. Repeat k of every cell
/// runs with seed base_seed + k.
struct RunGrid {
  std::vector<GridOptimizer> optimizers;
  std::vector<std::string> objectives;
  std::size_t dimension = 10;
  std::size_t repeats = 10;
  std::size_t max_evaluations = 5000;
  std::uint64_t base_seed = 1;
};

/// Cross-function convergence summary for one optimizer. `h` is the tenth
/// root of the mean (over objectives) of the run-averaged, min-max-normalized
/// best-so-far traces; `h_min` its smallest entry. Normalization anchors are
/// shared across the grid's optimizers per objective, so h is comparable
/// between optimizers.
struct AggregateHistory {
  std::vector<std::string> objective_names;
  std::vector<std::vector<double>> per_function_mean;
  std::vector<std::vector<double>> per_function_normalized;
  std::vector<double> h;
  double h_min = 0.0;
};

struct GridResult {
  std::vector<std::string> optimizer_names;
  std::vector<AggregateHistory> aggregates;
  /// final_values[o][l][k]: final best value of optimizer o on objective l,
  /// repeat k.
  std::vector<std::vector<std::vector<double>>> final_values;
};

/// Elementwise arithmetic mean of equally long traces.
/// Throws std::invalid_argument on an empty list or ragged lengths.
std::vector<double> average_runs(const std::vector<std::vector<double>>& traces);

/// Min-max normalization (v - min v) / (max v - min v); a constant trace
/// maps to all zeros.
std::vector<double> normalize_history(std::span<const double> mean_trace);

/// h_i = (mean over rows of normalized_i)^(1/10).
/// Throws std::invalid_argument on empty or ragged input.
std::vector<double> aggregate_h(const std::vector<std::vector<double>>& normalized);

/// Runs every cell, writes one trace CSV per run, one h CSV per optimizer,
/// a summary CSV, and a key-value manifest into out_dir. A failing cell
/// aborts with the cell identity in the error message.
GridResult run_grid(const RunGrid& grid, const std::filesystem::path& out_dir);

}  // namespace itso
