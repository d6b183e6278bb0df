#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace itso {

struct KnownMinimum {
  std::vector<double> point;
  double value = 0.0;
};

/// One benchmark function instantiated at a fixed dimension, together with
/// its default search box and (where analytically forced) its minimum.
class ObjectiveSpec {
 public:
  using Evaluator = double (*)(std::span<const double>);

  ObjectiveSpec(std::string name, std::size_t dimension, std::vector<double> lower,
                std::vector<double> upper, std::optional<KnownMinimum> minimum,
                Evaluator evaluator);

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return dimension_; }
  std::span<const double> lower_bounds() const { return lower_; }
  std::span<const double> upper_bounds() const { return upper_; }
  const std::optional<KnownMinimum>& known_minimum() const { return minimum_; }

  /// Throws std::invalid_argument on a dimension mismatch.
  double evaluate(std::span<const double> x) const;

 private:
  std::string name_;
  std::size_t dimension_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::optional<KnownMinimum> minimum_;
  Evaluator evaluator_;
};

/// The 13 registry names in catalog order.
std::span<const std::string_view> objective_names();

/// Throws std::invalid_argument listing the valid names when `name` is
/// unknown.
ObjectiveSpec make_objective(std::string_view name, std::size_t dimension);

std::vector<ObjectiveSpec> list_objectives(std::size_t dimension);

}  // namespace itso
