#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace itso {

/// Append-only record of every evaluated point and its objective value.
/// Entries are never rewritten; the per-dimension marginals are rebuilt
/// from this record as it grows.
class EvaluationHistory {
 public:
  explicit EvaluationHistory(std::size_t dimension) : dimension_(dimension) {
    if (dimension == 0) {
      throw std::invalid_argument("history dimension must be positive");
    }
  }

  void append(std::span<const double> point, double value) {
    if (point.size() != dimension_) {
      throw std::invalid_argument("point dimension mismatch");
    }
    coords_.insert(coords_.end(), point.begin(), point.end());
    values_.push_back(value);
  }

  std::size_t size() const { return values_.size(); }
  std::size_t dimension() const { return dimension_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dimension_, dimension_};
  }
  double value(std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

 private:
  std::size_t dimension_;
  std::vector<double> coords_;  // flat, size() * dimension()
  std::vector<double> values_;
};

}  // namespace itso
