#include "itso/marginal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace itso {
namespace {

constexpr double kDuplicateTolerance = 1e-12;

double compensated_sum(std::span<const double> xs) {
  double sum = 0.0;
  double carry = 0.0;
  for (double x : xs) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

EmpiricalMarginal build_marginal(const EvaluationHistory& history, std::size_t dim,
                                 const KernelSpec& spec, std::pair<double, double> bounds) {
  if (dim >= history.dimension()) {
    throw std::invalid_argument("dimension index out of range");
  }
  if (!(bounds.first < bounds.second)) {
    throw std::invalid_argument("lower bound must be below upper bound");
  }

  const std::size_t n = history.size();

  // Drop entries whose objective value duplicates an earlier one, keeping
  // the earliest occurrence. Clusters are found on the value-sorted order,
  // anchored at each cluster's smallest value.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double fa = history.value(a);
    const double fb = history.value(b);
    return fa < fb || (fa == fb && a < b);
  });

  std::vector<std::size_t> kept;
  kept.reserve(n);
  std::size_t pos = 0;
  while (pos < n) {
    const double anchor = history.value(order[pos]);
    std::size_t end = pos;
    std::size_t earliest = order[pos];
    while (end < n && history.value(order[end]) - anchor <= kDuplicateTolerance) {
      earliest = std::min(earliest, order[end]);
      ++end;
    }
    kept.push_back(earliest);
    pos = end;
  }
  if (kept.size() < 2) {
    throw std::invalid_argument("insufficient history");
  }

  struct Node {
    double coord;
    double value;
  };
  std::vector<Node> nodes;
  nodes.reserve(kept.size());
  for (std::size_t idx : kept) {
    nodes.push_back({history.point(idx)[dim], history.value(idx)});
  }
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    return a.coord < b.coord || (a.coord == b.coord && a.value < b.value);
  });

  // Merge exactly coincident coordinates, keeping the best value there.
  EmpiricalMarginal marginal;
  std::vector<double> node_values;
  for (const Node& node : nodes) {
    if (!marginal.support.empty() && marginal.support.back() == node.coord) {
      node_values.back() = std::min(node_values.back(), node.value);
      continue;
    }
    marginal.support.push_back(node.coord);
    node_values.push_back(node.value);
  }
  if (marginal.support.size() < 2) {
    throw std::invalid_argument("insufficient support");
  }
  if (marginal.support.front() < bounds.first || marginal.support.back() > bounds.second) {
    throw std::invalid_argument("support outside bounds");
  }

  marginal.pdf_weights = kernel_apply(spec, node_values, history.size());
  const double total = compensated_sum(marginal.pdf_weights);
  if (total > 0.0) {
    for (double& w : marginal.pdf_weights) {
      w /= total;
    }
  } else {
    const double uniform = 1.0 / static_cast<double>(marginal.pdf_weights.size());
    std::fill(marginal.pdf_weights.begin(), marginal.pdf_weights.end(), uniform);
  }
  marginal.lower_bound = bounds.first;
  marginal.upper_bound = bounds.second;
  return marginal;
}

EmpiricalMarginal build_cdf(EmpiricalMarginal marginal) {
  const std::size_t k = marginal.support.size();
  if (k < 2 || marginal.pdf_weights.size() != k) {
    throw std::invalid_argument("insufficient support");
  }
  marginal.cdf_values.assign(k, 0.0);
  double cum = 0.0;
  double carry = 0.0;
  for (std::size_t i = 1; i < k; ++i) {
    const double mass = 0.5 * (marginal.pdf_weights[i] + marginal.pdf_weights[i - 1]) *
                        (marginal.support[i] - marginal.support[i - 1]);
    const double y = mass - carry;
    const double t = cum + y;
    carry = (t - cum) - y;
    cum = t;
    marginal.cdf_values[i] = cum;
  }
  const double total = marginal.cdf_values.back();
  if (!(total > 0.0)) {
    throw std::invalid_argument("degenerate marginal mass");
  }
  for (double& c : marginal.cdf_values) {
    c /= total;
  }
  marginal.cdf_values.front() = 0.0;
  marginal.cdf_values.back() = 1.0;
  return marginal;
}

double inverse_cdf_sample(const EmpiricalMarginal& marginal, double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::invalid_argument("r outside [0,1]");
  }
  const auto& cdf = marginal.cdf_values;
  const auto& support = marginal.support;
  if (cdf.size() != support.size() || support.size() < 2) {
    throw std::invalid_argument("cdf not built");
  }
  if (r <= cdf.front()) {
    return support.front();
  }
  const auto it = std::lower_bound(cdf.begin(), cdf.end(), r);
  const std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
  if (cdf[idx] == r) {
    // Exact node, or the left endpoint of a flat run at level r.
    return support[idx];
  }
  const double lo = cdf[idx - 1];
  const double hi = cdf[idx];
  const double t = (r - lo) / (hi - lo);
  const double x = support[idx - 1] + t * (support[idx] - support[idx - 1]);
  return std::clamp(x, support[idx - 1], support[idx]);
}

double cdf_at(const EmpiricalMarginal& marginal, double x) {
  const auto& cdf = marginal.cdf_values;
  const auto& support = marginal.support;
  if (cdf.size() != support.size() || support.size() < 2) {
    throw std::invalid_argument("cdf not built");
  }
  if (x <= support.front()) {
    return x < support.front() ? 0.0 : cdf.front();
  }
  if (x >= support.back()) {
    return cdf.back();
  }
  const auto it = std::upper_bound(support.begin(), support.end(), x);
  const std::size_t idx = static_cast<std::size_t>(it - support.begin());
  const double t = (x - support[idx - 1]) / (support[idx] - support[idx - 1]);
  return cdf[idx - 1] + t * (cdf[idx] - cdf[idx - 1]);
}

double pdf_at(const EmpiricalMarginal& marginal, double x) {
  const auto& support = marginal.support;
  if (marginal.pdf_weights.size() != support.size() || support.size() < 2) {
    throw std::invalid_argument("marginal not built");
  }
  if (x < support.front() || x > support.back()) {
    return 0.0;
  }
  if (x == support.back()) {
    return marginal.pdf_weights.back();
  }
  const auto it = std::upper_bound(support.begin(), support.end(), x);
  const std::size_t idx = static_cast<std::size_t>(it - support.begin());
  const double t = (x - support[idx - 1]) / (support[idx] - support[idx - 1]);
  return marginal.pdf_weights[idx - 1] +
         t * (marginal.pdf_weights[idx] - marginal.pdf_weights[idx - 1]);
}

}  // namespace itso
