#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "itso/history.hpp"
#include "itso/kernel.hpp"

namespace itso {

/// Per-dimension empirical distribution over observed coordinates.
/// `support` holds the strictly increasing coordinate grid, `pdf_weights`
/// the kernel weights normalized to sum 1, and `cdf_values` (populated by
/// build_cdf) the piecewise-linear cumulative distribution anchored at 0
/// on the left and 1 on the right.
struct EmpiricalMarginal {
  std::vector<double> support;
  std::vector<double> pdf_weights;
  std::vector<double> cdf_values;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

/// Builds the marginal of dimension `dim` from the history. Entries whose
/// objective value duplicates an earlier one (absolute tolerance 1e-12) are
/// dropped first, keeping the earliest occurrence; surviving coordinates are
/// sorted and exact duplicates merged, keeping the best objective value seen
/// at that coordinate. The kernel schedule index is the history size.
///
/// Throws std::invalid_argument: "insufficient history" when fewer than two
/// entries survive deduplication, "insufficient support" when fewer than two
/// distinct coordinates remain, or when `dim`/bounds are inconsistent.
EmpiricalMarginal build_marginal(const EvaluationHistory& history, std::size_t dim,
                                 const KernelSpec& spec, std::pair<double, double> bounds);

/// Populates cdf_values by accumulating trapezoid masses
/// (w_k + w_{k-1}) / 2 * (x_k - x_{k-1}) and renormalizing so the last
/// entry is exactly 1; the first entry is exactly 0.
EmpiricalMarginal build_cdf(EmpiricalMarginal marginal);

/// Inverse transform sample: the x at which the piecewise-linear CDF equals
/// r. Flat CDF segments resolve to their left endpoint; r = 0 and r = 1 map
/// to the first and last support point with that CDF level.
/// Throws std::invalid_argument when r is outside [0, 1] or the CDF has not
/// been built.
double inverse_cdf_sample(const EmpiricalMarginal& marginal, double r);

/// Piecewise-linear CDF evaluated at x; 0 left of the support, 1 right of it.
double cdf_at(const EmpiricalMarginal& marginal, double x);

/// Piecewise-linear interpolation of pdf_weights at x; 0 outside the support.
double pdf_at(const EmpiricalMarginal& marginal, double x);

}  // namespace itso
