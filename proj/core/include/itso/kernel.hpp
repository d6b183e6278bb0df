#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace itso {

enum class KernelVariant { kGaussian, kMaxShift, kNormalized };

/// An order-reversing map from objective values to unnormalized probability
/// weights: the smaller the objective value, the larger the weight. Three
/// variants are supported:
///
///   kGaussian    w = exp(-(f - min f)^2 * g(i)), g(i) = gaussian_growth * i
///   kMaxShift    w = max f - f
///   kNormalized  w = 1 - (f - min f + e_i) / (max f - min f + e_i),
///                e_i = epsilon0 / (i + 1)
///
/// The gaussian variant sharpens over time; an unset gaussian_growth is
/// resolved from the evaluation budget and the observed value range
/// (resolve_growth), which keeps the exponent dimensionless.
struct KernelSpec {
  KernelVariant variant = KernelVariant::kNormalized;
  std::optional<double> gaussian_growth{};  // rate c in g(i) = c * i
  double epsilon0 = 1e-6;

  static KernelSpec gaussian(double growth);
  static KernelSpec gaussian_auto();
  static KernelSpec max_shift();
  static KernelSpec normalized(double epsilon0 = 1e-6);
};

/// Maps each objective value to a nonnegative weight. Weights are not
/// normalized. If all values coincide there is no order to reverse and the
/// weights are uniform. `iteration` drives the kernel schedules g(i) and e_i.
///
/// Throws std::invalid_argument on an empty value list ("empty history"),
/// non-finite values ("non-finite objective"), or an unresolved/invalid
/// gaussian growth rate.
std::vector<double> kernel_apply(const KernelSpec& spec, std::span<const double> values,
                                 std::size_t iteration);

/// Fills in an unset gaussian growth rate as 1 / (max_evaluations * range^2)
/// where range is the spread of `values`. Other specs pass through unchanged.
KernelSpec resolve_growth(KernelSpec spec, std::size_t max_evaluations,
                          std::span<const double> values);

}  // namespace itso
