#include "itso/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace itso {

KernelSpec KernelSpec::gaussian(double growth) {
  KernelSpec spec;
  spec.variant = KernelVariant::kGaussian;
  spec.gaussian_growth = growth;
  return spec;
}

KernelSpec KernelSpec::gaussian_auto() {
  KernelSpec spec;
  spec.variant = KernelVariant::kGaussian;
  spec.gaussian_growth = std::nullopt;
  return spec;
}

KernelSpec KernelSpec::max_shift() {
  KernelSpec spec;
  spec.variant = KernelVariant::kMaxShift;
  return spec;
}

KernelSpec KernelSpec::normalized(double epsilon0) {
  KernelSpec spec;
  spec.variant = KernelVariant::kNormalized;
  spec.epsilon0 = epsilon0;
  return spec;
}

KernelSpec resolve_growth(KernelSpec spec, std::size_t max_evaluations,
                          std::span<const double> values) {
  if (spec.variant != KernelVariant::kGaussian || spec.gaussian_growth.has_value()) {
    return spec;
  }
  if (values.empty()) {
    throw std::invalid_argument("empty history");
  }
  // Calibrate the schedule against the spread of the m best values so that
  // the m-th best point retains exactly 1% weight at budget end: with
  // g(i) = c * i the exponent (i / f_e) * ln(100) * ((f - min f) / spread)^2
  // is dimensionless, near zero early on, and truncates everything but the
  // best cluster once the budget is spent.
  const std::size_t budget = std::max<std::size_t>(max_evaluations, 1);
  const std::size_t quantile = std::clamp<std::size_t>(budget / 100, 2, values.size());
  std::vector<double> best(values.begin(), values.end());
  std::nth_element(best.begin(), best.begin() + (quantile - 1), best.end());
  const double lowest = *std::min_element(best.begin(), best.begin() + quantile);
  double spread = best[quantile - 1] - lowest;
  if (!(spread > 0.0)) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    spread = *hi - *lo;
  }
  const double scale = spread > 0.0 ? spread * spread : 1.0;
  constexpr double kCutoff = 4.605170185988091;  // ln(100)
  spec.gaussian_growth = kCutoff / (static_cast<double>(budget) * scale);
  return spec;
}

std::vector<double> kernel_apply(const KernelSpec& spec, std::span<const double> values,
                                 std::size_t iteration) {
  if (values.empty()) {
    throw std::invalid_argument("empty history");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("non-finite objective");
    }
  }

  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  std::vector<double> weights(values.size());
  if (lo == hi) {
    // No ordering information; uniform mass.
    std::fill(weights.begin(), weights.end(), 1.0);
    return weights;
  }

  switch (spec.variant) {
    case KernelVariant::kGaussian: {
      if (!spec.gaussian_growth.has_value()) {
        throw std::invalid_argument("gaussian growth rate unresolved");
      }
      if (!(*spec.gaussian_growth > 0.0)) {
        throw std::invalid_argument("gaussian growth rate must be positive");
      }
      // Values are shifted to f - min f before squaring so that the mass
      // concentrates at the minimum even for negative objectives.
      const double g = *spec.gaussian_growth * static_cast<double>(iteration);
      for (std::size_t i = 0; i < values.size(); ++i) {
        const double shifted = values[i] - lo;
        weights[i] = std::exp(-shifted * shifted * g);
      }
      break;
    }
    case KernelVariant::kMaxShift: {
      for (std::size_t i = 0; i < values.size(); ++i) {
        weights[i] = hi - values[i];
      }
      break;
    }
    case KernelVariant::kNormalized: {
      if (!(spec.epsilon0 > 0.0)) {
        throw std::invalid_argument("epsilon0 must be positive");
      }
      const double e = spec.epsilon0 / static_cast<double>(iteration + 1);
      const double denom = hi - lo + e;
      for (std::size_t i = 0; i < values.size(); ++i) {
        weights[i] = 1.0 - (values[i] - lo + e) / denom;
      }
      break;
    }
  }
  return weights;
}

}  // namespace itso
