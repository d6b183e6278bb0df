#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace itso {

/// 53-bit uniform draw in [0, 1). Hand-rolled so that streams are
/// reproducible across standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + uniform01(rng) * (hi - lo);
}

/// Bounded draw in {0, ..., n-1} via the multiply-high trick. n > 0.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(rng()) * static_cast<unsigned __int128>(n)) >> 64);
}

}  // namespace itso
