#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "squint/matcore.hpp"

// Internal draw helpers. Conversions from raw engine words are spelled out so
// that seeded outputs are identical across standard libraries.
namespace squint::detail {

inline double uniform_unit(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform_pm1(std::mt19937_64& eng) { return 2.0 * uniform_unit(eng) - 1.0; }

inline double exponential_unit(std::mt19937_64& eng) { return -std::log1p(-uniform_unit(eng)); }

// Symmetric matrix with entries scale * uniform[-1, 1], filled on the upper
// triangle in row-major order.
inline Matrix random_symmetric(std::mt19937_64& eng, int n, double scale) {
  Matrix k(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = scale * uniform_pm1(eng);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace squint::detail
