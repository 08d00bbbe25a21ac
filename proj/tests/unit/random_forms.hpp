#pragma once

#include <random>

#include "hypersurf/int_matrix.hpp"

namespace testing_util {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234u);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline hypersurf::IntMatrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
  hypersurf::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

inline hypersurf::IntMatrix random_symmetric(std::size_t n, long lo, long hi) {
  hypersurf::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = uniform(lo, hi);
  return m;
}

// Product of elementary row operations and sign flips: determinant ±1.
inline hypersurf::IntMatrix random_unimodular(std::size_t n, int steps = 12) {
  hypersurf::IntMatrix t = hypersurf::IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    if (i == j) {
      for (std::size_t k = 0; k < n; ++k) t(i, k) = -t(i, k);
      continue;
    }
    const long f = uniform(-2, 2);
    for (std::size_t k = 0; k < n; ++k) t(i, k) += f * t(j, k);
  }
  return t;
}

}  // namespace testing_util
