#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace sltaylor::detail {

/// Finite-difference weights for the m-th derivative at z from the given nodes
/// (B. Fornberg, Math. Comp. 51 (1988)). m = 0 yields Lagrange interpolation weights.
template <std::size_t N>
std::array<double, N> fornberg_weights(double z, std::span<const double> x, std::size_t m) {
  // c[j][k]: weight of node j for the k-th derivative
  std::array<std::array<double, N>, N> c{};
  double c1 = 1.0;
  double c4 = x[0] - z;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < N; ++i) {
    const std::size_t mn = i < m ? i : m;
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k > 0; --k) {
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k > 0; --k) {
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::array<double, N> w{};
  for (std::size_t j = 0; j < N; ++j) w[j] = c[j][m];
  return w;
}

}  // namespace sltaylor::detail
