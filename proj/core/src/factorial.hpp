#pragma once

#include <array>
#include <cstddef>

namespace sltaylor::detail {

inline constexpr std::size_t kMaxFactorial = 170;

/// 1/n! for n <= 170.
inline const std::array<double, kMaxFactorial + 1>& inverse_factorials() {
  static const auto table = [] {
    std::array<double, kMaxFactorial + 1> t{};
    t[0] = 1.0;
    for (std::size_t n = 1; n <= kMaxFactorial; ++n) t[n] = t[n - 1] / static_cast<double>(n);
    return t;
  }();
  return table;
}

inline double inverse_factorial(std::size_t n) { return n <= kMaxFactorial ? inverse_factorials()[n] : 0.0; }

inline double factorial(std::size_t n) {
  double r = 1.0;
  for (std::size_t k = 2; k <= n; ++k) r *= static_cast<double>(k);
  return r;
}

}  // namespace sltaylor::detail
