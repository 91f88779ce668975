#pragma once

// Closed-form reference values used by the tests. Nothing here calls into the
// library's numerical routines.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<double>>;

// A_5 for f = e^{cx} at x0 = 0, rows h, h', ..., h^{V}.
inline Matrix exp_seed_A5(double c) {
  const double c2 = c * c;
  const double c3 = c2 * c;
  const double c4 = c3 * c;
  return {
      {1, 0, 0, 0, 0, 0},
      {0, 1, 0, 0, 0, 0},
      {0, -2 * c, 1, 0, 0, 0},
      {0, 4 * c2, -2 * c, 1, 0, 0},
      {0, -8 * c3, 4 * c2, -4 * c, 1, 0},
      {0, 16 * c4, -8 * c3, 12 * c2, -4 * c, 1},
  };
}

// Reference A_4 for f = a x e^{a/x} at x0 = 1. Entry (4,1) in this form is exact only at a = 1.
inline Matrix axexp_seed_A4_reference(double a) {
  const double e = std::exp(-2 * a);
  const double a2 = a * a;
  return {
      {1, 0, 0, 0, 0},
      {0, e / a2, 0, 0, 0},
      {0, 2 * (a - 1) * e / a2, 1, 0, 0},
      {0, e * (4 + 6 / a2 * (1 - 2 * a)), 2 * (a - 1), e / a2, 0},
      {0, e * (24 - 16 * a - 24 * (1 - a) / a2), 8 - 16 * a + 4 * a2, 4 * (a - 1) / a2 * e, 1},
  };
}

// Same matrix from symbolic differentiation, valid for every a > 0.
inline Matrix axexp_seed_A4(double a) {
  Matrix m = axexp_seed_A4_reference(a);
  const double e = std::exp(-2 * a);
  m[4][1] = 8 * (a * a * a - 6 * a * a + 9 * a - 3) * e / (a * a);
  return m;
}

// u1 for q = -c^2 with seed e^{cx}, x0 = 0.
inline Complex constant_potential_u1(double c, Complex lambda, double x) {
  const Complex k = std::sqrt(c * c + lambda);
  return (c + k) / (2.0 * k) * std::exp(k * x) + (k - c) / (2.0 * k) * std::exp(-k * x);
}

// Derivatives of u1/f at 0 for the same problem, as polynomials in lambda.
inline std::vector<std::vector<double>> constant_potential_u1_taylor(double c) {
  return {{1}, {0}, {0, 1}, {0, -2 * c}, {0, 4 * c * c, 1}, {0, -8 * c * c * c, -4 * c}};
}

// Dirichlet eigenvalues of u'' - c^2 u = lambda u on (0,1).
inline double dirichlet_eigenvalue(double c, int n) {
  return -c * c - n * n * std::numbers::pi * std::numbers::pi;
}

// k-th derivative (k <= 4) by central differences with one Richardson step.
inline Complex central_derivative(const std::function<Complex(double)>& fn, double x, int k, double h = 1e-2) {
  auto stencil = [&](double s) -> Complex {
    switch (k) {
      case 0: return fn(x);
      case 1: return (fn(x + s) - fn(x - s)) / (2 * s);
      case 2: return (fn(x + s) - 2.0 * fn(x) + fn(x - s)) / (s * s);
      case 3: return (fn(x + 2 * s) - 2.0 * fn(x + s) + 2.0 * fn(x - s) - fn(x - 2 * s)) / (2 * s * s * s);
      default:
        return (fn(x + 2 * s) - 4.0 * fn(x + s) + 6.0 * fn(x) - 4.0 * fn(x - s) + fn(x - 2 * s)) / (s * s * s * s);
    }
  };
  return (4.0 * stencil(h / 2) - stencil(h)) / 3.0;
}

// Normalized Taylor coefficients with c_0 in the annulus 0.5 <= |c_0| <= 1
// and the rest in the unit disk.
inline std::vector<Complex> random_jet_coeffs(std::mt19937_64& rng, std::size_t order) {
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::vector<Complex> c(order + 1);
  c[0] = std::polar(0.5 + 0.5 * radius(rng), angle(rng));
  for (std::size_t j = 1; j <= order; ++j) c[j] = std::polar(std::sqrt(radius(rng)), angle(rng));
  return c;
}

}  // namespace oracle
