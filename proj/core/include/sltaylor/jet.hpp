#pragma once

/// Truncated Taylor expansions at a point. Coefficients are normalized:
/// c_j = h^{[j]}(x0) / j!, so products are plain Cauchy convolutions.

#include <cstddef>
#include <span>
#include <vector>

#include "sltaylor/grid.hpp"

namespace sltaylor {

class Jet {
 public:
  /// Normalized coefficients c_0..c_m; at least one, all finite.
  Jet(double anchor, std::vector<Complex> coeffs);

  static Jet constant(double anchor, Complex value, std::size_t order);
  /// The independent variable x itself.
  static Jet variable(double anchor, std::size_t order);
  /// From raw derivative values h(x0), h'(x0), ..., h^{[m]}(x0).
  static Jet from_derivatives(double anchor, std::span<const Complex> derivatives);

  double anchor() const noexcept { return anchor_; }
  std::size_t order() const noexcept { return c_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return c_; }
  Complex operator[](std::size_t j) const { return c_.at(j); }
  /// Raw derivative h^{[j]}(x0) = j! c_j.
  Complex derivative_value(std::size_t j) const;
  Complex value() const noexcept { return c_.front(); }

  Jet truncated(std::size_t order) const;

  Jet operator-() const;
  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, Complex s);
  friend Jet operator*(Complex s, const Jet& a) { return a * s; }

 private:
  double anchor_;
  std::vector<Complex> c_;
};

/// Result order is min(orders); anchors must match (AnchorError otherwise).
Jet jet_add(const Jet& a, const Jet& b);
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_scale(const Jet& a, Complex s);
/// b with a*b = 1 to a's order. Throws NumericalError when |c_0| <= 1e-14.
Jet jet_reciprocal(const Jet& a);
/// Order drops by one: c_j <- (j+1) c_{j+1}. Throws OrderError on an order-0 jet.
Jet jet_derive(const Jet& a);
/// exp(a(x)) via b' = a' b.
Jet jet_exp(const Jet& a);
/// a^p for a non-negative integer p.
Jet jet_pow(const Jet& a, unsigned p);

}  // namespace sltaylor
