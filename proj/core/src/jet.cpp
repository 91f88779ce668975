#include "sltaylor/jet.hpp"

#include <algorithm>
#include <string>

#include "factorial.hpp"

namespace sltaylor {

Jet::Jet(double anchor, std::vector<Complex> coeffs) : anchor_(anchor), c_(std::move(coeffs)) {
  if (c_.empty()) throw ConfigError("jet needs at least one coefficient");
  if (!std::isfinite(anchor_)) throw ConfigError("jet anchor must be finite");
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!std::isfinite(c_[j].real()) || !std::isfinite(c_[j].imag())) {
      throw NumericalError("non-finite jet coefficient c_" + std::to_string(j));
    }
  }
}

Jet Jet::constant(double anchor, Complex value, std::size_t order) {
  std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
  c[0] = value;
  return Jet(anchor, std::move(c));
}

Jet Jet::variable(double anchor, std::size_t order) {
  std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
  c[0] = anchor;
  if (order >= 1) c[1] = 1.0;
  return Jet(anchor, std::move(c));
}

Jet Jet::from_derivatives(double anchor, std::span<const Complex> derivatives) {
  std::vector<Complex> c(derivatives.begin(), derivatives.end());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] *= detail::inverse_factorial(j);
  return Jet(anchor, std::move(c));
}

Complex Jet::derivative_value(std::size_t j) const { return c_.at(j) * detail::factorial(j); }

Jet Jet::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw OrderError("cannot extend jet of order " + std::to_string(this->order()) + " to " +
                     std::to_string(order));
  }
  return Jet(anchor_, std::vector<Complex>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

namespace {

void require_same_anchor(const Jet& a, const Jet& b) {
  if (a.anchor() != b.anchor()) {
    throw AnchorError("jets anchored at " + std::to_string(a.anchor()) + " and " + std::to_string(b.anchor()));
  }
}

}  // namespace

Jet Jet::operator-() const { return *this * Complex{-1.0, 0.0}; }

Jet operator+(const Jet& a, const Jet& b) {
  require_same_anchor(a, b);
  const std::size_t m = std::min(a.order(), b.order());
  std::vector<Complex> c(m + 1);
  for (std::size_t j = 0; j <= m; ++j) c[j] = a.c_[j] + b.c_[j];
  return Jet(a.anchor_, std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

Jet operator*(const Jet& a, const Jet& b) {
  require_same_anchor(a, b);
  const std::size_t m = std::min(a.order(), b.order());
  std::vector<Complex> c(m + 1, Complex{0.0, 0.0});
  for (std::size_t j = 0; j <= m; ++j) {
    for (std::size_t i = 0; i <= j; ++i) c[j] += a.c_[i] * b.c_[j - i];
  }
  return Jet(a.anchor_, std::move(c));
}

Jet operator*(const Jet& a, Complex s) {
  std::vector<Complex> c = a.c_;
  for (Complex& v : c) v *= s;
  return Jet(a.anchor_, std::move(c));
}

Jet jet_add(const Jet& a, const Jet& b) { return a + b; }
Jet jet_mul(const Jet& a, const Jet& b) { return a * b; }
Jet jet_scale(const Jet& a, Complex s) { return a * s; }

Jet jet_reciprocal(const Jet& a) {
  const auto c = a.coeffs();
  if (!(std::abs(c[0]) > 1e-14)) throw NumericalError("reciprocal of a jet with vanishing value");
  std::vector<Complex> b(c.size(), Complex{0.0, 0.0});
  b[0] = 1.0 / c[0];
  for (std::size_t j = 1; j < c.size(); ++j) {
    Complex s = 0.0;
    for (std::size_t i = 1; i <= j; ++i) s += c[i] * b[j - i];
    b[j] = -s / c[0];
  }
  return Jet(a.anchor(), std::move(b));
}

Jet jet_derive(const Jet& a) {
  if (a.order() == 0) throw OrderError("cannot differentiate an order-0 jet");
  const auto c = a.coeffs();
  std::vector<Complex> d(a.order());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = static_cast<double>(j + 1) * c[j + 1];
  return Jet(a.anchor(), std::move(d));
}

Jet jet_exp(const Jet& a) {
  // b = exp(a): j b_j = sum_{i=1}^{j} i a_i b_{j-i}
  const auto c = a.coeffs();
  std::vector<Complex> b(c.size(), Complex{0.0, 0.0});
  b[0] = std::exp(c[0]);
  for (std::size_t j = 1; j < c.size(); ++j) {
    Complex s = 0.0;
    for (std::size_t i = 1; i <= j; ++i) s += static_cast<double>(i) * c[i] * b[j - i];
    b[j] = s / static_cast<double>(j);
  }
  return Jet(a.anchor(), std::move(b));
}

Jet jet_pow(const Jet& a, unsigned p) {
  Jet result = Jet::constant(a.anchor(), 1.0, a.order());
  Jet base = a;
  while (p > 0) {
    if (p & 1U) result = result * base;
    p >>= 1U;
    if (p > 0) base = base * base;
  }
  return result;
}

}  // namespace sltaylor
